from functools import lru_cache

import pytest
from hypothesis import settings

from rindex.corpus import desk_texts
from rindex.selftest import Oracle
from rindex.text import build_structures, prepare_text

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

DESK = desk_texts()


@lru_cache(maxsize=None)
def oracle_of(raw: bytes) -> Oracle:
    return Oracle.of(raw)


@lru_cache(maxsize=None)
def structures_of(raw: bytes):
    text = prepare_text(raw)
    return text, build_structures(text)


@pytest.fixture(params=range(len(DESK)), ids=lambda k: f"desk{k}")
def desk(request) -> bytes:
    return DESK[request.param]


@pytest.fixture
def miss():
    text, st = structures_of(b"mississippi")
    return text, st
