"""Run-length compressed self-index: count, locate, extract and SA/ISA/LCP access."""

from .errors import RIndexError
from .index import RIndex, size_report
from .locate import Range, Toehold

__all__ = ["RIndex", "RIndexError", "Range", "Toehold", "size_report"]
