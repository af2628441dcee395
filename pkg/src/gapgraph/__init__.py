"""Desk-scale verification of graphicality and degree-preserving growth for prime gap sequences."""

__version__ = "0.1.0"

from .exceptions import (  # noqa: E402
    DomainError,
    DpgStuckError,
    GapGraphError,
    RealizationError,
)
from .graphic import DegreeMultiset, erdos_gallai_full, zz_tv_reduced  # noqa: E402
from .logvalue import LogValue  # noqa: E402

__all__ = [
    "DegreeMultiset",
    "DomainError",
    "DpgStuckError",
    "GapGraphError",
    "LogValue",
    "RealizationError",
    "erdos_gallai_full",
    "zz_tv_reduced",
]
