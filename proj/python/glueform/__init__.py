"""Exact De Rham forms and truncated cohomology of two-plot diffeological spaces."""

from ._glueform import (
    InternalConsistencyError,
    ParseError,
    Polynomial,
    Presentation,
    UsageError,
    check,
    cohomology,
    delta,
    parse_poly,
    sample,
)

__all__ = [
    "InternalConsistencyError",
    "ParseError",
    "Polynomial",
    "Presentation",
    "UsageError",
    "check",
    "cohomology",
    "delta",
    "parse_poly",
    "sample",
]
