"""Exact evaluation of Horadam and Horadam-Lucas sequences and an audit of
their identities."""

from .errors import (
    DegenerateQ,
    DegenerateTriple,
    HoradamError,
    InvariantViolation,
    NotInvertible,
    RepeatedRoot,
    UsageError,
)
from .exact import Mat2, QuadElem, Rational, mat_pow, quad_inv, quad_mul
from .sequences import (
    BinetData,
    Params,
    SeqKind,
    classify,
    gf_coefficients,
    term,
    term_binet,
    term_matrix,
    term_recurrence,
)

__all__ = [
    "BinetData",
    "DegenerateQ",
    "DegenerateTriple",
    "HoradamError",
    "InvariantViolation",
    "Mat2",
    "NotInvertible",
    "Params",
    "QuadElem",
    "Rational",
    "RepeatedRoot",
    "SeqKind",
    "UsageError",
    "classify",
    "gf_coefficients",
    "mat_pow",
    "quad_inv",
    "quad_mul",
    "term",
    "term_binet",
    "term_matrix",
    "term_recurrence",
]
