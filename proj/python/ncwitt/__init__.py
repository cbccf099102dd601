"""Exact Witt-vector computations over free non-commutative rings."""

from ._core import (
    AlphabetMismatch,
    ContextMismatch,
    DegreeCapExceeded,
    EpsilonNotCommutator,
    NcwittError,
    NotDivisible,
    ParseError,
    UnknownGenerator,
    UnsupportedSetting,
    abelianize,
    check_ids,
    counterexample_report,
    ghost,
    h_membership,
    normalize,
    omega,
    rmap,
    verify,
)

__all__ = [
    "AlphabetMismatch",
    "ContextMismatch",
    "DegreeCapExceeded",
    "EpsilonNotCommutator",
    "NcwittError",
    "NotDivisible",
    "ParseError",
    "UnknownGenerator",
    "UnsupportedSetting",
    "abelianize",
    "check_ids",
    "counterexample_report",
    "ghost",
    "h_membership",
    "normalize",
    "omega",
    "rmap",
    "verify",
]
