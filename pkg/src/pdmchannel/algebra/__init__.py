"""Exact coefficient ring and normal-ordered differential-operator algebra."""

from pdmchannel.algebra.coeffring import (
    COS,
    COSH,
    CSCH,
    ONE,
    SCALARS,
    SIN,
    SINH,
    CoeffPoly,
    ScalarPoly,
    derive_x,
    derive_y,
    k,
    normalize,
    q,
    shift_k,
)
from pdmchannel.algebra.diffalg import (
    DiffOp,
    anticommutator,
    commutator,
    compose,
    shift_k_op,
    triple_sym,
)

__all__ = [
    "CoeffPoly",
    "ScalarPoly",
    "SCALARS",
    "q",
    "k",
    "ONE",
    "SINH",
    "COSH",
    "CSCH",
    "SIN",
    "COS",
    "normalize",
    "derive_x",
    "derive_y",
    "shift_k",
    "DiffOp",
    "compose",
    "commutator",
    "anticommutator",
    "triple_sym",
    "shift_k_op",
]
