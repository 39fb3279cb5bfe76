"""Exact-arithmetic cubic Dirac operators for parabolic decompositions of
gl(m|n): Dirac cohomology, Kostant (co)homology and the identity suites
connecting them, all over the rationals."""

from .qlinalg import QMatrix, Rat, kernel_basis, quotient_dim, rank, rat, rref
from .rootdata import Weight, WeylElement, build_gl, form, parse_weight, weyl_act
from .superalg import CasimirElem, Superalgebra
from .parabolic import (
    ParabolicData,
    borel,
    levi_g0,
    make_parabolic,
    parabolic_from,
    triangulate,
    verify_parabolic_set,
    w_l1,
)

__all__ = [
    "QMatrix",
    "Rat",
    "rat",
    "rref",
    "rank",
    "kernel_basis",
    "quotient_dim",
    "Weight",
    "WeylElement",
    "build_gl",
    "form",
    "parse_weight",
    "weyl_act",
    "Superalgebra",
    "CasimirElem",
    "ParabolicData",
    "triangulate",
    "parabolic_from",
    "make_parabolic",
    "verify_parabolic_set",
    "borel",
    "levi_g0",
    "w_l1",
]

__version__ = "0.1.0"
