"""Parabolic decompositions of gl(m|n) from rational functionals.

A functional c on h* (a rational vector of length m+n) partitions the roots
into Phi^0 (value 0), Phi^+ (positive) and Phi^- (negative); the parabolic
subalgebra is spanned by h and the root spaces with value >= 0, with Levi
part L = {value 0} and nilradical U = {value > 0}.  ParabolicData carries
ordered dual bases of u and ubar with (ubar_i, u_j) = delta_ij, the Weyl
vectors rho^l and rho^u, and the W^{l,1} machinery used for Dirac
cohomology predictions.

Functionals are allowed to be rational (any rational functional is cleared
by scaling without changing the partition).  Compatibility with the
distinguished Borel (<c, alpha> >= 0 on all distinguished positive roots)
is required by the cohomology computations and optional for structural
exploration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import conventions
from .qlinalg import rat
from .rootdata import Weight, WeylElement, form
from .superalg import AlgElem, Superalgebra, elem

Unit = tuple[int, int]


@dataclass
class TriangularDecomposition:
    functional: tuple
    phi_zero: list
    phi_plus: list
    phi_minus: list


def pair_functional(c: tuple, alpha: Weight):
    """<c, alpha> as the plain coordinate pairing (not the invariant form)."""
    s = rat(0)
    for ci, ai in zip(c, alpha.coords):
        if ai:
            s += rat(ci) * ai
    return s


def triangulate(alg: Superalgebra, c) -> TriangularDecomposition:
    c = tuple(rat(x) for x in c)
    if len(c) != alg.m + alg.n:
        raise ValueError("functional length must be m + n")
    zero, plus, minus = [], [], []
    for alpha in alg.rd.all_roots:
        v = pair_functional(c, alpha)
        (zero if not v else plus if v > 0 else minus).append(alpha)
    return TriangularDecomposition(c, zero, plus, minus)


def verify_parabolic_set(alg: Superalgebra, roots: list) -> bool:
    """True iff roots form a parabolic subset: Phi = P u -P, closed under +."""
    pset = set(roots)
    neg = {-a for a in pset}
    if pset | neg != set(alg.rd.all_roots):
        return False
    allroots = set(alg.rd.all_roots)
    for a in pset:
        for b in pset:
            s = a + b
            if s in allroots and s not in pset:
                return False
    return True


def _root_sort_key(alpha: Weight):
    # descending lex puts eps_1 - del_1 before eps_2 - del_1, etc.
    return tuple(-c for c in alpha.coords)


@dataclass
class ParabolicData:
    alg: Superalgebra
    functional: tuple
    levi_roots: list = field(default_factory=list)   # all of L (both signs)
    u_roots: list = field(default_factory=list)      # roots of u, even first
    rho_l: Weight = None
    rho_u: Weight = None
    compatible: bool = True

    def __post_init__(self):
        self.ubar_roots = [-a for a in self.u_roots]
        self.u_units: list[Unit] = [self.alg.unit_for_root(a) for a in self.u_roots]
        self.u_basis: list[AlgElem] = [elem(u) for u in self.u_units]
        sign = conventions.DUAL_PAIRING_SIGN
        self.ubar_basis: list[AlgElem] = []
        for a, b in self.u_units:
            c = -1 if self.alg.index_parity(b) else 1
            self.ubar_basis.append(elem((b, a), sign * c))
        self.s_parities = [self.alg.unit_parity(u) for u in self.u_units]
        self.even_indices = [i for i, p in enumerate(self.s_parities) if p == 0]
        self.odd_indices = [i for i, p in enumerate(self.s_parities) if p == 1]

    # -- Levi structure --------------------------------------------------------
    @property
    def levi_plus(self) -> list:
        pos = set(map(tuple, (a.coords for a in self.alg.rd.positive_roots)))
        return [a for a in self.levi_roots if tuple(a.coords) in pos]

    @property
    def levi_even_plus(self) -> list:
        return [a for a in self.levi_plus if not self.alg.rd.is_odd_root(a)]

    @property
    def levi_odd_plus(self) -> list:
        return [a for a in self.levi_plus if self.alg.rd.is_odd_root(a)]

    def levi_basis(self) -> list[AlgElem]:
        """Cartan elements followed by the Levi root vectors."""
        out = [elem(u) for u in self.alg.cartan_units()]
        out += [self.alg.root_vector(a) for a in self.levi_roots]
        return out

    def rho_l_even(self) -> Weight:
        acc = self.alg.rd.zero_weight()
        for a in self.levi_even_plus:
            acc = acc + a
        return acc.scale(rat(1, 2))

    def has_odd_levi(self) -> bool:
        return bool(self.levi_odd_plus)

    def s_dim(self) -> tuple[int, int]:
        return len(self.even_indices), len(self.odd_indices)

    # -- eps/delta index blocks of the Levi (for Weyl groups and dimensions) --
    def levi_eps_blocks(self) -> list[list[int]]:
        return _level_blocks(self.functional[: self.alg.m])

    def levi_delta_blocks(self) -> list[list[int]]:
        return _level_blocks(self.functional[self.alg.m:])

    def weyl_group_levi(self) -> list[WeylElement]:
        m, n = self.alg.m, self.alg.n
        eps_perms = _block_permutations(m, self.levi_eps_blocks())
        del_perms = _block_permutations(n, self.levi_delta_blocks())
        return [WeylElement(pe, pd) for pe in eps_perms for pd in del_perms]

    def is_levi_dominant_integral(self, lam: Weight, even_only: bool = False) -> bool:
        roots = self.levi_even_plus
        for alpha in roots:
            idx = [i for i, c in enumerate(alpha.coords) if c]
            i = next(i for i in idx if alpha.coords[i] == 1)
            j = next(i for i in idx if alpha.coords[i] == -1)
            d = lam.coords[i] - lam.coords[j]
            if d < 0 or d.denominator != 1:
                return False
        return True

    def levi_weyl_dim(self, nu: Weight):
        """dim of the f.d. simple Levi supermodule with highest weight nu.

        For a purely even Levi this is the product of Weyl dimension
        formulas over the gl blocks; with odd Levi roots the Kac dimension
        2^{#odd} * (even dim) is returned, valid for Levi-typical nu only.
        """
        rho = self.rho_l_even()
        dim = rat(1)
        for alpha in self.levi_even_plus:
            dim *= form(nu + rho, alpha) / form(rho, alpha)
        if dim.denominator != 1 or dim <= 0:
            raise ValueError(f"{nu} is not Levi dominant integral")
        d = int(dim)
        if self.has_odd_levi():
            d *= 2 ** len(self.levi_odd_plus)
        return d


def _level_blocks(values: tuple) -> list[list[int]]:
    blocks: dict = {}
    for i, v in enumerate(values):
        blocks.setdefault(rat(v), []).append(i)
    return [b for b in blocks.values()]


def _block_permutations(size: int, blocks: list[list[int]]):
    """All permutations of {0..size-1} permuting only within the blocks."""
    perms = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        p = list(range(size))
        for orig, img in zip(blocks, choice):
            for src, dst in zip(orig, img):
                p[src] = dst
        perms.append(tuple(p))
    return perms


def parabolic_from(
    t: TriangularDecomposition, alg: Superalgebra, require_compatible: bool = True
) -> ParabolicData:
    """Levi/nilradical data of the parabolic attached to a triangular
    decomposition, with dual bases and Weyl vectors."""
    compatible = all(
        pair_functional(t.functional, a) >= 0 for a in alg.rd.positive_roots
    )
    if require_compatible and not compatible:
        raise ValueError(
            "functional is incompatible with the distinguished Borel; "
            "pass require_compatible=False for structural exploration"
        )
    u_roots = sorted(
        (a for a in t.phi_plus if not alg.rd.is_odd_root(a)), key=_root_sort_key
    ) + sorted((a for a in t.phi_plus if alg.rd.is_odd_root(a)), key=_root_sort_key)
    half = rat(1, 2)
    # half signed sum over the actual nilradical roots: the oscillator
    # vacuum weight.  For a compatible functional this equals rho - rho^l.
    rho_u_osc = alg.rd.zero_weight()
    for a in u_roots:
        rho_u_osc = rho_u_osc + (
            a.scale(-half) if alg.rd.is_odd_root(a) else a.scale(half)
        )
    pos = set(tuple(a.coords) for a in alg.rd.positive_roots)
    rho_l = alg.rd.zero_weight()
    for a in t.phi_zero:
        if tuple(a.coords) in pos:
            rho_l = rho_l + (
                a.scale(-half) if alg.rd.is_odd_root(a) else a.scale(half)
            )
    return ParabolicData(
        alg=alg,
        functional=t.functional,
        levi_roots=list(t.phi_zero),
        u_roots=u_roots,
        rho_l=rho_l,
        rho_u=rho_u_osc,
        compatible=compatible,
    )


def make_parabolic(alg: Superalgebra, c, require_compatible: bool = True) -> ParabolicData:
    return parabolic_from(triangulate(alg, c), alg, require_compatible)


def borel(alg: Superalgebra) -> ParabolicData:
    m, n = alg.m, alg.n
    c = tuple(range(m + n, 0, -1))
    return make_parabolic(alg, c)


def levi_g0(alg: Superalgebra) -> ParabolicData:
    """Parabolic with Levi the full even part (type-1 grading u = g_1)."""
    c = (1,) * alg.m + (0,) * alg.n
    return make_parabolic(alg, c)


def w_l1(pd: ParabolicData, lam: Weight, even_only: bool = False) -> list[WeylElement]:
    """Weyl elements w with w(lam + shift) dominant integral for the Levi.

    The default ranges over the Levi Weyl group with shift rho^l; the
    even_only variant ranges over the full Weyl group with shift rho^{l_0}
    (the form used for simple objects of the parabolic category when the
    Levi has odd roots).
    """
    if even_only:
        group = pd.alg.rd.weyl_group()
        shift = pd.rho_l_even()
    else:
        group = pd.weyl_group_levi()
        shift = pd.rho_l
    out = []
    for w in group:
        if pd.is_levi_dominant_integral(w.act(lam + shift), even_only=even_only):
            out.append(w)
    return out
