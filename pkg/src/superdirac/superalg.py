"""Structure constants of gl(m|n): superbrackets of matrix units, the
supertrace form, dual bases and quadratic Casimir elements.

Algebra elements are finitely supported maps {(a, b): coefficient} over the
matrix units E_ab, 1-based indices in {1..m+n}; index a is even iff a <= m.
Keeping elements abstract (rather than as matrices) lets one action engine
serve Verma, Kac and simple modules alike; matrices appear only inside the
supertrace form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qlinalg import rat
from .rootdata import RootDatum, Weight, build_gl

Unit = tuple[int, int]
AlgElem = dict  # Unit -> Rat, no zero coefficients stored


def elem(unit: Unit, coeff=1) -> AlgElem:
    c = rat(coeff)
    return {unit: c} if c else {}


def add_into(acc: AlgElem, other: AlgElem, scale=1) -> AlgElem:
    s = rat(scale)
    for k, v in other.items():
        c = acc.get(k, None)
        c = v * s if c is None else c + v * s
        if c:
            acc[k] = c
        else:
            acc.pop(k, None)
    return acc


def scaled(x: AlgElem, c) -> AlgElem:
    c = rat(c)
    return {k: c * v for k, v in x.items()} if c else {}


@dataclass
class CasimirElem:
    """Sum of ordered factor pairs x_i x^i with (x^i, x_j) = delta_ij.

    Stored unexpanded; an action composes each pair through a module.
    """

    pairs: list  # list of (AlgElem, AlgElem)


class Superalgebra:
    """gl(m|n) with its root datum, bracket and supertrace form."""

    def __init__(self, m: int, n: int, allow_large: bool = False):
        self.m = m
        self.n = n
        self.rd: RootDatum = build_gl(m, n, allow_large=allow_large)
        self._bracket_cache: dict = {}

    # -- indices and parities ------------------------------------------------
    def index_parity(self, a: int) -> int:
        return 0 if a <= self.m else 1

    def unit_parity(self, u: Unit) -> int:
        a, b = u
        return (self.index_parity(a) + self.index_parity(b)) % 2

    def elem_parity(self, x: AlgElem) -> int:
        """Parity of a homogeneous element; mixed elements are rejected."""
        ps = {self.unit_parity(u) for u in x}
        if len(ps) > 1:
            raise ValueError("element is not parity homogeneous")
        return ps.pop() if ps else 0

    def basis_units(self) -> list[Unit]:
        d = self.m + self.n
        return [(a, b) for a in range(1, d + 1) for b in range(1, d + 1)]

    def cartan_units(self) -> list[Unit]:
        return [(j, j) for j in range(1, self.m + self.n + 1)]

    # -- roots <-> units -------------------------------------------------------
    def root_of_unit(self, u: Unit) -> Weight:
        a, b = u
        v = [0] * (self.m + self.n)
        v[a - 1] += 1
        v[b - 1] -= 1
        return Weight(self.m, self.n, tuple(v))

    def unit_for_root(self, alpha: Weight) -> Unit:
        pos = [i for i, c in enumerate(alpha.coords) if c == 1]
        neg = [i for i, c in enumerate(alpha.coords) if c == -1]
        if len(pos) != 1 or len(neg) != 1:
            raise ValueError(f"{alpha} is not a root of gl({self.m}|{self.n})")
        return (pos[0] + 1, neg[0] + 1)

    def weight_of_elem(self, x: AlgElem) -> Weight:
        roots = {self.root_of_unit(u) for u in x}
        if len(roots) != 1:
            raise ValueError("element is not h-weight homogeneous")
        return roots.pop()

    # -- bracket -----------------------------------------------------------------
    def bracket_units(self, u: Unit, v: Unit) -> AlgElem:
        """[E_ab, E_cd] = d_bc E_ad - (-1)^{p(E_ab)p(E_cd)} d_da E_cb."""
        key = (u, v)
        out = self._bracket_cache.get(key)
        if out is not None:
            return out
        (a, b), (c, d) = u, v
        res: AlgElem = {}
        if b == c:
            add_into(res, elem((a, d)))
        if d == a:
            sign = -1 if (self.unit_parity(u) * self.unit_parity(v)) % 2 else 1
            add_into(res, elem((c, b), -sign))
        self._bracket_cache[key] = res
        return res

    def bracket(self, x: AlgElem, y: AlgElem) -> AlgElem:
        out: AlgElem = {}
        for u, cu in x.items():
            for v, cv in y.items():
                add_into(out, self.bracket_units(u, v), cu * cv)
        return out

    # -- supertrace form -----------------------------------------------------------
    def form_units(self, u: Unit, v: Unit):
        """str(E_ab E_cd) = d_bc d_ad (-1)^{p(a)}."""
        (a, b), (c, d) = u, v
        if b == c and a == d:
            return rat(-1 if self.index_parity(a) else 1)
        return rat(0)

    def invariant_form(self, x: AlgElem, y: AlgElem):
        s = rat(0)
        for u, cu in x.items():
            a, b = u
            cv = y.get((b, a))
            if cv:
                s += cu * cv * self.form_units(u, (b, a))
        return s

    def coroot(self, alpha: Weight) -> AlgElem:
        """h_alpha in h with (h_alpha, h) = alpha(h) for all h in h."""
        out: AlgElem = {}
        for j in range(1, self.m + self.n + 1):
            c = alpha.eval_on_diag(j)
            if self.index_parity(j):
                c = -c
            if c:
                out[(j, j)] = rat(c)
        return out

    # -- dual bases and Casimirs ------------------------------------------------------
    def supertranspose(self, x: AlgElem) -> AlgElem:
        return {(b, a): c for (a, b), c in x.items()}

    def dual_basis(self, sub: list[AlgElem]) -> list[AlgElem]:
        """Elements y_i with (y_i, sub_j) = delta_ij.

        Duals are sought in the span of the supertransposes of sub (for a
        root vector in g^alpha the candidate dual lives in g^{-alpha});
        when the pairing between the two spans degenerates, the error names
        the radical.
        """
        from .qlinalg import QMatrix, kernel_basis, rref

        k = len(sub)
        tsub = [self.supertranspose(x) for x in sub]
        gram = QMatrix(k, k)
        for i in range(k):
            for j in range(k):
                gram.data[i][j] = self.invariant_form(tsub[i], sub[j])
        null = kernel_basis(gram)
        if null:
            radicals = []
            for vec in null:
                r: AlgElem = {}
                for c, x in zip(vec, sub):
                    add_into(r, x, c)
                radicals.append(r)
            raise ValueError(
                "invariant form degenerates on the span; radical contains "
                + "; ".join(self._fmt(r) for r in radicals)
            )
        aug = QMatrix(k, 2 * k)
        for i in range(k):
            for j in range(k):
                aug.data[i][j] = gram.data[i][j]
            aug.data[i][k + i] = rat(1)
        r, _ = rref(aug)
        inv = [[r.data[i][k + j] for j in range(k)] for i in range(k)]
        duals = []
        for i in range(k):
            # y_i = sum_j (G^-1)[i][j] tsub_j gives (y_i, sub_l) = delta_il
            y: AlgElem = {}
            for j in range(k):
                add_into(y, tsub[j], inv[i][j])
            duals.append(y)
        return duals

    def casimir(self, sub: list[AlgElem]) -> CasimirElem:
        duals = self.dual_basis(sub)
        return CasimirElem(pairs=[(x, y) for x, y in zip(sub, duals)])

    def casimir_g(self) -> CasimirElem:
        """Quadratic Casimir of the full algebra: sum E_ab (-1)^{p(b)} E_ba."""
        pairs = []
        for a, b in self.basis_units():
            sign = -1 if self.index_parity(b) else 1
            pairs.append((elem((a, b)), elem((b, a), sign)))
        return CasimirElem(pairs=pairs)

    # -- misc ------------------------------------------------------------------
    def _fmt(self, x: AlgElem) -> str:
        from .qlinalg import rat_str

        return " + ".join(f"{rat_str(c)}*E[{a},{b}]" for (a, b), c in sorted(x.items()))

    def root_vector(self, alpha: Weight) -> AlgElem:
        return elem(self.unit_for_root(alpha))
