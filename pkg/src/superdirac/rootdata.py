"""Root data for gl(m|n): weights, the invariant form on h*, Weyl vectors,
the Weyl group, dominance and typicality tests.

Weights live in the epsilon/delta coordinate system: a weight is
sum_i a_i eps_i + sum_j b_j del_j, stored as the concatenated coordinate
tuple (a_1..a_m | b_1..b_n).  The invariant form on h* induced by the
supertrace form on gl(m|n) is +1 on the eps block and -1 on the del block.

The distinguished positive system (eps before del) is fixed globally:
Phi0+ = {eps_i - eps_j : i < j} u {del_i - del_j : i < j},
Phi1+ = {eps_i - del_j}.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .qlinalg import Rat, rat, rat_str

MAX_RANK = 8  # desk-scale guard on m + n, overridable in build_gl


@dataclass(frozen=True)
class Weight:
    """Element of h* for gl(m|n), exact rational coordinates."""

    m: int
    n: int
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(rat(c) for c in self.coords))
        if len(self.coords) != self.m + self.n:
            raise ValueError("coordinate length must be m + n")

    def __add__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.m, self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check(other)
        return Weight(self.m, self.n, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(self.m, self.n, tuple(-a for a in self.coords))

    def scale(self, c) -> "Weight":
        c = rat(c)
        return Weight(self.m, self.n, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)

    def eps(self) -> tuple:
        return self.coords[: self.m]

    def delta(self) -> tuple:
        return self.coords[self.m:]

    def eval_on_diag(self, j: int):
        """Value on the Cartan basis element E_jj (1-based index)."""
        return self.coords[j - 1]

    def _check(self, other: "Weight"):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("weights belong to different algebras")

    def __str__(self) -> str:
        eps = ",".join(rat_str(c) for c in self.eps())
        dlt = ",".join(rat_str(c) for c in self.delta())
        return f"[{eps}|{dlt}]"


def form(lam: Weight, mu: Weight):
    """Invariant bilinear form on h*: +1 on eps coords, -1 on del coords."""
    lam._check(mu)
    s = rat(0)
    for a, b in zip(lam.eps(), mu.eps()):
        s += a * b
    for a, b in zip(lam.delta(), mu.delta()):
        s -= a * b
    return s


@dataclass(frozen=True)
class WeylElement:
    """Pair of permutations (eps block, del block), 0-based images."""

    perm_eps: tuple
    perm_delta: tuple

    def act(self, w: Weight) -> Weight:
        m, n = len(self.perm_eps), len(self.perm_delta)
        if (w.m, w.n) != (m, n):
            raise ValueError("Weyl element and weight rank mismatch")
        eps = [None] * m
        dlt = [None] * n
        for i, c in enumerate(w.eps()):
            eps[self.perm_eps[i]] = c
        for j, c in enumerate(w.delta()):
            dlt[self.perm_delta[j]] = c
        return Weight(m, n, tuple(eps) + tuple(dlt))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        pe = tuple(self.perm_eps[other.perm_eps[i]] for i in range(len(self.perm_eps)))
        pd = tuple(self.perm_delta[other.perm_delta[j]] for j in range(len(self.perm_delta)))
        return WeylElement(pe, pd)

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm_eps)) and all(
            p == i for i, p in enumerate(self.perm_delta)
        )


def weyl_act(w: WeylElement, lam: Weight) -> Weight:
    return w.act(lam)


class RootDatum:
    """Root system of gl(m|n) with the distinguished positive system."""

    def __init__(self, m: int, n: int):
        self.m = m
        self.n = n
        self.phi0_plus = [self._eps_root(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
        self.phi0_plus += [self._del_root(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        self.phi1_plus = [
            self._odd_root(i, j) for i in range(1, m + 1) for j in range(1, n + 1)
        ]

    # -- root constructors ------------------------------------------------
    def _unit(self, pos: int) -> list:
        v = [0] * (self.m + self.n)
        v[pos] = 1
        return v

    def _eps_root(self, i: int, j: int) -> Weight:
        v = self._unit(i - 1)
        v[j - 1] -= 1
        return Weight(self.m, self.n, tuple(v))

    def _del_root(self, i: int, j: int) -> Weight:
        v = self._unit(self.m + i - 1)
        v[self.m + j - 1] -= 1
        return Weight(self.m, self.n, tuple(v))

    def _odd_root(self, i: int, j: int) -> Weight:
        v = self._unit(i - 1)
        v[self.m + j - 1] -= 1
        return Weight(self.m, self.n, tuple(v))

    # -- basic queries -----------------------------------------------------
    @property
    def positive_roots(self) -> list[Weight]:
        return self.phi0_plus + self.phi1_plus

    @property
    def all_roots(self) -> list[Weight]:
        pos = self.positive_roots
        return pos + [-a for a in pos]

    def is_odd_root(self, alpha: Weight) -> bool:
        return any(alpha.eps()) and any(alpha.delta())

    def zero_weight(self) -> Weight:
        return Weight(self.m, self.n, (0,) * (self.m + self.n))

    def weight(self, coords) -> Weight:
        return Weight(self.m, self.n, tuple(coords))

    # -- Weyl vectors --------------------------------------------------------
    def rho_parts(self) -> tuple[Weight, Weight, Weight]:
        """(rho0, rho1, rho) with rho = rho0 - rho1."""
        half = rat(1, 2)
        rho0 = self.zero_weight()
        for a in self.phi0_plus:
            rho0 = rho0 + a
        rho1 = self.zero_weight()
        for a in self.phi1_plus:
            rho1 = rho1 + a
        rho0 = rho0.scale(half)
        rho1 = rho1.scale(half)
        return rho0, rho1, rho0 - rho1

    @property
    def rho(self) -> Weight:
        return self.rho_parts()[2]

    # -- dominance / typicality ---------------------------------------------
    def is_dominant_integral(self, lam: Weight) -> bool:
        """True iff lam is the highest weight of a f.d. simple supermodule.

        For gl(m|n) this means the within-block coordinate differences are
        non-negative integers.
        """
        eps, dlt = lam.eps(), lam.delta()
        for a, b in zip(eps, eps[1:]):
            d = a - b
            if d < 0 or d.denominator != 1:
                return False
        for a, b in zip(dlt, dlt[1:]):
            d = a - b
            if d < 0 or d.denominator != 1:
                return False
        return True

    def atypicality_roots(self, lam: Weight) -> list[Weight]:
        """Odd positive roots alpha with (lam + rho, alpha) = 0."""
        shifted = lam + self.rho
        return [a for a in self.phi1_plus if not form(shifted, a)]

    def is_typical(self, lam: Weight) -> bool:
        return not self.atypicality_roots(lam)

    # -- Weyl group ----------------------------------------------------------
    def weyl_group(self) -> list[WeylElement]:
        return [
            WeylElement(pe, pd)
            for pe in itertools.permutations(range(self.m))
            for pd in itertools.permutations(range(self.n))
        ]


def build_gl(m: int, n: int, allow_large: bool = False) -> RootDatum:
    """Root datum of gl(m|n) with the distinguished positive system."""
    if m < 1 or n < 1:
        raise ValueError("gl(m|n) requires m >= 1 and n >= 1")
    if not allow_large and m + n > MAX_RANK:
        raise ValueError(f"m + n = {m + n} exceeds the desk-scale cap {MAX_RANK}")
    return RootDatum(m, n)


# -- weight string syntax ------------------------------------------------------

_TERM = re.compile(r"([+-]?[^+-]*)")


def parse_weight(text: str, m: int, n: int) -> Weight:
    """Parse "2e1+1e2-1d1" or bracket form "[2,1|-1]"; "0" is the zero weight."""
    text = text.strip().replace(" ", "")
    if not text:
        raise ValueError("empty weight string")
    if text.startswith("["):
        if not text.endswith("]") or "|" not in text:
            raise ValueError(f"malformed bracket weight: {text!r}")
        eps_part, del_part = text[1:-1].split("|", 1)
        eps = [rat(t) for t in eps_part.split(",")] if eps_part else []
        dlt = [rat(t) for t in del_part.split(",")] if del_part else []
        if len(eps) != m or len(dlt) != n:
            raise ValueError(f"bracket weight needs {m}+{n} coordinates")
        return Weight(m, n, tuple(eps) + tuple(dlt))
    coords = [rat(0)] * (m + n)
    if text == "0":
        return Weight(m, n, tuple(coords))
    for term in _TERM.findall(text):
        if not term:
            continue
        mt = re.fullmatch(r"([+-]?)((?:\d+(?:/\d+)?)?)([ed])(\d+)", term)
        if mt is None:
            raise ValueError(f"bad weight term {term!r} in {text!r}")
        sign, mag, kind, idx = mt.groups()
        c = rat(mag) if mag else rat(1)
        if sign == "-":
            c = -c
        idx = int(idx)
        if kind == "e":
            if not 1 <= idx <= m:
                raise ValueError(f"eps index out of range in {term!r}")
            coords[idx - 1] += c
        else:
            if not 1 <= idx <= n:
                raise ValueError(f"del index out of range in {term!r}")
            coords[m + idx - 1] += c
    return Weight(m, n, tuple(coords))
