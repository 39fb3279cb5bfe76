"""Explicit weight-module realizations with exact action matrices.

Finite-dimensional simple modules over the even part (or over the even part
of any Levi) are realized by generating the Verma weight spaces inside the
weight polytope, computing the contravariant (Shapovalov) form per weight
space by straightening lowering words against raising words, and passing to
the quotient by its radical.  Kac modules are built on Lambda(g_-1) tensor
L0(Lambda) with the action computed by commuting generators rightward past
the exterior factors.  Everything is exact; the representation property
(matrix supercommutators equal bracket matrices) is a test invariant, not
an assumption.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .qlinalg import complement_and_projection, kernel_basis, rat, rat_str, QMatrix
from .rootdata import Weight
from .superalg import AlgElem, Superalgebra, Unit, add_into, elem
from .parabolic import ParabolicData


@dataclass
class WeightModule:
    """Weight-graded module with one exact sparse column per generator."""

    alg: Superalgebra
    weights: list          # Weight per basis vector
    parities: list         # 0/1 per basis vector
    actions: dict          # Unit -> list over columns of ((row, coeff), ...)
    highest_weight: Weight | None = None
    labels: list | None = None

    @property
    def dim(self) -> int:
        return len(self.weights)

    def weight_spaces(self) -> dict:
        out: dict = {}
        for i, w in enumerate(self.weights):
            out.setdefault(w, []).append(i)
        return out

    def acting_units(self) -> list[Unit]:
        return list(self.actions)

    def apply_unit(self, u: Unit, vec: dict) -> dict:
        col = self.actions.get(u)
        if col is None:
            raise KeyError(f"generator E{u} does not act on this module")
        out: dict = {}
        for i, c in vec.items():
            for j, a in col[i]:
                val = out.get(j)
                val = a * c if val is None else val + a * c
                if val:
                    out[j] = val
                else:
                    out.pop(j, None)
        return out

    def apply_elem(self, x: AlgElem, vec: dict) -> dict:
        out: dict = {}
        for u, cu in x.items():
            for j, a in self.apply_unit(u, vec).items():
                val = out.get(j)
                val = a * cu if val is None else val + a * cu
                if val:
                    out[j] = val
                else:
                    out.pop(j, None)
        return out

    def matrix_between(self, u: Unit, src_idx: list, dst_idx: list) -> QMatrix:
        pos = {j: r for r, j in enumerate(dst_idx)}
        m = QMatrix(len(dst_idx), len(src_idx))
        for cpos, i in enumerate(src_idx):
            for j, a in self.actions[u][i]:
                m.data[pos[j]][cpos] = a
        return m

    def character(self) -> dict:
        """Weight -> (dim of even part, dim of odd part)."""
        out: dict = {}
        for w, p in zip(self.weights, self.parities):
            ev, od = out.get(w, (0, 0))
            out[w] = (ev + 1, od) if p == 0 else (ev, od + 1)
        return out


# -- simple modules over even subalgebras ---------------------------------------


class _EvenVermaEngine:
    """PBW straightening over the negatives of an even positive-root subset."""

    def __init__(self, alg: Superalgebra, pos_roots: list, lam: Weight):
        self.alg = alg
        self.lam = lam
        self.pos_roots = list(pos_roots)
        self.neg_units = [alg.unit_for_root(-a) for a in self.pos_roots]
        self.unit_index = {u: k for k, u in enumerate(self.neg_units)}
        self._straighten_cache: dict = {}
        self._apply_cache: dict = {}

    # words are tuples of slot indices into neg_units, monomials are
    # non-decreasing words
    def straighten(self, word: tuple) -> dict:
        cached = self._straighten_cache.get(word)
        if cached is not None:
            return cached
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                swapped = word[:k] + (word[k + 1], word[k]) + word[k + 2:]
                out = dict(self.straighten(swapped))
                br = self.alg.bracket_units(
                    self.neg_units[word[k]], self.neg_units[word[k + 1]]
                )
                for u, c in br.items():
                    slot = self.unit_index.get(u)
                    if slot is None:
                        raise ValueError("bracket left the negative span")
                    merged = word[:k] + (slot,) + word[k + 2:]
                    for mono, c2 in self.straighten(merged).items():
                        val = out.get(mono, 0) + c * c2
                        if val:
                            out[mono] = val
                        else:
                            out.pop(mono, None)
                self._straighten_cache[word] = out
                return out
        self._straighten_cache[word] = {word: rat(1)}
        return {word: rat(1)}

    def weight_of(self, mono: tuple) -> Weight:
        w = self.lam
        for slot in mono:
            w = w - self.pos_roots[slot]
        return w

    def mul_lower(self, slot: int, mono: tuple) -> dict:
        return self.straighten((slot,) + mono)

    def apply_unit(self, u: Unit, mono: tuple) -> dict:
        key = (u, mono)
        cached = self._apply_cache.get(key)
        if cached is not None:
            return cached
        out: dict = {}
        if not mono:
            a, b = u
            if a == b:
                c = self.lam.eval_on_diag(a)
                if c:
                    out[()] = c
            elif u in self.unit_index:
                out[(self.unit_index[u],)] = rat(1)
            # raising generators annihilate the highest weight vector
        else:
            head, rest = mono[0], mono[1:]
            br = self.alg.bracket_units(u, self.neg_units[head])
            for w, c in br.items():
                for mono2, c2 in self.apply_unit_elem({w: c}, rest).items():
                    val = out.get(mono2, 0) + c2
                    if val:
                        out[mono2] = val
                    else:
                        out.pop(mono2, None)
            for mono2, c2 in self.apply_unit(u, rest).items():
                for mono3, c3 in self.mul_lower(head, mono2).items():
                    val = out.get(mono3, 0) + c2 * c3
                    if val:
                        out[mono3] = val
                    else:
                        out.pop(mono3, None)
        out = {k: v for k, v in out.items() if v}
        self._apply_cache[key] = out
        return out

    def apply_unit_elem(self, x: AlgElem, mono: tuple) -> dict:
        out: dict = {}
        for u, c in x.items():
            for mono2, c2 in self.apply_unit(u, mono).items():
                val = out.get(mono2, 0) + c * c2
                if val:
                    out[mono2] = val
                else:
                    out.pop(mono2, None)
        return out

    def apply_vec(self, u: Unit, vec: dict) -> dict:
        out: dict = {}
        for mono, c in vec.items():
            for mono2, c2 in self.apply_unit(u, mono).items():
                val = out.get(mono2, 0) + c * c2
                if val:
                    out[mono2] = val
                else:
                    out.pop(mono2, None)
        return out

    def shapovalov(self, monos: list) -> QMatrix:
        """Gram matrix of the contravariant form on one weight space."""
        g = QMatrix(len(monos), len(monos))
        for i, ma in enumerate(monos):
            raising = [
                (self.neg_units[slot][1], self.neg_units[slot][0])
                for slot in reversed(ma)
            ]
            for j, mb in enumerate(monos):
                vec = {mb: rat(1)}
                for ru in raising:
                    vec = self.apply_vec(ru, vec)
                    if not vec:
                        break
                g.data[i][j] = vec.get((), rat(0))
        return g


def _index_blocks(alg: Superalgebra, pos_roots: list) -> list[list[int]]:
    """Connected components of {1..m+n} linked by the given even roots."""
    parent = list(range(alg.m + alg.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in pos_roots:
        i, j = alg.unit_for_root(a)
        parent[find(i)] = find(j)
    groups: dict = {}
    for x in range(1, alg.m + alg.n + 1):
        groups.setdefault(find(x), []).append(x)
    return [sorted(g) for g in groups.values()]


def _antidominant(alg: Superalgebra, pos_roots: list, lam: Weight) -> Weight:
    coords = list(lam.coords)
    for block in _index_blocks(alg, pos_roots):
        vals = sorted((coords[i - 1] for i in block))
        for i, v in zip(block, vals):
            coords[i - 1] = v
    return Weight(alg.m, alg.n, tuple(coords))


def _subset_simples(alg: Superalgebra, pos_roots: list) -> list:
    simples = []
    for block in _index_blocks(alg, pos_roots):
        for i, j in zip(block, block[1:]):
            v = [0] * (alg.m + alg.n)
            v[i - 1], v[j - 1] = 1, -1
            simples.append(Weight(alg.m, alg.n, tuple(v)))
    return simples


def simple_even_module(
    alg: Superalgebra, pos_roots: list, lam: Weight, parity: int = 0
) -> WeightModule:
    """Simple module over the even subalgebra spanned by h and the given
    even roots, realized as a Verma quotient by the Shapovalov radical."""
    for a in pos_roots:
        hi = next(i for i, c in enumerate(a.coords) if c == 1)
        lo = next(i for i, c in enumerate(a.coords) if c == -1)
        d = lam.coords[hi] - lam.coords[lo]
        if d < 0 or d.denominator != 1:
            raise ValueError(f"{lam} is not dominant integral for the root subset")
    eng = _EvenVermaEngine(alg, pos_roots, lam)
    simples = _subset_simples(alg, pos_roots)
    w0lam = _antidominant(alg, pos_roots, lam)

    # admissible weights: lam - d and w0(lam) + d' with d, d' in Z>=0[simples]
    def simple_coords(delta: Weight):
        if not simples:
            return None if any(delta.coords) else []
        cols = [list(s.coords) for s in simples]
        from .qlinalg import solve_coordinates

        sol = solve_coordinates(cols, list(delta.coords))
        if sol is None or any(c < 0 or c.denominator != 1 for c in sol):
            return None
        return sol

    top = simple_coords(lam - w0lam)
    assert top is not None
    weights = set()

    def walk(mu: Weight):
        if mu in weights:
            return
        if simple_coords(lam - mu) is None or simple_coords(mu - w0lam) is None:
            return
        weights.add(mu)
        for s in simples:
            walk(mu - s)

    walk(lam)

    # Verma monomials per weight
    perweight: dict = {}
    roots = eng.pos_roots

    def monos_for(defect: Weight) -> list:
        out = []

        def rec(slot: int, remaining: Weight, acc: tuple):
            if not any(remaining.coords):
                out.append(acc)
                return
            if slot == len(roots):
                return
            rec(slot + 1, remaining, acc)
            nxt = remaining - roots[slot]
            k = 1
            while simple_coords(nxt) is not None or not any(nxt.coords):
                rec(slot + 1, nxt, acc + (slot,) * k)
                nxt = nxt - roots[slot]
                k += 1

        rec(0, defect, ())
        return [tuple(sorted(m)) for m in out]

    for mu in weights:
        perweight[mu] = sorted(set(monos_for(lam - mu)))

    # Shapovalov radical and quotient bases
    basis = []          # (weight, local index)
    reps: dict = {}     # weight -> representative coordinate vectors
    projs: dict = {}    # weight -> projection modulo the radical
    monos_of: dict = {}
    for mu in sorted(weights, key=lambda w: tuple(w.coords)):
        monos = perweight[mu]
        if not monos:
            continue
        gram = eng.shapovalov(monos)
        null = kernel_basis(gram)
        rep_vectors, project = complement_and_projection(null, len(monos))
        monos_of[mu] = monos
        reps[mu] = rep_vectors
        projs[mu] = project
        for k in range(len(rep_vectors)):
            basis.append((mu, k))

    index_of = {bk: i for i, bk in enumerate(basis)}
    weights_list = [mu for mu, _ in basis]
    parities = [parity] * len(basis)

    boundary_grams: dict = {}

    def assert_in_radical(target: Weight, img: dict):
        # images at weights outside the polytope must die in the quotient
        if target not in boundary_grams:
            monos = sorted(set(monos_for(lam - target)))
            boundary_grams[target] = (monos, eng.shapovalov(monos))
        monos, gram = boundary_grams[target]
        coords = [img.get(m, rat(0)) for m in monos]
        if any(gram.apply(coords)):
            raise AssertionError("action image escaped the weight polytope")

    units = [alg.unit_for_root(a) for a in pos_roots]
    units += [alg.unit_for_root(-a) for a in pos_roots]
    units += alg.cartan_units()
    actions: dict = {}
    for u in units:
        cols = []
        for mu, k in basis:
            vec_coords = reps[mu][k]
            vec = {m: c for m, c in zip(monos_of[mu], vec_coords) if c}
            img = eng.apply_vec(u, vec)
            a, b = u
            target = mu if a == b else mu + alg.root_of_unit(u)
            entries = []
            if img and target in monos_of:
                coords = [img.get(m, rat(0)) for m in monos_of[target]]
                for r, c in enumerate(projs[target](coords)):
                    if c:
                        entries.append((index_of[(target, r)], c))
            elif img:
                assert_in_radical(target, img)
            cols.append(tuple(entries))
        actions[u] = cols

    return WeightModule(
        alg=alg,
        weights=weights_list,
        parities=parities,
        actions=actions,
        highest_weight=lam,
        labels=[f"L0[{mu}#{k}]" for mu, k in basis],
    )


def simple_g0_module(alg: Superalgebra, lam: Weight) -> WeightModule:
    """Finite-dimensional simple module of the even part g_0 = gl(m) + gl(n)."""
    if not alg.rd.is_dominant_integral(lam):
        raise ValueError(f"{lam} is not dominant integral")
    mod = simple_even_module(alg, alg.rd.phi0_plus, lam)
    # even modules also carry the trivial action of nothing else; callers
    # needing odd generators must induce (see kac_module)
    return mod


def weyl_dim(alg: Superalgebra, pos_roots: list, lam: Weight) -> int:
    from .rootdata import form

    half = rat(1, 2)
    rho = alg.rd.zero_weight()
    for a in pos_roots:
        rho = rho + a.scale(half)
    num, den = rat(1), rat(1)
    for a in pos_roots:
        num *= form(lam + rho, a)
        den *= form(rho, a)
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)


# -- Kac modules -------------------------------------------------------------------


def _wedge_insert(unit_pos: int, subset: tuple) -> tuple | None:
    """Insert a g_-1 slot into a sorted exterior monomial; (sign, subset)."""
    if unit_pos in subset:
        return None
    k = sum(1 for s in subset if s < unit_pos)
    return ((-1) ** k, tuple(sorted(subset + (unit_pos,))))


class _KacEngine:
    def __init__(self, alg: Superalgebra, l0: WeightModule):
        self.alg = alg
        self.l0 = l0
        m, n = alg.m, alg.n
        self.gm1_units = [
            (m + j, i) for j in range(1, n + 1) for i in range(1, m + 1)
        ]
        self.slot_of = {u: k for k, u in enumerate(self.gm1_units)}
        self._cache: dict = {}

    def grade(self, u: Unit) -> int:
        a, b = u
        pa, pb = self.alg.index_parity(a), self.alg.index_parity(b)
        if pa == pb:
            return 0
        return 1 if (pa, pb) == (0, 1) else -1

    def act(self, u: Unit, subset: tuple) -> list:
        """Terms (subset', unit_on_l0 | None, coeff) of E_u on F_S (x) v."""
        key = (u, subset)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        out: dict = {}

        def add(s, g, c):
            k = (s, g)
            val = out.get(k, 0) + c
            if val:
                out[k] = val
            else:
                out.pop(k, None)

        if not subset:
            grade = self.grade(u)
            if grade == -1:
                add((self.slot_of[u],), None, rat(1))
            elif grade == 0:
                add((), u, rat(1))
            # grade +1 annihilates 1 (x) v
        else:
            head, rest = subset[0], subset[1:]
            f_head = self.gm1_units[head]
            br = self.alg.bracket_units(u, f_head)
            for w, c in br.items():
                for s2, g2, c2 in self.act_elem({w: c}, rest):
                    add(s2, g2, c2)
            sign = -1 if (self.alg.unit_parity(u) % 2) else 1
            for s2, g2, c2 in self.act(u, rest):
                ins = _wedge_insert(head, s2)
                if ins is not None:
                    wsign, s3 = ins
                    add(s3, g2, sign * wsign * c2)
        res = [(s, g, c) for (s, g), c in out.items()]
        self._cache[key] = res
        return res

    def act_elem(self, x: AlgElem, subset: tuple) -> list:
        out = []
        for u, c in x.items():
            for s, g, c2 in self.act(u, subset):
                out.append((s, g, c * c2))
        return out


def kac_module(alg: Superalgebra, lam: Weight) -> WeightModule:
    """Kac module K(lam) = Lambda(g_-1) (x) L0(lam), g_1 acting trivially."""
    l0 = simple_g0_module(alg, lam)
    eng = _KacEngine(alg, l0)
    nslots = len(eng.gm1_units)
    subsets = [
        tuple(sorted(s))
        for r in range(nslots + 1)
        for s in itertools.combinations(range(nslots), r)
    ]
    basis = [(s, i) for s in subsets for i in range(l0.dim)]
    index_of = {bk: i for i, bk in enumerate(basis)}

    def subset_weight(s: tuple) -> Weight:
        w = alg.rd.zero_weight()
        for slot in s:
            w = w + alg.root_of_unit(eng.gm1_units[slot])
        return w

    weights = [subset_weight(s) + l0.weights[i] for s, i in basis]
    parities = [len(s) % 2 for s, _ in basis]

    actions: dict = {}
    for u in alg.basis_units():
        cols = []
        for s, i in basis:
            entries: dict = {}
            for s2, g, c in eng.act(u, s):
                if g is None:
                    j = index_of[(s2, i)]
                    entries[j] = entries.get(j, 0) + c
                else:
                    for i2, c2 in l0.actions[g][i]:
                        j = index_of[(s2, i2)]
                        entries[j] = entries.get(j, 0) + c * c2
            cols.append(tuple((j, c) for j, c in entries.items() if c))
        actions[u] = cols

    return WeightModule(
        alg=alg,
        weights=weights,
        parities=parities,
        actions=actions,
        highest_weight=lam,
        labels=[f"K[{'.'.join(map(str, s))}#{i}]" for s, i in basis],
    )


def trivial_module(alg: Superalgebra) -> WeightModule:
    zero = alg.rd.zero_weight()
    actions = {u: [()] for u in alg.basis_units()}
    return WeightModule(
        alg=alg,
        weights=[zero],
        parities=[0],
        actions=actions,
        highest_weight=zero,
        labels=["1"],
    )


# -- singular vectors, submodules, quotients ------------------------------------------


def singular_vector_scan(mod: WeightModule) -> list:
    """All (weight, vector) with the vector killed by every positive-root
    generator, one basis per weight space (vectors as {index: coeff})."""
    alg = mod.alg
    pos_units = [
        u
        for u in (alg.unit_for_root(a) for a in alg.rd.positive_roots)
        if u in mod.actions
    ]
    spaces = mod.weight_spaces()
    out = []
    for mu, idx in sorted(spaces.items(), key=lambda kv: tuple(kv[0].coords)):
        rows = []
        for u in pos_units:
            target = mu + alg.root_of_unit(u)
            mat = mod.matrix_between(u, idx, spaces.get(target, []))
            rows.extend(mat.data)
        if rows:
            stacked = QMatrix(len(rows), len(idx), rows)
            kern = kernel_basis(stacked)
        else:
            kern = [[rat(1) if k == t else rat(0) for t in range(len(idx))] for k in range(len(idx))]
        for v in kern:
            out.append((mu, {idx[t]: c for t, c in enumerate(v) if c}))
    return out


def submodule_closure(mod: WeightModule, seeds: list) -> dict:
    """Span of U(g)-closure of seed vectors, per (weight, parity) sector.

    Seeds and the result are given as {basis index: coeff} dicts; the
    return value maps (weight, parity) to a list of reduced row vectors in
    the coordinates of that sector's basis indices.
    """
    from .qlinalg import row_space_basis, span_dim

    spaces = mod.weight_spaces()
    sector_idx: dict = {}
    for mu, idx in spaces.items():
        for p in (0, 1):
            sector = [i for i in idx if mod.parities[i] == p]
            if sector:
                sector_idx[(mu, p)] = sector

    def sector_of_vec(vec: dict):
        ws = {mod.weights[i] for i in vec}
        ps = {mod.parities[i] for i in vec}
        if len(ws) != 1 or len(ps) != 1:
            raise ValueError("seed vector is not (weight, parity) homogeneous")
        return (ws.pop(), ps.pop())

    basis_rows: dict = {}

    def add_vec(vec: dict) -> bool:
        if not vec:
            return False
        sec = sector_of_vec(vec)
        idx = sector_idx[sec]
        row = [vec.get(i, rat(0)) for i in idx]
        rows = basis_rows.setdefault(sec, [])
        before = len(rows)
        merged = row_space_basis(rows + [row])
        if len(merged) > before:
            basis_rows[sec] = merged
            return True
        return False

    frontier = [dict(v) for v in seeds]
    for v in frontier:
        add_vec(v)
    while frontier:
        nxt = []
        for vec in frontier:
            for u in mod.actions:
                img = mod.apply_unit(u, vec)
                if img and add_vec(img):
                    nxt.append(img)
        frontier = nxt
    return basis_rows


def quotient_module(mod: WeightModule, sub_rows: dict) -> WeightModule:
    """Quotient of mod by the submodule given per (weight, parity) sector."""
    spaces = mod.weight_spaces()
    sectors: dict = {}
    for mu, idx in spaces.items():
        for p in (0, 1):
            sector = [i for i in idx if mod.parities[i] == p]
            if sector:
                sectors[(mu, p)] = sector

    reps: dict = {}
    projs: dict = {}
    basis = []
    for sec in sorted(sectors, key=lambda s: (tuple(s[0].coords), s[1])):
        idx = sectors[sec]
        sub = sub_rows.get(sec, [])
        rep_vectors, project = complement_and_projection(sub, len(idx))
        reps[sec] = rep_vectors
        projs[sec] = project
        for k in range(len(rep_vectors)):
            basis.append((sec, k))
    index_of = {bk: i for i, bk in enumerate(basis)}

    weights = [sec[0] for sec, _ in basis]
    parities = [sec[1] for sec, _ in basis]
    actions: dict = {}
    for u in mod.actions:
        root = mod.alg.root_of_unit(u)
        pshift = mod.alg.unit_parity(u)
        cols = []
        for sec, k in basis:
            (mu, p) = sec
            idx = sectors[sec]
            vec = {
                i: c for i, c in zip(idx, reps[sec][k]) if c
            }
            img = mod.apply_unit(u, vec)
            tsec = (mu + root, (p + pshift) % 2)
            entries = []
            if img:
                tidx = sectors.get(tsec)
                if tidx is None:
                    raise AssertionError("image escaped the sector table")
                coords = [img.get(i, rat(0)) for i in tidx]
                out = projs[tsec](coords)
                for r, c in enumerate(out):
                    if c:
                        entries.append((index_of[(tsec, r)], c))
            cols.append(tuple(entries))
        actions[u] = cols
    return WeightModule(
        alg=mod.alg,
        weights=weights,
        parities=parities,
        actions=actions,
        highest_weight=mod.highest_weight,
        labels=None,
    )


def simple_module(alg: Superalgebra, lam: Weight, max_rounds: int = 10) -> WeightModule:
    """Simple finite-dimensional module L(lam): the Kac module when lam is
    typical, otherwise the iterated quotient by submodules generated by
    non-top singular vectors."""
    if not alg.rd.is_dominant_integral(lam):
        raise ValueError(f"{lam} is not dominant integral")
    mod = kac_module(alg, lam)
    if alg.rd.is_typical(lam):
        return mod
    for _ in range(max_rounds):
        bad = [v for mu, v in singular_vector_scan(mod) if mu != lam]
        if not bad:
            return mod
        mod = quotient_module(mod, submodule_closure(mod, bad))
    raise RuntimeError("singular vectors persist after the iteration cap")


# -- Levi decomposition and characters --------------------------------------------


def l_decompose(mod: WeightModule, pd: ParabolicData) -> list:
    """Decompose into simple Levi constituents by scanning Levi-highest
    vectors: multiplicity at nu = dim of vectors of weight nu killed by all
    positive Levi root generators.  Returns (highest weight, multiplicity,
    (even count, odd count)); for an odd Levi the parity split is None when
    the singular space mixes parities.
    """
    alg = mod.alg
    levi_pos_units = [
        u
        for u in (alg.unit_for_root(a) for a in pd.levi_plus)
        if u in mod.actions
    ]
    even_levi = not pd.has_odd_levi()
    spaces = mod.weight_spaces()
    out = []
    for mu, idx_full in sorted(spaces.items(), key=lambda kv: tuple(kv[0].coords)):
        sectors = (
            [[i for i in idx_full if mod.parities[i] == p] for p in (0, 1)]
            if even_levi
            else [idx_full]
        )
        total = 0
        par_counts: list = [0, 0]
        mixed = False
        for snum, idx in enumerate(sectors):
            if not idx:
                continue
            rows = []
            for u in levi_pos_units:
                target = mu + alg.root_of_unit(u)
                mat = mod.matrix_between(u, idx, spaces.get(target, []))
                rows.extend(mat.data)
            if rows:
                kern = kernel_basis(QMatrix(len(rows), len(idx), rows))
            else:
                kern = [
                    [rat(1) if k == t else rat(0) for t in range(len(idx))]
                    for k in range(len(idx))
                ]
            total += len(kern)
            if even_levi:
                par_counts[snum] += len(kern)
            else:
                for v in kern:
                    ps = {mod.parities[idx[t]] for t, c in enumerate(v) if c}
                    if len(ps) == 1:
                        par_counts[ps.pop()] += 1
                    else:
                        mixed = True
        if total:
            out.append((mu, total, None if mixed else tuple(par_counts)))
    return out


# -- serialization ----------------------------------------------------------------------


def module_to_dict(mod: WeightModule) -> dict:
    return {
        "algebra": [mod.alg.m, mod.alg.n],
        "highest_weight": [rat_str(c) for c in mod.highest_weight.coords]
        if mod.highest_weight
        else None,
        "weights": [[rat_str(c) for c in w.coords] for w in mod.weights],
        "parities": list(mod.parities),
        "actions": {
            f"{a},{b}": [[[j, rat_str(c)] for j, c in col] for col in cols]
            for (a, b), cols in mod.actions.items()
        },
    }


def module_from_dict(data: dict) -> WeightModule:
    m, n = data["algebra"]
    alg = Superalgebra(m, n)
    weights = [Weight(m, n, tuple(rat(c) for c in w)) for w in data["weights"]]
    hw = (
        Weight(m, n, tuple(rat(c) for c in data["highest_weight"]))
        if data["highest_weight"]
        else None
    )
    actions = {}
    for key, cols in data["actions"].items():
        a, b = (int(x) for x in key.split(","))
        actions[(a, b)] = [
            tuple((int(j), rat(c)) for j, c in col) for col in cols
        ]
    return WeightModule(
        alg=alg,
        weights=weights,
        parities=list(data["parities"]),
        actions=actions,
        highest_weight=hw,
    )
