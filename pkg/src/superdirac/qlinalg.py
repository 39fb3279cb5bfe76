"""Exact rational linear algebra.

Everything downstream (root data, module actions, Dirac blocks, chain
complexes) reduces to dense matrices over Q.  Matrices are small (weight
spaces at desk scale), so we use straightforward Gaussian elimination with
normalized pivots; no floating point anywhere.

The scalar type is ``fractions.Fraction`` unless gmpy2 is importable, in
which case ``gmpy2.mpq`` is used (same exact semantics, faster).
"""

from __future__ import annotations

from fractions import Fraction

try:  # optional acceleration; both types are exact rationals in lowest terms
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    Rat = Fraction

ZERO = Rat(0)
ONE = Rat(1)


def rat(x, y=None):
    """Coerce to the engine's exact rational scalar."""
    if y is not None:
        return Rat(x, y)
    if isinstance(x, str):
        if "/" in x:
            num, den = x.split("/")
            return Rat(int(num), int(den))
        return Rat(int(x))
    return Rat(x)


def rat_str(x) -> str:
    """Canonical string form "p/q" or "p" used in JSON payloads."""
    num, den = x.numerator, x.denominator
    return f"{num}/{den}" if den != 1 else f"{num}"


class QMatrix:
    """Dense matrix of exact rationals, stored row-major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[ZERO] * cols for _ in range(rows)]
        else:
            self.data = [[rat(x) for x in row] for row in data]
            if len(self.data) != rows or any(len(r) != cols for r in self.data):
                raise ValueError("entry count does not match rows x cols")

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        m = cls(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @classmethod
    def from_columns(cls, cols: list, nrows: int | None = None) -> "QMatrix":
        if not cols:
            return cls(nrows or 0, 0)
        n = len(cols[0])
        m = cls(n, len(cols))
        for j, c in enumerate(cols):
            for i, x in enumerate(c):
                m.data[i][j] = rat(x)
        return m

    def column(self, j: int) -> list:
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self) -> list:
        return [self.column(j) for j in range(self.cols)]

    def copy(self) -> "QMatrix":
        m = QMatrix(self.rows, self.cols)
        m.data = [row[:] for row in self.data]
        return m

    def transpose(self) -> "QMatrix":
        m = QMatrix(self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                m.data[j][i] = self.data[i][j]
        return m

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __add__(self, other: "QMatrix") -> "QMatrix":
        m = QMatrix(self.rows, self.cols)
        m.data = [
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        ]
        return m

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        m = QMatrix(self.rows, self.cols)
        m.data = [
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        ]
        return m

    def scale(self, c) -> "QMatrix":
        c = rat(c)
        m = QMatrix(self.rows, self.cols)
        m.data = [[c * a for a in row] for row in self.data]
        return m

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = QMatrix(self.rows, other.cols)
        bt = other.transpose().data
        for i, row in enumerate(self.data):
            orow = out.data[i]
            for j, bcol in enumerate(bt):
                s = ZERO
                for a, b in zip(row, bcol):
                    if a and b:
                        s += a * b
                orow[j] = s
        return out

    def apply(self, vec: list) -> list:
        return [
            sum((a * x for a, x in zip(row, vec) if a and x), ZERO)
            for row in self.data
        ]

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(rat_str(x) for x in row) for row in self.data
        )
        return f"QMatrix({self.rows}x{self.cols}: {body})"


def rref(m: QMatrix) -> tuple[QMatrix, list[int]]:
    """Reduced row echelon form and pivot columns; row space preserved."""
    a = [row[:] for row in m.data]
    nr, nc = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = next((i for i in range(r, nr) if a[i][c]), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = ONE / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    out = QMatrix(nr, nc)
    out.data = a
    return out, pivots


def rank(m: QMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: QMatrix) -> list[list]:
    """Basis of the right null space of m, as column vectors."""
    r, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -r.data[i][f]
        basis.append(v)
    return basis


def span_dim(vectors: list) -> int:
    """Dimension of the span of a list of coordinate vectors."""
    if not vectors:
        return 0
    return rank(QMatrix(len(vectors), len(vectors[0]), vectors))


def row_space_basis(vectors: list) -> list:
    """A reduced basis (rref rows) of the span of the given vectors."""
    if not vectors:
        return []
    r, pivots = rref(QMatrix(len(vectors), len(vectors[0]), vectors))
    return [r.data[i] for i in range(len(pivots))]


def in_span(v: list, vectors: list) -> bool:
    if all(not x for x in v):
        return True
    if not vectors:
        return False
    d = span_dim(vectors)
    return span_dim(vectors + [v]) == d


def quotient_dim(sub: list, whole: list) -> int:
    """dim(span(whole) / span(sub)); requires span(sub) <= span(whole)."""
    for v in sub:
        if not in_span(v, whole):
            raise ValueError("sub vector outside the span of whole")
    return span_dim(whole) - span_dim(sub)


def intersection_basis(avecs: list, bvecs: list) -> list:
    """Basis of span(avecs) ∩ span(bvecs), vectors in ambient coordinates."""
    if not avecs or not bvecs:
        return []
    n = len(avecs[0])
    stacked = QMatrix.from_columns(
        [list(v) for v in avecs] + [list(v) for v in bvecs], n
    )
    out = []
    na = len(avecs)
    for k in kernel_basis(stacked):
        vec = [ZERO] * n
        for j in range(na):
            if k[j]:
                for i in range(n):
                    vec[i] += k[j] * avecs[j][i]
        if any(vec):
            out.append(vec)
    return row_space_basis(out)


def solve_coordinates(basis: list, target: list):
    """Express target in the given (independent) basis; None if outside."""
    if not basis:
        return None if any(target) else []
    m = QMatrix.from_columns([list(b) for b in basis], len(target))
    aug = QMatrix(m.rows, m.cols + 1)
    for i in range(m.rows):
        aug.data[i][: m.cols] = m.data[i]
        aug.data[i][m.cols] = rat(target[i])
    r, pivots = rref(aug)
    if m.cols in pivots:
        return None
    coords = [ZERO] * m.cols
    for i, p in enumerate(pivots):
        coords[p] = r.data[i][m.cols]
    return coords


def complement_and_projection(sub: list, dim: int):
    """Complement basis R of span(sub) in Q^dim and the projection onto R.

    Returns (rep_vectors, project) where project(v) gives coordinates of v
    in the rep basis modulo span(sub).
    """
    subbasis = row_space_basis(sub)
    pivots = set()
    if subbasis:
        _, piv = rref(QMatrix(len(subbasis), dim, subbasis))
        pivots = set(piv)
    reps = []
    for j in range(dim):
        if j not in pivots:
            v = [ZERO] * dim
            v[j] = ONE
            reps.append(v)
    full = subbasis + reps
    fullmat = QMatrix(len(full), dim, full).transpose()  # columns = basis
    ns = len(subbasis)

    def project(v: list) -> list:
        coords = solve_coordinates(fullmat.columns(), list(v))
        return coords[ns:]

    return reps, project
