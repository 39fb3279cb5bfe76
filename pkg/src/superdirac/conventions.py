"""Global sign conventions, isolated so tests can mutate them.

Every sign here is pinned by exact identity tests (Clifford relations, the
homomorphism property of the Levi embedding, invariance and the square of
the Dirac operator); flipping any single one makes at least one identity
suite fail.  Objects capture these values at construction time, so tests
that mutate a flag must build fresh parabolic/operator contexts.
"""

# Sign of the quadratic part of the Levi embedding into the Clifford algebra.
NU_STAR_SIGN = 1

# Koszul sign in the action of x (x) c on a tensor m (x) v: when active the
# action is (-1)^{p(c) p(m)} (x m) (x) (c v).
KOSZUL_SIGN = 1

# Sign of the dual-basis pairing normalization (ubar_i, u_j) = sign * delta_ij.
DUAL_PAIRING_SIGN = 1
