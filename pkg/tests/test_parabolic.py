import pytest

from superdirac.qlinalg import rat
from superdirac.rootdata import Weight, form
from superdirac.superalg import Superalgebra, elem
from superdirac.parabolic import (
    borel,
    levi_g0,
    make_parabolic,
    triangulate,
    verify_parabolic_set,
    w_l1,
)


def W(m, n, *coords):
    return Weight(m, n, tuple(coords))


def test_triangulate_gl21_levi_even():
    g = Superalgebra(2, 1)
    t = triangulate(g, (1, 1, 0))
    assert set(t.phi_zero) == {W(2, 1, 1, -1, 0), W(2, 1, -1, 1, 0)}
    assert set(t.phi_plus) == {W(2, 1, 1, 0, -1), W(2, 1, 0, 1, -1)}


def test_triangulate_gl21_borel():
    g = Superalgebra(2, 1)
    t = triangulate(g, (2, 1, 0))
    assert t.phi_zero == []
    assert len(t.phi_plus) == 3


def test_triangulate_gl21_mixed():
    g = Superalgebra(2, 1)
    t = triangulate(g, (1, 0, 0))
    assert set(t.phi_zero) == {W(2, 1, 0, 1, -1), W(2, 1, 0, -1, 1)}


def test_verify_parabolic_set():
    g = Superalgebra(2, 1)
    for c in [(1, 1, 0), (2, 1, 0), (1, 0, 0)]:
        t = triangulate(g, c)
        assert verify_parabolic_set(g, t.phi_zero + t.phi_plus)
    assert verify_parabolic_set(g, g.rd.positive_roots)
    # misses the partition: the union with the negatives is not all of Phi
    assert not verify_parabolic_set(g, [g.rd.phi0_plus[0]])
    # closure violated: eps1-del1 + del1-eps2 = eps1-eps2 is excluded
    bad = [a for a in g.rd.all_roots if a != g.rd.phi0_plus[0]]
    assert not verify_parabolic_set(g, bad)


def test_parabolic_from_gl21_levi_g0():
    g = Superalgebra(2, 1)
    pd = levi_g0(g)
    assert pd.u_units == [(1, 3), (2, 3)]
    assert pd.rho_u == W(2, 1, rat(-1, 2), rat(-1, 2), 1)
    assert pd.rho_l == W(2, 1, rat(1, 2), rat(-1, 2), 0)


def test_parabolic_from_gl11_borel():
    g = Superalgebra(1, 1)
    pd = borel(g)
    assert pd.rho_l.is_zero()
    assert pd.rho_u == W(1, 1, rat(-1, 2), rat(1, 2))


def test_rho_l_plus_rho_u_is_rho():
    for m, n in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        g = Superalgebra(m, n)
        for pd in [borel(g), levi_g0(g)]:
            assert pd.rho_l + pd.rho_u == g.rd.rho
        # a mixed compatible functional
        c = (1,) * m + (1,) + (0,) * (n - 1)
        pd = make_parabolic(g, c)
        assert pd.rho_l + pd.rho_u == g.rd.rho


def test_incompatible_functional_flagged():
    g = Superalgebra(1, 1)
    with pytest.raises(ValueError):
        make_parabolic(g, (-1, 0))
    pd = make_parabolic(g, (-1, 0), require_compatible=False)
    assert not pd.compatible


def test_structure_invariants_of_parabolic():
    for m, n in [(2, 1), (2, 2)]:
        g = Superalgebra(m, n)
        for pd in [borel(g), levi_g0(g), make_parabolic(g, (1,) * m + (1,) + (0,) * (n - 1))]:
            # dual pairing
            for i, ub in enumerate(pd.ubar_basis):
                for j, u in enumerate(pd.u_basis):
                    assert g.invariant_form(ub, u) == (1 if i == j else 0)
            # isotropy of u and ubar
            for x in pd.u_basis:
                for y in pd.u_basis:
                    assert g.invariant_form(x, y) == 0
            for x in pd.ubar_basis:
                for y in pd.ubar_basis:
                    assert g.invariant_form(x, y) == 0
            # s is orthogonal to the Levi
            for lx in pd.levi_basis():
                for y in pd.u_basis + pd.ubar_basis:
                    assert g.invariant_form(lx, y) == 0
            # [l, u] in u and [l, ubar] in ubar
            u_roots = {tuple(a.coords) for a in pd.u_roots}
            ub_roots = {tuple((-a).coords) for a in pd.u_roots}
            for lx in pd.levi_basis():
                for y, rt in zip(pd.u_basis, pd.u_roots):
                    out = g.bracket(lx, y)
                    if out:
                        assert tuple(g.weight_of_elem(out).coords) in u_roots | {
                            tuple(g.rd.zero_weight().coords)
                        } or tuple(g.weight_of_elem(out).coords) in u_roots
                for y in pd.ubar_basis:
                    out = g.bracket(lx, y)
                    if out:
                        assert tuple(g.weight_of_elem(out).coords) in ub_roots
            # weight of u_i equals its assigned root
            for y, rt in zip(pd.u_basis, pd.u_roots):
                assert g.weight_of_elem(y) == rt


def test_u_weights_under_cartan():
    g = Superalgebra(2, 1)
    pd = borel(g)
    for u_elem, root in zip(pd.u_basis, pd.u_roots):
        for j in range(1, 4):
            h = elem((j, j))
            out = g.bracket(h, u_elem)
            expect = {k: root.eval_on_diag(j) * v for k, v in u_elem.items()}
            expect = {k: v for k, v in expect.items() if v}
            assert out == expect


def test_w_l1_examples():
    g = Superalgebra(2, 1)
    pd = levi_g0(g)
    lam = W(2, 1, 2, 1, 0) + pd.rho_u
    ws = w_l1(pd, lam)
    assert len(ws) == 1 and ws[0].is_identity()

    bd = borel(g)
    assert all(w.is_identity() for w in w_l1(bd, lam))
    assert len(w_l1(bd, lam)) == 1

    g22 = Superalgebra(2, 2)
    pd22 = levi_g0(g22)
    lam22 = W(2, 2, 2, 1, 1, 0) + pd22.rho_u
    ws22 = w_l1(pd22, lam22)
    assert len(ws22) == 1 and ws22[0].is_identity()
