import pytest

from superdirac.qlinalg import kernel_basis, rat
from superdirac.rootdata import Weight, form
from superdirac.superalg import Superalgebra
from superdirac.parabolic import borel, levi_g0, make_parabolic
from superdirac.supermodules import kac_module, trivial_module
from superdirac.dirac import (
    DiracContext,
    HDQuotient,
    casselman_osborne_check,
    dirac_cohomology,
    dirac_index,
    index_matches_euler,
    non_triviality_check,
    report_to_dict,
    square_constant,
    square_constant_trace,
    verify_l_invariance,
    verify_nilpotency,
    verify_square,
)


def W(m, n, *coords):
    return Weight(m, n, tuple(coords))


def test_square_constant_values():
    g21 = Superalgebra(2, 1)
    assert square_constant(levi_g0(g21)) == rat(-1, 2)
    g11 = Superalgebra(1, 1)
    assert square_constant(borel(g11)) == 0


def test_square_constant_trace_oracle():
    for m, n in [(1, 1), (2, 1), (1, 2)]:
        g = Superalgebra(m, n)
        for pd in [borel(g), levi_g0(g)]:
            assert square_constant_trace(pd) == square_constant(pd)
    g21 = Superalgebra(2, 1)
    pd = make_parabolic(g21, (1, 0, 0))
    assert square_constant_trace(pd) == square_constant(pd)


def test_top_block_annihilated():
    g = Superalgebra(1, 1)
    lam = W(1, 1, 1, 0)
    ctx = DiracContext(kac_module(g, lam), borel(g))
    top = lam + ctx.pd.rho_u
    basis = ctx.block_basis(top)
    assert len(basis) == 1
    assert ctx.apply_D({basis[0]: rat(1)}) == {}


def test_gl11_two_by_two_blocks_invertible():
    g = Superalgebra(1, 1)
    lam = W(1, 1, 1, 0)
    ctx = DiracContext(kac_module(g, lam), borel(g))
    alpha = g.rd.phi1_plus[0]
    for t in range(1, 4):
        mu = lam + ctx.pd.rho_u - alpha.scale(t)
        dm = ctx.matrix_of(ctx.D_terms, mu)
        assert dm.rows == 2
        assert dm.data[0][0] == 0 and dm.data[1][1] == 0
        assert dm.data[0][1] != 0 and dm.data[1][0] != 0
        assert not kernel_basis(dm)


def test_trivial_module_blocks_vanish():
    g = Superalgebra(1, 1)
    ctx = DiracContext(trivial_module(g), borel(g))
    for mu in ctx.reachable_weights(4):
        assert ctx.matrix_of(ctx.D_terms, mu).is_zero()


def test_identities_gl11_gl21():
    cases = []
    g11 = Superalgebra(1, 1)
    cases.append((kac_module(g11, W(1, 1, 1, 0)), borel(g11)))
    g21 = Superalgebra(2, 1)
    lam21 = W(2, 1, 2, 1, 0)
    for pd in [borel(g21), levi_g0(g21), make_parabolic(g21, (1, 0, 0))]:
        cases.append((kac_module(g21, lam21), pd))
    for mod, pd in cases:
        ctx = DiracContext(mod, pd)
        weights = ctx.reachable_weights(3)
        ok, info = verify_square(ctx, weights)
        assert ok, info
        ok, info = verify_l_invariance(ctx, weights)
        assert ok, info
        ok, info = verify_nilpotency(ctx, weights)
        assert ok, info


def test_hd_gl11_typical():
    g = Superalgebra(1, 1)
    lam = W(1, 1, 1, 0)
    rep = dirac_cohomology(kac_module(g, lam), borel(g), strategy="candidates")
    assert rep.h_total() == 1
    expected_weight = W(1, 1, rat(1, 2), rat(1, 2))
    (block,) = [b for b in rep.blocks if b.h_dim]
    assert block.weight == expected_weight
    assert (block.h_plus, block.h_minus) == (1, 0)
    assert rep.l_decomposition == [
        {"weight": str(expected_weight), "multiplicity": 1, "parity": [1, 0]}
    ]
    assert all(rep.checks.values()), rep.checks
    assert not rep.discrepancy_flag


def test_hd_gl21_typical_levi_g0():
    g = Superalgebra(2, 1)
    lam = W(2, 1, 2, 1, 0)
    rep = dirac_cohomology(kac_module(g, lam), levi_g0(g), strategy="candidates")
    assert rep.h_total() == 2
    assert rep.predicted == [str(W(2, 1, rat(3, 2), rat(1, 2), 1))]
    decomposition_weights = [d["weight"] for d in rep.l_decomposition]
    assert decomposition_weights == [str(W(2, 1, rat(3, 2), rat(1, 2), 1))]
    assert all(rep.checks.values()), rep.checks
    assert not rep.discrepancy_flag


def test_hd_gl21_typical_borel():
    g = Superalgebra(2, 1)
    lam = W(2, 1, 2, 1, 0)
    rep = dirac_cohomology(kac_module(g, lam), borel(g), strategy="candidates")
    # Borel Levi: W^{l,1} is trivial, a single line at lam + rho
    assert rep.h_total() == 1
    assert rep.predicted == [str(lam + g.rd.rho)]
    assert not rep.discrepancy_flag
    assert all(rep.checks.values()), rep.checks


def test_window_strategy_matches_candidates_gl11():
    g = Superalgebra(1, 1)
    lam = W(1, 1, 1, 0)
    k = kac_module(g, lam)
    rep_c = dirac_cohomology(k, borel(g), strategy="candidates")
    rep_w = dirac_cohomology(k, borel(g), strategy="window:5", checks=False)
    got_c = {str(b.weight): b.h_dim for b in rep_c.blocks if b.h_dim}
    got_w = {str(b.weight): b.h_dim for b in rep_w.blocks if b.h_dim}
    assert got_c == got_w
    assert not rep_w.boundary_complete


def test_candidates_strategy_guards_atypical():
    g = Superalgebra(1, 1)
    k = kac_module(g, W(1, 1, 0, 0))
    with pytest.raises(ValueError):
        dirac_cohomology(k, borel(g), strategy="candidates")


def test_trivial_module_window_run_flags_discrepancy():
    g = Superalgebra(1, 1)
    rep = dirac_cohomology(
        trivial_module(g), borel(g), strategy="window:4", checks=True
    )
    # D = 0: every reachable block survives in H_D
    assert all(b.h_dim == b.dim for b in rep.blocks)
    assert rep.h_total() == 5
    assert rep.checks["square"] and rep.checks["invariance"]
    assert rep.checks["casselman_osborne"]
    # the closed-form prediction (one constituent) disagrees: flagged
    assert rep.discrepancy_flag


def test_non_triviality_examples():
    g = Superalgebra(2, 1)
    lam = W(2, 1, 2, 1, 0)
    for pd in [borel(g), levi_g0(g)]:
        ctx = DiracContext(kac_module(g, lam), pd)
        assert non_triviality_check(ctx)
    g11 = Superalgebra(1, 1)
    ctx = DiracContext(trivial_module(g11), borel(g11))
    assert non_triviality_check(ctx)


def test_casselman_osborne_synthetic_failure():
    g = Superalgebra(1, 1)
    lam = W(1, 1, 1, 0)
    ctx = DiracContext(kac_module(g, lam), borel(g))
    weights = ctx.reachable_weights(3)
    hd = HDQuotient(ctx, weights)
    assert casselman_osborne_check(hd, lam)

    class FakeHD:
        def __init__(self, ctx):
            self.ctx = ctx

        def l_highest_vectors(self):
            return [(W(1, 1, 7, 7), 1, (1, 0))]

    assert not casselman_osborne_check(FakeHD(ctx), lam)


def test_index_gl11_kac():
    g = Superalgebra(1, 1)
    lam = W(1, 1, 1, 0)
    k = kac_module(g, lam)
    idx = dirac_index(k, borel(g), depth=6)
    # infinite tails cancel: only e^{eps1 - alpha/2} survives
    assert idx == {W(1, 1, rat(1, 2), rat(1, 2)): 1}
    assert index_matches_euler(k, borel(g), depth=4)


def test_index_trivial_module_alternates():
    g = Superalgebra(1, 1)
    t = trivial_module(g)
    idx = dirac_index(t, borel(g), depth=5)
    alpha = g.rd.phi1_plus[0]
    base = borel(g).rho_u
    for t_ in range(6):
        mu = base - alpha.scale(t_)
        assert idx[mu] == (1 if t_ % 2 == 0 else -1)
    assert index_matches_euler(t, borel(g), depth=4)


def test_index_gl21_kac_levi_g0():
    g = Superalgebra(2, 1)
    lam = W(2, 1, 2, 1, 0)
    k = kac_module(g, lam)
    pd = levi_g0(g)
    idx = dirac_index(k, pd, depth=6)
    # Kac factor cancels the oscillator denominator: ch L0(lam) e^{rho_u}
    from superdirac.supermodules import simple_g0_module

    l0 = simple_g0_module(g, lam)
    expect = {}
    for w in l0.weights:
        key = w + pd.rho_u
        expect[key] = expect.get(key, 0) + 1
    assert idx == expect
    assert index_matches_euler(k, pd, depth=4)


def test_report_roundtrip_json():
    import json

    g = Superalgebra(1, 1)
    rep = dirac_cohomology(kac_module(g, W(1, 1, 1, 0)), borel(g))
    blob = json.dumps(report_to_dict(rep))
    data = json.loads(blob)
    assert json.dumps(data) == blob
    assert data["checks"]["square"] is True
    assert data["blocks"]
