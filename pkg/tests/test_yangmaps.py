"""Generator-image oracles: frozen small cases computed by hand."""

from __future__ import annotations

from superyangian.pbw import Ctx
from superyangian.scalars import SYMBOLIC
from superyangian.series import Completed, series_equal_on_window
from superyangian.superdata import Algebra, SlotSpec, cartan
from superyangian.yangmaps import (ContractionConfig, EvMap, HypothesisError,
                                   a_element, b_series, beta_boundary, j_h,
                                   mirror_gen, p_series, psi1_level0,
                                   psi2_level0, psi1_image, psi2_image,
                                   q_series, r_series, s_series)

F = SYMBOLIC


def ev_ctx(sig=(3, 2), z_mode="one"):
    m, n = sig
    spec = SlotSpec(m, n, c_value=F.eps / F.hbar, z_mode=z_mode)
    return Ctx(Algebra((spec,)), F)


def test_level0_matches_chevalley_table():
    ev = EvMap(ev_ctx())
    x0 = ev.image("x+", 0, 0)
    assert x0.materialize(0).render_lines() == ["1 ; [1,-2,1,1]"]
    xm = ev.image("x-", 0, 0)
    assert xm.materialize(0).render_lines() == ["-1 ; [1,1,-2,-1]"]
    h0 = ev.image("h", 0, 0).materialize(0)
    # -E[-2,-2] - E[1,1] + eps/hbar
    assert h0.render_lines() == [
        "(eps)/(hbar) ; 1",
        "-1 ; [1,1,1,0]",
        "-1 ; [1,-2,-2,0]",
    ]


def test_hat_counts():
    ev = EvMap(ev_ctx())
    assert [ev.hat(i) for i in (1, 2, 3, 4, 5)] == [1, 2, 3, 2, 1]


def test_x_plus_one_window_zero():
    ev = EvMap(ev_ctx())
    img = ev.image("x+", 1, 1)
    got = img.materialize(0).window(0)
    want = ev.cur(1, 2, 0, F.a - F.hbar / 2) + ev.cur(1, 1, 0) * ev.cur(1, 2, 0, F.hbar)
    assert got == want


def test_level_zero_sl2_pairs():
    ev = EvMap(ev_ctx())
    for i in range(5):
        for j in range(5):
            br = ev.image("x+", i, 0).materialize(0).comm(
                ev.image("x-", j, 0).materialize(0))
            if i == j:
                assert br == ev.image("h", i, 0).materialize(0)
            else:
                assert br.is_zero()


def test_synthesis_is_consistent_across_neighbors():
    # The display defines x+_{2,1}; the Cartan bracket rebuilds it from node 1.
    ev = EvMap(ev_ctx())
    lhs = Completed.bracket(ev.htilde(1), ev.image("x+", 2, 0))
    a12 = cartan((3, 2), 1, 2)
    rhs = ev.image("x+", 2, 1).scale(F.int(a12))
    eq, witness, _ = series_equal_on_window(lhs, rhs, 2)
    assert eq, witness

    lhs = Completed.bracket(ev.htilde(2), ev.image("x+", 1, 0))
    a21 = cartan((3, 2), 2, 1)
    rhs = ev.image("x+", 1, 1).scale(F.int(a21))
    eq, witness, _ = series_equal_on_window(lhs, rhs, 2)
    assert eq, witness


def test_x_minus_synthesis_fallback_at_node_zero():
    ev = EvMap(ev_ctx())
    img = ev.image("x-", 0, 1)
    assert len(img.brackets) == 1
    coeff, left, _right = img.brackets[0]
    # neighbor node 1 with a_{1,0} = -1, so the bracket enters with +1
    assert coeff == F.one
    assert left is ev.htilde(1)


def test_beta_boundary_values():
    assert beta_boundary(F, (3, 2), printed=True) == F.eps + F.hbar * F.hbar / 2
    assert beta_boundary(F, (3, 2), printed=False) == F.eps + F.hbar / 2
    assert beta_boundary(F, (2, 3), printed=False) == F.eps - F.hbar / 2


def test_contraction_tables():
    cfg = ContractionConfig(3, 2, 1, 1)
    assert cfg.big_sig == (4, 3)
    assert psi1_level0(cfg, "x+", 0) == (1, (-2, 1, 1))
    assert psi1_level0(cfg, "x-", 0) == (-1, (1, -2, -1))
    assert psi1_level0(cfg, "x+", 3) == (1, (3, -1, 0))
    assert psi1_level0(cfg, "x-", 3) == (1, (-1, 3, 0))
    assert psi1_level0(cfg, "x+", 1) == (1, (1, 2, 0))
    assert psi1_level0(cfg, "x+", 4) == (1, (-1, -2, 0))
    assert psi1_level0(cfg, "x-", 4) == (-1, (-2, -1, 0))

    assert psi2_level0(cfg, "x+", 0) == (1, (-3, 4, 1))
    assert psi2_level0(cfg, "x-", 0) == (-1, (4, -3, -1))
    assert psi2_level0(cfg, "x+", 1) == (1, (4, -3, 0))
    assert psi2_level0(cfg, "x-", 1) == (1, (-3, 4, 0))

    wide = ContractionConfig(3, 2, 2, 3)
    assert psi2_level0(wide, "x+", 1) == (1, (4, 5, 0))
    assert psi2_level0(wide, "x+", 2) == (1, (5, -3, 0))
    assert psi2_level0(wide, "x+", 3) == (1, (-3, -4, 0))
    assert psi2_level0(wide, "x-", 3) == (-1, (-4, -3, 0))
    assert psi2_level0(wide, "x+", 0) == (1, (-5, 4, 1))


def test_contraction_hypotheses():
    ContractionConfig(3, 2, 1, 1).check_hypotheses()
    try:
        ContractionConfig(2, 1, 1, 1).check_hypotheses()
    except HypothesisError:
        pass
    else:
        raise AssertionError("expected a hypothesis failure")


def test_glued_series_shapes():
    cfg = ContractionConfig(3, 2, 1, 1)
    ev = EvMap(ev_ctx(cfg.big_sig))
    # appended even block is one column wide, odd block one wide
    assert len(p_series(ev, cfg, 1)) == 1
    assert len(q_series(ev, cfg, 1)) == 1
    assert p_series(ev, cfg, 1)[0].factors == (
        (0, 1, 4, -1, (-1,)), (0, 4, 1, 1, (1,)))
    assert q_series(ev, cfg, 2)[0].factors == (
        (0, 2, 7, -1, (-1,)), (0, 7, 2, 1, (1,)))
    # the second small position sits on the odd side once m2 = 1, so the
    # glued column of the second family is the first appended odd index
    r2 = r_series(ev, cfg, 2)
    assert len(r2) == 2
    assert r2[0].factors == ((0, 6, 7, 0, (-1,)), (0, 7, 6, 0, (1,)))
    assert r2[1].factors == ((0, 5, 7, 0, (-1,)), (0, 7, 5, 0, (1,)))
    s2 = s_series(ev, cfg, 2)
    assert len(s2) == 3
    assert s2[0].factors == ((0, 1, 7, -1, (-1,)), (0, 7, 1, 1, (1,)))
    # level-one variants pick distinct row and column positions
    rp = r_series(ev, cfg, 1, second_pos=2)
    assert rp[0].factors == ((0, 6, 7, 0, (-1,)), (0, 4, 6, 0, (1,)))


def test_contraction_level_one_images_materialize():
    cfg = ContractionConfig(3, 2, 1, 1)
    ev = EvMap(ev_ctx(cfg.big_sig))
    for build in (psi1_image, psi2_image):
        ht = build(ev, cfg, "ht", 1, 1)
        xp = build(ev, cfg, "x+", 1, 1)
        assert not ht.materialize(1).is_zero()
        assert not xp.materialize(1).is_zero()


def test_coproduct_series_window_zero():
    spec = SlotSpec(2, 1, c_value=F.eps / F.hbar)
    ctx2 = Ctx(Algebra((spec, spec)), F)
    total = None
    for t in b_series(ctx2, (2, 1), 1):
        piece = t.materialize(0)
        total = piece if total is None else total + piece
    got = total.window(0)
    g = lambda slot, i, j: ctx2.gen(slot, i, j, 0)
    def mono(coeff, a, b):
        from superyangian.pbw import Elem
        return Elem(ctx2, {((a, b), ()): coeff})
    want = (mono(F.hbar, g(0, 1, 1), g(1, 1, 2))
            + mono(-F.hbar, g(0, 2, 2), g(1, 1, 2))
            + mono(-F.hbar, g(0, -1, 2), g(1, 1, -1)))
    assert got == want


def test_a_element_window_zero_coefficients():
    ev = EvMap(ev_ctx())
    a1 = a_element(ev, 1).materialize(0).window(0)
    half = F.hbar / 2
    # straightened by hand: E[u,1]E[1,u] over u = 2..5
    def coeff_of(word):
        return a1.d.get((word, ()), F.zero)
    e = lambda i, j: ev.ctx.gen(0, i, j, 0)
    assert coeff_of((e(1, 2), e(2, 1))) == half
    assert coeff_of((e(1, -1), e(-1, 1))) == -half
    assert coeff_of((e(2, 2),)) == half
    assert coeff_of((e(-1, -1),)) == half
    assert coeff_of((e(1, 1),)) == F.zero


def test_j_h_builds():
    ev = EvMap(ev_ctx())
    assert not j_h(ev, 1).materialize(1).is_zero()


def test_mirror_gen():
    assert mirror_gen("x+", 0, 0) == ("x-", 0, 0)
    assert mirror_gen("ht", 1, 1) == ("ht", 1, 1)
