"""Index maps, Cartan entries, bracket structure constants, Chevalley data."""

from __future__ import annotations

import random

from superyangian.superdata import (
    Algebra, SlotSpec, alpha_weight, bracket_gen, cartan, chevalley,
    gen_mode, gen_posi, gen_posj, gen_slot, gen_text, node_pos, nodes,
    pack, parity_sgn, pos_to_sgn, sgn_to_pos, signed_indices, unpack,
    weight_pairing,
)


def test_signed_position_roundtrip():
    sig = (3, 2)
    assert signed_indices(sig) == (1, 2, 3, -1, -2)
    for i in signed_indices(sig):
        assert pos_to_sgn(sig, sgn_to_pos(sig, i)) == i
    assert sgn_to_pos(sig, -1) == 4
    assert sgn_to_pos(sig, -2) == 5
    assert parity_sgn(sig, 2) == 0 and parity_sgn(sig, -1) == 1


def test_packing_order_matches_canonical():
    # integer comparison of packed generators = (slot, mode, row, col) lex
    a = pack(0, 1, 2, -1)
    b = pack(0, 1, 2, 0)
    c = pack(0, 2, 1, 0)
    d = pack(1, 1, 1, -3)
    assert a < b < c < d
    assert unpack(b) == (0, 1, 2, 0)
    g = pack(1, 4, 5, -7)
    assert (gen_slot(g), gen_posi(g), gen_posj(g), gen_mode(g)) == (1, 4, 5, -7)


def test_cartan_rows_3_2():
    sig = (3, 2)
    assert nodes(sig) == (0, 1, 2, 3, 4)
    assert node_pos(sig, 0) == 5
    # frozen rows, computed by hand from the parity pattern (0,0,0,1,1)
    rows = {i: [cartan(sig, i, j) for j in range(5)] for i in range(5)}
    assert rows[0] == [0, -1, 0, 0, 1]
    assert rows[1] == [-1, 2, -1, 0, 0]
    assert rows[2] == [0, -1, 2, -1, 0]
    assert rows[3] == [0, 0, -1, 0, 1]
    assert rows[4] == [1, 0, 0, 1, -2]
    assert cartan(sig, 4, 4) == -2
    # symmetry of this Cartan matrix
    for i in range(5):
        for j in range(5):
            assert cartan(sig, i, j) == cartan(sig, j, i)


def test_bracket_gen_frozen_cases():
    sl = SlotSpec(3, 2)
    sig = sl.sig
    E = lambda i, j, r: pack(0, sgn_to_pos(sig, i), sgn_to_pos(sig, j), r)
    # [E12 t, E21 t^-1] = E11 - E22 + c
    out = bracket_gen(sl, E(1, 2, 1), E(2, 1, -1))
    assert set(out) == {(E(1, 1, 0), 1, ""), (E(2, 2, 0), -1, ""), (None, 1, "c")}
    # odd-odd pair: [E_{3,-1}, E_{-1,3}] = E33 + E_{-1,-1}
    out = bracket_gen(sl, E(3, -1, 0), E(-1, 3, 0))
    assert set(out) == {(E(3, 3, 0), 1, ""), (E(-1, -1, 0), 1, "")}
    # pure z term: [E11 t, E22 t^-1] = z
    out = bracket_gen(sl, E(1, 1, 1), E(2, 2, -1))
    assert set(out) == {(None, 1, "z")}
    # diagonal self-pair: c and z both fire
    out = bracket_gen(sl, E(1, 1, 1), E(1, 1, -1))
    assert set(out) == {(None, 1, "c"), (None, 1, "z")}
    # mixed-parity z sign: [E11 t, E_{-1,-1} t^-1] = -z
    out = bracket_gen(sl, E(1, 1, 1), E(-1, -1, -1))
    assert set(out) == {(None, -1, "z")}
    # no central term at mode 0
    out = bracket_gen(sl, E(1, 1, 0), E(1, 1, 0))
    assert out == ()


def test_bracket_gen_super_antisymmetry():
    # [a,b] = -(-1)^{p(a)p(b)} [b,a] on the structure constants
    sl = SlotSpec(2, 2)
    alg = Algebra([sl])
    rng = random.Random(7)
    idx = signed_indices(sl.sig)
    for _ in range(300):
        i, j, x, y = (rng.choice(idx) for _ in range(4))
        r = rng.randint(-2, 2)
        s = -r if rng.random() < 0.5 else rng.randint(-2, 2)
        ga = pack(0, sgn_to_pos(sl.sig, i), sgn_to_pos(sl.sig, j), r)
        gb = pack(0, sgn_to_pos(sl.sig, x), sgn_to_pos(sl.sig, y), s)
        sign = -1 if (alg.parity_of_gen(ga) and alg.parity_of_gen(gb)) else 1
        fwd = {(g, cen): c for g, c, cen in bracket_gen(sl, ga, gb)}
        rev = {(g, cen): -sign * c for g, c, cen in bracket_gen(sl, gb, ga)}
        assert fwd == rev


def test_chevalley_frozen_3_2():
    sig = (3, 2)
    # x-_3 = E_{-1,3} (odd node, sign +1 since p(3) = 0)
    terms, cc = chevalley(sig, "x-", 3)
    assert cc == 0 and terms == [(4, 3, 0, 1)]
    # x+_0 = E_{-2,1} t
    terms, cc = chevalley(sig, "x+", 0)
    assert cc == 0 and terms == [(5, 1, 1, 1)]
    # x-_0 = -E_{1,-2} t^-1
    terms, cc = chevalley(sig, "x-", 0)
    assert cc == 0 and terms == [(1, 5, -1, -1)]
    # h_0 = -E_{-2,-2} - E_{1,1} + c
    terms, cc = chevalley(sig, "h", 0)
    assert cc == 1 and sorted(terms) == [(1, 1, 0, -1), (5, 5, 0, -1)]
    # h_3 crosses the parity wall: E_{3,3} + E_{-1,-1}
    terms, cc = chevalley(sig, "h", 3)
    assert cc == 0 and sorted(terms) == [(3, 3, 0, 1), (4, 4, 0, 1)]


def test_chevalley_h_pairs_with_cartan():
    # [h_i, x+_j] = a_{i,j} x+_j read off diagonal coefficients
    sig = (3, 2)
    for i in nodes(sig):
        hterms, _ = chevalley(sig, "h", i)
        diag = {u: c for u, v, r, c in hterms if u == v}
        for j in nodes(sig):
            xterms, _ = chevalley(sig, "x+", j)
            (u, v, r, c), = xterms
            assert diag.get(u, 0) - diag.get(v, 0) == cartan(sig, i, j)


def test_alpha_pairing_telescopes():
    # (alpha_i, eps_a - eps_b) equals the sum of Cartan entries a_{i,k}, a<=k<b
    sig = (3, 2)
    for i in nodes(sig):
        for a in range(1, 5):
            for b in range(a + 1, 6):
                root = {a: 1, b: -1}
                lhs = weight_pairing(sig, alpha_weight(sig, i), root)
                rhs = sum(cartan(sig, i, knode) for knode in range(a, b))
                assert lhs == rhs, (i, a, b)


def test_gen_text_signed_rendering():
    alg = Algebra([SlotSpec(3, 2)])
    g = pack(0, 5, 1, 1)
    assert gen_text(alg, g) == "[1,-2,1,1]"
    assert gen_text(alg, g, with_slot=False) == "[-2,1,1]"
