"""Canonical-form and homomorphism tests for the scalar layer."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from superyangian.scalars import (
    AVAR, CSYM, EPS, HBAR, KVAR, ONE, ZERO,
    NumericField, ParamAssignment, Scalar, SymbolicField, sc, sc_frac,
)


def test_canonical_reduction():
    # 2*hbar / 4*hbar reduces to 1/2, including integer content
    x = (sc(2) * HBAR) / (sc(4) * HBAR)
    assert x == sc_frac(1, 2)
    # denominator sign is normalized
    assert sc(1) / (-HBAR) == -(sc(1) / HBAR)
    assert ZERO / HBAR == ZERO


def test_equality_and_hash():
    x = (HBAR + EPS) * (HBAR - EPS)
    y = HBAR * HBAR - EPS * EPS
    assert x == y
    assert hash(x) == hash(y)
    assert x != HBAR
    d = {x: 1}
    assert d[y] == 1


def test_field_axioms_small():
    c = EPS / HBAR
    assert c * HBAR == EPS
    assert (ONE / c) * c == ONE
    assert HBAR ** 3 == HBAR * HBAR * HBAR
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        Scalar(HBAR.num, ZERO.num)


def test_int_mixing():
    assert 2 * HBAR == HBAR + HBAR
    assert HBAR / 2 + HBAR / 2 == HBAR
    assert sc(5) == 5
    assert not (sc_frac(1, 2) == 1)


def test_str_rendering_frozen():
    assert str(sc(3)) == "3"
    assert str(EPS / HBAR) == "(eps)/(hbar)"
    assert str(HBAR / 2) == "(hbar)/(2)"
    assert str(ZERO) == "0"


def test_specialize_is_homomorphism():
    rng = random.Random(20240811)
    pool = [HBAR, EPS, CSYM, AVAR, KVAR, sc(3), sc_frac(-2, 7), ONE]
    pa = ParamAssignment.random(seed=1)
    for _ in range(200):
        x = rng.choice(pool) + rng.choice(pool) * rng.choice(pool)
        y = rng.choice(pool) - rng.choice(pool)
        assert (x + y).specialize(pa) == x.specialize(pa) + y.specialize(pa)
        assert (x * y).specialize(pa) == x.specialize(pa) * y.specialize(pa)
        assert (-x).specialize(pa) == -x.specialize(pa)
        if y.specialize(pa) != 0:
            assert (x / y).specialize(pa) == x.specialize(pa) / y.specialize(pa)


def test_specialize_point_values():
    pa = ParamAssignment(hbar=Fraction(1, 2), eps=Fraction(3), a=Fraction(-2),
                         k=Fraction(5))
    assert pa.c == Fraction(6)
    x = (HBAR + 2 * EPS) ** 2 - CSYM * AVAR * KVAR + sc(3)
    # (1/2 + 6)^2 + 60 + 3 = 169/4 + 63 = 421/4
    assert x.specialize(pa) == Fraction(421, 4)


def test_random_assignment_constraints():
    for seed in (1, 2, 3, 99):
        pa = ParamAssignment.random(seed)
        assert pa.hbar != 0
        assert pa.c * pa.hbar == pa.eps
        assert abs(pa.hbar) <= 10 ** 6 and abs(pa.k) <= 10 ** 6
    assert ParamAssignment.random(7) == ParamAssignment.random(7)


def test_numeric_field_matches_symbolic():
    pa = ParamAssignment.random(seed=5)
    nf = NumericField(pa)
    sf = SymbolicField()
    sym = sf.hbar * sf.frac(1, 2) + sf.eps * sf.int(3) - sf.c
    num = nf.hbar * nf.frac(1, 2) + nf.eps * nf.int(3) - nf.c
    assert sym.specialize(pa) == num
