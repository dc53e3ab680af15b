"""Exact scalar arithmetic for the engine.

Scalars are rational functions in the five parameters

    hbar  deformation parameter
    eps   shift parameter of the Yangian family
    c     free central-charge symbol (vacuum-module default)
    a     evaluation-map parameter
    k     W-algebra level

with integer coefficients, kept in a canonical num/den form over sympy's
low-level sparse polynomial ring (grlex order).  Canonical means:
gcd(num, den) = 1 over ZZ (including integer content) and the leading
coefficient of den is positive; zero is 0/1.  Equality and hashing are then
structural.

A small "coefficient field" indirection lets the whole engine run either on
symbolic Scalars or on plain Fractions under a random parameter assignment
(the probabilistic mode); builders only construct literals through the field
object.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import random

from sympy import ZZ
from sympy.polys.rings import ring

_RING, _HBAR, _EPS, _C, _A, _K = ring("hbar,eps,c,a,k", ZZ, order="grlex")
_ONE = _RING.one
_ZERO = _RING.zero

PARAM_NAMES = ("hbar", "eps", "c", "a", "k")


def _ground(n):
    return _RING.ground_new(n)


class Scalar:
    """A rational function num/den in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_ONE):
        if den == _ZERO:
            raise ZeroDivisionError("scalar with zero denominator")
        if num == _ZERO:
            num, den = _ZERO, _ONE
        elif den != _ONE:
            g = num.gcd(den)
            if g != _ONE:
                num = num.quo(g)
                den = den.quo(g)
            if den.LC < 0:
                num = -num
                den = -den
        self.num = num
        self.den = den

    # -- ring/field operations ------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den == _ONE and other.den == _ONE:
            return Scalar(self.num + other.num)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den == _ONE and other.den == _ONE:
            return Scalar(self.num - other.num)
        return Scalar(self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __neg__(self):
        s = Scalar.__new__(Scalar)
        s.num = -self.num
        s.den = self.den
        return s

    def __mul__(self, other):
        if isinstance(other, int):
            return Scalar(self.num * _ground(other), self.den)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.den == _ONE and other.den == _ONE:
            return Scalar(self.num * other.num)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            return Scalar(self.num, self.den * _ground(other))
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.num == _ZERO:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        return Scalar(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.den == _ONE and self.num == _ground(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return self.num != _ZERO

    # -- inspection ------------------------------------------------------

    @property
    def is_zero(self):
        return self.num == _ZERO

    def __str__(self):
        if self.den == _ONE:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "Scalar(%s)" % self

    def specialize(self, assignment: "ParamAssignment") -> Fraction:
        """Evaluate at a rational point; a ring homomorphism by construction."""
        vals = assignment.as_tuple()
        return _eval_poly(self.num, vals) / _eval_poly(self.den, vals)


def _eval_poly(poly, vals) -> Fraction:
    out = Fraction(0)
    for mono, coeff in poly.terms():
        t = Fraction(int(coeff))
        for v, exp in zip(vals, mono):
            if exp:
                t *= v ** exp
        out += t
    return out


def sc(n: int) -> Scalar:
    return Scalar(_ground(n))


def sc_frac(p: int, q: int) -> Scalar:
    return Scalar(_ground(p), _ground(q))


ZERO = sc(0)
ONE = sc(1)
HBAR = Scalar(_HBAR)
EPS = Scalar(_EPS)
CSYM = Scalar(_C)
AVAR = Scalar(_A)
KVAR = Scalar(_K)


@dataclass(frozen=True)
class ParamAssignment:
    """A rational point (hbar, eps, c, a, k) with hbar != 0 and c = eps/hbar.

    The tie c = eps/hbar matches the central charge the evaluation map
    imposes, so symbolic and specialized runs agree on every check.
    """

    hbar: Fraction
    eps: Fraction
    a: Fraction
    k: Fraction

    @property
    def c(self) -> Fraction:
        return self.eps / self.hbar

    def as_tuple(self):
        return (self.hbar, self.eps, self.c, self.a, self.k)

    @classmethod
    def random(cls, seed: int, bound: int = 10 ** 6) -> "ParamAssignment":
        rng = random.Random(seed)

        def draw(nonzero=False):
            v = 0
            while nonzero and v == 0:
                v = rng.randint(-bound, bound)
            if not nonzero:
                v = rng.randint(-bound, bound)
            return Fraction(v)

        return cls(hbar=draw(nonzero=True), eps=draw(), a=draw(), k=draw())


class SymbolicField:
    """Literal factory producing Scalars."""

    name = "symbolic"
    zero = ZERO
    one = ONE
    hbar = HBAR
    eps = EPS
    c = CSYM
    a = AVAR
    k = KVAR

    @staticmethod
    def int(n: int) -> Scalar:
        return sc(n)

    @staticmethod
    def frac(p: int, q: int) -> Scalar:
        return sc_frac(p, q)


class NumericField:
    """Literal factory producing Fractions under a fixed assignment."""

    name = "numeric"

    def __init__(self, assignment: ParamAssignment):
        self.assignment = assignment
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.hbar = assignment.hbar
        self.eps = assignment.eps
        self.c = assignment.c
        self.a = assignment.a
        self.k = assignment.k

    @staticmethod
    def int(n: int) -> Fraction:
        return Fraction(n)

    @staticmethod
    def frac(p: int, q: int) -> Fraction:
        return Fraction(p, q)


SYMBOLIC = SymbolicField()


def coeff_str(x) -> str:
    """Canonical text for a coefficient (Scalar or Fraction) in reports."""
    return str(x)
