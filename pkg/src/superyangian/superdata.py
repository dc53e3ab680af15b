"""Signed super-indices, parities, Cartan data, and the current-algebra bracket.

Index model for a signature (m, n): signed indices run over
{1, ..., m} union {-1, ..., -n} with the linear order
1 < 2 < ... < m < -1 < -2 < ... < -n.  Position form maps this order onto
1..m+n (position m+j stands for -j).  Parity of a positive index is 0, of a
negative index 1.  Dynkin nodes live on Z/(m+n); node 0 sits between the last
negative index and 1.

Generators of the affine algebra are matrix-unit currents E[i,j] t^r plus two
central elements c and z.  A generator is packed into one int so that plain
integer comparison realizes the canonical ordering used for normal forms:
slot, then mode, then row/column positions.
"""

from __future__ import annotations

from functools import lru_cache


MODE_BIAS = 64
_MODE_SHIFT = 16
_SLOT_SHIFT = 28
_I_SHIFT = 8


def pack(slot: int, posi: int, posj: int, mode: int) -> int:
    if not -MODE_BIAS <= mode < MODE_BIAS:
        raise OverflowError("mode %d out of packed range" % mode)
    return (slot << _SLOT_SHIFT) | ((mode + MODE_BIAS) << _MODE_SHIFT) \
        | (posi << _I_SHIFT) | posj


def unpack(g: int):
    """Return (slot, posi, posj, mode)."""
    return (g >> _SLOT_SHIFT,
            (g >> _I_SHIFT) & 0xFF,
            g & 0xFF,
            ((g >> _MODE_SHIFT) & 0xFFF) - MODE_BIAS)


def gen_slot(g: int) -> int:
    return g >> _SLOT_SHIFT


def gen_mode(g: int) -> int:
    return ((g >> _MODE_SHIFT) & 0xFFF) - MODE_BIAS


def gen_posi(g: int) -> int:
    return (g >> _I_SHIFT) & 0xFF


def gen_posj(g: int) -> int:
    return g & 0xFF


class SlotSpec:
    """One tensor factor: an affine gl(m|n) with a policy for its center.

    c_value None keeps c as a formal exponent on monomials; a coefficient
    value (Scalar or Fraction) multiplies it into the coefficient instead.
    z_mode is "symbolic" (formal exponent) or "one" (the quotient z = 1).
    """

    __slots__ = ("m", "n", "mn", "parity", "c_value", "z_mode", "_bracket_cache")

    def __init__(self, m: int, n: int, c_value=None, z_mode: str = "one"):
        if z_mode not in ("symbolic", "one"):
            raise ValueError("bad z_mode %r" % z_mode)
        self.m = m
        self.n = n
        self.mn = m + n
        self.parity = tuple(0 if 1 <= u <= m else 1 for u in range(m + n + 1))
        self.c_value = c_value
        self.z_mode = z_mode
        self._bracket_cache = {}

    @property
    def sig(self):
        return (self.m, self.n)

    def __repr__(self):
        return "SlotSpec(%d|%d, c=%s, z=%s)" % (self.m, self.n, self.c_value,
                                                self.z_mode)


class Algebra:
    """An ordered list of slots (tensor factors)."""

    __slots__ = ("slots",)

    def __init__(self, slots):
        self.slots = tuple(slots)

    def __len__(self):
        return len(self.slots)

    def parity_of_gen(self, g: int) -> int:
        par = self.slots[g >> _SLOT_SHIFT].parity
        return par[(g >> _I_SHIFT) & 0xFF] ^ par[g & 0xFF]

    def __repr__(self):
        return "Algebra(%s)" % (list(self.slots),)


def sgn_to_pos(sig, i: int) -> int:
    m, n = sig
    if 1 <= i <= m:
        return i
    if -n <= i <= -1:
        return m - i
    raise IndexError("index %d not in signature (%d|%d)" % (i, m, n))


def pos_to_sgn(sig, u: int) -> int:
    m, n = sig
    if 1 <= u <= m:
        return u
    if m < u <= m + n:
        return m - u
    raise IndexError("position %d not in signature (%d|%d)" % (u, m, n))


def parity_sgn(sig, i: int) -> int:
    return 0 if i > 0 else 1


def signed_indices(sig):
    """All signed indices in linear order."""
    m, n = sig
    return tuple(range(1, m + 1)) + tuple(range(-1, -n - 1, -1))


def nodes(sig):
    return tuple(range(sig[0] + sig[1]))


def node_pos(sig, node: int) -> int:
    """Index position a Dynkin node sits at (node 0 -> last position)."""
    mn = sig[0] + sig[1]
    r = node % mn
    return mn if r == 0 else r


@lru_cache(maxsize=None)
def cartan(sig, i: int, j: int) -> int:
    """Cyclic Cartan matrix entry a_{i,j} for nodes of the affine diagram."""
    m, n = sig
    mn = m + n

    def P(node):
        u = node_pos(sig, node)
        return 0 if u <= m else 1

    d = (i - j) % mn
    if d == 0:
        return (-1) ** P(i) + (-1) ** P(i + 1)
    if d == mn - 1:          # j = i + 1 cyclically
        return -((-1) ** P(i + 1))
    if d == 1:               # j = i - 1 cyclically
        return -((-1) ** P(i))
    return 0


def bracket_gen(slot_spec: SlotSpec, ga: int, gb: int):
    """Supercommutator of two same-slot generators.

    Returns a tuple of entries (packed_gen_or_None, int_coeff, central) where
    central is "" for a current term, or "c"/"z" for central contributions
    (the caller folds in c_value / z_mode policy).  Cached per slot.
    """
    key = (ga << 32) | (gb & 0xFFFFFFFF)
    cache = slot_spec._bracket_cache
    hit = cache.get(key)
    if hit is not None:
        return hit

    slot = ga >> _SLOT_SHIFT
    i, j, r = (ga >> _I_SHIFT) & 0xFF, ga & 0xFF, gen_mode(ga)
    x, y, s = (gb >> _I_SHIFT) & 0xFF, gb & 0xFF, gen_mode(gb)
    par = slot_spec.parity
    pa = par[i] ^ par[j]
    pb = par[x] ^ par[y]

    out = []
    if j == x:
        out.append((pack(slot, i, y, r + s), 1, ""))
    if i == y:
        sign = -1 if (pa & pb) else 1
        out.append((pack(slot, x, j, r + s), -sign, ""))
    if r + s == 0 and r != 0:
        if i == y and j == x:
            out.append((None, r * ((-1) ** par[i]), "c"))
        if i == j and x == y:
            out.append((None, r * ((-1) ** (par[i] ^ par[x])), "z"))
    # merge duplicate current keys (possible when i == y and j == x)
    if len(out) > 1:
        merged = {}
        for g, co, cen in out:
            k2 = (g, cen)
            merged[k2] = merged.get(k2, 0) + co
        out = [(g, co, cen) for (g, cen), co in merged.items() if co]
    res = tuple(out)
    cache[key] = res
    return res


def chevalley(sig, kind: str, node: int):
    """Chevalley generator as a list of (posi, posj, mode, int_coeff) plus
    a central c coefficient (int).  kind in {"h", "x+", "x-"}."""
    m, n = sig
    mn = m + n
    node = node % mn
    par = (0,) + tuple(0 if u <= m else 1 for u in range(1, mn + 1))
    if kind == "h":
        if node == 0:
            sign = (-1) ** par[mn]
            return [(mn, mn, 0, sign), (1, 1, 0, -1)], 1
        return [(node, node, 0, (-1) ** par[node]),
                (node + 1, node + 1, 0, -((-1) ** par[node + 1]))], 0
    if kind == "x+":
        if node == 0:
            return [(mn, 1, 1, 1)], 0
        return [(node, node + 1, 0, 1)], 0
    if kind == "x-":
        if node == 0:
            return [(1, mn, -1, (-1) ** par[mn])], 0
        return [(node + 1, node, 0, (-1) ** par[node])], 0
    raise ValueError("bad Chevalley kind %r" % kind)


def weight_pairing(sig, wa, wb) -> int:
    """Inner product of two weight vectors given as dicts {position: coeff},
    using the signed form ((eps_x, eps_y)) = (-1)^{p(x)} delta_{x,y}."""
    m, _ = sig
    total = 0
    for u, c in wa.items():
        d = wb.get(u)
        if d:
            total += ((-1) ** (0 if u <= m else 1)) * c * d
    return total


def alpha_weight(sig, node: int):
    """Simple root alpha_node as a weight vector (delta part dropped)."""
    mn = sig[0] + sig[1]
    node = node % mn
    if node == 0:
        return {mn: 1, 1: -1}
    return {node: 1, node + 1: -1}


def gen_text(algebra: Algebra, g: int, with_slot: bool = True) -> str:
    slot, pi, pj, mode = unpack(g)
    sig = algebra.slots[slot].sig
    si, sj = pos_to_sgn(sig, pi), pos_to_sgn(sig, pj)
    if with_slot:
        body = "[%d,%d,%d,%d]" % (slot + 1, si, sj, mode)
    else:
        body = "[%d,%d,%d]" % (si, sj, mode)
    return body
