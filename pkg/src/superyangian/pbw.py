"""Normal ordering and supercommutators in completed enveloping algebras.

Elements are finite linear combinations of monomials.  A monomial is a pair
(word, cz): word is a tuple of packed generators kept in the canonical order
(slot, mode, row, col ascending; odd generators never repeat), cz is a flat
tuple of per-slot central exponents (c0, z0, c1, z1, ...) with () meaning all
zero.  Coefficients live in a pluggable field (Scalar or Fraction); integer
structure constants from the bracket are folded in through it.

Normal forms are computed by the straightening rewrite: the leftmost
out-of-order adjacent pair is swapped with a Koszul sign plus the bracket
term; an adjacent equal odd pair gg is replaced by half its self-bracket.
Rewriting terminates (each swap removes an inversion, each bracket shortens
the word) and the result is cached per word.

The supercommutator of elements expands monomial pairs through the
super-Leibniz rule, so that pairs whose factors share no row/column indices
are skipped outright instead of cancelling through full products.
"""

from __future__ import annotations

from .superdata import Algebra, bracket_gen, gen_slot, gen_text, pack, sgn_to_pos


class Ctx:
    """An algebra plus a coefficient field plus the rewrite caches."""

    __slots__ = ("alg", "field", "nf_cache", "half")

    def __init__(self, alg: Algebra, field):
        self.alg = alg
        self.field = field
        self.nf_cache = {}
        self.half = field.frac(1, 2)

    def word_parity(self, word) -> int:
        p = 0
        for g in word:
            p ^= self.alg.parity_of_gen(g)
        return p

    def gen(self, slot: int, i: int, j: int, r: int) -> int:
        sig = self.alg.slots[slot].sig
        return pack(slot, sgn_to_pos(sig, i), sgn_to_pos(sig, j), r)

    def E(self, i: int, j: int, r: int, slot: int = 0) -> "Elem":
        """Single-current element with coefficient one (test convenience)."""
        return Elem(self, {((self.gen(slot, i, j, r),), ()): self.field.one})


def _cz_add(a, b):
    if not a:
        return b
    if not b:
        return a
    return tuple(x + y for x, y in zip(a, b))


def _cz_single(nslots: int, slot: int, which: int):
    cz = [0] * (2 * nslots)
    cz[2 * slot + which] = 1
    return tuple(cz)


def normal_form(ctx: Ctx, word):
    """Map a word to its normal form: dict {(word, cz_delta): coeff}."""
    cached = ctx.nf_cache.get(word)
    if cached is not None:
        return cached

    alg = ctx.alg
    field = ctx.field
    nslots = len(alg.slots)

    # locate the leftmost violation of canonical order
    bad = -1
    equal_odd = False
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if a > b:
            bad = k
            break
        if a == b and alg.parity_of_gen(a):
            bad = k
            equal_odd = True
            break
    if bad == -1:
        res = {(word, ()): field.one}
        ctx.nf_cache[word] = res
        return res

    out = {}

    def acc(key, co):
        prev = out.get(key)
        if prev is None:
            out[key] = co
        else:
            s = prev + co
            if s:
                out[key] = s
            else:
                del out[key]

    a, b = word[bad], word[bad + 1]
    head, tail = word[:bad], word[bad + 2:]

    if not equal_odd:
        sign = -1 if (alg.parity_of_gen(a) and alg.parity_of_gen(b)) else 1
        swapped = head + (b, a) + tail
        for key, co in normal_form(ctx, swapped).items():
            acc(key, co if sign == 1 else -co)

    if gen_slot(a) == gen_slot(b):
        slot = gen_slot(a)
        spec = alg.slots[slot]
        terms = bracket_gen(spec, a, b)
        if equal_odd and terms:
            pass  # gg -> (1/2)[g,g], no swap term
        for g, icoeff, central in terms:
            if equal_odd:
                factor = ctx.half * icoeff
            else:
                factor = field.int(icoeff)
            if central == "":
                new = head + (g,) + tail
                czd = ()
            elif central == "c":
                new = head + tail
                if spec.c_value is None:
                    czd = _cz_single(nslots, slot, 0)
                else:
                    czd = ()
                    factor = factor * spec.c_value
            else:  # "z"
                new = head + tail
                if spec.z_mode == "symbolic":
                    czd = _cz_single(nslots, slot, 1)
                else:
                    czd = ()
            for (w2, czd2), co in normal_form(ctx, new).items():
                acc((w2, _cz_add(czd, czd2)), factor * co)

    ctx.nf_cache[word] = out
    return out


class Elem:
    """A finite linear combination of normally ordered monomials."""

    __slots__ = ("ctx", "d")

    def __init__(self, ctx: Ctx, d=None):
        self.ctx = ctx
        self.d = {} if d is None else d

    # -- construction ------------------------------------------------------

    @staticmethod
    def zero(ctx):
        return Elem(ctx)

    @staticmethod
    def unit(ctx, coeff=None):
        return Elem(ctx, {((), ()): ctx.field.one if coeff is None else coeff})

    def copy(self):
        return Elem(self.ctx, dict(self.d))

    # -- linear structure ---------------------------------------------------

    def _iadd_term(self, key, co):
        d = self.d
        prev = d.get(key)
        if prev is None:
            if co:
                d[key] = co
        else:
            s = prev + co
            if s:
                d[key] = s
            else:
                del d[key]

    def __add__(self, other):
        assert self.ctx is other.ctx
        out = self.copy()
        for key, co in other.d.items():
            out._iadd_term(key, co)
        return out

    def __sub__(self, other):
        assert self.ctx is other.ctx
        out = self.copy()
        for key, co in other.d.items():
            out._iadd_term(key, -co)
        return out

    def __neg__(self):
        return Elem(self.ctx, {k: -c for k, c in self.d.items()})

    def scale(self, co):
        if not co:
            return Elem(self.ctx)
        return Elem(self.ctx, {k: co * c for k, c in self.d.items()})

    # -- multiplication ------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, Elem):
            return self.scale(other)
        assert self.ctx is other.ctx
        ctx = self.ctx
        out = Elem(ctx)
        for (wa, cza), ca in self.d.items():
            for (wb, czb), cb in other.d.items():
                co = ca * cb
                cz = _cz_add(cza, czb)
                for (w2, czd), c2 in normal_form(ctx, wa + wb).items():
                    out._iadd_term((w2, _cz_add(cz, czd)), co * c2)
        return out

    def __rmul__(self, other):
        return self.scale(other)

    # -- supercommutator ------------------------------------------------------

    def comm(self, other):
        assert self.ctx is other.ctx
        ctx = self.ctx
        out = Elem(ctx)
        left = [(wa, cza, ca, _incidence(ctx, wa)) for (wa, cza), ca in self.d.items()]
        right = [(wb, czb, cb, _incidence(ctx, wb)) for (wb, czb), cb in other.d.items()]
        for wa, cza, ca, inca in left:
            for wb, czb, cb, incb in right:
                if not _may_interact(inca, incb):
                    continue
                res = _comm_words(ctx, wa, wb)
                if not res:
                    continue
                co = ca * cb
                cz = _cz_add(cza, czb)
                for (w2, czd), c2 in res.items():
                    out._iadd_term((w2, _cz_add(cz, czd)), co * c2)
        return out

    # -- truncations ------------------------------------------------------------

    def window(self, W: int):
        """Keep monomials whose factor modes all lie in [-W, W]."""
        from .superdata import gen_mode
        keep = {}
        for (w, cz), co in self.d.items():
            ok = True
            for g in w:
                if abs(gen_mode(g)) > W:
                    ok = False
                    break
            if ok:
                keep[(w, cz)] = co
        return Elem(self.ctx, keep)

    def ann_filter(self, D: int):
        """Keep monomials with annihilation degree (sum of positive modes) <= D."""
        from .superdata import gen_mode
        keep = {}
        for (w, cz), co in self.d.items():
            deg = 0
            for g in w:
                r = gen_mode(g)
                if r > 0:
                    deg += r
            if deg <= D:
                keep[(w, cz)] = co
        return Elem(self.ctx, keep)

    # -- inspection ------------------------------------------------------------

    def is_zero(self):
        return not self.d

    def __eq__(self, other):
        if not isinstance(other, Elem):
            return NotImplemented
        return self.ctx is other.ctx and self.d == other.d

    def __hash__(self):
        raise TypeError("Elem is mutable; not hashable")

    def nterms(self):
        return len(self.d)

    def parity(self):
        """Parity of a homogeneous element (asserts homogeneity)."""
        ps = {self.ctx.word_parity(w) for (w, _cz) in self.d}
        if not ps:
            return 0
        if len(ps) > 1:
            raise ValueError("element is not parity homogeneous")
        return ps.pop()

    def smallest_term(self):
        """Lexicographically smallest monomial with coefficient, or None."""
        if not self.d:
            return None
        key = min(self.d)
        return key, self.d[key]

    def render_lines(self):
        """Canonical text: one 'coeff ; [slot,i,j,r] ...' line per monomial."""
        lines = []
        for (w, cz) in sorted(self.d):
            co = self.d[(w, cz)]
            parts = [gen_text(self.ctx.alg, g) for g in w]
            for slot in range(len(self.ctx.alg.slots)):
                if cz:
                    ce, ze = cz[2 * slot], cz[2 * slot + 1]
                    if ce:
                        parts.append("c%d^%d" % (slot + 1, ce))
                    if ze:
                        parts.append("z%d^%d" % (slot + 1, ze))
            body = " ".join(parts) if parts else "1"
            lines.append("%s ; %s" % (co, body))
        return lines

    def __repr__(self):
        if not self.d:
            return "<Elem 0>"
        return "<Elem %d terms: %s%s>" % (
            len(self.d), "; ".join(self.render_lines()[:4]),
            " ..." if len(self.d) > 4 else "")


def _incidence(ctx, word):
    """(rows, cols, has_diag) sets used to prefilter commuting monomial pairs."""
    rows = set()
    cols = set()
    has_diag = False
    for g in word:
        slot = g >> 28
        pi = (g >> 8) & 0xFF
        pj = g & 0xFF
        rows.add((slot, pi))
        cols.add((slot, pj))
        if pi == pj:
            has_diag = True
    return rows, cols, has_diag


def _may_interact(inca, incb):
    ra, ca, da = inca
    rb, cb, db = incb
    if da and db:
        return True
    return not ca.isdisjoint(rb) or not ra.isdisjoint(cb)


def _comm_words(ctx, wa, wb):
    """[word_a, word_b] as dict {(word, cz_delta): coeff}; super-Leibniz."""
    if not wa or not wb:
        return {}
    alg = ctx.alg
    field = ctx.field
    out = {}

    def acc(key, co):
        prev = out.get(key)
        if prev is None:
            if co:
                out[key] = co
        else:
            s = prev + co
            if s:
                out[key] = s
            else:
                del out[key]

    if len(wa) == 1:
        a = wa[0]
        pa = alg.parity_of_gen(a)
        slot_a = gen_slot(a)
        pref_parity = 0
        for j, b in enumerate(wb):
            if gen_slot(b) == slot_a:
                terms = bracket_gen(alg.slots[slot_a], a, b)
                if terms:
                    sign = -1 if (pa and pref_parity) else 1
                    spec = alg.slots[slot_a]
                    nslots = len(alg.slots)
                    for g, icoeff, central in terms:
                        factor = field.int(icoeff if sign == 1 else -icoeff)
                        if central == "":
                            new = wb[:j] + (g,) + wb[j + 1:]
                            czd0 = ()
                        else:
                            new = wb[:j] + wb[j + 1:]
                            if central == "c":
                                if spec.c_value is None:
                                    czd0 = _cz_single(nslots, slot_a, 0)
                                else:
                                    czd0 = ()
                                    factor = factor * spec.c_value
                            else:
                                if spec.z_mode == "symbolic":
                                    czd0 = _cz_single(nslots, slot_a, 1)
                                else:
                                    czd0 = ()
                        for (w2, czd), co in normal_form(ctx, new).items():
                            acc((w2, _cz_add(czd0, czd)), factor * co)
            pref_parity ^= alg.parity_of_gen(b)
        return out

    # [a A', B] = a [A', B] + (-1)^{p(A') p(B)} [a, B] A'
    a, rest = wa[:1], wa[1:]
    inner = _comm_words(ctx, rest, wb)
    for (w, czd), co in inner.items():
        for (w2, czd2), c2 in normal_form(ctx, a + w).items():
            acc((w2, _cz_add(czd, czd2)), co * c2)
    sign = -1 if (ctx.word_parity(rest) and ctx.word_parity(wb)) else 1
    inner = _comm_words(ctx, a, wb)
    for (w, czd), co in inner.items():
        co = co if sign == 1 else -co
        for (w2, czd2), c2 in normal_form(ctx, w + rest).items():
            acc((w2, _cz_add(czd, czd2)), co * c2)
    return out
