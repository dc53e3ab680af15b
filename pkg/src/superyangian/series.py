"""Degree-homogeneous series, completed elements, stabilized truncation.

Infinite sums appearing in the completed enveloping algebra are represented
by templates: a coefficient times a fixed list of current factors whose modes
are affine functions of one or two nonnegative summation variables.  The
per-variable mode-coefficient sums must vanish (degree homogeneity); this is
what makes window truncations of commutators stabilize once the cutoff is
large enough, and it is checked at construction.

A Completed element is a finite part plus templates plus deferred bracket
nodes (commutators whose operands are themselves Completed); materializing at
cutoff V instantiates all variables over {0..V}^k and evaluates the brackets.
Materializations are cached per node and extended incrementally in V, so the
stabilization loop (compare window images at V and V+1) costs one boundary
layer per step instead of a full recomputation.
"""

from __future__ import annotations

from .pbw import Ctx, Elem, normal_form, _cz_add
from .superdata import pack, sgn_to_pos


class StabilizationError(RuntimeError):
    """Window image failed to stabilize below the cutoff ceiling."""


class Template:
    """coeff * prod_k E[slot_k; i_k, j_k] t^{const_k + coeffs_k . v}, summed
    over v in {0,1,2,...}^nvars.  Indices are stored in position form."""

    __slots__ = ("ctx", "coeff", "factors", "nvars")

    def __init__(self, ctx: Ctx, coeff, factors, nvars: int):
        self.ctx = ctx
        self.coeff = coeff
        self.factors = tuple(
            (slot, pi, pj, const, tuple(cs)) for slot, pi, pj, const, cs in factors)
        self.nvars = nvars
        for _slot, _pi, _pj, _const, cs in self.factors:
            if len(cs) != nvars:
                raise ValueError("factor variable arity mismatch")
        for d in range(nvars):
            if sum(f[4][d] for f in self.factors) != 0:
                raise ValueError("template not degree homogeneous in var %d" % d)

    @staticmethod
    def from_signed(ctx, coeff, signed_factors, nvars):
        """Factors given with signed indices (slot, i, j, const, coeffs)."""
        fs = []
        for slot, i, j, const, cs in signed_factors:
            sig = ctx.alg.slots[slot].sig
            fs.append((slot, sgn_to_pos(sig, i), sgn_to_pos(sig, j), const, cs))
        return Template(ctx, coeff, fs, nvars)

    def scale(self, co):
        return Template(self.ctx, co * self.coeff, self.factors, self.nvars)

    def _word_at(self, assign):
        word = []
        for slot, pi, pj, const, cs in self.factors:
            mode = const
            for c, v in zip(cs, assign):
                mode += c * v
            word.append(pack(slot, pi, pj, mode))
        return tuple(word)

    def _assignments(self, V, boundary_only=False):
        if self.nvars == 0:
            if not boundary_only or V == 0:
                yield ()
            return
        if self.nvars == 1:
            rng = (V,) if boundary_only else range(V + 1)
            for v in rng:
                yield (v,)
            return
        if self.nvars == 2:
            if boundary_only:
                for v in range(V):
                    yield (v, V)
                    yield (V, v)
                yield (V, V)
            else:
                for v1 in range(V + 1):
                    for v2 in range(V + 1):
                        yield (v1, v2)
            return
        raise ValueError("templates support at most two variables")

    def _emit(self, out: Elem, assignments):
        ctx = self.ctx
        co0 = self.coeff
        for assign in assignments:
            word = self._word_at(assign)
            for (w2, czd), c2 in normal_form(ctx, word).items():
                out._iadd_term((w2, czd), co0 * c2)

    def materialize(self, V: int) -> Elem:
        out = Elem(self.ctx)
        self._emit(out, self._assignments(V))
        return out

    def layer(self, V: int) -> Elem:
        """Terms with max(v) == V exactly."""
        out = Elem(self.ctx)
        self._emit(out, self._assignments(V, boundary_only=True))
        return out

    def __repr__(self):
        return "<Template %s * %s, %d var>" % (self.coeff, list(self.factors),
                                               self.nvars)


class Completed:
    """finite + sum of templates + sum of coeff * [x, y] bracket nodes."""

    __slots__ = ("ctx", "finite", "families", "brackets", "_cache")

    def __init__(self, ctx: Ctx, finite: Elem = None, families=(), brackets=()):
        self.ctx = ctx
        self.finite = Elem(ctx) if finite is None else finite
        self.families = tuple(families)
        self.brackets = tuple(brackets)  # (coeff, Completed, Completed)
        self._cache = {}

    @staticmethod
    def from_elem(x: Elem):
        return Completed(x.ctx, finite=x)

    @staticmethod
    def from_template(t: Template):
        return Completed(t.ctx, families=(t,))

    @staticmethod
    def bracket(x: "Completed", y: "Completed", coeff=None):
        co = x.ctx.field.one if coeff is None else coeff
        return Completed(x.ctx, brackets=((co, x, y),))

    def __add__(self, other):
        assert self.ctx is other.ctx
        return Completed(self.ctx, self.finite + other.finite,
                         self.families + other.families,
                         self.brackets + other.brackets)

    def __sub__(self, other):
        return self + other.scale(self.ctx.field.int(-1))

    def __neg__(self):
        return self.scale(self.ctx.field.int(-1))

    def scale(self, co):
        return Completed(self.ctx, self.finite.scale(co),
                         tuple(t.scale(co) for t in self.families),
                         tuple((co * bc, x, y) for bc, x, y in self.brackets))

    def is_plain(self):
        return not self.families and not self.brackets

    def materialize(self, V: int) -> Elem:
        cached = self._cache.get(V)
        if cached is not None:
            return cached
        if V - 1 in self._cache and (self.families or self.brackets):
            prev = self._cache[V - 1]
            out = prev.copy()
            for t in self.families:
                for key, co in t.layer(V).d.items():
                    out._iadd_term(key, co)
            for bc, x, y in self.brackets:
                xv, xp = x.materialize(V), x.materialize(V - 1)
                yv, yp = y.materialize(V), y.materialize(V - 1)
                dx = xv - xp
                dy = yv - yp
                inc = dx.comm(yv) + xp.comm(dy)
                for key, co in inc.d.items():
                    out._iadd_term(key, bc * co)
        else:
            out = self.finite.copy()
            for t in self.families:
                for key, co in t.materialize(V).d.items():
                    out._iadd_term(key, co)
            for bc, x, y in self.brackets:
                inc = x.materialize(V).comm(y.materialize(V))
                for key, co in inc.d.items():
                    out._iadd_term(key, bc * co)
        self._cache[V] = out
        return out


def stabilized_window(expr: Completed, W: int, v0: int = None, vmax: int = None):
    """Window-W image accepted at the first V with T(V) == T(V+1).

    Returns (elem, cutoff_accepted); raises StabilizationError at the ceiling.
    """
    if v0 is None:
        v0 = W + 2
    if vmax is None:
        vmax = v0 + 10
    t_prev = expr.materialize(v0).window(W)
    for V in range(v0 + 1, vmax + 1):
        t_cur = expr.materialize(V).window(W)
        if t_cur == t_prev:
            return t_prev, V
        t_prev = t_cur
    raise StabilizationError(
        "window-%d image still moving at cutoff %d" % (W, vmax))


def series_equal_on_window(x: Completed, y: Completed, W: int,
                           v0: int = None, vmax: int = None):
    """Stabilized equality of two completed elements on a mode window.

    Returns (equal, witness_line_or_None, cutoff)."""
    diff = x - y
    elem, cutoff = stabilized_window(diff, W, v0, vmax)
    if elem.is_zero():
        return True, None, cutoff
    (key, co) = elem.smallest_term()
    witness = Elem(elem.ctx, {key: co}).render_lines()[0]
    return False, witness, cutoff


# -- transpose anti-involution -------------------------------------------------

def _transpose_gen_sign(ctx, g):
    slot = g >> 28
    par = ctx.alg.slots[slot].parity
    pi = par[(g >> 8) & 0xFF]
    pj = par[g & 0xFF]
    from .superdata import gen_mode
    r = gen_mode(g)
    sign = (-1) ** ((pi & pj) ^ pi ^ (r & 1))
    gt = pack(slot, g & 0xFF, (g >> 8) & 0xFF, -r)
    return gt, sign


def _koszul_reversal_sign(parities):
    inv = 0
    seen_odd = 0
    for p in parities:
        if p:
            inv += seen_odd
            seen_odd += 1
    return -1 if inv % 2 else 1


def omega_elem(x: Elem) -> Elem:
    """E[i,j]t^r -> (-1)^{p(i)p(j)+p(i)+r} E[j,i]t^{-r}, words reversed with
    the Koszul sign, centrals fixed.  An anti-automorphism on the subalgebra
    generated by supertraceless currents and c, which is where all generator
    images live."""
    ctx = x.ctx
    out = Elem(ctx)
    for (w, cz), co in x.d.items():
        sign = 1
        new = []
        pars = []
        for g in w:
            gt, s = _transpose_gen_sign(ctx, g)
            sign *= s
            new.append(gt)
            pars.append(ctx.alg.parity_of_gen(g))
        sign *= _koszul_reversal_sign(pars)
        word = tuple(reversed(new))
        co2 = co if sign == 1 else -co
        for (w2, czd), c2 in normal_form(ctx, word).items():
            out._iadd_term((w2, _cz_add(cz, czd)), co2 * c2)
    return out


def omega_template(t: Template) -> Template:
    ctx = t.ctx
    new_factors = []
    pars = []
    par_tables = [s.parity for s in ctx.alg.slots]
    sign = 1
    degree = 0
    for slot, pi, pj, const, cs in t.factors:
        par = par_tables[slot]
        ppi, ppj = par[pi], par[pj]
        sign *= (-1) ** ((ppi & ppj) ^ ppi)
        degree += const
        pars.append(ppi ^ ppj)
        new_factors.append((slot, pj, pi, -const, tuple(-c for c in cs)))
    sign *= (-1) ** (degree & 1)
    sign *= _koszul_reversal_sign(pars)
    co = t.coeff if sign == 1 else -t.coeff
    return Template(ctx, co, tuple(reversed(new_factors)), t.nvars)


def omega_completed(x: Completed) -> Completed:
    """Anti-involution on completed elements; bracket nodes flip sign."""
    return Completed(
        x.ctx,
        omega_elem(x.finite),
        tuple(omega_template(t) for t in x.families),
        tuple((-bc, omega_completed(a), omega_completed(b))
              for bc, a, b in x.brackets))
