"""Vacuum module: the representation induced from the trivial module of the
non-negative current half.

Every current of mode >= 0 kills the vacuum, c acts by a per-slot charge chi
and z by 1.  Basis vectors are normal-ordered words of negative-mode currents
applied to the vacuum; a vector is a dict {word: coefficient}.

Two zero-operator routes are provided.  The per-vector route applies an
operator to chosen vectors directly.  The fingerprint route filters the
stabilized normal form of the operator by annihilation degree: a normal
ordered word whose positive modes sum to more than D sends any vector of
depth <= D into positive t-degree, which is zero here, so a vanishing
filtered part certifies that the operator kills the whole depth-D slice.
"""

from __future__ import annotations

from .pbw import Ctx, Elem, normal_form
from .series import Completed, StabilizationError
from .superdata import bracket_gen, gen_mode, gen_slot, unpack


def vec_depth(vec) -> int:
    best = 0
    for word in vec:
        d = sum(-gen_mode(g) for g in word if gen_mode(g) < 0)
        best = max(best, d)
    return best


def vec_is_zero(vec) -> bool:
    return all(not bool(c) for c in vec.values())


def vec_render(vec, ctx) -> list:
    from .pbw import Elem
    return Elem(ctx, {(w, ()): c for w, c in vec.items()}).render_lines()


def _max_const(comp: Completed) -> int:
    best = 0
    for t in comp.families:
        for (_s, _i, _j, const, _cs) in t.factors:
            best = max(best, abs(const))
    for (_co, x, y) in comp.brackets:
        best = max(best, _max_const(x), _max_const(y))
    return best


class VacuumModule:
    def __init__(self, ctx: Ctx, chis=None):
        self.ctx = ctx
        field = ctx.field
        vals = []
        for s, spec in enumerate(ctx.alg.slots):
            if chis is not None and chis[s] is not None:
                vals.append(chis[s])
            elif spec.c_value is not None:
                vals.append(spec.c_value)
            else:
                vals.append(field.c)
        self.chis = tuple(vals)
        self._atom = {}

    def vac(self):
        return {(): self.ctx.field.one}

    # -- action ------------------------------------------------------------

    def apply_atom(self, g: int, w: tuple):
        """Action of one packed generator on one basis word, as a tuple of
        (basis word, coefficient) pairs."""
        key = (g, w)
        hit = self._atom.get(key)
        if hit is not None:
            return hit
        ctx = self.ctx
        field = ctx.field
        res = {}
        if gen_mode(g) < 0:
            for (word, czd), co in normal_form(ctx, (g,) + w).items():
                if any(czd):
                    raise AssertionError("creation straightening hit a charge")
                res[word] = res.get(word, field.zero) + co
        elif w:
            h, rest = w[0], w[1:]
            slot = gen_slot(g)
            if gen_slot(h) == slot:
                for ng, ic, central in bracket_gen(ctx.alg.slots[slot], g, h):
                    co = field.int(ic)
                    if central == "c":
                        co = co * self.chis[slot]
                    if ng is None:
                        res[rest] = res.get(rest, field.zero) + co
                    else:
                        for w2, c2 in self.apply_atom(ng, rest):
                            res[w2] = res.get(w2, field.zero) + co * c2
            sgn = -1 if (ctx.alg.parity_of_gen(g)
                         and ctx.alg.parity_of_gen(h)) else 1
            for w2, c2 in self.apply_atom(g, rest):
                c2 = c2 if sgn == 1 else -c2
                for (word, czd), co in normal_form(ctx, (h,) + w2).items():
                    if any(czd):
                        raise AssertionError(
                            "creation straightening hit a charge")
                    res[word] = res.get(word, field.zero) + co * c2
        out = tuple((w2, c2) for w2, c2 in res.items() if bool(c2))
        self._atom[key] = out
        return out

    def act(self, elem: Elem, vec):
        field = self.ctx.field
        out = {}
        for (word, cz), co in elem.d.items():
            sc = co
            for s in range(len(cz) // 2):
                ce = cz[2 * s]
                if ce:
                    sc = sc * self.chis[s] ** ce
            for bw, bco in vec.items():
                cur = {bw: sc * bco}
                for g in reversed(word):
                    nxt = {}
                    for w2, c2 in cur.items():
                        for w3, c3 in self.apply_atom(g, w2):
                            nxt[w3] = nxt.get(w3, field.zero) + c2 * c3
                    cur = nxt
                    if not cur:
                        break
                for w2, c2 in cur.items():
                    out[w2] = out.get(w2, field.zero) + c2
        return {w: c for w, c in out.items() if bool(c)}

    def act_completed(self, comp: Completed, vec, v0=None, vmax=None):
        """Stabilized action of a completed expression on a vector."""
        if v0 is None:
            v0 = vec_depth(vec) + _max_const(comp) + 3
        if vmax is None:
            vmax = v0 + 10
        prev = None
        for v in range(v0, vmax + 1):
            cur = self.act(comp.materialize(v), vec)
            if prev is not None and _vec_eq(prev, cur):
                return prev, v
            prev = cur
        raise StabilizationError(
            "module action still moving at cutoff %d" % vmax)


def _vec_eq(a, b):
    if len(a) != len(b):
        return False
    for w, c in a.items():
        if w not in b or not (b[w] == c):
            return False
    return True


def _transpose_gen(ctx, g):
    slot, pi, pj, mode = unpack(g)
    return (slot << 28) | ((-mode + 64) << 16) | (pj << 8) | pi


def zero_operator_check(module: VacuumModule, comp: Completed, depth: int,
                        v0=None, vmax=None):
    """Fingerprint route: (ok, witness text or None, accepted cutoff).

    Stabilizes the annihilation-filtered normal form of comp; emptiness
    certifies that comp kills every vector of the given depth or less.  On
    failure a concrete vector is searched for, transpose candidates first.
    """
    ctx = module.ctx
    if v0 is None:
        v0 = depth + _max_const(comp) + 3
    if vmax is None:
        vmax = v0 + 10
    prev = None
    fingerprint = None
    cutoff = None
    for v in range(v0, vmax + 1):
        cur = comp.materialize(v).ann_filter(depth)
        if prev is not None and prev == cur:
            fingerprint = prev
            cutoff = v
            break
        prev = cur
    if fingerprint is None:
        raise StabilizationError(
            "filtered normal form still moving at cutoff %d" % vmax)
    if fingerprint.is_zero():
        return True, None, cutoff
    # witness search: act on vectors transposed out of surviving words
    elem = comp.materialize(cutoff)
    tried = set()
    words = sorted(fingerprint.d)[:8]
    for word, _cz in words:
        cand_word = tuple(_transpose_gen(ctx, g) for g in reversed(word)
                          if gen_mode(g) >= 0)
        cand_word = tuple(g for g in cand_word if gen_mode(g) < 0)
        if cand_word in tried:
            continue
        tried.add(cand_word)
        vec = {(): ctx.field.one}
        for g in reversed(cand_word):
            nxt = {}
            for w2, c2 in vec.items():
                for w3, c3 in module.apply_atom(g, w2):
                    nxt[w3] = nxt.get(w3, ctx.field.zero) + c2 * c3
            vec = nxt
        if vec_is_zero(vec) or vec_depth(vec) > depth:
            continue
        got = module.act(elem, vec)
        if not vec_is_zero(got):
            lines = vec_render(vec, ctx)
            return False, "acts on " + " + ".join(lines), cutoff
    # small scan over single creation atoms
    for slot, spec in enumerate(ctx.alg.slots):
        mn = spec.mn
        for r in range(1, depth + 1):
            for i in range(1, mn + 1):
                for j in range(1, mn + 1):
                    g = (slot << 28) | ((-r + 64) << 16) | (i << 8) | j
                    vec = {(g,): ctx.field.one}
                    got = module.act(elem, vec)
                    if not vec_is_zero(got):
                        return (False,
                                "acts on " + vec_render(vec, ctx)[0], cutoff)
    key, _co = fingerprint.smallest_term()
    word = Elem(ctx, {key: ctx.field.one})
    return False, "filtered term " + word.render_lines()[0], cutoff
