"""Generator images: evaluation map, edge contractions, coproduct series.

Generators are referred to by (kind, node, level) with kind in
{"x+", "x-", "h", "ht"}; node lives on the cyclic diagram Z/(m+n); level 0
generators are Chevalley currents, level 1 are the one-higher generators.
"ht" is the shifted Cartan generator H-tilde = H_1 - (hbar/2) H_0^2 used by
all displayed level-one identities.

Level-one images that have no displayed formula are synthesized from the
defining relations: X-_{j,1} from the neighbor bracket with H-tilde (falling
back across the excluded boundary pair), X+_{0,1} through node 1, and
H_{i,1} as the bracket of X+_{i,1} with X-_{i,0}.  They are Completed
elements with deferred bracket nodes, so every consumer shares one memoized
materialization per cutoff.
"""

from __future__ import annotations

from .pbw import Ctx, Elem
from .series import Completed, Template
from .superdata import cartan, chevalley, node_pos, pos_to_sgn, sgn_to_pos


class HypothesisError(ValueError):
    """A configuration violates the stated hypotheses of a theorem."""


def node_signed(sig, node: int) -> int:
    return pos_to_sgn(sig, node_pos(sig, node))


def beta_boundary(field, sig, printed: bool):
    """The boundary coefficient of the wrap-around level-one relations.

    printed=True uses the form with a second hbar factor; printed=False the
    weight-homogeneous reading.  Exactly one passes the relation suite; the
    engine records which.
    """
    m, n = sig
    base = field.frac(m - n, 2) * field.hbar
    if printed:
        base = base * field.hbar
    return field.eps + base


class EvMap:
    """Evaluation images inside one slot of a Ctx, at parameter a_value."""

    def __init__(self, ctx: Ctx, slot: int = 0, a_value=None):
        self.ctx = ctx
        self.slot = slot
        self.spec = ctx.alg.slots[slot]
        self.sig = self.spec.sig
        self.a = ctx.field.a if a_value is None else a_value
        self._memo = {}

    # -- small builders ----------------------------------------------------

    def cur(self, posi: int, posj: int, r: int, coeff=None) -> Elem:
        ctx = self.ctx
        g = (self.slot << 28) | ((r + 64) << 16) | (posi << 8) | posj
        co = ctx.field.one if coeff is None else coeff
        return Elem(ctx, {((g,), ()): co})

    def central_c(self, coeff) -> Elem:
        ctx = self.ctx
        if self.spec.c_value is not None:
            return Elem(ctx, {((), ()): coeff * self.spec.c_value})
        cz = [0] * (2 * len(ctx.alg.slots))
        cz[2 * self.slot] = 1
        return Elem(ctx, {((), tuple(cz)): coeff})

    def chev(self, kind: str, node: int) -> Elem:
        terms, cc = chevalley(self.sig, kind, node)
        out = Elem(self.ctx)
        for pi, pj, r, ic in terms:
            for key, co in self.cur(pi, pj, r, self.ctx.field.int(ic)).d.items():
                out._iadd_term(key, co)
        if cc:
            for key, co in self.central_c(self.ctx.field.int(cc)).d.items():
                out._iadd_term(key, co)
        return out

    def hat(self, i: int) -> int:
        """Signed count sum_{u<=i} (-1)^{p(u)} of the first i positions."""
        m = self.sig[0]
        return min(i, m) - max(0, i - m)

    # -- generator images -----------------------------------------------------

    def image(self, kind: str, node: int, level: int) -> Completed:
        mn = self.sig[0] + self.sig[1]
        node = node % mn
        key = (kind, node, level)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        out = self._build(kind, node, level)
        self._memo[key] = out
        return out

    def htilde(self, node: int) -> Completed:
        return self.image("ht", node, 1)

    def _build(self, kind, node, level):
        ctx = self.ctx
        field = ctx.field
        m, n = self.sig
        mn = m + n
        if level == 0:
            if kind == "ht":
                raise ValueError("ht is a level-one generator")
            return Completed.from_elem(self.chev(kind, node))

        if kind == "x+" and node != 0:
            i = node
            par = self.spec.parity
            const = self.a - field.frac(self.hat(i), 2) * field.hbar
            fin = self.cur(i, i + 1, 0, const)
            fams = []
            for u in range(1, i + 1):
                co = field.hbar if par[u] == 0 else -field.hbar
                fams.append(Template(ctx, co,
                                     [(self.slot, i, u, 0, (-1,)),
                                      (self.slot, u, i + 1, 0, (1,))], 1))
            for u in range(i + 1, mn + 1):
                co = field.hbar if par[u] == 0 else -field.hbar
                fams.append(Template(ctx, co,
                                     [(self.slot, i, u, -1, (-1,)),
                                      (self.slot, u, i + 1, 1, (1,))], 1))
            return Completed(ctx, fin, fams)

        if kind == "x+" and node == 0:
            a10 = cartan(self.sig, 1, 0)
            return Completed.bracket(self.htilde(1), self.image("x+", 0, 0),
                                     field.frac(1, a10))

        if kind == "x-":
            j = node
            i = (j - 1) % mn
            if (i, j) in ((0, mn - 1), (mn - 1, 0)) or cartan(self.sig, i, j) == 0:
                i = (j + 1) % mn
            aij = cartan(self.sig, i, j)
            if aij == 0 or (i, j) in ((0, mn - 1), (mn - 1, 0)):
                raise HypothesisError(
                    "no admissible neighbor to synthesize x-_{%d,1}" % j)
            return Completed.bracket(self.htilde(i), self.image("x-", j, 0),
                                     field.frac(-1, aij))

        if kind == "h":
            return Completed.bracket(self.image("x+", node, 1),
                                     self.image("x-", node, 0))

        if kind == "ht":
            h0 = self.chev("h", node)
            sq = (h0 * h0).scale(field.frac(-1, 2) * field.hbar)
            return self.image("h", node, 1) + Completed.from_elem(sq)

        raise ValueError("unknown generator (%s, %s, %s)" % (kind, node, level))


# -- edge contractions ------------------------------------------------------------


class ContractionConfig:
    """Gluing data: a small block of size (m1|n1) with (m2|n2) appended."""

    __slots__ = ("m1", "n1", "m2", "n2")

    def __init__(self, m1, n1, m2, n2):
        self.m1, self.n1, self.m2, self.n2 = m1, n1, m2, n2

    @property
    def big_sig(self):
        return (self.m1 + self.m2, self.n1 + self.n2)

    @property
    def small1_sig(self):
        return (self.m1, self.n1)

    @property
    def small2_sig(self):
        return (self.m2, self.n2)

    def check_hypotheses(self):
        if not (self.m2 >= 0 and self.n2 >= 0 and self.m1 >= 2
                and self.n1 >= 2 and self.m1 + self.n1 >= 5):
            raise HypothesisError(
                "contraction (%d,%d,%d,%d) violates m2,n2>=0, m1,n1>=2, "
                "m1+n1>=5" % (self.m1, self.n1, self.m2, self.n2))

    def phi1(self, i: int) -> int:
        """First embedding on signed indices (identity on retained block)."""
        return i

    def phi2(self, i: int) -> int:
        """Second embedding: positives shift past m1, negatives past n1."""
        return self.m1 + i if i > 0 else -self.n1 + i

    def __repr__(self):
        return "ContractionConfig(%d,%d,%d,%d)" % (self.m1, self.n1,
                                                   self.m2, self.n2)


def _psi_case(i, boundary_neg, m_small, table):
    """Dispatch a signed small index into the four-case image table."""
    if i == boundary_neg:
        return table["affine"]
    if 1 <= i <= m_small - 1:
        return table["pos"]
    if i == m_small:
        return table["wall"]
    if boundary_neg + 1 <= i <= -1:
        return table["neg"]
    raise IndexError("index %d outside contraction table" % i)


def psi1_level0(cfg: ContractionConfig, kind: str, node: int):
    """Image of a level-zero generator under the first contraction, as
    (int_sign, (i, j, mode)) in big signed indices."""
    sig = cfg.small1_sig
    i = node_signed(sig, node)
    if kind == "x+":
        case = _psi_case(i, -cfg.n1, cfg.m1, {
            "affine": (1, (-cfg.n1, 1, 1)),
            "pos": (1, (i, i + 1, 0)),
            "wall": (1, (cfg.m1, -1, 0)),
            "neg": (1, (i, i - 1, 0))})
        return case
    if kind == "x-":
        return _psi_case(i, -cfg.n1, cfg.m1, {
            "affine": (-1, (1, -cfg.n1, -1)),
            "pos": (1, (i + 1, i, 0)),
            "wall": (1, (-1, cfg.m1, 0)),
            "neg": (-1, (i - 1, i, 0))})
    raise ValueError("level-zero contraction table covers x+ and x- only")


def psi2_level0(cfg: ContractionConfig, kind: str, node: int):
    sig = cfg.small2_sig
    i = node_signed(sig, node)
    m1, n1 = cfg.m1, cfg.n1
    if kind == "x+":
        return _psi_case(i, -cfg.n2, cfg.m2, {
            "affine": (1, (-n1 - cfg.n2, m1 + 1, 1)),
            "pos": (1, (m1 + i, m1 + i + 1, 0)),
            "wall": (1, (m1 + cfg.m2, -n1 - 1, 0)),
            "neg": (1, (-n1 + i, -n1 + i - 1, 0))})
    if kind == "x-":
        return _psi_case(i, -cfg.n2, cfg.m2, {
            "affine": (-1, (m1 + 1, -n1 - cfg.n2, -1)),
            "pos": (1, (m1 + i + 1, m1 + i, 0)),
            "wall": (1, (-n1 - 1, m1 + cfg.m2, 0)),
            "neg": (-1, (-n1 + i - 1, -n1 + i, 0))})
    raise ValueError("level-zero contraction table covers x+ and x- only")


def _signed_template(ev: EvMap, coeff, fs, nvars):
    sig = ev.sig
    eff = [(ev.slot, sgn_to_pos(sig, i), sgn_to_pos(sig, j), c0, cs)
           for i, j, c0, cs in fs]
    return Template(ev.ctx, coeff, eff, nvars)


def p_series(ev: EvMap, cfg: ContractionConfig, i: int, second_col: int = None):
    """Retained-block series over the appended even columns at row i.
    second_col defaults to i (the diagonal family); the level-one x+ variant
    passes i+1."""
    jcol = i if second_col is None else second_col
    out = []
    for z in range(cfg.m1 + 1, cfg.m1 + cfg.m2 + 1):
        out.append(_signed_template(
            ev, ev.ctx.field.hbar,
            [(i, z, -1, (-1,)), (z, jcol, 1, (1,))], 1))
    return out


def q_series(ev: EvMap, cfg: ContractionConfig, i: int, second_col: int = None):
    jcol = i if second_col is None else second_col
    out = []
    for z in range(-cfg.n1 - cfg.n2, -cfg.n1):
        out.append(_signed_template(
            ev, ev.ctx.field.hbar,
            [(i, z, -1, (-1,)), (z, jcol, 1, (1,))], 1))
    return out


def r_series(ev: EvMap, cfg: ContractionConfig, pos: int, second_pos: int = None):
    """Second-contraction series at small position pos (glued through phi2);
    z runs over the retained odd block, modes (t^-v, t^v)."""
    col = cfg.phi2(pos_to_sgn(cfg.small2_sig, pos))
    col2 = col if second_pos is None \
        else cfg.phi2(pos_to_sgn(cfg.small2_sig, second_pos))
    out = []
    for z in range(-cfg.n1, 0):
        out.append(_signed_template(
            ev, ev.ctx.field.hbar,
            [(z, col2, 0, (-1,)), (col, z, 0, (1,))], 1))
    return out


def s_series(ev: EvMap, cfg: ContractionConfig, pos: int, second_pos: int = None):
    col = cfg.phi2(pos_to_sgn(cfg.small2_sig, pos))
    col2 = col if second_pos is None \
        else cfg.phi2(pos_to_sgn(cfg.small2_sig, second_pos))
    out = []
    for z in range(1, cfg.m1 + 1):
        out.append(_signed_template(
            ev, ev.ctx.field.hbar,
            [(z, col2, -1, (-1,)), (col, z, 1, (1,))], 1))
    return out


def psi1_image(ev: EvMap, cfg: ContractionConfig, kind: str, node: int,
               level: int) -> Completed:
    """First contraction, resolved through the evaluation map of the big
    algebra.  Level-one images exist for ht node 1 and x+ node 1."""
    ctx = ev.ctx
    field = ctx.field
    if level == 0:
        sign, (i, j, r) = psi1_level0(cfg, kind, node)
        return Completed.from_elem(
            ev.cur(sgn_to_pos(ev.sig, i), sgn_to_pos(ev.sig, j), r,
                   field.int(sign)))
    if (kind, node) == ("ht", 1):
        fams = []
        for t in p_series(ev, cfg, 1):
            fams.append(t.scale(field.int(-1)))
        fams.extend(p_series(ev, cfg, 2))
        fams.extend(q_series(ev, cfg, 1))
        for t in q_series(ev, cfg, 2):
            fams.append(t.scale(field.int(-1)))
        return ev.htilde(1) + Completed(ctx, families=fams)
    if (kind, node) == ("x+", 1):
        fams = []
        for t in p_series(ev, cfg, 1, second_col=2):
            fams.append(t.scale(field.int(-1)))
        fams.extend(q_series(ev, cfg, 1, second_col=2))
        return ev.image("x+", 1, 1) + Completed(ctx, families=fams)
    raise ValueError("first contraction has no level-one image for (%s,%s)"
                     % (kind, node))


def psi2_image(ev: EvMap, cfg: ContractionConfig, kind: str, node: int,
               level: int) -> Completed:
    ctx = ev.ctx
    field = ctx.field
    if level == 0:
        sign, (i, j, r) = psi2_level0(cfg, kind, node)
        return Completed.from_elem(
            ev.cur(sgn_to_pos(ev.sig, i), sgn_to_pos(ev.sig, j), r,
                   field.int(sign)))
    if (kind, node) == ("ht", 1):
        fams = []
        fams.extend(r_series(ev, cfg, 1))
        for t in r_series(ev, cfg, 2):
            fams.append(t.scale(field.int(-1)))
        fams.extend(s_series(ev, cfg, 1))
        for t in s_series(ev, cfg, 2):
            fams.append(t.scale(field.int(-1)))
        return ev.htilde(cfg.m1 + 1) + Completed(ctx, families=fams)
    if (kind, node) == ("x+", 1):
        fams = []
        fams.extend(r_series(ev, cfg, 1, second_pos=2))
        fams.extend(s_series(ev, cfg, 1, second_pos=2))
        return ev.image("x+", cfg.m1 + 1, 1) + Completed(ctx, families=fams)
    raise ValueError("second contraction has no level-one image for (%s,%s)"
                     % (kind, node))


# -- coproduct series --------------------------------------------------------------


def b_series(ctx: Ctx, sig, i: int, map0=None, map1=None, slot0: int = 0,
             slot1: int = 1):
    """The correction series of the level-one coproduct at node i, built as
    two-slot templates.  map0/map1 remap signed indices per tensor factor
    (used when a contraction is applied to one side afterwards)."""
    field = ctx.field
    m, n = sig
    mn = m + n
    if not 1 <= i <= mn - 1:
        raise HypothesisError("coproduct series defined for inner nodes only")
    id_map = lambda x: x
    f0 = map0 or id_map
    f1 = map1 or id_map
    par = (0,) + tuple(0 if u <= m else 1 for u in range(1, mn + 1))

    def sgn(u):
        return pos_to_sgn(sig, u)

    def T(coeff, a_idx, a_mode, a_cs, b_idx, b_mode, b_cs, a_slot, b_slot):
        (ai, aj), (bi, bj) = a_idx, b_idx
        amap = f0 if a_slot == slot0 else f1
        bmap = f0 if b_slot == slot0 else f1
        sig_a = ctx.alg.slots[a_slot].sig
        sig_b = ctx.alg.slots[b_slot].sig
        return Template(ctx, coeff, [
            (a_slot, sgn_to_pos(sig_a, amap(ai)), sgn_to_pos(sig_a, amap(aj)),
             a_mode, a_cs),
            (b_slot, sgn_to_pos(sig_b, bmap(bi)), sgn_to_pos(sig_b, bmap(bj)),
             b_mode, b_cs)], 1)

    out = []
    hb = field.hbar
    for u in range(1, mn + 1):
        pu = par[u]
        piu = par[i] ^ pu          # parity of E[i,u]
        pi1u = par[i + 1] ^ pu     # parity of E[i+1,u]
        s1 = hb if pu == 0 else -hb
        s2 = hb if (pu ^ (piu & pi1u)) == 0 else -hb
        iu = (sgn(i), sgn(u))
        ui1 = (sgn(u), sgn(i + 1))
        if u <= i:
            out.append(T(s1, iu, 0, (-1,), ui1, 0, (1,), slot0, slot1))
            out.append(T(-s2, ui1, -1, (-1,), iu, 1, (1,), slot0, slot1))
        else:
            out.append(T(s1, iu, -1, (-1,), ui1, 1, (1,), slot0, slot1))
            out.append(T(-s2, ui1, 0, (-1,), iu, 0, (1,), slot0, slot1))
    return out


# -- the J-presentation series ---------------------------------------------------


def a_element(ev: EvMap, i: int) -> Completed:
    """The degree-balancing series attached to position i (four groups)."""
    ctx = ev.ctx
    field = ctx.field
    mn = ev.sig[0] + ev.sig[1]
    if not 1 <= i <= mn:
        raise IndexError("position %d out of range" % i)
    par = ev.spec.parity
    half = field.frac(1, 2) * field.hbar
    fams = []
    for u in range(i + 1, mn + 1):
        # group 1: + (hbar/2) E[u,i]t^{-s} E[i,u]t^{s}
        fams.append(Template(ctx, half,
                             [(ev.slot, u, i, 0, (-1,)),
                              (ev.slot, i, u, 0, (1,))], 1))
        # group 4: - (hbar/2)(-1)^{p(i)+p(u)} E[i,u]t^{-s-1} E[u,i]t^{s+1}
        s4 = half if (par[i] ^ par[u]) == 0 else -half
        fams.append(Template(ctx, -s4,
                             [(ev.slot, i, u, -1, (-1,)),
                              (ev.slot, u, i, 1, (1,))], 1))
    for u in range(1, i):
        # group 2: - (hbar/2)(-1)^{p(i)+p(u)} E[i,u]t^{-s} E[u,i]t^{s}
        s2 = half if (par[i] ^ par[u]) == 0 else -half
        fams.append(Template(ctx, -s2,
                             [(ev.slot, i, u, 0, (-1,)),
                              (ev.slot, u, i, 0, (1,))], 1))
        # group 3: + (hbar/2) E[u,i]t^{-s-1} E[i,u]t^{s+1}
        fams.append(Template(ctx, half,
                             [(ev.slot, u, i, -1, (-1,)),
                              (ev.slot, i, u, 1, (1,))], 1))
    return Completed(ctx, families=fams)


def a_fragment(ev: EvMap, i: int, group: int) -> Completed:
    """One of the four summand groups of a_element, with its sign in the
    combination A = A1 - A2 + A3 - A4 NOT applied."""
    ctx = ev.ctx
    field = ctx.field
    mn = ev.sig[0] + ev.sig[1]
    par = ev.spec.parity
    half = field.frac(1, 2) * field.hbar
    fams = []
    if group == 1:
        for u in range(i + 1, mn + 1):
            fams.append(Template(ctx, half, [(ev.slot, u, i, 0, (-1,)),
                                             (ev.slot, i, u, 0, (1,))], 1))
    elif group == 2:
        for u in range(1, i):
            co = half if (par[i] ^ par[u]) == 0 else -half
            fams.append(Template(ctx, co, [(ev.slot, i, u, 0, (-1,)),
                                           (ev.slot, u, i, 0, (1,))], 1))
    elif group == 3:
        for u in range(1, i):
            fams.append(Template(ctx, half, [(ev.slot, u, i, -1, (-1,)),
                                             (ev.slot, i, u, 1, (1,))], 1))
    elif group == 4:
        for u in range(i + 1, mn + 1):
            co = half if (par[i] ^ par[u]) == 0 else -half
            fams.append(Template(ctx, co, [(ev.slot, i, u, -1, (-1,)),
                                           (ev.slot, u, i, 1, (1,))], 1))
    else:
        raise ValueError("group must be 1..4")
    return Completed(ctx, families=fams)


def j_h(ev: EvMap, i: int) -> Completed:
    """J of the i-th Cartan generator, 1 <= i <= m+n-1."""
    return ev.htilde(i) + a_element(ev, i) - a_element(ev, i + 1)


def mirror_gen(kind: str, node: int, level: int):
    """Generator-level minus-case substitution (signs dropped; the mirrored
    checks are all commutator-equals-zero statements)."""
    if kind == "x+":
        return ("x-", node, level)
    if kind == "x-":
        return ("x+", node, level)
    return (kind, node, level)
