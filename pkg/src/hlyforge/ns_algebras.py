"""
NS-Hom-Lie and NS-Hom-Lie-Yamaguti algebras.

An NS-HLY algebra carries four products on one space: ``circ`` (x o y),
``vee`` (x v y, skew), ``curly`` {x,y,z} and ``square`` [x,y,z], plus a twist
alpha.  Its derived brackets are

    [x,y]*    = x o y - y o x + x v y
    {x,y,z}^  = {z,y,x} - {z,x,y} + a(x) o (y o z) - a(y) o (x o z) - [x,y]* o a(z)
    [[x,y,z]] = {x,y,z}^ + {x,y,z} - {y,x,z} + [x,y,z]

Several displayed identities admit more than one reading.  Each choice is a
key of ``READINGS``; ``strict=True`` swaps in ``LITERAL_READINGS``.
"""

from dataclasses import dataclass

import numpy as np

from .exact_core import DimensionError, PreconditionError, QQ, apply, cyclic, linear, same_field
from .structures import (
    HLYAlgebra, HomLieAlgebra, Ops, ReportBuilder, alternating_residual,
)
from .representations import HLYRep


@dataclass(frozen=True, eq=False)
class NSHomLie:
    alpha: np.ndarray
    circ: np.ndarray
    vee: np.ndarray
    field: object = QQ

    def __post_init__(self):
        n = self.alpha.shape[0]
        if self.circ.shape != (n, n, n) or self.vee.shape != (n, n, n):
            raise DimensionError("NS-Hom-Lie products must have shape (%d, %d, %d)" % (n, n, n))

    @property
    def dim(self):
        return self.alpha.shape[0]


@dataclass(frozen=True, eq=False)
class NSHLY:
    alpha: np.ndarray
    circ: np.ndarray
    vee: np.ndarray
    curly: np.ndarray
    square: np.ndarray
    field: object = QQ

    def __post_init__(self):
        n = self.alpha.shape[0]
        if self.circ.shape != (n,) * 3 or self.vee.shape != (n,) * 3:
            raise DimensionError("binary NS products must have shape %s" % ((n,) * 3,))
        if self.curly.shape != (n,) * 4 or self.square.shape != (n,) * 4:
            raise DimensionError("ternary NS products must have shape %s" % ((n,) * 4,))

    @property
    def dim(self):
        return self.alpha.shape[0]


def ns_hom_lie(alpha, circ, vee, field=QQ):
    return NSHomLie(field.array(alpha), field.array(circ), field.array(vee), field)


def ns_hly(alpha, circ, vee, curly, square, field=QQ):
    return NSHLY(field.array(alpha), field.array(circ), field.array(vee),
                 field.array(curly), field.array(square), field)


def zero_ns_hly(n, field=QQ, alpha=None):
    alpha = field.eye(n) if alpha is None else field.array(alpha)
    z2, z3 = field.zeros((n,) * 3), field.zeros((n,) * 4)
    return NSHLY(alpha, z2, z2.copy(), z3, z3.copy(), field)


def _tensor(term, order):
    return np.ascontiguousarray(term.values(order))


def derived_brackets(N):
    """([x,y]*, {x,y,z}^, [[x,y,z]]) as structure tensors."""
    f = N.field
    o = _NSOps(N, derived=False)
    x, y, z = o.vars("x y z")
    star = o.circ(x, y) - o.circ(y, x) + o.vee(x, y)
    star_t = _tensor(star, ("x", "y"))
    hat = (o.curly(z, y, x) - o.curly(z, x, y) + o.circ(o.a(x), o.circ(y, z))
           - o.circ(o.a(y), o.circ(x, z)) - o.circ(apply(star_t, x, y), o.a(z)))
    hat_t = _tensor(hat, ("x", "y", "z"))
    dbl = apply(hat_t, x, y, z) + o.curly(x, y, z) - o.curly(y, x, z) + o.square(x, y, z)
    return star_t, hat_t, f.reduce(_tensor(dbl, ("x", "y", "z")))


class _NSOps(Ops):
    def __init__(self, N, derived=True):
        self.field = N.field
        self.n = N.dim
        self.alpha_m = N.alpha
        self.alpha2_m = self.field.matmul(N.alpha, N.alpha)
        self.c_t, self.v_t, self.cu_t, self.sq_t = N.circ, N.vee, N.curly, N.square
        if derived:
            self.star_t, self.hat_t, self.dbl_t = derived_brackets(N)
            self.binary, self.ternary = self.star_t, self.dbl_t

    def circ(self, x, y):
        return apply(self.c_t, x, y)

    def vee(self, x, y):
        return apply(self.v_t, x, y)

    def curly(self, x, y, z):
        return apply(self.cu_t, x, y, z)

    def square(self, x, y, z):
        return apply(self.sq_t, x, y, z)

    def star(self, x, y):
        return apply(self.star_t, x, y)

    def hat(self, x, y, z):
        return apply(self.hat_t, x, y, z)

    def dbl(self, x, y, z):
        return apply(self.dbl_t, x, y, z)


# reading choices for the NS-HLY identities
READINGS = {
    "hat_in_cyclic_curly": True,        # third identity: cyc {[x1,x2]*, a x3, a x4}^
    "hat_in_closed_binary": True,       # NScocycle3 opens with {a x1, a x2, x3 v x4}^
    "closed_ternary_curly_sign": 1,     # NScocycle4: -{[x1,x2,x3],..} + {[x1,x2,x4],..}
    "closed_ternary_hat_terms": True,   # NScocycle4: D-type terms {a2 x1, a2 x2, [x3,x4,x5]}^
}

LITERAL_READINGS = {
    "hat_in_cyclic_curly": False,
    "hat_in_closed_binary": False,
    "closed_ternary_curly_sign": -1,
    "closed_ternary_hat_terms": False,
}

NS_HLY_IDENTITIES = (
    "skew_vee",
    "skew_square",
    "ns_cyclic_binary",         # cyc [x1,x2]* v a x3 - a x1 o (x2 v x3) + [x1,x2,x3]
    "ns_cyclic_ternary",        # cyc {x2 v x3, a x1, a x4} + [[x1,x2]*, a x3, a x4]
    "ns_cyclic_curly",          # cyc {[x1,x2]*, a x3, a x4}^
    "ns_curly_bracket_first",
    "ns_hat_circ",
    "ns_curly_bracket_second",
    "ns_hat_curly",
    "ns_curly_ternary",
    "ns_closed_binary",
    "ns_closed_ternary",
)


def ns_hly_identity_terms(o, readings):
    x1, x2, x3, x4, x5 = o.vars("x1 x2 x3 x4 x5")
    a, a2 = o.a, o.a2
    ci, ve, cu, sq, st, ht, db = o.circ, o.vee, o.curly, o.square, o.star, o.hat, o.dbl
    # the curly slot where a hat may stand in
    cu_or_hat = lambda flag: ht if readings[flag] else cu
    out = []
    e1 = cyclic(lambda p, q, r: ve(st(p, q), a(r)) - ci(a(p), ve(q, r)) + sq(p, q, r),
                x1, x2, x3)
    out.append(("ns_cyclic_binary", e1, ("x1", "x2", "x3")))
    e2 = cyclic(lambda p, q, r: cu(ve(q, r), a(p), a(x4)) + sq(st(p, q), a(r), a(x4)),
                x1, x2, x3)
    out.append(("ns_cyclic_ternary", e2, ("x1", "x2", "x3", "x4")))
    c3 = cu_or_hat("hat_in_cyclic_curly")
    e3 = cyclic(lambda p, q, r: c3(st(p, q), a(r), a(x4)), x1, x2, x3)
    out.append(("ns_cyclic_curly", e3, ("x1", "x2", "x3", "x4")))
    e4 = (cu(a(x4), st(x1, x2), a(x3))
          - cu(ci(x2, x4), a(x1), a(x3)) + cu(ci(x1, x4), a(x2), a(x3)))
    out.append(("ns_curly_bracket_first", e4, ("x1", "x2", "x3", "x4")))
    e5 = ht(a(x1), a(x2), ci(x3, x4)) - ci(a2(x3), ht(x1, x2, x4)) - ci(db(x1, x2, x3), a2(x4))
    out.append(("ns_hat_circ", e5, ("x1", "x2", "x3", "x4")))
    e6 = (cu(a(x4), a(x1), st(x2, x3))
          - ci(a2(x2), cu(x4, x1, x3)) + ci(a2(x3), cu(x4, x1, x2)))
    out.append(("ns_curly_bracket_second", e6, ("x1", "x2", "x3", "x4")))
    e7 = (ht(a2(x1), a2(x2), cu(x5, x3, x4))
          - cu(ht(x1, x2, x5), a2(x3), a2(x4))
          - cu(a2(x5), db(x1, x2, x3), a2(x4))
          - cu(a2(x5), a2(x3), db(x1, x2, x4)))
    out.append(("ns_hat_curly", e7, ("x1", "x2", "x3", "x4", "x5")))
    e8 = (cu(a2(x5), a2(x1), db(x2, x3, x4))
          - cu(cu(x5, x1, x2), a2(x3), a2(x4))
          + cu(cu(x5, x1, x3), a2(x2), a2(x4))
          - ht(a2(x2), a2(x3), cu(x5, x1, x4)))
    out.append(("ns_curly_ternary", e8, ("x1", "x2", "x3", "x4", "x5")))
    c9 = cu_or_hat("hat_in_closed_binary")
    e9 = (c9(a(x1), a(x2), ve(x3, x4)) + ci(a2(x4), sq(x1, x2, x3))
          - ve(db(x1, x2, x3), a2(x4))
          + sq(a(x1), a(x2), st(x3, x4)) - ci(a2(x3), sq(x1, x2, x4))
          - ve(a2(x3), db(x1, x2, x4)))
    out.append(("ns_closed_binary", e9, ("x1", "x2", "x3", "x4")))
    s = readings["closed_ternary_curly_sign"]
    if readings["closed_ternary_hat_terms"]:
        d_terms = ht(a2(x1), a2(x2), sq(x3, x4, x5)) - ht(a2(x3), a2(x4), sq(x1, x2, x5))
    else:
        d_terms = ht(sq(x3, x4, x5), a2(x1), a2(x2)) - ht(sq(x1, x2, x5), a2(x3), a2(x4))
    e10 = (s * (cu(sq(x1, x2, x4), a2(x3), a2(x5)) - cu(sq(x1, x2, x3), a2(x4), a2(x5)))
           + d_terms
           - sq(db(x1, x2, x3), a2(x4), a2(x5)) - sq(a2(x3), db(x1, x2, x4), a2(x5))
           + sq(a2(x1), a2(x2), db(x3, x4, x5)) - sq(a2(x3), a2(x4), db(x1, x2, x5)))
    out.append(("ns_closed_ternary", e10, ("x1", "x2", "x3", "x4", "x5")))
    return out


def verify_ns_hly(N, strict=False, readings=None, cap=None):
    """Skewness of v and of [,,] in its first two slots, then the ten NS-HLY identities."""
    if readings is None:
        readings = LITERAL_READINGS if strict else READINGS
    f = N.field
    o = _NSOps(N)
    rb = ReportBuilder(f, cap)
    rb.add("skew_vee", alternating_residual(N.vee, (0, 1), f))
    rb.add("skew_square", alternating_residual(N.square, (0, 1), f))
    for name, term, order in ns_hly_identity_terms(o, readings):
        rb.term(name, term, order)
    return rb.report()


def _require(rep, what):
    if not rep.ok:
        raise PreconditionError("%s: %s" % (what, rep), rep)


def subadjacent_hly(N, check=True):
    """(A, [,]*, [[,,]], alpha) and its representation on A: rho(x) y = x o y, theta(x, y) z = {z, x, y}."""
    if check:
        _require(verify_ns_hly(N), "not an NS-HLY algebra")
    f = N.field
    star, _, dbl = derived_brackets(N)
    H = HLYAlgebra(N.alpha, star, dbl, f)
    # rho[i, a, b] = coefficient of e_a in e_i o e_b
    rho = np.ascontiguousarray(np.swapaxes(N.circ, 1, 2))
    # theta[i, j, a, b] = coefficient of e_a in {e_b, e_i, e_j}
    theta = np.ascontiguousarray(np.transpose(N.curly, (1, 2, 3, 0)))
    return H, HLYRep(N.alpha, rho, theta, f)


NS_HOM_LIE_IDENTITIES = ("skew_vee", "ns_lie_pre", "ns_lie_cyclic")


def _ns_lie_ops(N):
    f = N.field
    o = Ops(HomLieAlgebra(N.alpha, N.vee, f))
    x, y = o.vars("x y")
    br = (apply(N.circ, x, y) - apply(N.circ, y, x) + apply(N.vee, x, y)).values(("x", "y"))
    return o, f.reduce(br)


def verify_ns_hom_lie(N, strict=False, cap=None):
    """v skew,
    [x,y] o a z - a x o (y o z) + a y o (x o z) = 0 and
    cyc a x v [y,z] + a x o (y v z) = 0, with [x,y] = x o y - y o x + x v y.

    ``strict=True`` evaluates the cyclic identity with its last bracket as [x, z].
    """
    f = N.field
    o, br = _ns_lie_ops(N)
    ci = lambda p, q: apply(N.circ, p, q)
    ve = lambda p, q: apply(N.vee, p, q)
    b = lambda p, q: apply(br, p, q)
    x, y, z = o.vars("x y z")
    a = o.a
    rb = ReportBuilder(f, cap)
    rb.add("skew_vee", alternating_residual(N.vee, (0, 1), f))
    pre = ci(b(x, y), a(z)) - ci(a(x), ci(y, z)) + ci(a(y), ci(x, z))
    rb.term("ns_lie_pre", pre, ("x", "y", "z"))
    if strict:
        # a(z) v [x, z] repeats z; evaluate it on separate basis variables then restrict
        z2 = o.var("z2")
        cyc = (ve(a(x), b(y, z)) + ve(a(y), b(z, x)) + ci(a(x), ve(y, z)) + ci(a(y), ve(z, x))
               + ci(a(z), ve(x, y)))
        extra = ve(a(z2), b(x, z)).values(("x", "z2", "z"))
        vals = cyc.values(("x", "y", "z")).copy()
        n = N.dim
        for i in range(n):
            for k in range(n):
                vals[i, :, k] = f.reduce(vals[i, :, k] + extra[i, k, k][None, :])
        rb.add("ns_lie_cyclic", vals)
    else:
        cyc = cyclic(lambda p, q, r: ve(a(p), b(q, r)) + ci(a(p), ve(q, r)), x, y, z)
        rb.term("ns_lie_cyclic", cyc, ("x", "y", "z"))
    return rb.report()


def adjacent_hom_lie(N, check=True):
    """(A, x o y - y o x + x v y, alpha)."""
    if check:
        _require(verify_ns_hom_lie(N), "not an NS-Hom-Lie algebra")
    _, br = _ns_lie_ops(N)
    return HomLieAlgebra(N.alpha, np.ascontiguousarray(br), N.field)


def ns_from_twisted_op(T, ctx, check=True):
    """NS-HLY on V: u o v = rho(Tu) v, u v v = F(Tu, Tv), {u,v,w} = theta(Tv, Tw) u,
    [u,v,w] = G(Tu, Tv, Tw)."""
    from .operators import verify_twisted_op
    from .representations import ContextOps
    if check:
        _require(verify_twisted_op(T, ctx), "not a twisted O-operator")
    o = ContextOps(ctx, T)
    u, v, w = o.vvar("u"), o.vvar("v"), o.vvar("w")
    Tt = o.T
    circ = _tensor(o.rho(Tt(u), v), ("u", "v"))
    vee = _tensor(o.F(Tt(u), Tt(v)), ("u", "v"))
    curly = _tensor(o.theta(Tt(v), Tt(w), u), ("u", "v", "w"))
    square = _tensor(o.G(Tt(u), Tt(v), Tt(w)), ("u", "v", "w"))
    return NSHLY(ctx.R.beta, circ, vee, curly, square, o.field)


def ns_from_reynolds(R, lam, mu, H, check=True, literal=False):
    """NS-HLY on A from a weighted Reynolds operator:
    x o y = [Rx, y], x v y = lam [Rx, Ry], {x,y,z} = [[x, Ry, Rz]], [x,y,z] = mu [[Rx,Ry,Rz]].

    ``literal=True`` uses {x,y,z} = [[Rx, Ry, z]] instead.
    """
    from .operators import _as_hly, verify_weighted_reynolds
    H = _as_hly(H)
    f = H.field
    R = f.array(R)
    lam, mu = f.scalar(lam), f.scalar(mu)
    if check:
        _require(verify_weighted_reynolds(R, lam, mu, H), "not a weighted Reynolds operator")
    o = Ops(H)
    x, y, z = o.vars("x y z")
    P = lambda t: linear(R, t)
    circ = _tensor(o.br(P(x), y), ("x", "y"))
    vee = _tensor(lam * o.br(P(x), P(y)), ("x", "y"))
    if literal:
        curly = _tensor(o.tr(P(x), P(y), z), ("x", "y", "z"))
    else:
        curly = _tensor(o.tr(x, P(y), P(z)), ("x", "y", "z"))
    square = _tensor(mu * o.tr(P(x), P(y), P(z)), ("x", "y", "z"))
    return NSHLY(H.alpha, circ, vee, curly, square, f)


def ns_lie_from_twisted_op_hom_lie(T, L, R, F, check=True):
    """NS-Hom-Lie on V: u o v = rho(Tu) v, u v v = F(Tu, Tv)."""
    from .operators import verify_twisted_op_hom_lie
    f = same_field(L.field, R.field)
    T, F = f.array(T), f.array(F)
    if check:
        _require(verify_twisted_op_hom_lie(T, L, R, F), "not an F-twisted operator")
    m = R.carrier_dim
    u, v = (Ops(HomLieAlgebra(R.beta, f.zeros((m, m, m)), f)).var(s) for s in "uv")
    rho = np.moveaxis(R.rho, -1, -2)
    Tu, Tv = linear(T, u), linear(T, v)
    circ = _tensor(apply(rho, Tu, v), ("u", "v"))
    vee = _tensor(apply(F, Tu, Tv), ("u", "v"))
    return NSHomLie(R.beta, circ, vee, f)


def ns_hly_from_ns_lie(N, check=True):
    """NS-HLY with the same o and v, {x,y,z} = a z o (y o x), [x,y,z] = [x,y] v a z - a z o (x v y)."""
    if check:
        _require(verify_ns_hom_lie(N), "not an NS-Hom-Lie algebra")
    f = N.field
    o, br = _ns_lie_ops(N)
    x, y, z = o.vars("x y z")
    ci = lambda p, q: apply(N.circ, p, q)
    ve = lambda p, q: apply(N.vee, p, q)
    curly = _tensor(ci(o.a(z), ci(y, x)), ("x", "y", "z"))
    square = _tensor(ve(apply(br, x, y), o.a(z)) - ci(o.a(z), ve(x, y)), ("x", "y", "z"))
    return NSHLY(N.alpha, N.circ, N.vee, curly, square, f)


def compare_with_adjacent(N):
    """Whether the sub-adjacent ternary bracket of ns_hly_from_ns_lie(N) equals [[x,y],a z]
    and [[x,y],z] on the adjacent Hom-Lie algebra; both results are reported."""
    f = N.field
    M = ns_hly_from_ns_lie(N, check=False)
    _, _, dbl = derived_brackets(M)
    L = adjacent_hom_lie(N, check=False)
    o = Ops(L)
    x, y, z = o.vars("x y z")
    twisted = o.br(o.br(x, y), o.a(z)).values(("x", "y", "z"))
    plain = o.br(o.br(x, y), z).values(("x", "y", "z"))
    return {"equals_bracket_of_bracket_twisted": bool(f.equal(dbl, twisted)),
            "equals_bracket_of_bracket": bool(f.equal(dbl, plain))}
