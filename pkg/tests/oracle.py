"""
Brute-force evaluators used as test oracles.

Everything here works on nested Python lists with plain loops over basis
indices; nothing is shared with the batched Term evaluator of the package.
Vectors are lists, a k-ary bracket is a nested list t[i1]..[ik] -> vector.
"""

from fractions import Fraction
from itertools import product


class Num:
    def __init__(self, p=None):
        self.p = p

    def n(self, x):
        if self.p is None:
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        return int(x) % self.p

    def zero(self, dim):
        return [0] * dim

    def add(self, *vs):
        out = [0] * len(vs[0])
        for v in vs:
            for i, c in enumerate(v):
                out[i] += c
        return [self.n(c) for c in out]

    def sub(self, a, b):
        return self.add(a, [-c for c in b])

    def scale(self, s, v):
        return [self.n(s * c) for c in v]

    def is_zero(self, v):
        return all(self.n(c) == 0 for c in v)


def lists(a):
    return a.tolist() if hasattr(a, "tolist") else a


def basis(dim):
    return [[1 if i == j else 0 for i in range(dim)] for j in range(dim)]


def mat(num, m, v):
    m = lists(m)
    return [num.n(sum(m[r][c] * v[c] for c in range(len(v)))) for r in range(len(m))]


def mult(num, t, *vs):
    """Multilinear map given by nested list ``t`` on the vectors ``vs``."""
    out = None
    supports = [[i for i, c in enumerate(v) if num.n(c) != 0] for v in vs]
    for idx in product(*supports):
        coef = 1
        for v, i in zip(vs, idx):
            coef *= v[i]
        entry = t
        for i in idx:
            entry = entry[i]
        term = [coef * c for c in entry]
        out = term if out is None else [a + b for a, b in zip(out, term)]
    if out is None:
        # out dimension from the tensor's last axis
        entry = t
        while isinstance(entry[0], list):
            entry = entry[0]
        return [0] * len(entry)
    return [num.n(c) for c in out]


def family_apply(num, fam, *args):
    """Family of matrices fam[i1]..[ik] (ab) applied: sum_x coef * M(x...) u."""
    *xs, u = args
    supports = [[i for i, c in enumerate(x) if num.n(c) != 0] for x in xs]
    dim_out = len(_first_matrix(fam))
    out = [0] * dim_out
    for idx in product(*supports):
        coef = 1
        for x, i in zip(xs, idx):
            coef *= x[i]
        m = fam
        for i in idx:
            m = m[i]
        w = mat(num, m, u)
        out = [a + coef * b for a, b in zip(out, w)]
    return [num.n(c) for c in out]


def _first_matrix(fam):
    m = fam
    while isinstance(m[0][0], list):
        m = m[0]
    return m


def count_failures(num, dims, fn):
    return sum(0 if num.is_zero(fn(*vs)) else 1 for vs in product(*[basis(d) for d in dims]))


def count_alternating(num, dim, rest, fn):
    """Failures of alternation in the first two slots, counted on i <= j.

    On i < j the residual is fn(e_i, e_j, ..) + fn(e_j, e_i, ..); on the
    diagonal it is fn(e_i, e_i, ..).
    """
    es = basis(dim)
    bad = 0
    for i in range(dim):
        for j in range(i, dim):
            for vs in product(*[basis(d) for d in rest]):
                v = fn(es[i], es[j], *vs)
                if i != j:
                    v = num.add(v, fn(es[j], es[i], *vs))
                bad += not num.is_zero(v)
    return bad


# algebras

def hom_lie_counts(num, alpha, br):
    alpha, br = lists(alpha), lists(br)
    n = len(alpha)
    B = lambda x, y: mult(num, br, x, y)
    a = lambda x: mat(num, alpha, x)
    return {
        "skew": count_alternating(num, n, [], B),
        "hom_jacobi": count_failures(num, [n] * 3, lambda x, y, z: num.add(
            B(a(x), B(y, z)), B(a(y), B(z, x)), B(a(z), B(x, y)))),
    }


def hly_counts(num, alpha, b, t):
    alpha, b, t = lists(alpha), lists(b), lists(t)
    n = len(alpha)
    B = lambda x, y: mult(num, b, x, y)
    T = lambda x, y, z: mult(num, t, x, y, z)
    a = lambda x: mat(num, alpha, x)
    a2 = lambda x: a(a(x))
    cyc = lambda f, x, y, z: num.add(f(x, y, z), f(y, z, x), f(z, x, y))
    return {
        "skew_binary": count_alternating(num, n, [], B),
        "skew_ternary": count_alternating(num, n, [n], T),
        "cyclic_mixed": count_failures(num, [n] * 3, lambda x, y, z: num.add(
            cyc(lambda p, q, r: B(B(p, q), a(r)), x, y, z), cyc(T, x, y, z))),
        "cyclic_ternary": count_failures(num, [n] * 4, lambda x, y, z, w: cyc(
            lambda p, q, r: T(B(p, q), a(r), a(w)), x, y, z)),
        "ternary_derives_binary": count_failures(num, [n] * 4, lambda x, y, z, w: num.sub(
            T(a(x), a(y), B(z, w)), num.add(B(T(x, y, z), a2(w)), B(a2(z), T(x, y, w))))),
        "ternary_derives_ternary": count_failures(num, [n] * 5, lambda x, y, z, w, s: num.sub(
            T(a2(x), a2(y), T(z, w, s)),
            num.add(T(T(x, y, z), a2(w), a2(s)), T(a2(z), T(x, y, w), a2(s)),
                    T(a2(z), a2(w), T(x, y, s))))),
    }


def induced_ternary(num, alpha, br):
    """[[x,y,z]] = [[x,y], alpha z] as a nested list."""
    n = len(lists(alpha))
    es = basis(n)
    return [[[mult(num, lists(br), mult(num, lists(br), es[i], es[j]), mat(num, alpha, es[k]))
              for k in range(n)] for j in range(n)] for i in range(n)]


# representations, with D derived from rho, theta, beta

class RepView:
    def __init__(self, num, alpha, b, t, beta, rho, theta):
        self.num = num
        self.alpha, self.b, self.t = lists(alpha), lists(b), lists(t)
        self.beta, self.rho_f, self.theta_f = lists(beta), lists(rho), lists(theta)
        self.n, self.m = len(self.alpha), len(self.beta)

    def a(self, x):
        return mat(self.num, self.alpha, x)

    def bb(self, u):
        return mat(self.num, self.beta, u)

    def B(self, x, y):
        return mult(self.num, self.b, x, y)

    def T(self, x, y, z):
        return mult(self.num, self.t, x, y, z)

    def rho(self, x, u):
        return family_apply(self.num, self.rho_f, x, u)

    def theta(self, x, y, u):
        return family_apply(self.num, self.theta_f, x, y, u)

    def D(self, x, y, u):
        num = self.num
        return num.add(self.theta(y, x, u), num.scale(-1, self.theta(x, y, u)),
                       self.rho(self.a(x), self.rho(y, u)),
                       num.scale(-1, self.rho(self.a(y), self.rho(x, u))),
                       num.scale(-1, self.rho(self.B(x, y), self.bb(u))))


def rep_counts(num, alpha, b, t, beta, rho, theta):
    r = RepView(num, alpha, b, t, beta, rho, theta)
    n, m = r.n, r.m
    a, a2 = r.a, lambda x: r.a(r.a(x))
    bb, b2 = r.bb, lambda u: r.bb(r.bb(u))
    neg = lambda v: num.scale(-1, v)
    cyc = lambda f, x, y, z: num.add(f(x, y, z), f(y, z, x), f(z, x, y))
    return {
        "rho_twist": count_failures(num, [n, m], lambda x, u: num.sub(
            r.rho(a(x), bb(u)), bb(r.rho(x, u)))),
        "theta_twist": count_failures(num, [n, n, m], lambda x, y, u: num.sub(
            r.theta(a(x), a(y), bb(u)), bb(r.theta(x, y, u)))),
        "d_cyclic": count_failures(num, [n, n, n, m], lambda x, y, z, u: cyc(
            lambda p, q, s: r.D(r.B(p, q), a(s), bb(u)), x, y, z)),
        "theta_bracket_first": count_failures(num, [n, n, n, m], lambda x1, x2, y, u: num.add(
            r.theta(r.B(x1, x2), a(y), bb(u)), neg(r.theta(a(x1), a(y), r.rho(x2, u))),
            r.theta(a(x2), a(y), r.rho(x1, u)))),
        "d_rho": count_failures(num, [n, n, n, m], lambda x1, x2, y, u: num.add(
            r.D(a(x1), a(x2), r.rho(y, u)), neg(r.rho(a2(y), r.D(x1, x2, u))),
            neg(r.rho(r.T(x1, x2, y), b2(u))))),
        "theta_bracket_second": count_failures(num, [n, n, n, m], lambda x, y1, y2, u: num.add(
            r.theta(a(x), r.B(y1, y2), bb(u)), neg(r.rho(a2(y1), r.theta(x, y2, u))),
            r.rho(a2(y2), r.theta(x, y1, u)))),
        "d_theta": count_failures(num, [n, n, n, n, m], lambda x1, x2, y1, y2, u: num.add(
            r.D(a2(x1), a2(x2), r.theta(y1, y2, u)), neg(r.theta(a2(y1), a2(y2), r.D(x1, x2, u))),
            neg(r.theta(r.T(x1, x2, y1), a2(y2), b2(u))),
            neg(r.theta(a2(y1), r.T(x1, x2, y2), b2(u))))),
        "theta_ternary": count_failures(num, [n, n, n, n, m], lambda x, y1, y2, y3, u: num.add(
            r.theta(a2(x), r.T(y1, y2, y3), b2(u)), neg(r.theta(a2(y2), a2(y3), r.theta(x, y1, u))),
            r.theta(a2(y1), a2(y3), r.theta(x, y2, u)), neg(r.D(a2(y1), a2(y2), r.theta(x, y3, u))))),
    }


# twisted operators

class ContextView(RepView):
    def __init__(self, num, ctx):
        H, R = ctx.H, ctx.R
        super().__init__(num, H.alpha, H.binary, H.ternary, R.beta, R.rho, R.theta)
        self.F_t, self.G_t = lists(ctx.F), lists(ctx.G)

    def F(self, x, y):
        return mult(self.num, self.F_t, x, y)

    def G(self, x, y, z):
        return mult(self.num, self.G_t, x, y, z)


def twisted_op_ok(num, ctx, T):
    c = ContextView(num, ctx)
    Tm = lists(T)
    Tv = lambda u: mat(num, Tm, u)
    m = c.m
    for u in basis(m):
        if not num.is_zero(num.sub(Tv(c.bb(u)), c.a(Tv(u)))):
            return False
    for u, v in product(basis(m), repeat=2):
        lhs = c.B(Tv(u), Tv(v))
        rhs = Tv(num.add(c.rho(Tv(u), v), num.scale(-1, c.rho(Tv(v), u)), c.F(Tv(u), Tv(v))))
        if not num.is_zero(num.sub(lhs, rhs)):
            return False
    for u, v, w in product(basis(m), repeat=3):
        lhs = c.T(Tv(u), Tv(v), Tv(w))
        rhs = Tv(num.add(c.D(Tv(u), Tv(v), w), c.theta(Tv(v), Tv(w), u),
                         num.scale(-1, c.theta(Tv(u), Tv(w), v)), c.G(Tv(u), Tv(v), Tv(w))))
        if not num.is_zero(num.sub(lhs, rhs)):
            return False
    return True


def v_structure(num, ctx, T):
    c = ContextView(num, ctx)
    Tm = lists(T)
    Tv = lambda u: mat(num, Tm, u)
    es = basis(c.m)
    b = [[num.add(c.rho(Tv(u), v), num.scale(-1, c.rho(Tv(v), u)), c.F(Tv(u), Tv(v)))
          for v in es] for u in es]
    t = [[[num.add(c.D(Tv(u), Tv(v), w), c.theta(Tv(v), Tv(w), u),
                   num.scale(-1, c.theta(Tv(u), Tv(w), v)), c.G(Tv(u), Tv(v), Tv(w)))
           for w in es] for v in es] for u in es]
    return b, t


def ns_from_top(num, ctx, T):
    c = ContextView(num, ctx)
    Tm = lists(T)
    Tv = lambda u: mat(num, Tm, u)
    es = basis(c.m)
    circ = [[c.rho(Tv(u), v) for v in es] for u in es]
    vee = [[c.F(Tv(u), Tv(v)) for v in es] for u in es]
    curly = [[[c.theta(Tv(v), Tv(w), u) for w in es] for v in es] for u in es]
    square = [[[c.G(Tv(u), Tv(v), Tv(w)) for w in es] for v in es] for u in es]
    return circ, vee, curly, square


def delta0(num, alpha, b, t, beta, rho, theta, f):
    """Level-0 coboundary of the 1-cochain f (a matrix V <- A with f[a][x] ... as rows=out)."""
    r = RepView(num, alpha, b, t, beta, rho, theta)
    fm = lists(f)
    fv = lambda x: mat(num, fm, x)
    n = r.n
    bad = 0
    for x, y in product(basis(n), repeat=2):
        v = num.add(r.rho(x, fv(y)), num.scale(-1, r.rho(y, fv(x))), num.scale(-1, fv(r.B(x, y))))
        bad += not num.is_zero(v)
    for x, y, z in product(basis(n), repeat=3):
        v = num.add(r.D(x, y, fv(z)), r.theta(y, z, fv(x)), num.scale(-1, r.theta(x, z, fv(y))),
                    num.scale(-1, fv(r.T(x, y, z))))
        bad += not num.is_zero(v)
    return bad == 0


def deformation_order1_ok(num, ctx, T, T1):
    """The t^1 coefficient of the deformation equations, expanded by hand."""
    c = ContextView(num, ctx)
    A0, A1 = lists(T), lists(T1)
    P0 = lambda u: mat(num, A0, u)
    P1 = lambda u: mat(num, A1, u)
    neg = lambda v: num.scale(-1, v)
    m = c.m
    for u in basis(m):
        if not num.is_zero(num.sub(P1(c.bb(u)), c.a(P1(u)))):
            return False
    for u, v in product(basis(m), repeat=2):
        lhs = num.add(c.B(P1(u), P0(v)), c.B(P0(u), P1(v)))
        rhs = num.add(P1(num.sub(c.rho(P0(u), v), c.rho(P0(v), u))),
                      P0(num.sub(c.rho(P1(u), v), c.rho(P1(v), u))),
                      P1(c.F(P0(u), P0(v))), P0(c.F(P1(u), P0(v))), P0(c.F(P0(u), P1(v))))
        if not num.is_zero(num.sub(lhs, rhs)):
            return False
    for u, v, w in product(basis(m), repeat=3):
        lhs = num.add(c.T(P1(u), P0(v), P0(w)), c.T(P0(u), P1(v), P0(w)), c.T(P0(u), P0(v), P1(w)))
        inner0 = lambda X, Y, Z: num.add(c.D(X(u), Y(v), w), c.theta(Y(v), Z(w), u),
                                         neg(c.theta(X(u), Z(w), v)))
        rhs = num.add(P1(inner0(P0, P0, P0)),
                      P0(num.add(c.D(P1(u), P0(v), w), c.theta(P1(v), P0(w), u),
                                 neg(c.theta(P1(u), P0(w), v)))),
                      P0(num.add(c.D(P0(u), P1(v), w), c.theta(P0(v), P1(w), u),
                                 neg(c.theta(P0(u), P1(w), v)))),
                      P1(c.G(P0(u), P0(v), P0(w))), P0(c.G(P1(u), P0(v), P0(w))),
                      P0(c.G(P0(u), P1(v), P0(w))), P0(c.G(P0(u), P0(v), P1(w))))
        if not num.is_zero(num.sub(lhs, rhs)):
            return False
    return True
