"""
Representations of Hom-Lie and HLY algebras and the products they define.

An action ``rho`` is stored as an A-indexed family of carrier matrices,
``rho[i]`` being the matrix of rho(e_i); ``theta[i, j]`` is the matrix of
theta(e_i, e_j).  The map D is always derived from (rho, theta, beta) by

    D(x, y) = theta(y, x) - theta(x, y) + rho(ax) rho(y) - rho(ay) rho(x)
              - rho([x, y]) beta.

Reading choices
---------------
Two rep axioms are evaluated in a form that agrees with the semidirect
product (the HLY algebra A + V must satisfy its axioms exactly when the
rep does).  ``strict=True`` switches to the alternative form:

* ``d_cyclic``: cyc D([x1, x2], a x3) beta = 0 (strict: without beta).
* ``d_rho``: D(a x1, a x2) rho(y) = rho(a^2 y) D(x1, x2) + rho([[x1, x2, y]]) beta^2
  (strict: ``beta`` in place of ``beta^2``).

Both agree with the alternative whenever beta is invertible, resp. beta = beta^2.
"""

from dataclasses import dataclass

import numpy as np

from .exact_core import (
    QQ, PRODUCT_DIM_CAP, DimensionError, PreconditionError, apply, cyclic,
    linear, matrices_to_bilinear, same_field, var,
)
from .structures import (
    HLYAlgebra, HomLieAlgebra, Ops, ReportBuilder, as_hly, is_hly_morphism,
    verify_hly,
)


@dataclass(frozen=True)
class HomLieRep:
    beta: np.ndarray
    rho: np.ndarray
    field: object = QQ

    @property
    def carrier_dim(self):
        return self.beta.shape[0]


@dataclass(frozen=True)
class HLYRep:
    beta: np.ndarray
    rho: np.ndarray
    theta: np.ndarray
    field: object = QQ

    def __post_init__(self):
        m = self.beta.shape[0]
        n = self.rho.shape[0]
        if (self.beta.shape != (m, m) or self.rho.shape != (n, m, m)
                or self.theta.shape != (n, n, m, m)):
            raise DimensionError("representation data of inconsistent shapes")

    @property
    def carrier_dim(self):
        return self.beta.shape[0]


@dataclass(frozen=True)
class RepMorphism:
    phi: np.ndarray
    psi: np.ndarray


def hom_lie_rep(beta, rho, field=QQ):
    return HomLieRep(field.array(beta), field.array(rho), field)


def hly_rep(beta, rho, theta, field=QQ):
    return HLYRep(field.array(beta), field.array(rho), field.array(theta), field)


def zero_rep(H, carrier_dim, beta=None):
    f = H.field
    n = H.dim
    beta = f.eye(carrier_dim) if beta is None else f.array(beta)
    return HLYRep(beta, f.zeros((n, carrier_dim, carrier_dim)),
                  f.zeros((n, n, carrier_dim, carrier_dim)), f)


def _check_dims(H, R):
    same_field(H.field, R.field)
    if R.rho.shape[0] != H.dim:
        raise DimensionError("action indexed by dim %d, algebra has dim %d"
                             % (R.rho.shape[0], H.dim))


def _family_from_term(term, order):
    """Term in variables (x.., u) -> family of matrices indexed by x.., acting on u."""
    vals = term.values(order)
    return np.swapaxes(vals, -1, -2)


def d_map(R, alpha, binary):
    """D(e_i, e_j) as a family of carrier matrices, shape (n, n, m, m)."""
    f = R.field
    n = alpha.shape[0]
    m = R.carrier_dim
    x, y = var("x", n, f), var("y", n, f)
    u = var("u", m, f)
    rho = matrices_to_bilinear(R.rho)
    theta = matrices_to_bilinear(R.theta)
    r = lambda a, v: apply(rho, a, v)
    t = (apply(theta, y, x, u) - apply(theta, x, y, u)
         + r(linear(alpha, x), r(y, u)) - r(linear(alpha, y), r(x, u))
         - r(apply(binary, x, y), linear(R.beta, u)))
    return _family_from_term(t, ("x", "y", "u"))


class RepOps(Ops):
    """Ops of an algebra plus the action maps of one of its representations."""

    def __init__(self, H, R):
        super().__init__(H)
        _check_dims(H, R)
        self.m = R.carrier_dim
        self.beta_m = R.beta
        self.beta2_m = self.field.matmul(R.beta, R.beta)
        self.rho_t = matrices_to_bilinear(R.rho)
        self.theta_t = matrices_to_bilinear(R.theta)
        binary = H.bracket if isinstance(H, HomLieAlgebra) else H.binary
        self.d_family = d_map(R, H.alpha, binary)
        self.d_t = matrices_to_bilinear(self.d_family)

    def vvar(self, name):
        return var(name, self.m, self.field)

    def b(self, t):
        return linear(self.beta_m, t)

    def b2(self, t):
        return linear(self.beta2_m, t)

    def rho(self, x, u):
        return apply(self.rho_t, x, u)

    def theta(self, x, y, u):
        return apply(self.theta_t, x, y, u)

    def D(self, x, y, u):
        return apply(self.d_t, x, y, u)


# names of the representation axioms, in evaluation order
REP_AXIOMS = (
    "rho_twist",            # rho(a x) beta = beta rho(x)
    "theta_twist",          # theta(a x, a y) beta = beta theta(x, y)
    "d_cyclic",
    "theta_bracket_first",  # theta([x1,x2], a y) beta = theta(a x1, a y) rho(x2) - ...
    "d_rho",
    "theta_bracket_second", # theta(a x, [y1,y2]) beta = rho(a^2 y1) theta(x, y2) - ...
    "d_theta",
    "theta_ternary",
)


def rep_axiom_terms(o, strict=False):
    x1, x2, x3, y1, y2, y3 = o.vars("x1 x2 x3 y1 y2 y3")
    u = o.vvar("u")
    a, a2, b, b2 = o.a, o.a2, o.b, o.b2
    br, tr, rho, th, D = o.br, o.tr, o.rho, o.theta, o.D
    out = []
    out.append(("rho_twist", rho(a(x1), b(u)) - b(rho(x1, u)), ("x1", "u")))
    out.append(("theta_twist", th(a(x1), a(x2), b(u)) - b(th(x1, x2, u)),
                ("x1", "x2", "u")))
    last = (lambda v: v) if strict else b
    out.append(("d_cyclic",
                cyclic(lambda p, q, r: D(br(p, q), a(r), last(u)), x1, x2, x3),
                ("x1", "x2", "x3", "u")))
    out.append(("theta_bracket_first",
                th(br(x1, x2), a(y1), b(u))
                - th(a(x1), a(y1), rho(x2, u)) + th(a(x2), a(y1), rho(x1, u)),
                ("x1", "x2", "y1", "u")))
    twist = b if strict else b2
    out.append(("d_rho",
                D(a(x1), a(x2), rho(y2, u)) - rho(a2(y2), D(x1, x2, u))
                - rho(tr(x1, x2, y2), twist(u)),
                ("x1", "x2", "y2", "u")))
    out.append(("theta_bracket_second",
                th(a(x1), br(y1, y2), b(u))
                - rho(a2(y1), th(x1, y2, u)) + rho(a2(y2), th(x1, y1, u)),
                ("x1", "y1", "y2", "u")))
    out.append(("d_theta",
                D(a2(x1), a2(x2), th(y1, y2, u)) - th(a2(y1), a2(y2), D(x1, x2, u))
                - th(tr(x1, x2, y1), a2(y2), b2(u)) - th(a2(y1), tr(x1, x2, y2), b2(u)),
                ("x1", "x2", "y1", "y2", "u")))
    out.append(("theta_ternary",
                th(a2(x1), tr(y1, y2, y3), b2(u))
                - th(a2(y2), a2(y3), th(x1, y1, u)) + th(a2(y1), a2(y3), th(x1, y2, u))
                - D(a2(y1), a2(y2), th(x1, y3, u)),
                ("x1", "y1", "y2", "y3", "u")))
    return out


def verify_hly_rep(H, R, strict=False, cap=None):
    """All representation axioms on basis tuples; one entry per axiom in ``counts``."""
    o = RepOps(H, R)
    rb = ReportBuilder(H.field, cap)
    for name, term, order in rep_axiom_terms(o, strict):
        rb.term(name, term, order)
    return rb.report()


def verify_hom_lie_rep(L, R, cap=None):
    """rho(a x) beta = beta rho(x) and rho([x, y]) beta = rho(a x) rho(y) - rho(a y) rho(x)."""
    H = as_hly(L) if isinstance(L, HomLieAlgebra) else L
    R2 = HLYRep(R.beta, R.rho, H.field.zeros((H.dim, H.dim) + R.beta.shape), R.field)
    o = RepOps(H, R2)
    rb = ReportBuilder(H.field, cap)
    x, y = o.vars("x y")
    u = o.vvar("u")
    rb.term("rho_twist", o.rho(o.a(x), o.b(u)) - o.b(o.rho(x, u)), ("x", "u"))
    rb.term("rho_bracket",
            o.rho(o.br(x, y), o.b(u)) - o.rho(o.a(x), o.rho(y, u)) + o.rho(o.a(y), o.rho(x, u)),
            ("x", "y", "u"))
    return rb.report()


def adjoint_rep(H, check=True):
    """rho(x) = [x, .], theta(x, y) z = [[z, x, y]], beta = alpha."""
    if check:
        rep = verify_hly(H)
        if not rep.ok:
            raise PreconditionError("not an HLY algebra: %s" % rep, rep)
    rho = np.swapaxes(H.binary, 1, 2)                       # rho[i][a, b] = [e_i, e_b]_a
    theta = np.transpose(H.ternary, (1, 2, 3, 0))           # theta[i, j][a, b] = [[e_b, e_i, e_j]]_a
    return HLYRep(H.alpha, np.ascontiguousarray(rho), np.ascontiguousarray(theta), H.field)


def adjoint_hom_lie_rep(L):
    return HomLieRep(L.alpha, np.ascontiguousarray(np.swapaxes(L.bracket, 1, 2)), L.field)


def theta_from_rho(R, alpha, check=None):
    """theta(x, y) = rho(a y) rho(x), returned as an HLYRep together with rho and beta.

    ``check`` may be a Hom-Lie algebra against which the rep is verified first.
    """
    f = R.field
    if check is not None:
        rep = verify_hom_lie_rep(check, R)
        if not rep.ok:
            raise PreconditionError("not a Hom-Lie representation: %s" % rep, rep)
    rho_a = f.reduce(np.tensordot(alpha, R.rho, axes=([0], [0])))   # rho(a e_j)
    n = alpha.shape[0]
    m = R.carrier_dim
    theta = f.zeros((n, n, m, m))
    for i in range(n):
        for j in range(n):
            theta[i, j] = f.matmul(rho_a[j], R.rho[i])
    return HLYRep(R.beta, R.rho, theta, f)


def _product_tensors(H, R, F=None, G=None):
    f = H.field
    n, m = H.dim, R.carrier_dim
    N = n + m
    A, V = slice(0, n), slice(n, N)
    alpha = f.zeros((N, N))
    alpha[A, A] = H.alpha
    alpha[V, V] = R.beta
    binary = f.zeros((N, N, N))
    binary[A, A, A] = H.binary
    rho = R.rho                                     # rho[i, a, b]
    binary[A, V, V] = np.swapaxes(rho, 1, 2)        # [e_i, u_b] = rho(e_i) u_b
    binary[V, A, V] = -np.transpose(rho, (2, 0, 1))  # [u_b, e_j] = -rho(e_j) u_b
    ternary = f.zeros((N, N, N, N))
    ternary[A, A, A, A] = H.ternary
    D = d_map(R, H.alpha, H.binary)
    th = R.theta
    ternary[A, A, V, V] = np.swapaxes(D, 2, 3)                  # D(x, y) w
    ternary[A, V, A, V] = -np.transpose(th, (0, 3, 1, 2))       # -theta(x, z) v
    ternary[V, A, A, V] = np.transpose(th, (3, 0, 1, 2))        # theta(y, z) u
    if F is not None:
        binary[A, A, V] = binary[A, A, V] + F
    if G is not None:
        ternary[A, A, A, V] = ternary[A, A, A, V] + G
    return HLYAlgebra(f.reduce(alpha), f.reduce(binary), f.reduce(ternary), f)


def _cap(H, R, cap):
    cap = PRODUCT_DIM_CAP if cap is None else cap
    if H.dim + R.carrier_dim > cap:
        raise DimensionError("product of total dim %d exceeds the cap %d"
                             % (H.dim + R.carrier_dim, cap))


def semidirect(H, R, check=True, strict=False, cap=None):
    """A + V with [x+u, y+v] = [x,y] + rho(x)v - rho(y)u and
    [[x+u, y+v, z+w]] = [[x,y,z]] + D(x,y)w - theta(x,z)v + theta(y,z)u.

    With ``check=False`` the product is built even from an invalid rep, which
    is how the converse of the characterisation is exercised.
    """
    _check_dims(H, R)
    _cap(H, R, cap)
    if check:
        rep = verify_hly(H)
        if not rep.ok:
            raise PreconditionError("not an HLY algebra: %s" % rep, rep)
        rep = verify_hly_rep(H, R, strict=strict)
        if not rep.ok:
            raise PreconditionError("not a representation: %s" % rep, rep)
    return _product_tensors(H, R)


def twisted_semidirect(H, R, F, G, check=True, strict=False, cap=None):
    """Semidirect product with F(x, y) added to the binary and G(x, y, z) to the ternary bracket."""
    _check_dims(H, R)
    _cap(H, R, cap)
    F = H.field.array(F)
    G = H.field.array(G)
    if check:
        from .cohomology import cocycle_pair, failed_conditions, verify_23cocycle
        rep = verify_23cocycle(cocycle_pair(F, G, H, R), H, R, strict=strict)
        if not rep.ok:
            raise PreconditionError("(F, G) violates cocycle condition(s) %s: %s"
                                    % (failed_conditions(rep), rep), rep)
    return _product_tensors(H, R, F, G)


def verify_rep_morphism(m, H1, R1, H2, R2, strict=False, cap=None):
    """(phi, psi): phi an HLY morphism, psi beta = beta' psi, psi rho(x) = rho'(phi x) psi,
    psi theta(x, y) = theta'(phi x, phi y) psi.

    ``strict=True`` evaluates the twist condition as phi beta = beta' psi, which
    only makes sense when all four spaces share one dimension.
    """
    f = same_field(H1.field, H2.field, R1.field, R2.field)
    phi = f.array(m.phi)
    psi = f.array(m.psi)
    if psi.shape != (R2.carrier_dim, R1.carrier_dim):
        raise DimensionError("psi of shape %s between carriers %d and %d"
                             % (psi.shape, R1.carrier_dim, R2.carrier_dim))
    rb = ReportBuilder(f, cap)
    rb.merge(is_hly_morphism(phi, H1, H2, cap))
    if strict:
        if phi.shape[1] != R1.beta.shape[0] or R2.beta.shape[1] != psi.shape[0] \
                or phi.shape[0] != R2.beta.shape[0]:
            raise DimensionError("phi beta = beta' psi is ill-typed for these dimensions")
        res = f.reduce(phi @ R1.beta - R2.beta @ psi)
    else:
        res = f.reduce(psi @ R1.beta - R2.beta @ psi)
    rb.add("rep_morphism_twist", res.T)
    o1, o2 = RepOps(H1, R1), RepOps(H2, R2)
    x, y = o1.vars("x y")
    u = o1.vvar("u")
    P = lambda t: linear(phi, t)
    S = lambda t: linear(psi, t)
    rb.term("rep_morphism_rho", S(o1.rho(x, u)) - o2.rho(P(x), S(u)), ("x", "u"))
    rb.term("rep_morphism_theta", S(o1.theta(x, y, u)) - o2.theta(P(x), P(y), S(u)),
            ("x", "y", "u"))
    return rb.report()


@dataclass(frozen=True, eq=False)
class TwistedContext:
    """An HLY algebra, a representation and a pair (F, G) of carrier-valued forms.

    ``validated`` records that the algebra, the representation and the pair
    were checked when the context was built.
    """

    H: HLYAlgebra
    R: HLYRep
    F: np.ndarray
    G: np.ndarray
    validated: bool = False

    @property
    def field(self):
        return self.H.field


def validate_context(ctx, strict=False):
    """Raise PreconditionError naming the first invalid component."""
    rep = verify_hly(ctx.H)
    if not rep.ok:
        raise PreconditionError("context algebra is not an HLY algebra: %s" % rep, rep)
    rep = verify_hly_rep(ctx.H, ctx.R, strict=strict)
    if not rep.ok:
        raise PreconditionError("context representation is invalid: %s" % rep, rep)
    from .cohomology import cocycle_pair, failed_conditions, verify_23cocycle
    rep = verify_23cocycle(cocycle_pair(ctx.F, ctx.G, ctx.H, ctx.R), ctx.H, ctx.R, strict=strict)
    if not rep.ok:
        raise PreconditionError("context pair (F, G) violates cocycle condition(s) %s: %s"
                                % (failed_conditions(rep), rep), rep)


def context(H, R, F=None, G=None, check=True):
    """Bundle (H, R, F, G); missing forms are zero.  ``check`` validates all three parts."""
    f = same_field(H.field, R.field)
    n, m = H.dim, R.carrier_dim
    if R.rho.shape[0] != n:
        raise DimensionError("representation indexed by dim %d, algebra has dim %d"
                             % (R.rho.shape[0], n))
    F = f.zeros((n, n, m)) if F is None else f.array(F)
    G = f.zeros((n, n, n, m)) if G is None else f.array(G)
    if F.shape != (n, n, m) or G.shape != (n, n, n, m):
        raise DimensionError("F, G of shapes %s, %s do not match dims (%d, %d)"
                             % (F.shape, G.shape, n, m))
    ctx = TwistedContext(H, R, F, G)
    if check:
        validate_context(ctx)
        ctx = TwistedContext(H, R, F, G, True)
    return ctx


class ContextOps(RepOps):
    """RepOps plus F, G and a linear map T: V -> A."""

    def __init__(self, ctx, T):
        super().__init__(ctx.H, ctx.R)
        self.F_t = ctx.F
        self.G_t = ctx.G
        self.T_m = self.field.array(T)
        if self.T_m.shape != (self.n, self.m):
            raise DimensionError("T must be a %dx%d matrix, got %s"
                                 % (self.n, self.m, self.T_m.shape))

    def F(self, x, y):
        return apply(self.F_t, x, y)

    def G(self, x, y, z):
        return apply(self.G_t, x, y, z)

    def T(self, u):
        return linear(self.T_m, u)


def induced_rep_from_top(T, ctx, check=True):
    """Representation (A, rho_T, theta_T, alpha) of the V-structure of T.

    rho_T(u) x = [Tu, x] + T(rho(x) u + F(x, Tu))
    theta_T(u, v) x = [[x, Tu, Tv]] - T(D(x, Tu) v - theta(x, Tv) u + G(x, Tu, Tv))
    """
    if check:
        from .operators import verify_twisted_op
        rep = verify_twisted_op(T, ctx)
        if not rep.ok:
            raise PreconditionError("not a twisted O-operator: %s" % rep, rep)
    o = ContextOps(ctx, T)
    u, v = o.vvar("u"), o.vvar("v")
    x = o.var("x")
    Tu, Tv = o.T(u), o.T(v)
    rho_t = o.br(Tu, x) + o.T(o.rho(x, u) + o.F(x, Tu))
    theta_t = o.tr(x, Tu, Tv) - o.T(o.D(x, Tu, v) - o.theta(x, Tv, u) + o.G(x, Tu, Tv))
    rho = _family_from_term(rho_t, ("u", "x"))
    theta = _family_from_term(theta_t, ("u", "v", "x"))
    return HLYRep(ctx.H.alpha, np.ascontiguousarray(rho), np.ascontiguousarray(theta), o.field)
