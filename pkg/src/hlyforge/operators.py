"""
Rota-Baxter, weighted Reynolds and twisted O-operators.

A twisted O-operator is a map T: V -> A with T beta = alpha T and

    [Tu, Tv]         = T(rho(Tu) v - rho(Tv) u + F(Tu, Tv))
    [[Tu, Tv, Tw]]   = T(D(Tu, Tv) w + theta(Tv, Tw) u - theta(Tu, Tw) v + G(Tu, Tv, Tw))

relative to a context (H, R, F, G) built by ``representations.context``.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .exact_core import (
    SEARCH_BUDGET, DimensionError, PreconditionError, apply, kernel_basis, linear,
    same_field, var,
)
from .representations import (
    ContextOps, TwistedContext, adjoint_rep, context,
    theta_from_rho, twisted_semidirect, validate_context,
)
from .structures import (
    HLYAlgebra, HomLieAlgebra, Ops, ReportBuilder, as_hly, induced_hly_from_hom_lie,
)


def _as_hly(H):
    return as_hly(H) if isinstance(H, HomLieAlgebra) else H


def _twist_residual(field, left, right):
    # column j is the failure at e_j
    return field.reduce(left - right).T


# weighted Reynolds operators

@dataclass(frozen=True)
class WeightedReynolds:
    R: np.ndarray
    lam: object = 0
    mu: object = 0


def verify_weighted_reynolds(R, lam, mu, H, cap=None):
    """R alpha = alpha R, [Rx,Ry] = R([Rx,y] + [x,Ry] + lam [Rx,Ry]) and the ternary analogue."""
    H = _as_hly(H)
    f = H.field
    R = f.array(R)
    if R.shape != (H.dim, H.dim):
        raise DimensionError("operator of shape %s on an algebra of dim %d" % (R.shape, H.dim))
    lam, mu = f.scalar(lam), f.scalar(mu)
    o = Ops(H)
    rb = ReportBuilder(f, cap)
    rb.add("commutes_twist", _twist_residual(f, f.matmul(R, H.alpha), f.matmul(H.alpha, R)))
    x, y, z = o.vars("x y z")
    P = lambda t: linear(R, t)
    b = o.br(P(x), P(y)) - P(o.br(P(x), y) + o.br(x, P(y)) + lam * o.br(P(x), P(y)))
    rb.term("reynolds_binary", b, ("x", "y"))
    t = o.tr(P(x), P(y), P(z)) - P(o.tr(P(x), P(y), z) + o.tr(P(x), y, P(z))
                                   + o.tr(x, P(y), P(z)) + mu * o.tr(P(x), P(y), P(z)))
    rb.term("reynolds_ternary", t, ("x", "y", "z"))
    return rb.report()


def verify_rota_baxter(R, H, cap=None):
    """Weight-zero Rota-Baxter identities (the (0, 0) case of the weighted Reynolds ones)."""
    return verify_weighted_reynolds(R, 0, 0, H, cap)


def reynolds_descendent(R, lam, mu, H, check=True):
    """(A, [x,y]_R, [[x,y,z]]_R, alpha) with

    [x,y]_R = [Rx,y] + [x,Ry] + lam [Rx,Ry]
    [[x,y,z]]_R = [[Rx,Ry,z]] + [[Rx,y,Rz]] + [[x,Ry,Rz]] + mu [[Rx,Ry,Rz]].
    """
    H = _as_hly(H)
    f = H.field
    R = f.array(R)
    lam, mu = f.scalar(lam), f.scalar(mu)
    if check:
        rep = verify_weighted_reynolds(R, lam, mu, H)
        if not rep.ok:
            raise PreconditionError("not a weighted Reynolds operator: %s" % rep, rep)
    o = Ops(H)
    x, y, z = o.vars("x y z")
    P = lambda t: linear(R, t)
    b = o.br(P(x), y) + o.br(x, P(y)) + lam * o.br(P(x), P(y))
    t = (o.tr(P(x), P(y), z) + o.tr(P(x), y, P(z)) + o.tr(x, P(y), P(z))
         + mu * o.tr(P(x), P(y), P(z)))
    return HLYAlgebra(H.alpha, b.values(("x", "y")), t.values(("x", "y", "z")), f)


def verify_weighted_reynolds_hom_lie(R, lam, L, cap=None):
    """R alpha = alpha R and [Rx,Ry] = R([Rx,y] + [x,Ry] + lam [Rx,Ry]) on a Hom-Lie algebra."""
    rep = verify_weighted_reynolds(R, lam, 0, as_hly(L), cap)
    rb = ReportBuilder(L.field, cap)
    rb.merge(rep)
    # the ternary bracket of as_hly(L) is zero, so that identity is vacuous
    rb.checked.remove("reynolds_ternary")
    rb.counts.pop("reynolds_ternary", None)
    return rb.report()


def check_lambda_two_lambda(R, lam, L, cap=None):
    """A lam-weighted Reynolds operator on L, re-checked with weights (lam, 2 lam) on the induced HLY."""
    rep = verify_weighted_reynolds_hom_lie(R, lam, L)
    if not rep.ok:
        raise PreconditionError("not a weighted Reynolds operator on the Hom-Lie algebra: %s"
                                % rep, rep)
    f = L.field
    lam = f.scalar(lam)
    return verify_weighted_reynolds(R, lam, f.canonical(2 * lam), induced_hly_from_hom_lie(L), cap)


def reynolds_context(lam, mu, H):
    """Context (H, adjoint, lam [,], mu [[,,]]) and the cocycle report of that pair.

    The pair is not required to be a cocycle; the report says whether it is.
    """
    from .cohomology import CocyclePair, verify_23cocycle
    H = _as_hly(H)
    f = H.field
    lam, mu = f.scalar(lam), f.scalar(mu)
    R = adjoint_rep(H)
    F = f.reduce(H.binary * lam)
    G = f.reduce(H.ternary * mu)
    ctx = context(H, R, F, G, check=False)
    return ctx, verify_23cocycle(CocyclePair(F, G), H, R)


# twisted O-operators

@dataclass(frozen=True, eq=False)
class TwistedOperator:
    T: np.ndarray
    context: TwistedContext


def _ensure_context(ctx):
    if not ctx.validated:
        validate_context(ctx)


def verify_twisted_op(T, ctx, cap=None, check_context=True):
    """T beta = alpha T and the two bracket equations on all basis pairs and triples of V."""
    if check_context:
        _ensure_context(ctx)
    o = ContextOps(ctx, T)
    f = o.field
    Tm = o.T_m
    rb = ReportBuilder(f, cap)
    rb.add("commutes_twist", _twist_residual(f, f.matmul(Tm, ctx.R.beta),
                                             f.matmul(ctx.H.alpha, Tm)))
    u, v, w = o.vvar("u"), o.vvar("v"), o.vvar("w")
    T_ = o.T
    b = o.br(T_(u), T_(v)) - T_(o.rho(T_(u), v) - o.rho(T_(v), u) + o.F(T_(u), T_(v)))
    rb.term("twisted_binary", b, ("u", "v"))
    t = o.tr(T_(u), T_(v), T_(w)) - T_(
        o.D(T_(u), T_(v), w) + o.theta(T_(v), T_(w), u) - o.theta(T_(u), T_(w), v)
        + o.G(T_(u), T_(v), T_(w)))
    rb.term("twisted_ternary", t, ("u", "v", "w"))
    return rb.report()


def verify_twisted_op_hom_lie(T, L, R, F, cap=None):
    """T beta = alpha T and [Tu, Tv] = T(rho(Tu) v - rho(Tv) u + F(Tu, Tv))."""
    f = same_field(L.field, R.field)
    Tm = f.array(T)
    F = f.array(F)
    m = R.carrier_dim
    if Tm.shape != (L.dim, m):
        raise DimensionError("T must be a %dx%d matrix, got %s" % (L.dim, m, Tm.shape))
    o = Ops(L)
    rho = np.moveaxis(R.rho, -1, -2)
    rb = ReportBuilder(f, cap)
    rb.add("commutes_twist", _twist_residual(f, f.matmul(Tm, R.beta), f.matmul(L.alpha, Tm)))
    u, v = var("u", m, f), var("v", m, f)
    T_ = lambda t: linear(Tm, t)
    b = o.br(T_(u), T_(v)) - T_(apply(rho, T_(u), v) - apply(rho, T_(v), u)
                                + apply(F, T_(u), T_(v)))
    rb.term("twisted_binary", b, ("u", "v"))
    return rb.report()


def induced_twisted_from_hom_lie(T, L, R, F, check=True):
    """The same T on the induced HLY, with theta from rho and G = F([x,y], a z) - rho(a z) F(x,y)."""
    from .cohomology import g_from_f
    f = same_field(L.field, R.field)
    if check:
        rep = verify_twisted_op_hom_lie(T, L, R, F)
        if not rep.ok:
            raise PreconditionError("not an F-twisted operator on the Hom-Lie algebra: %s"
                                    % rep, rep)
    H = induced_hly_from_hom_lie(L, check=check)
    Rt = theta_from_rho(R, L.alpha)
    G = g_from_f(F, L, R, check=check)
    ctx = context(H, Rt, F, G, check=check)
    return TwistedOperator(f.array(T), ctx)


@dataclass(frozen=True)
class GraphCheck:
    ok: bool
    witness: object = None      # (kind, basis indices, residual in A) of the first escape

    def __bool__(self):
        return self.ok


def graph_is_subalgebra(T, ctx):
    """Whether {(Tu, u)} is closed under both brackets and the twist of the twisted semidirect product.

    A vector (a, w) lies on the graph iff a - T w = 0, so the residual of each
    bracket of graph basis vectors is its image under (a, w) -> a - T w.
    """
    H, R = ctx.H, ctx.R
    f = ctx.field
    Tm = f.array(T)
    n, m = H.dim, R.carrier_dim
    S = twisted_semidirect(H, R, ctx.F, ctx.G, check=False)
    gamma = np.concatenate([Tm, f.eye(m)], axis=0)         # graph basis as columns
    proj = np.concatenate([f.eye(n), f.reduce(-Tm)], axis=1)
    u, v, w = (var(s, m, f) for s in "uvw")
    g = lambda t: linear(gamma, t)
    checks = [
        ("twist", linear(proj, linear(S.alpha, g(u))), ("u",)),
        ("binary", linear(proj, apply(S.binary, g(u), g(v))), ("u", "v")),
        ("ternary", linear(proj, apply(S.ternary, g(u), g(v), g(w))), ("u", "v", "w")),
    ]
    for kind, term, order in checks:
        vals = term.values(order)
        bad = np.argwhere(f.nonzero(vals).any(axis=-1))
        if len(bad):
            idx = tuple(int(i) for i in bad[0])
            return GraphCheck(False, (kind, idx, tuple(f.canonical(x) for x in vals[idx])))
    return GraphCheck(True)


def v_structure(T, ctx, check=True):
    """HLY algebra (V, [,]_T, [[,,]]_T, beta) with

    [u,v]_T = rho(Tu) v - rho(Tv) u + F(Tu, Tv)
    [[u,v,w]]_T = D(Tu,Tv) w + theta(Tv,Tw) u - theta(Tu,Tw) v + G(Tu,Tv,Tw).
    """
    if check:
        rep = verify_twisted_op(T, ctx)
        if not rep.ok:
            raise PreconditionError("not a twisted O-operator: %s" % rep, rep)
    o = ContextOps(ctx, T)
    u, v, w = o.vvar("u"), o.vvar("v"), o.vvar("w")
    T_ = o.T
    b = o.rho(T_(u), v) - o.rho(T_(v), u) + o.F(T_(u), T_(v))
    t = (o.D(T_(u), T_(v), w) + o.theta(T_(v), T_(w), u) - o.theta(T_(u), T_(w), v)
         + o.G(T_(u), T_(v), T_(w)))
    return HLYAlgebra(ctx.R.beta, b.values(("u", "v")), t.values(("u", "v", "w")), o.field)


def verify_top_morphism(phi, psi, T, T2, ctx, ctx2, strict=False, cap=None):
    """(phi, psi): representation morphism plus phi T = T2 psi.

    ``strict=True`` uses the form T psi = phi T2 for the intertwining (only
    meaningful when the dimensions allow both composites) and the strict
    reading of the representation-morphism twist condition.
    """
    from .representations import RepMorphism, verify_rep_morphism
    f = same_field(ctx.field, ctx2.field)
    phi, psi = f.array(phi), f.array(psi)
    T, T2 = f.array(T), f.array(T2)
    rb = ReportBuilder(f, cap)
    rb.merge(verify_rep_morphism(RepMorphism(phi, psi), ctx.H, ctx.R, ctx2.H, ctx2.R,
                                 strict=strict, cap=cap))
    if strict:
        if T.shape[1] != psi.shape[0] or phi.shape[1] != T2.shape[0]:
            raise DimensionError("T psi = phi T' is ill-typed for these dimensions")
        res = f.matmul(T, psi) - f.matmul(phi, T2)
    else:
        res = f.matmul(phi, T) - f.matmul(T2, psi)
    rb.add("intertwines", f.reduce(res).T)
    return rb.report()


def twist_kernel(ctx):
    """Basis of the matrices T with T beta = alpha T, each as a dim A x dim V matrix."""
    f = ctx.field
    n, m = ctx.H.dim, ctx.R.carrier_dim
    rows = []
    for k in range(n * m):
        E = f.zeros((n, m))
        E[divmod(k, m)] = 1
        rows.append(f.reduce(E @ ctx.R.beta - ctx.H.alpha @ E).reshape(-1))
    M = np.stack(rows).T        # column k is the residual of the k-th matrix unit
    return [v.reshape(n, m) for v in kernel_basis(M, f)]


def search_twisted_ops(ctx, budget=None):
    """Every T passing verify_twisted_op over GF(p), in row-major lexicographic order of entries.

    Candidates are the GF(p)-combinations of a basis of {T : T beta = alpha T}
    enumerated by a digit counter; ``budget`` bounds their number.
    """
    f = ctx.field
    if f.p is None:
        raise PreconditionError("exhaustive search needs a prime field")
    budget = SEARCH_BUDGET if budget is None else budget
    _ensure_context(ctx)
    basis = twist_kernel(ctx)
    total = f.p ** len(basis)
    if total > budget:
        raise PreconditionError("search space of %d candidates exceeds the budget %d"
                                % (total, budget))
    n, m = ctx.H.dim, ctx.R.carrier_dim
    B = np.stack(basis) if basis else f.zeros((0, n, m))
    found = []
    for digits in product(range(f.p), repeat=len(basis)):
        T = f.reduce(np.tensordot(np.array(digits, dtype=np.int64), B, axes=1)) \
            if basis else f.zeros((n, m))
        if verify_twisted_op(T, ctx, check_context=False).ok:
            found.append(T)
    found.sort(key=lambda t: tuple(int(x) for x in t.reshape(-1)))
    return found


def all_matrices(n, m, field):
    """All n x m matrices over GF(p) in row-major digit order."""
    for digits in product(range(field.p), repeat=n * m):
        yield np.array(digits, dtype=np.int64).reshape(n, m)
