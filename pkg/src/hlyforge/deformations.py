"""
Truncated formal deformations T_t = T_0 + t T_1 + ... + t^N T_N of a twisted O-operator.

All series are cut at the order N of the deformation; identities are checked
coefficient by coefficient for t^0 .. t^N.
"""

from dataclasses import dataclass
from itertools import product

import numpy as np

from .exact_core import (
    DimensionError, PreconditionError, kernel_basis, linear, same_field, solve,
)
from .representations import ContextOps, RepOps
from .structures import ReportBuilder


@dataclass(frozen=True, eq=False)
class TruncatedDeformation:
    """Coefficients T_0..T_N (dim A x dim V matrices) over a twisted-operator context."""

    coefficients: tuple
    context: object

    @property
    def order(self):
        return len(self.coefficients) - 1

    @property
    def base(self):
        return self.coefficients[0]


def deformation(coefficients, ctx, order=None):
    """Build a TruncatedDeformation, padding with zero coefficients up to ``order``."""
    f = ctx.field
    n, m = ctx.H.dim, ctx.R.carrier_dim
    coeffs = [f.array(c) for c in coefficients]
    if not coeffs:
        raise DimensionError("a deformation needs at least T_0")
    order = len(coeffs) - 1 if order is None else order
    if order < len(coeffs) - 1:
        raise DimensionError("%d coefficients given for order %d" % (len(coeffs), order))
    coeffs += [f.zeros((n, m)) for _ in range(order + 1 - len(coeffs))]
    for c in coeffs:
        if c.shape != (n, m):
            raise DimensionError("coefficient of shape %s, expected %dx%d" % (c.shape, n, m))
    return TruncatedDeformation(tuple(coeffs), ctx)


def _splits(s, parts):
    """Index tuples of ``parts`` non-negative integers summing to s."""
    return [c for c in product(range(s + 1), repeat=parts) if sum(c) == s]


def verify_deformation(defn, cap=None, check_context=True):
    """Per order s: T_s beta = alpha T_s and the order-s parts of the two bracket equations."""
    ctx = defn.context
    if check_context and not ctx.validated:
        from .representations import validate_context
        validate_context(ctx)
    o = ContextOps(ctx, defn.base)
    f = o.field
    Ts = defn.coefficients
    P = lambda i, t: linear(Ts[i], t)
    u, v, w = o.vvar("u"), o.vvar("v"), o.vvar("w")
    rb = ReportBuilder(f, cap)
    for s in range(defn.order + 1):
        tag = "order%d." % s
        rb.add(tag + "commutes_twist",
               f.reduce(f.matmul(Ts[s], ctx.R.beta) - f.matmul(ctx.H.alpha, Ts[s])).T)
        b = 0
        for i, j in _splits(s, 2):
            b = b + o.br(P(i, u), P(j, v)) - P(i, o.rho(P(j, u), v) - o.rho(P(j, v), u))
        for i, j, k in _splits(s, 3):
            b = b - P(i, o.F(P(j, u), P(k, v)))
        rb.term(tag + "twisted_binary", b, ("u", "v"))
        t = 0
        for i, j, k in _splits(s, 3):
            t = t + o.tr(P(i, u), P(j, v), P(k, w)) - P(i, (
                o.D(P(j, u), P(k, v), w) + o.theta(P(j, v), P(k, w), u)
                - o.theta(P(j, u), P(k, w), v)))
        for i, j, k, l in _splits(s, 4):
            t = t - P(i, o.G(P(j, u), P(k, v), P(l, w)))
        rb.term(tag + "twisted_ternary", t, ("u", "v", "w"))
    return rb.report()


def infinitesimal_is_cocycle(defn):
    """(is_cocycle, (binary image, ternary image)) for T_1 under the first twisted coboundary."""
    from .cohomology import twisted_complex
    if defn.order < 1:
        raise PreconditionError("the infinitesimal needs a deformation of order >= 1")
    rep = verify_deformation(defn)
    low = [n for n in rep.failed() if n.startswith(("order0.", "order1."))]
    if low:
        raise PreconditionError("deformation fails through order 1: %s" % ", ".join(low), rep)
    f = defn.context.field
    cx = twisted_complex(defn.base, defn.context, check=False)
    dI, dII = cx.delta(0, f.array(defn.coefficients[1]).T[None])
    return not (f.nonzero(dI).any() or f.nonzero(dII).any()), (dI[0], dII[0])


def assemble_equivalence(chi, defn, phis=(), psis=()):
    """Truncated phi_t, psi_t as coefficient lists of length N + 1.

    phi_t = Id_A + t [[chi, -]] + sum_{i>=2} phi_i t^i
    psi_t = Id_V + t (D(chi) + G(chi, T -)) + sum_{i>=2} psi_i t^i
    ``phis``/``psis`` supply phi_2, phi_3, ... and psi_2, ...; missing ones are zero.
    """
    from .cohomology import wedge_coefficients
    ctx = defn.context
    f = ctx.field
    n, m = ctx.H.dim, ctx.R.carrier_dim
    N = defn.order
    c = wedge_coefficients(chi, f)
    o = ContextOps(ctx, defn.base)
    x, y, z = o.vars("x y z")
    u = o.vvar("u")
    ad = o.tr(x, y, z).values(("x", "y", "z"))
    ad1 = f.dot(c, ad, ([0, 1], [0, 1])).T
    dg = (o.D(x, y, u) + o.G(x, y, o.T(u))).values(("x", "y", "u"))
    dg1 = f.dot(c, dg, ([0, 1], [0, 1])).T
    phi = [f.eye(n), ad1] + [f.array(p) for p in phis]
    psi = [f.eye(m), dg1] + [f.array(p) for p in psis]
    phi += [f.zeros((n, n)) for _ in range(N + 1 - len(phi))]
    psi += [f.zeros((m, m)) for _ in range(N + 1 - len(psi))]
    return tuple(phi[:N + 1]), tuple(psi[:N + 1])


@dataclass(frozen=True)
class EquivalencePair:
    chi: object
    phis: tuple = ()
    psis: tuple = ()


def verify_equivalence(defn, defn2, pair, strict=False, cap=None):
    """Whether (phi_t, psi_t) is a morphism of twisted operators from T_t to T'_t through order N.

    Per order s the coefficient of t^s is checked in: phi_t alpha = alpha phi_t,
    phi_t of each bracket, psi_t beta = beta psi_t, psi_t rho(x) = rho(phi_t x) psi_t,
    psi_t theta(x, y) = theta(phi_t x, phi_t y) psi_t, and the intertwining
    phi_t T_t = T'_t psi_t (``strict=True``: T_t psi_t = phi_t T'_t).
    """
    ctx = defn.context
    same_field(ctx.field, defn2.context.field)
    N = min(defn.order, defn2.order)
    phi, psi = assemble_equivalence(pair.chi, defn, pair.phis, pair.psis)
    f = ctx.field
    H, R = ctx.H, ctx.R
    o = RepOps(H, R)
    x, y, z = o.vars("x y z")
    u = o.vvar("u")
    P = lambda i, t: linear(phi[i], t)
    S = lambda i, t: linear(psi[i], t)
    T1, T2 = defn.coefficients, defn2.coefficients
    rb = ReportBuilder(f, cap)
    for s in range(N + 1):
        tag = "order%d." % s
        rb.add(tag + "phi_twist", f.reduce(phi[s] @ H.alpha - H.alpha @ phi[s]).T)
        rb.add(tag + "psi_twist", f.reduce(psi[s] @ R.beta - R.beta @ psi[s]).T)
        b = P(s, o.br(x, y))
        for i, j in _splits(s, 2):
            b = b - o.br(P(i, x), P(j, y))
        rb.term(tag + "morphism_binary", b, ("x", "y"))
        t = P(s, o.tr(x, y, z))
        for i, j, k in _splits(s, 3):
            t = t - o.tr(P(i, x), P(j, y), P(k, z))
        rb.term(tag + "morphism_ternary", t, ("x", "y", "z"))
        r = S(s, o.rho(x, u))
        for i, j in _splits(s, 2):
            r = r - o.rho(P(i, x), S(j, u))
        rb.term(tag + "rep_morphism_rho", r, ("x", "u"))
        th = S(s, o.theta(x, y, u))
        for i, j, k in _splits(s, 3):
            th = th - o.theta(P(i, x), P(j, y), S(k, u))
        rb.term(tag + "rep_morphism_theta", th, ("x", "y", "u"))
        res = f.zeros(T1[0].shape)
        for i, j in _splits(s, 2):
            if strict:
                res = res + T1[i] @ psi[j] - phi[i] @ T2[j]
            else:
                res = res + phi[i] @ T1[j] - T2[i] @ psi[j]
        rb.add(tag + "intertwines", f.reduce(res).T)
    return rb.report()


@dataclass(frozen=True)
class ClassCheck:
    same: bool
    witness: object = None      # strictly upper chi coefficients when same
    residual: object = None     # T1' - T1 when not

    def __bool__(self):
        return self.same


def boundary_matrix(T, ctx):
    """Columns are the flattened partial_T images of the basis e_i ^ e_j (i < j)."""
    from .cohomology import partial_T
    f = ctx.field
    n = ctx.H.dim
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    cols = []
    for i, j in pairs:
        c = f.zeros((n, n))
        c[i, j] = 1
        cols.append(partial_T(c, T, ctx).reshape(-1))
    if not cols:
        return f.zeros((n * ctx.R.carrier_dim, 0)), pairs
    return np.stack(cols, axis=1), pairs


def same_class_check(T1, T1b, T, ctx):
    """Solve T1' - T1 = partial_T(chi) for chi in A ^ A exactly."""
    from .cohomology import twisted_complex
    f = ctx.field
    T1, T1b = f.array(T1), f.array(T1b)
    cx = twisted_complex(T, ctx)
    for name, c in (("first", T1), ("second", T1b)):
        dI, dII = cx.delta(0, c.T[None])
        if f.nonzero(dI).any() or f.nonzero(dII).any():
            raise PreconditionError("the %s input is not a 1-cocycle of the twisted complex" % name)
    M, pairs = boundary_matrix(T, ctx)
    diff = f.reduce(T1b - T1)
    n = ctx.H.dim
    if M.shape[1] == 0:
        if f.nonzero(diff).any():
            return ClassCheck(False, residual=diff)
        return ClassCheck(True, witness=f.zeros((n, n)))
    sol = solve(M, diff.reshape(-1), f)
    if sol is None:
        return ClassCheck(False, residual=diff)
    chi = f.zeros((n, n))
    for (i, j), c in zip(pairs, sol):
        chi[i, j] = c
    return ClassCheck(True, witness=chi)


def boundary_kernel(T, ctx):
    """Basis of the chi (upper coefficient matrices) with partial_T(chi) = 0."""
    f = ctx.field
    n = ctx.H.dim
    M, pairs = boundary_matrix(T, ctx)
    out = []
    for k in kernel_basis(M, f) if M.shape[1] else []:
        chi = f.zeros((n, n))
        for (i, j), c in zip(pairs, k):
            chi[i, j] = c
        out.append(chi)
    return out
