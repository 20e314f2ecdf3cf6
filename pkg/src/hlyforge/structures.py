"""
Hom-Lie algebras and Hom-Lie-Yamaguti algebras given by structure constants.

A Hom-Lie algebra is a skew bracket with a twist ``alpha`` satisfying

    [alpha x, [y, z]] + [alpha y, [z, x]] + [alpha z, [x, y]] = 0.

A Hom-Lie-Yamaguti (HLY) algebra adds a ternary bracket, skew in its first
two slots, subject to four axioms (see ``verify_hly``).  Verification works on
basis tuples only, which suffices because every identity is multilinear.
"""

from dataclasses import dataclass, field as dc_field

import numpy as np

from .exact_core import (
    QQ, MAX_FAILURES, DimensionError, PreconditionError, apply, cyclic,
    linear, same_field, var,
)


@dataclass(frozen=True)
class Failure:
    name: str
    index: tuple
    residual: tuple


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of a verification.

    ``failures`` holds at most ``cap`` entries; ``counts`` has the full number
    of violating basis tuples per identity, and ``checked`` the identities
    that were evaluated.
    """

    ok: bool
    failures: tuple = ()
    counts: dict = dc_field(default_factory=dict)
    checked: tuple = ()

    def failed(self, name=None):
        if name is None:
            return sorted(n for n, c in self.counts.items() if c)
        return self.counts.get(name, 0) > 0

    def to_json(self):
        return {
            "ok": self.ok,
            "checked": list(self.checked),
            "counts": {k: v for k, v in sorted(self.counts.items())},
            "failures": [
                {"identity": f.name, "index": list(f.index),
                 "residual": [_jsonable(v) for v in f.residual]}
                for f in self.failures
            ],
        }

    def __str__(self):
        if self.ok:
            return "ok (%s)" % ", ".join(self.checked)
        head = ", ".join("%s: %d" % (n, self.counts[n]) for n in self.failed())
        return "FAILED %s" % head


def _jsonable(v):
    from fractions import Fraction
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    return int(v)


class ReportBuilder:
    """Collects failures of several identities into one IdentityReport."""

    def __init__(self, field=QQ, cap=None):
        self.field = field
        self.cap = MAX_FAILURES if cap is None else cap
        self.failures = []
        self.counts = {}
        self.checked = []

    def add(self, name, values):
        """Record the nonzero positions of ``values`` (variable axes + component axis)."""
        values = np.asarray(values)
        self.checked.append(name)
        mask = self.field.nonzero(values)
        if values.ndim > 1:
            bad = mask.any(axis=-1)
        else:
            bad = mask.reshape(())
        idx = np.argwhere(bad)
        self.counts[name] = self.counts.get(name, 0) + len(idx)
        for t in idx:
            if len(self.failures) >= self.cap:
                break
            t = tuple(int(i) for i in t)
            res = tuple(self.field.canonical(v) for v in values[t])
            self.failures.append(Failure(name, t, res))

    def term(self, name, term, order=None):
        self.add(name, term.values(order))

    def merge(self, report, prefix=""):
        for f in report.failures:
            if len(self.failures) < self.cap:
                self.failures.append(Failure(prefix + f.name, f.index, f.residual))
        for k, v in report.counts.items():
            self.counts[prefix + k] = self.counts.get(prefix + k, 0) + v
        self.checked.extend(prefix + c for c in report.checked)

    def report(self):
        ok = not any(self.counts.values())
        return IdentityReport(ok, tuple(self.failures), dict(self.counts), tuple(self.checked))


def alternating_residual(t, slots, field):
    """Residuals of ``t`` failing to be alternating in the slot pair ``slots``.

    At (.., i, .., j, ..) with i < j the residual is t(..e_i..e_j..) + t(..e_j..e_i..);
    with i = j it is t(..e_i..e_i..).  Other positions are zero.
    """
    a, b = slots
    swapped = np.swapaxes(t, a, b)
    total = field.reduce(t + swapped)
    n = t.shape[a]
    out = field.zeros(t.shape)
    for i in range(n):
        for j in range(i, n):
            sel = [slice(None)] * t.ndim
            sel[a], sel[b] = i, j
            sel = tuple(sel)
            out[sel] = t[sel] if i == j else total[sel]
    return out


@dataclass(frozen=True)
class HomLieAlgebra:
    alpha: np.ndarray
    bracket: np.ndarray
    field: object = QQ

    def __post_init__(self):
        n = self.alpha.shape[0]
        if self.alpha.shape != (n, n) or self.bracket.shape != (n, n, n):
            raise DimensionError("Hom-Lie data of inconsistent shapes %s, %s"
                                 % (self.alpha.shape, self.bracket.shape))

    @property
    def dim(self):
        return self.alpha.shape[0]


@dataclass(frozen=True)
class HLYAlgebra:
    alpha: np.ndarray
    binary: np.ndarray
    ternary: np.ndarray
    field: object = QQ

    def __post_init__(self):
        n = self.alpha.shape[0]
        if (self.alpha.shape != (n, n) or self.binary.shape != (n,) * 3
                or self.ternary.shape != (n,) * 4):
            raise DimensionError("HLY data of inconsistent shapes")

    @property
    def dim(self):
        return self.alpha.shape[0]


def hom_lie(alpha, bracket, field=QQ):
    return HomLieAlgebra(field.array(alpha), field.array(bracket), field)


def hly(alpha, binary, ternary, field=QQ):
    return HLYAlgebra(field.array(alpha), field.array(binary), field.array(ternary), field)


def structure_tensor(dim, entries, arity, out_dim=None, field=QQ):
    """Dense tensor from ``{(i1, .., ik, m): value}``; no symmetry is implied."""
    out_dim = dim if out_dim is None else out_dim
    t = field.zeros((dim,) * arity + (out_dim,))
    for key, v in entries.items():
        t[tuple(key)] = field.scalar(v)
    return t


def skew_tensor(dim, entries, field=QQ, out_dim=None):
    """Bracket tensor from ``{(i, j): {m: value}}`` extended by skew-symmetry."""
    out_dim = dim if out_dim is None else out_dim
    t = field.zeros((dim, dim, out_dim))
    for (i, j), col in entries.items():
        for m, v in col.items():
            v = field.scalar(v)
            t[i, j, m] = v
            t[j, i, m] = field.canonical(-v)
    return field.reduce(t)


class Ops:
    """Callable views of an algebra's brackets for writing identities over Terms."""

    def __init__(self, alg):
        self.field = alg.field
        self.n = alg.dim
        self.alpha_m = alg.alpha
        self.alpha2_m = self.field.matmul(alg.alpha, alg.alpha)
        self.binary = alg.bracket if isinstance(alg, HomLieAlgebra) else alg.binary
        self.ternary = getattr(alg, "ternary", None)

    def var(self, name):
        return var(name, self.n, self.field)

    def vars(self, names):
        return [self.var(n) for n in names.split()]

    def a(self, t):
        return linear(self.alpha_m, t)

    def a2(self, t):
        return linear(self.alpha2_m, t)

    def br(self, s, t):
        return apply(self.binary, s, t)

    def tr(self, s, t, u):
        return apply(self.ternary, s, t, u)


def verify_hom_lie(L, cap=None):
    """Skew-symmetry and the Hom-Jacobi identity on all basis triples."""
    ops = Ops(L)
    rb = ReportBuilder(L.field, cap)
    rb.add("skew", alternating_residual(L.bracket, (0, 1), L.field))
    x, y, z = ops.vars("x y z")
    jac = cyclic(lambda a, b, c: ops.br(ops.a(a), ops.br(b, c)), x, y, z)
    rb.term("hom_jacobi", jac, ("x", "y", "z"))
    return rb.report()


def verify_multiplicative(alg, cap=None):
    """alpha is an endomorphism of the binary (and, if present, ternary) bracket."""
    ops = Ops(alg)
    rb = ReportBuilder(alg.field, cap)
    x, y, z = ops.vars("x y z")
    rb.term("multiplicative_binary", ops.a(ops.br(x, y)) - ops.br(ops.a(x), ops.a(y)),
            ("x", "y"))
    if ops.ternary is not None:
        rb.term("multiplicative_ternary",
                ops.a(ops.tr(x, y, z)) - ops.tr(ops.a(x), ops.a(y), ops.a(z)),
                ("x", "y", "z"))
    return rb.report()


# axiom names for HLY algebras
HLY_AXIOMS = (
    "skew_binary",          # [x,y] = -[y,x]
    "skew_ternary",         # [[x,y,z]] = -[[y,x,z]]
    "cyclic_mixed",         # cyc [[x,y],a z] + cyc [[x,y,z]] = 0
    "cyclic_ternary",       # cyc [[ [x,y], a z, a w ]] = 0
    "ternary_derives_binary",
    "ternary_derives_ternary",
)


def hly_axiom_terms(ops):
    """The four non-skew HLY axioms as Terms with their variable orders."""
    x, y, z, w, t = ops.vars("x y z w t")
    a, a2, br, tr = ops.a, ops.a2, ops.br, ops.tr
    mixed = (cyclic(lambda p, q, r: br(br(p, q), a(r)), x, y, z)
             + cyclic(lambda p, q, r: tr(p, q, r), x, y, z))
    cyc_t = cyclic(lambda p, q, r: tr(br(p, q), a(r), a(w)), x, y, z)
    der_b = (tr(a(x), a(y), br(z, w))
             - br(tr(x, y, z), a2(w)) - br(a2(z), tr(x, y, w)))
    der_t = (tr(a2(x), a2(y), tr(z, w, t))
             - tr(tr(x, y, z), a2(w), a2(t))
             - tr(a2(z), tr(x, y, w), a2(t))
             - tr(a2(z), a2(w), tr(x, y, t)))
    return [
        ("cyclic_mixed", mixed, ("x", "y", "z")),
        ("cyclic_ternary", cyc_t, ("x", "y", "z", "w")),
        ("ternary_derives_binary", der_b, ("x", "y", "z", "w")),
        ("ternary_derives_ternary", der_t, ("x", "y", "z", "w", "t")),
    ]


def verify_hly(H, cap=None):
    """All six HLY axioms on basis tuples (arities 2, 3, 3, 4, 4, 5)."""
    ops = Ops(H)
    rb = ReportBuilder(H.field, cap)
    rb.add("skew_binary", alternating_residual(H.binary, (0, 1), H.field))
    rb.add("skew_ternary", alternating_residual(H.ternary, (0, 1), H.field))
    for name, term, order in hly_axiom_terms(ops):
        rb.term(name, term, order)
    return rb.report()


def _require(report, what):
    if not report.ok:
        raise PreconditionError("%s: %s" % (what, report), report)


def ternary_from_bracket(alpha, bracket, field):
    """d[i,j,k] = [[e_i, e_j], alpha e_k]."""
    n = alpha.shape[0]
    x, y, z = (var(s, n, field) for s in "xyz")
    t = apply(bracket, apply(bracket, x, y), linear(alpha, z))
    return t.values(("x", "y", "z"))


def induced_hly_from_hom_lie(L, check=True):
    """HLY algebra (A, [,], [[x,y],alpha z], alpha) of a multiplicative Hom-Lie algebra."""
    if check:
        _require(verify_hom_lie(L), "not a Hom-Lie algebra")
        _require(verify_multiplicative(L), "Hom-Lie algebra is not multiplicative")
    tern = ternary_from_bracket(L.alpha, L.bracket, L.field)
    return HLYAlgebra(L.alpha, L.bracket, tern, L.field)


def as_hly(L):
    """A Hom-Lie algebra viewed as an HLY algebra with zero ternary bracket."""
    n = L.dim
    return HLYAlgebra(L.alpha, L.bracket, L.field.zeros((n,) * 4), L.field)


def is_hly_morphism(phi, H1, H2, cap=None):
    """phi[x,y] = [phi x, phi y], phi[[x,y,z]] = [[phi x, phi y, phi z]], phi alpha1 = alpha2 phi."""
    field = same_field(H1.field, H2.field)
    phi = np.asarray(phi)
    if phi.shape != (H2.dim, H1.dim):
        raise DimensionError("morphism of shape %s between dims %d and %d"
                             % (phi.shape, H1.dim, H2.dim))
    o1, o2 = Ops(H1), Ops(H2)
    rb = ReportBuilder(field, cap)
    x, y, z = o1.vars("x y z")
    f = lambda t: linear(phi, t)
    rb.term("morphism_binary", f(o1.br(x, y)) - o2.br(f(x), f(y)), ("x", "y"))
    if o1.ternary is not None and o2.ternary is not None:
        rb.term("morphism_ternary", f(o1.tr(x, y, z)) - o2.tr(f(x), f(y), f(z)),
                ("x", "y", "z"))
    twist = field.reduce(phi @ H1.alpha - H2.alpha @ phi)
    # column j of the residual is the failure at basis vector e_j
    rb.add("morphism_twist", twist.T)
    return rb.report()


def yau_twist(H, phi):
    """(A, phi[,], phi^2[[,,]], phi alpha) for an algebra morphism phi of H.

    Accepts an HLY algebra or a Hom-Lie algebra (treated as zero ternary).
    """
    if isinstance(H, HomLieAlgebra):
        H = as_hly(H)
    field = H.field
    phi = field.array(phi)
    rep = is_hly_morphism(phi, H, H)
    if not rep.ok:
        raise PreconditionError("phi is not a morphism: %s" % rep, rep)
    phi2 = field.matmul(phi, phi)
    binary = field.reduce(np.tensordot(H.binary, phi.T, axes=([2], [0])))
    ternary = field.reduce(np.tensordot(H.ternary, phi2.T, axes=([3], [0])))
    alpha = field.matmul(phi, H.alpha)
    return HLYAlgebra(alpha, binary, ternary, field)


def as_hom_lie(H):
    """Drop a vanishing ternary bracket."""
    bad = np.argwhere(H.field.nonzero(H.ternary))
    if len(bad):
        raise PreconditionError("ternary bracket is nonzero at %s"
                                % [tuple(int(i) for i in b) for b in bad[:8]])
    return HomLieAlgebra(H.alpha, H.binary, H.field)


def as_hlts(H):
    """Hom-Lie triple system: an HLY algebra whose binary bracket vanishes."""
    bad = np.argwhere(H.field.nonzero(H.binary))
    if len(bad):
        raise PreconditionError("binary bracket is nonzero at %s"
                                % [tuple(int(i) for i in b) for b in bad[:8]])
    return H
