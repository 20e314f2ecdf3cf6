"""
Small named presentations used throughout the tests and demos.

Indices are 0-based: the basis vector written e1 is index 0.
"""

from .exact_core import QQ
from .structures import hom_lie, skew_tensor, yau_twist, as_hom_lie


def zero3(field=QQ):
    """Abelian 3-dimensional algebra, alpha = id."""
    return hom_lie(field.eye(3), field.zeros((3, 3, 3)), field)


def h3(field=QQ):
    """Heisenberg algebra: [e1, e2] = e3, alpha = id."""
    return hom_lie(field.eye(3), skew_tensor(3, {(0, 1): {2: 1}}, field), field)


def h3q(field=QQ):
    """Yau twist of h3 by diag(1, 2, 2): [e1, e2] = 2 e3, alpha = diag(1, 2, 2)."""
    alpha = field.zeros((3, 3))
    for i, v in enumerate((1, 2, 2)):
        alpha[i, i] = field.scalar(v)
    return hom_lie(alpha, skew_tensor(3, {(0, 1): {2: 2}}, field), field)


def p1(field=QQ):
    """Projection onto e1 along span(e2, e3); a weight-zero Rota-Baxter operator on h3."""
    m = field.zeros((3, 3))
    m[0, 0] = 1
    return m


def pre_lie_circ(field=QQ):
    """Two-dimensional product with e1 o e1 = e2 and all other products zero."""
    t = field.zeros((2, 2, 2))
    t[0, 0, 1] = 1
    return t


def _diag(field, values):
    m = field.zeros((len(values), len(values)))
    for i, v in enumerate(values):
        m[i, i] = field.scalar(v)
    return m


def aff2(field=QQ):
    """Non-abelian 2-dimensional Lie algebra: [e1, e2] = e2, alpha = id."""
    return hom_lie(field.eye(2), skew_tensor(2, {(0, 1): {1: 1}}, field), field)


def aff2q(field=QQ, scale=2):
    """Yau twist of aff2 by diag(1, scale): [e1, e2] = scale e2, alpha = diag(1, scale)."""
    return as_hom_lie(yau_twist(aff2(field), _diag(field, (1, scale))))


def sl2(field=QQ):
    """[h, e] = 2e, [h, f] = -2f, [e, f] = h on the basis (h, e, f)."""
    return hom_lie(field.eye(3),
                   skew_tensor(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}, field),
                   field)


def sl2q(field=QQ, scale=2):
    """Yau twist of sl2 by the automorphism diag(1, scale, 1/scale)."""
    d = _diag(field, (1, scale, field.inv(field.scalar(scale))))
    return as_hom_lie(yau_twist(sl2(field), d))


def shipped():
    """Name -> dict of named objects for the JSON fixture files (field, objects)."""
    from .cohomology import CocyclePair, hom_lie_pair
    from .exact_core import GF
    from .representations import adjoint_hom_lie_rep, adjoint_rep, zero_rep
    from .structures import induced_hly_from_hom_lie
    from .ns_algebras import ns_hom_lie
    out = {}
    out["h3"] = (QQ, {"algebra": h3()})
    out["h3q"] = (QQ, {"algebra": h3q()})
    out["sl2"] = (QQ, {"algebra": sl2()})
    H = induced_hly_from_hom_lie(h3())
    out["h3_induced"] = (QQ, {"algebra": H})
    out["h3q_induced"] = (QQ, {"algebra": induced_hly_from_hom_lie(h3q())})
    bad = H.ternary.copy()
    bad[0, 1, 2, 0] = 1
    bad[1, 0, 2, 0] = -1
    from .structures import HLYAlgebra
    out["h3_perturbed"] = (QQ, {"algebra": HLYAlgebra(H.alpha, H.binary, bad, QQ)})
    out["h3_p1"] = (QQ, {"algebra": h3(), "operator": p1()})
    out["h3_adjoint"] = (QQ, {"algebra": H, "rep": adjoint_rep(H)})
    out["pre_lie"] = (QQ, {"ns": ns_hom_lie(QQ.eye(2), pre_lie_circ(), QQ.zeros((2, 2, 2)))})
    f = GF(2)
    A = induced_hly_from_hom_lie(aff2(f))
    L = aff2(f)
    F = f.zeros((2, 2, 2))
    F[0, 1, 0] = F[1, 0, 0] = 1
    out["aff2_gf2_cocycle"] = (f, {"algebra": L, "rep": adjoint_hom_lie_rep(L),
                                   "cocycle": CocyclePair(F, f.zeros((2, 2, 2, 2)))})
    Hc, Rc, pair = hom_lie_pair(F, L, adjoint_hom_lie_rep(L))
    T = f.zeros((2, 2))
    T[0, 0] = 1
    out["aff2_gf2_twisted"] = (f, {"algebra": Hc, "rep": Rc, "cocycle": pair, "operator": T})
    T1 = f.zeros((2, 2))
    T1[1, 0] = 1
    out["aff2_gf2_deformation"] = (f, {"algebra": Hc, "rep": Rc, "cocycle": pair,
                                       "deformation": ("deformation", [T, T1, f.zeros((2, 2))])})
    out["aff2_gf2_zero_rep"] = (f, {"algebra": A, "rep": zero_rep(A, 2)})
    out["h3_p1_weights"] = (QQ, {"algebra": H, "operator": p1(), "weights": ("weights", 0, 0)})
    return out
