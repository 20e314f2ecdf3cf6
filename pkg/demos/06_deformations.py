# Truncated deformations of a twisted O-operator
#
# T_t = T + t T_1 + t^2 T_2 + ... is checked order by order.  The first-order
# term is a 1-cocycle of the twisted complex, and adding a boundary
# partial_T(chi) to it does not change its class.

from hlyforge import GF, EquivalencePair, adjoint_hom_lie_rep, adjoint_rep, context, deformation
from hlyforge import induced_hly_from_hom_lie
from hlyforge import hom_lie_pair, infinitesimal_is_cocycle, partial_T, same_class_check
from hlyforge import search_twisted_ops, verify_deformation, verify_equivalence
from hlyforge.fixtures import aff2
from hlyforge.operators import all_matrices

f = GF(2)
L = aff2(f)
F = f.zeros((2, 2, 2))
F[0, 1, 0] = F[1, 0, 0] = 1
H, R, pair = hom_lie_pair(F, L, adjoint_hom_lie_rep(L))
ctx = context(H, R, pair.F, pair.G)
chi = f.array([[0, 1], [0, 0]])

# pick an operator whose boundary map is not identically zero
T = next(T for T in search_twisted_ops(ctx) if f.nonzero(partial_T(chi, T, ctx)).any())

firsts = [T1 for T1 in all_matrices(2, 2, f) if verify_deformation(deformation([T, T1], ctx)).ok]
print(len(firsts), "first-order terms for", T.tolist())

T1 = firsts[1]
ok, (dI, dII) = infinitesimal_is_cocycle(deformation([T, T1], ctx))
print("cocycle:", ok)

T1b = f.reduce(T1 + partial_T(chi, T, ctx))
r = same_class_check(T1, T1b, T, ctx)
print(r.same, r.witness.tolist())

# The explicit pair (phi_t, psi_t) built from chi, checked as a morphism of
# truncated operators.  With a nonzero cocycle (F, G) the order-one rho and
# theta conditions can fail even though the two terms are in the same class.

d, d2 = deformation([T, T1], ctx), deformation([T, T1b], ctx)
print(verify_equivalence(d, d2, EquivalencePair(chi)))

# With F = G = 0 on the same algebra the pair works for every first-order term.

A = induced_hly_from_hom_lie(L)
ctx0 = context(A, adjoint_rep(A))
ok = total = 0
for T in search_twisted_ops(ctx0):
    for T1 in all_matrices(2, 2, f):
        d = deformation([T, T1], ctx0)
        if not verify_deformation(d).ok:
            continue
        d2 = deformation([T, f.reduce(T1 + partial_T(chi, T, ctx0))], ctx0)
        ok += verify_equivalence(d, d2, EquivalencePair(chi)).ok
        total += 1
print(ok, "of", total)
