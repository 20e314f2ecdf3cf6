# Twisted O-operators: search, graphs and induced structures
#
# A context bundles an HLY algebra, a representation and a (2,3)-cocycle
# (F, G).  Over a small prime field every candidate T: V -> A can be tried.

from hlyforge import GF, adjoint_hom_lie_rep, context, hom_lie_pair
from hlyforge import graph_is_subalgebra, induced_rep_from_top, search_twisted_ops
from hlyforge import v_structure, verify_hly, verify_hly_rep, verify_twisted_op
from hlyforge.fixtures import aff2
from hlyforge.operators import all_matrices

f = GF(2)
L = aff2(f)
F = f.zeros((2, 2, 2))
F[0, 1, 0] = F[1, 0, 0] = 1
H, R, pair = hom_lie_pair(F, L, adjoint_hom_lie_rep(L))
ctx = context(H, R, pair.F, pair.G)

ops = search_twisted_ops(ctx)
print(len(ops), "of 16 candidates")

# T is a twisted O-operator exactly when its graph is a subalgebra of the
# twisted semidirect product.

agree = sum(verify_twisted_op(T, ctx).ok == graph_is_subalgebra(T, ctx).ok
            for T in all_matrices(2, 2, f))
print("graph test agrees on", agree)

# Each one makes V an HLY algebra, represented on A.

T = ops[-1]
V = v_structure(T, ctx)
print(T.tolist(), verify_hly(V).ok, verify_hly_rep(V, induced_rep_from_top(T, ctx)).ok)
print(V.binary.tolist())
