# NS-Hom-Lie and NS-HLY algebras
#
# An NS-HLY algebra splits the brackets of an HLY algebra into a product o,
# a skew product v, a ternary product {,,} and a skew ternary [,,].

from hlyforge import GF, QQ, adjoint_hom_lie_rep, context, hom_lie_pair
from hlyforge import ns_from_twisted_op, ns_hly_from_ns_lie, ns_hom_lie, search_twisted_ops
from hlyforge import subadjacent_hly, v_structure, verify_hly, verify_ns_hly, verify_ns_hom_lie
from hlyforge.fixtures import aff2q, pre_lie_circ

# A pre-Lie product with no v part.

N = ns_hom_lie(QQ.eye(2), pre_lie_circ(), QQ.zeros((2, 2, 2)))
print(verify_ns_hom_lie(N))
print(verify_ns_hly(ns_hly_from_ns_lie(N)).ok)

# Every twisted O-operator induces one, and its derived brackets are the
# V-structure of the operator.

f = GF(5)
L = aff2q(f)
Rl = adjoint_hom_lie_rep(L)
H, R, pair = hom_lie_pair(L.field.zeros((2, 2, 2)), L, Rl)
ctx = context(H, R, pair.F, pair.G)
for T in search_twisted_ops(ctx)[:4]:
    NS = ns_from_twisted_op(T, ctx)
    S, _ = subadjacent_hly(NS)
    V = v_structure(T, ctx)
    print(T.tolist(), verify_ns_hly(NS).ok, verify_hly(S).ok,
          f.equal(S.binary, V.binary) and f.equal(S.ternary, V.ternary))
