# Checking Hom-Lie and Hom-Lie-Yamaguti axioms
#
# Algebras are given by structure constants.  A bracket on an n-dimensional
# space is an array of shape (n, n, n): entry [i, j, k] is the e_k coordinate
# of [e_i, e_j].  Indices start at 0.

from hlyforge import QQ, GF, hom_lie, skew_tensor, verify_hom_lie, verify_hly
from hlyforge import induced_hly_from_hom_lie, yau_twist, as_hom_lie
from hlyforge.fixtures import h3, sl2, shipped

# The Heisenberg algebra: [e1, e2] = e3 and nothing else.

L = h3()
print(verify_hom_lie(L))

# Twisting by an algebra morphism gives a Hom-Lie algebra whose twist is not
# the identity.  diag(1, 2, 2) respects the bracket of h3.

phi = QQ.array([[1, 0, 0], [0, 2, 0], [0, 0, 2]])
Lq = as_hom_lie(yau_twist(L, phi))
print(Lq.alpha.tolist())
print(Lq.bracket[0, 1].tolist())

# Any multiplicative Hom-Lie algebra carries an HLY structure with ternary
# bracket [[x, y], alpha z].  All six identities are checked on every basis tuple.

H = induced_hly_from_hom_lie(sl2())
rep = verify_hly(H)
print(rep.ok, rep.checked)

# A broken ternary bracket is reported per identity, with the failing basis
# tuples and their residual vectors.

bad = shipped()["h3_perturbed"][1]["algebra"]
rep = verify_hly(bad, cap=3)
print(rep)
for f in rep.failures:
    print(" ", f.name, f.index, f.residual)

# The same code runs over a prime field.

b = skew_tensor(2, {(0, 1): {1: 1}}, GF(3))
print(verify_hom_lie(hom_lie(GF(3).eye(2), b, GF(3))))
