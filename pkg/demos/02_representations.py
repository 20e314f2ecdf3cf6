# Representations and semidirect products
#
# A representation of an HLY algebra A on V is a twist beta of V together
# with rho: A -> End(V) and theta: A x A -> End(V).  rho[i] is the matrix of
# rho(e_i), theta[i, j] the matrix of theta(e_i, e_j).

import numpy as np

from hlyforge import QQ, HLYRep, adjoint_rep, induced_hly_from_hom_lie
from hlyforge import semidirect, verify_hly, verify_hly_rep
from hlyforge.fixtures import h3, sl2q

H = induced_hly_from_hom_lie(sl2q())
R = adjoint_rep(H)
print(verify_hly_rep(H, R))

# The representation axioms hold exactly when A + V with the semidirect
# brackets is again an HLY algebra.

S = semidirect(H, R)
print(S.dim, verify_hly(S).ok)

# Bump single theta entries of the adjoint representation of h3 and compare
# both checks.  They never disagree; some bumps even give new representations.

H = induced_hly_from_hom_lie(h3())
base = adjoint_rep(H)
tally = {}
for idx in np.ndindex(base.theta.shape):
    th = base.theta.copy()
    th[idx] += 1
    R = HLYRep(base.beta, base.rho, th, QQ)
    key = (verify_hly_rep(H, R).ok, verify_hly(semidirect(H, R, check=False)).ok)
    tally[key] = tally.get(key, 0) + 1
print(tally)
