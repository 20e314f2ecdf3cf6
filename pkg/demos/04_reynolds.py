# Rota-Baxter and weighted Reynolds operators

from hlyforge import QQ, induced_hly_from_hom_lie, is_hly_morphism, reynolds_descendent
from hlyforge import verify_hly, verify_rota_baxter, verify_weighted_reynolds
from hlyforge.fixtures import h3, p1, sl2

# The projection onto e1 along span(e2, e3) is a weight-zero Rota-Baxter
# operator on the Heisenberg algebra.

L = h3()
H = induced_hly_from_hom_lie(L)
R = p1()
print(verify_rota_baxter(R, L))

# Its descendent brackets [x,y]_R = [Rx,y] + [x,Ry] + lam [Rx,Ry] (and the
# ternary analogue with mu) form a new HLY algebra, and R maps it to H.

D = reynolds_descendent(R, 0, 0, H)
print(verify_hly(D).ok, is_hly_morphism(R, D, H).ok)
print(D.binary[0, 1].tolist())

# The identity is a weighted Reynolds operator for weights (-1, -2).

Hs = induced_hly_from_hom_lie(sl2())
print(verify_weighted_reynolds(QQ.eye(3), -1, -2, Hs).ok)
print(verify_weighted_reynolds(QQ.eye(3), 0, 0, Hs))
