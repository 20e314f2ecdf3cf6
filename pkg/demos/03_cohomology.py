# Cochain complex and cohomology dimensions
#
# Level n of the complex holds pairs of cochains of arities (2n, 2n + 1)
# (level 0 holds linear maps A -> V).  Coboundary matrices are assembled
# exactly and ranks computed by exact elimination.

from hlyforge import adjoint_rep, cohomology_dims, induced_hly_from_hom_lie
from hlyforge import adjoint_hom_lie_rep, hom_lie_2cocycles, hom_lie_pair, verify_23cocycle
from hlyforge.cohomology import Complex
from hlyforge.fixtures import h3, sl2

H = induced_hly_from_hom_lie(h3())
R = adjoint_rep(H)
for level in (0, 1):
    print(cohomology_dims(level, H, R))

# delta o delta starting at a level, returned as a matrix.  Arity 9 is above
# the default cap, so raise it for the start at level 2.

cx = Complex(H, R, cap=7)
m, zero = cx.delta_squared(1)
print(m.shape, zero)

# Hom-Lie 2-cocycles F give (2,3)-cocycles (F, G) with
# G(x, y, z) = F([x, y], alpha z) - rho(alpha z) F(x, y).

L = sl2()
Rl = adjoint_hom_lie_rep(L)
Z = hom_lie_2cocycles(L, Rl)
print(len(Z), "independent 2-cocycles")
Hc, Rc, pair = hom_lie_pair(Z[0], L, Rl)
print(verify_23cocycle(pair, Hc, Rc))
