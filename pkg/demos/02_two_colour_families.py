# K-groups of rank-2 families
#
# With two commuting vertex matrices the answer is always exact:
# K0 = coker(d1) + Z^{rank H2} and K1 = H1.

import math

from kgraph_k import VertexMatrixFamily, kgroups, rank_torsion_crosscheck, unit_class

F = VertexMatrixFamily.from_lists

# a single vertex with n1 loops of one colour and n2 of the other
for n1, n2 in [(3, 5), (4, 7), (7, 13), (2, 9)]:
    fam = F([[[n1]], [[n2]]])
    rep = kgroups(fam)
    u = unit_class(fam)
    print(f"n = ({n1}, {n2})  gcd = {math.gcd(n1 - 1, n2 - 1)}  K0 = {rep.k0}  K1 = {rep.k1}"
          f"  unit generates: {u.generates()}")

# the same matrix used for both colours: K0 = K1 = coker(1 - M^T) + ker(1 - M^T)
m = [[1, 2, 0], [0, 1, 1], [1, 0, 1]]
rep = kgroups(F([m, m]))
print("(M, M):", rep.k0, "|", rep.k1)

# an independent check through closed rank and torsion formulas
print(rank_torsion_crosscheck(F([m, m])))
