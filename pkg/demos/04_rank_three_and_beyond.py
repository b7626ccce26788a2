# What can be said for k = 3 and k >= 4
#
# For k = 3 the K-groups are pinned down when d1 is surjective. When d3 is
# injective K1 is exact and K0 comes as an extension; otherwise the report
# gives bounds on both groups. For k >= 4 we stop at the E2 page.

from kgraph_k import VertexMatrixFamily, e2_page, k3_unital_rank_check, kgroups

F = VertexMatrixFamily.from_lists

for mats in ([[[2]], [[2]], [[2]]], [[[3]], [[3]], [[3]]], [[[1]], [[1]], [[1]]]):
    rep = kgroups(F(mats))
    print(mats, "->", rep.k0_status, rep.k1_status, rep.notes)
    if rep.k0_constraint is not None:
        c = rep.k0_constraint
        print("    K0 sits between", c.sub, "and", c.quot, "order", c.order)

print(k3_unital_rank_check(F([[[2]], [[2]], [[2]]])))

fam4 = F([[[1]], [[1]], [[1]], [[1]]])
print("E2 page for k = 4:", [str(h) for h in e2_page(fam4).homology])
print("bounds:", kgroups(fam4).bounds)
