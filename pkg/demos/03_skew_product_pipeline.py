# Building a 3-graph as a skew product and computing its invariants
#
# Take three bouquets of 3 loops, form their product, then take the Z/2 skew
# product along a labelling of the edges. The result has two vertices.

from kgraph_k import (
    FiniteAbelianGroup,
    bouquet,
    build_complex,
    kgroups,
    matrices_from_skeleton,
    product,
    skew_product,
    snf,
)

factors = [
    bouquet(3, labels=[[0], [0], [1]]),
    bouquet(3, labels=[[0], [0], [1]]),
    bouquet(3, labels=[[1], [1], [1]]),
]
skeleton = skew_product(product(factors), FiniteAbelianGroup((2,)))
fam = matrices_from_skeleton(skeleton)
print("vertices:", fam.vertices)
for i, m in enumerate(fam.matrices, 1):
    print(f"M{i} =", m.tolist())

cx = build_complex(fam)
for p in (1, 2, 3):
    print(f"S(d{p}) =", snf(cx.d(p)).invariant_factors)

rep = kgroups(fam)
print("K1 =", rep.k1, f"[{rep.k1_status}]")
c = rep.k0_constraint
print(f"K0: 0 -> {c.sub} -> K0 -> {c.quot} -> 0, order {c.order}  [{rep.k0_status}]")
print("notes:", rep.notes)

# relabelling one factor changes the picture entirely
factors[0] = bouquet(2, labels=[[0], [1]])
factors[1] = bouquet(3, labels=[[0], [1], [1]])
fam2 = matrices_from_skeleton(skew_product(product(factors), FiniteAbelianGroup((2,))))
rep2 = kgroups(fam2)
print("second construction: K0 =", rep2.k0, " K1 =", rep2.k1, f"[{rep2.k0_status}]")
