# Comparing two families
#
# compare() looks for a vertex and colour relabelling first, then compares the
# invariants. Simplicity and pure infiniteness are not checked; pass them in
# only if you know they hold.

from kgraph_k import VertexMatrixFamily, compare

F = VertexMatrixFamily.from_lists

r = compare(F([[[3]], [[5]]]), F([[[5]], [[3]]]), simple=True, purely_infinite=True)
print(r.conclusion)
print("relabelling:", r.isomorphism)

r = compare(F([[[3]], [[5]]]), F([[[4]], [[7]]]))
print(r.conclusion)
