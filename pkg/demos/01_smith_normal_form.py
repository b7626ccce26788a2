# Smith normal form over the integers
#
# Every integer matrix A can be brought to diagonal form S = U A V with
# unimodular U and V. The diagonal entries divide one another and describe
# the cokernel Z^m / A Z^n completely.

from kgraph_k import IntMatrix, cokernel_invariants, kernel_basis, snf

a = IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
d = snf(a)
print("invariant factors:", d.invariant_factors)
print("S =", d.s.tolist())

# the transforms really are unimodular, and we also get their inverses for free
assert d.u @ a @ d.v == d.s
assert d.u @ d.u_inv == IntMatrix.identity(3)

# the cokernel as a canonical abelian group
print("coker A =", cokernel_invariants(a))

# a saturated kernel basis comes from the trailing columns of V
row = IntMatrix.from_rows([[-2, -4, 6]])
k = kernel_basis(row)
print("ker of", row.tolist(), "has basis columns", [k.col(j) for j in range(k.cols)])
assert (row @ k).is_zero()
