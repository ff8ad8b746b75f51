"""
From self-bisecting set families to tournament matrices
========================================================

A family is self-bisecting when every pair of distinct member sets A, B has
|A n B| equal to half of |A| or half of |B|.  The +-1 incidence matrix of
such a family has a rigid Gram matrix, and (nJ - X X^T)/2 lands in the
tournament-matrix family for the weights (|A_1|, ..., |A_m|).  That bridge
is why a linear rank bound for the matrices would cap family sizes at
m <= (n + 1)/c.
"""

from fractions import Fraction

from tourmat import (
    SetFamily,
    check_bisecting,
    family_to_matrix,
    gram_check,
    incidence_pm1,
    matrix_to_csv,
    rank,
    size_bound_report,
    tau,
)

# The star around element 1: every pairwise intersection is {1}, and
# 2 * 1 = |A| for every member, so the family bisects itself.
star = SetFamily.of(5, [{1, 2}, {1, 3}, {1, 4}, {1, 5}])
print("star family on [5]:", [sorted(s) for s in star.sets])
print("bisecting:", check_bisecting(star).ok)

# tau picks the member whose size is twice the intersection (first wins ties)
a, b = star.sets[0], star.sets[1]
print("tau({1,2},{1,3}) =", sorted(tau(a, b)))

# The incidence matrix is 4 x 5 with a column of ones for element 1.
x = incidence_pm1(star)
print("\nincidence matrix:")
print(matrix_to_csv(x))

# Gram identities: diagonal n, off-diagonal n - 2|tau(A,B)|.
print("gram identities hold:", gram_check(star).ok)

# The reduction produces the constant-weight matrix 2(J - I), full rank.
matrix, weights = family_to_matrix(star)
print("\nreduced matrix (weights {}):".format(weights))
print(matrix_to_csv(matrix))
print("rank:", rank(matrix).rank)

# The size-bound report for a hypothesized rank constant c = 1/2.
print("size bound report:", size_bound_report(star, Fraction(1, 2)))

# A failing pair is reported with its witness.
broken = SetFamily.of(4, [{1, 2}, {3, 4}])
verdict = check_bisecting(broken)
print("\ndisjoint pair family bisecting:", verdict.ok, "witness indices:", verdict.witness)
