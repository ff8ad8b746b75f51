"""
Building tournament matrices and computing exact ranks
=======================================================

A tournament orients every pair on {1, ..., n}.  Fixing nonzero vertex
weights (a_1, ..., a_n), the associated symmetric matrix stores the winner's
weight in each off-diagonal slot.  This walk-through builds a few of those
matrices and ranks them exactly over the rationals and over prime fields.
"""

from fractions import Fraction

from tourmat import (
    GF,
    QQ,
    WeightSeq,
    determinant,
    format_tournament,
    matrix_to_csv,
    parse_tournament,
    paley,
    rank,
    ratio_matrix,
    tournament_matrix,
    transitive,
    transitive_matrix,
)

# The reverse-ranked transitive tournament: vertex n beats everyone, so the
# (i, j) entry is the larger index's weight.
w = WeightSeq.of(QQ, [1, 2, 3])
d3 = transitive_matrix(w)
print("reverse-ranked transitive matrix, weights (1,2,3):")
print(matrix_to_csv(d3))

# The same matrix arises from the explicit tournament with order (3, 2, 1).
t = transitive(3, (3, 2, 1))
print("tournament:", format_tournament(t), "edges:", list(t.edges()))
assert tournament_matrix(t, w) == d3

# Rank is field-sensitive.  With all-ones weights the matrix J - I has
# determinant 2 at n = 3, so it loses a rank exactly in characteristic 2.
ones = WeightSeq.of(QQ, [1, 1, 1])
m_q = transitive_matrix(ones)
m_2 = transitive_matrix(WeightSeq.of(GF(2), [1, 1, 1]))
print("det over Q:", determinant(m_q), "| rank over Q:", rank(m_q).rank,
      "| rank over GF(2):", rank(m_2).rank)

# Any orientation can be written down directly as pair bits, in
# lexicographic pair order (1,2),(1,3),(2,3),...
cyclic = parse_tournament("n=3:101")
print("bits 101 gives edges:", list(cyclic.edges()))
profile = rank(tournament_matrix(cyclic, w))
print("rank:", profile.rank, "pivot columns:", profile.pivot_columns)

# Quadratic-residue tournaments are regular: every vertex wins (q-1)/2 games.
p7 = paley(7)
print("paley(7) out-degrees:", [p7.out_degree(v) for v in range(1, 8)])
w7 = WeightSeq.of(QQ, range(1, 8))
print("paley(7) matrix rank over Q:", rank(tournament_matrix(p7, w7)).rank)

# The ratio variant divides the winner's weight by the loser's; with weights
# (1, 2) the single entry is 1/2 or 2 depending on the orientation.
two = WeightSeq.of(QQ, [1, 2])
print("ratio entry, 1 -> 2:", ratio_matrix(parse_tournament("n=2:1"), two).at(0, 1))
print("ratio entry, 2 -> 1:", ratio_matrix(parse_tournament("n=2:0"), two).at(0, 1))
assert ratio_matrix(parse_tournament("n=2:1"), two).at(0, 1).value == Fraction(1, 2)
