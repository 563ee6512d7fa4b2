"""Working with Cayley tables.

A finite quasigroup is an n x n Latin square: every row and every column is a
permutation of {0..n-1}.  This script builds a few tables, derives the two
division operations, and plays with translations, parastrophes and isotopes.
"""

import numpy as np

from quasilab import ParastropheSelector, Permutation, Quasigroup, from_table

# Subtraction mod 4: table[x][y] = (x - y) % 4.  Rows are permutations
# (subtract y), columns are permutations (subtract from x), so it is Latin.
sub4 = from_table(4, [[(x - y) % 4 for y in range(4)] for x in range(4)], label="x - y mod 4")
print(sub4)
print()

# The divisions are read off the table: ldiv solves x*z = y, rdiv solves z*y = x.
print("1 * 3        =", sub4.mul(1, 3))
print("1 \\ 2        =", sub4.ldiv(1, 2), "  (the z with 1*z = 2)")
print("1 / 2        =", sub4.rdiv(1, 2), "  (the z with z*2 = 1)")

# The defining division laws hold for every pair:
for x in range(4):
    for y in range(4):
        assert sub4.mul(x, sub4.ldiv(x, y)) == y
        assert sub4.rdiv(sub4.mul(y, x), x) == y
print("division laws check out on all pairs")
print()

# Translations are the rows and columns as permutations.
print("left translation by 0 :", sub4.left_translation(0).image, " (y -> -y)")
print("right translation by 0:", sub4.right_translation(0).image, "(x -> x, a right unit)")
print()

# Parastrophes permute the slots of the relation x1*x2 = x3.  The
# (13)-parastrophe of addition is subtraction: a o b = c iff c + b = a.
add4 = Quasigroup((np.arange(4)[:, None] + np.arange(4)[None, :]) % 4, label="x + y mod 4")
print("(13)-parastrophe of addition equals subtraction:", add4.parastrophe("(13)") == sub4)

# Selectors compose; applying (13) twice is the identity.
p13 = ParastropheSelector.from_name("(13)")
assert (p13 * p13).sigma == (1, 2, 3)
assert sub4.parastrophe(p13).parastrophe(p13) == sub4
print("(13) is an involution")
print()

# An isotope relabels rows, columns and values independently:
# gamma(x o y) = alpha(x) * beta(y).  With alpha = gamma = identity and
# beta = negation, addition turns into subtraction.
e = Permutation.identity(4)
neg = Permutation([(-y) % 4 for y in range(4)])
print("isotope (e, -, e) of addition equals subtraction:", add4.isotope(e, neg, e) == sub4)

# Basic predicates come from one table scan.
print()
print("unit profile of x - y mod 4:", sub4.unit_predicates())
