"""The identity language.

Identities are equations between words over *, \\ and / with lowercase
variables.  All three operators share one precedence level and associate to
the left; parentheses group.  Checking an identity on a finite quasigroup is
an exhaustive sweep over all n^k variable assignments, done with one
vectorized table-lookup cascade.
"""

import numpy as np

from quasilab import (
    Quasigroup,
    builtin,
    builtin_names,
    counterexample,
    cyclic,
    eval_term,
    holds,
    parse_identity,
    parse_term,
    subtraction_quasigroup,
)

# The builtin catalog carries the identities this package revolves around.
for name in builtin_names():
    print(f"{name:>18}: {builtin(name)}")
print()

# The star of the show: the Neumann identity x*(yz*yx) = z.
neumann = builtin("neumann")
sub5 = subtraction_quasigroup(cyclic(5))
print("x - y mod 5 satisfies Neumann:", holds(sub5, neumann))

# Addition does not -- and the first failing assignment is reported
# (assignments are enumerated with the first variable cycling fastest).
add3 = Quasigroup((np.arange(3)[:, None] + np.arange(3)[None, :]) % 3)
print("x + y mod 3 satisfies Neumann:", holds(add3, neumann))
print("first failing assignment:", counterexample(add3, neumann))
print()

# Arbitrary identities parse from text.
flexible = parse_identity("x*(y*x) = (x*y)*x")
print("flexible law on x - y mod 5:", holds(sub5, flexible))
print("flexible law on x + y mod 3:", holds(add3, flexible))

# Single terms evaluate under explicit assignments.
t = parse_term("x*(y*x)")
print("x*(y*x) at x=1, y=3 over x - y mod 4:",
      eval_term(subtraction_quasigroup(cyclic(4)), t, {"x": 1, "y": 3}))
print()

# Division operators are part of the language; x\\(x*y) = y is one of the
# quasigroup axioms, so it holds everywhere.
axiom = parse_identity("x\\(x*y) = y")
print("x\\(x*y) = y on both tables:", holds(sub5, axiom) and holds(add3, axiom))
