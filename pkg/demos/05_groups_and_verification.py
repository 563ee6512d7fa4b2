"""Abelian groups, recovery, and the one-shot claim suite.

Every quasigroup satisfying the Neumann identity is x*y = x - y over an
abelian group, and the group can be reconstructed from the table alone:
take the right unit e and set x + y := x*(e*y).  This script runs the
round trip and then the package's full verification suite.
"""

import numpy as np

from quasilab import (
    SearchOptions,
    builtin,
    enumerate_abelian_groups,
    find_all,
    recover_group,
    run_verification,
    subtraction_quasigroup,
    two_torsion,
)

# There are three abelian groups of order 8; each yields a Neumann quasigroup.
for g in enumerate_abelian_groups(8):
    q = subtraction_quasigroup(g)
    r = recover_group(q)
    print(f"{g.label:<10} -> subtraction table -> recovered, identical: "
          f"{np.array_equal(r.table, g.table)}; 2-torsion {sorted(two_torsion(g))}")
print()

# The recovery also runs on search output: every order-5 Neumann model is a
# relabeled Z5 subtraction table, and recover_group digs the group out.
models = find_all(SearchOptions(order=5, identities=(builtin("neumann"),)))
print(f"order-5 Neumann models: {len(models)}, all recover their group:",
      all(recover_group(m).order == 5 for m in models))
print()

# Finally, the claim suite: every structural statement the package is built
# around, checked exhaustively at desk scale.  The same report is available
# on the command line as `quasilab verify-paper`.
report = run_verification()
print(report.to_text())
