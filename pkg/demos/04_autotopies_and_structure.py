"""Autotopies and the structure they reveal.

An autotopy is a permutation triple (alpha, beta, gamma) with
gamma(x*y) = alpha(x)*beta(y).  For a subtraction quasigroup x*y = x - y over
an abelian group, every autotopy factors as

    (L+_a, L+_(-b), L+_(a+b)) . theta

with group translations L+ and a group automorphism theta -- so there are
exactly n^2 * |Aut| of them, and the whole autotopy group is explicit.
"""

from quasilab import (
    a_pseudoautomorphisms,
    automorphism_group,
    automorphisms,
    autotopies,
    check_left_bol,
    check_moufang,
    component_transitive,
    core_distributive,
    core_groupoid,
    cyclic,
    decompose_autotopy,
    is_g,
    is_ga,
    nucleus,
    pseudoautomorphisms,
    recover_group,
    subtraction_quasigroup,
)

q = subtraction_quasigroup(cyclic(5))
g = recover_group(q)

ats = autotopies(q)
print(f"{q.label}: {len(ats)} autotopies = 5^2 * |Aut(Z5)| = 25 * {len(automorphism_group(g))}")

# Decompose a non-trivial one into (a, b, theta).
t = ats[37]
d = decompose_autotopy(q, t, group=g)
print("sample autotopy:")
print("  alpha =", t.alpha.image)
print("  beta  =", t.beta.image)
print("  gamma =", t.gamma.image)
print(f"  decomposition: a={d.a}, b={d.b}, theta={d.theta.image}")
print()

# Automorphisms of the quasigroup are exactly the group automorphisms.
print("Aut(Q,*) =", [p.image for p in automorphisms(q)])
print("Aut(Q,+) =", [p.image for p in automorphism_group(g)])
print()

# Pseudoautomorphisms: theta plus a companion element.  On the right they
# exist with every companion; on the left there are none at all (that side
# would force a left unit, which x - y over Z5 does not have).
right = pseudoautomorphisms(q, "right")
print("right pseudoautomorphism companions:", sorted({w.companion for w in right}))
print("left pseudoautomorphisms:", pseudoautomorphisms(q, "left"))

# A-pseudoautomorphisms are autotopies of shape (alpha, beta, beta) or
# (alpha, beta, alpha); their third components act transitively, which is
# the GA property.
rights = a_pseudoautomorphisms(q, "right")
lefts = a_pseudoautomorphisms(q, "left")
print("third components transitive:",
      component_transitive(rights, 3), component_transitive(lefts, 3))
print("GA profile:", is_ga(q))
print("G profile: ", is_g(q))
print()

# The classical predicate suite.
print("left Bol:", check_left_bol(q), " Moufang:", check_moufang(q))
print("core x o y = x*(y*x):")
print(core_groupoid(q))
print("core distributive:", core_distributive(q))
print("right nucleus:", sorted(nucleus(q, "right")), " (the 2-torsion of Z5)")
