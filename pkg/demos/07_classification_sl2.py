#!/usr/bin/env python3
"""Partial classification of twisted hom-structures on sl2.

Twisting the simple 3-dimensional Lie bracket by two automorphisms gives
isomorphic hom-structures exactly when the automorphisms are conjugate in
the automorphism group.  The characteristic polynomial is a computable
conjugacy invariant: equal on a conjugate pair, distinct polynomials rule
out any witness.
"""
from homprop.builtins import SubgroupTag, as_g
from homprop.corpus import sl2, sl2_beta, sl2_gamma
from homprop.linalg import compose, inverse_map
from homprop.twist import conjugacy_invariant, iso_witness_check

p = as_g(SubgroupTag.A3)
lam = sl2()
beta = sl2_beta(2)           # h -> h, e -> 2e, f -> f/2
gamma = sl2_gamma()          # h -> -h, e <-> f
beta_conj = compose(compose(gamma, beta), inverse_map(gamma))

print("beta:      ", [[str(v) for v in row] for row in beta.entries])
print("conjugate: ", [[str(v) for v in row] for row in beta_conj.entries])

result = iso_witness_check(gamma, lam, beta, lam, beta_conj, p)
print("\ngamma witnesses an isomorphism of the twisted structures:",
      result.is_witness)
print("equivalence certified (conjugate twist injective):",
      result.certified_equivalence)
print("direct morphism check on the twisted structures:",
      result.direct_twisted_check.holds)

print("\ncharacteristic polynomials (1, c2, c1, c0):")
print("  beta:          ", [str(c) for c in conjugacy_invariant(beta)])
print("  conjugate:     ", [str(c) for c in conjugacy_invariant(beta_conj)])
print("  scaling by 3:  ", [str(c) for c in conjugacy_invariant(sl2_beta(3))])
print("distinct polynomials mean no witness can exist for that pair.")
