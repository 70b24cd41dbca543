#!/usr/bin/env python3
"""The twisting construction on the dual numbers.

Start from the associative algebra span(e, x) with x^2 = 0 and the
endomorphism beta = diag(1, 2), which is an algebra morphism.  Twisting
yields a multiplicative hom-associative structure with multiplication
beta . mu and twisting map beta; the derived sequence then twists it
repeatedly by its own twisting map.
"""
from homprop.builtins import associativity
from homprop.corpus import dual_numbers, dual_numbers_beta
from homprop.twist import derived_sequence, twist, yau_twist

p = associativity()
lam = dual_numbers()
beta = dual_numbers_beta(2)

result, target = yau_twist(lam, beta, p, "multiplicative")
print("yau twist verified:", result.verified.all_passed())
mu = p.signature["mu"]
print("twisted multiplication matrix (rows e,x; columns ee,ex,xe,xx):")
for row in result.twisted[mu].entries:
    print("  ", [str(v) for v in row])

alpha = target.twisting[0]
for n in (1, 2, 3):
    derived = derived_sequence(result.twisted, target, n)
    diag = [str(derived.twisted[alpha].entries[i][i]) for i in range(2)]
    print(f"derived step {n}: verified={derived.verified.all_passed()}, "
          f"alpha = diag({', '.join(diag)})")

# The theorem applies again to the hom-structure itself.
again = twist(result.twisted, beta, target)
print("twisting the hom-structure once more:", again.verified.all_passed())
