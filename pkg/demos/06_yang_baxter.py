#!/usr/bin/env python3
"""Yang-Baxter solutions and their hom-deformations.

The tensor flip solves the Yang-Baxter relation on any space.  Any
unipotent beta commutes with flip (x) flip, so twisting produces an exact
solution of the hom-Yang-Baxter equation with twisting map beta.
"""
from homprop.algebra import check_algebra, eval_term
from homprop.builtins import ybe
from homprop.corpus import flip_beta, flip_ybe
from homprop.presentation import homify_multiplicative
from homprop.twist import derived_sequence, yau_twist

p = ybe()
lam = flip_ybe()
print("flip solves the Yang-Baxter relation:",
      check_algebra(lam, p).all_passed())

beta = flip_beta()
print("beta =", [[str(v) for v in row] for row in beta.entries])

result, target = yau_twist(lam, beta, p, "multiplicative")
print("hom-Yang-Baxter structure verified:", result.verified.all_passed())

b = p.signature["braiding"]
print("twisted operator (beta (x) beta) . flip:")
for row in result.twisted[b].entries:
    print("  ", [str(v) for v in row])

derived = derived_sequence(result.twisted, target, 1)
alpha = target.twisting[0]
print("derived solution verified:", derived.verified.all_passed())
print("its twisting map is beta^2 =",
      [[str(v) for v in row] for row in derived.twisted[alpha].entries])
