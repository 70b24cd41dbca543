#!/usr/bin/env python3
"""Hom-ification: replacing unit occurrences with twisting generators.

The typed flavour follows a plan (which units, grouped how); the
multiplicative flavour replaces everything with a single alpha and also
makes alpha commute with every generating operation.  Projections send the
twisting generators back to the unit and recover the original relations.
"""
from homprop.builtins import associativity, bialgebra, generalized_bialgebra_plan, ybe
from homprop.presentation import (
    apply_substitution_to_relations,
    homify_multiplicative,
    homify_typed,
    projection_pi,
    relations_match,
    simplify_relation,
    theta_min,
)
from homprop.serialize import dumps, presentation_to_json


def show_relation(rel):
    pieces = []
    for coef, mono in rel.terms:
        rows = " . ".join(
            "(" + " (x) ".join(str(f) for f in layer.factors) + ")"
            for layer in mono.layers
        )
        pieces.append(f"{'+' if coef > 0 else '-'} {rows}")
    return " ".join(pieces)


p = associativity()
q = homify_typed(p, theta_min(p.labels))
print("associativity, hom-ified with one twisting map:")
print("  ", show_relation(q.relations[0]))

q_mult = homify_multiplicative(p)
print("\nmultiplicative version adds the compatibility relation:")
print("  ", show_relation(q_mult.relations[0]))

bi = bialgebra()
gen = homify_typed(bi, generalized_bialgebra_plan())
print("\ngeneralized hom-bialgebra (two twisting maps):")
for rel in gen.relations:
    print("  ", show_relation(rel))

hybe = homify_multiplicative(ybe())
print("\nthe hom-Yang-Baxter presentation has generators:",
      [g.name for g in hybe.signature.generators])

# Round trip: project the twisting maps back to the unit.
projected = apply_substitution_to_relations(q.relations, projection_pi(q, "pi"))
print("\nprojection recovers associativity?",
      relations_match(projected[0], p.relations[0]))
compat_projected = apply_substitution_to_relations(
    q_mult.relations, projection_pi(q_mult, "pi2")
)
print("compatibility relation collapses to zero?",
      simplify_relation(compat_projected[0]) is None)

print("\nserialized hom-presentation (excerpt):")
print("\n".join(dumps(presentation_to_json(q)).splitlines()[:12]))
