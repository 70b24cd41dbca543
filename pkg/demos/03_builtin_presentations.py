#!/usr/bin/env python3
"""Tour of the stock presentations and their unit-occurrence sets.

Each presentation stores its relations in a fixed layered representation,
which makes the set I of unit occurrences well defined; the counts below
are structural facts about those representations.
"""
from homprop.builtins import (
    AsVariant,
    SubgroupTag,
    as_g,
    as_variant,
    bialgebra,
    nambu,
    ybe,
)
from homprop.presentation import is_normal

print(f"{'presentation':<22}{'generators':<18}{'|I|':>4}  degrees")
for name, p in [
    ("associativity", as_g(SubgroupTag.E)),
    ("left pre-Lie", as_g(SubgroupTag.ID_12)),
    ("alternating (A3)", as_g(SubgroupTag.A3)),
    ("Lie-admissible (S3)", as_g(SubgroupTag.S3)),
    ("bialgebra", bialgebra()),
    ("binary bracket", nambu(2)[0]),
    ("ternary bracket", nambu(3)[0]),
    ("Yang-Baxter", ybe()),
]:
    gens = ",".join(g.name for g in p.signature.generators)
    degrees = is_normal(p).degrees()
    print(f"{name:<22}{gens:<18}{len(p.unit_index):>4}  {degrees}")

print("\nThe expanded associativity variants distinguish a subset S of I:")
for kind in AsVariant:
    p, plan = as_variant(kind)
    print(f"  {kind.value}: |I| = {len(p.unit_index)}, S = {plan.S}")

p3, plan3 = nambu(3)
print("\nternary bracket partition:",
      {name: labels for name, labels in plan3.blocks})
