#!/usr/bin/env python3
"""Symmetric-group bookkeeping: composition, signs, blocks, Koszul rules.

Everything downstream rides on two conventions fixed here: compose(p, q)
applies q first, and a permutation moves the content of slot i to slot p(i).
"""
from homprop.perm import (
    GradedTuple,
    Permutation,
    block_permutation,
    compose,
    from_cycle,
    koszul_sign,
    sign,
    unshuffles,
)

cycle = from_cycle(3, (1, 2, 3))
swap = Permutation((2, 1, 3))
print("3-cycle:", cycle, " swap:", swap)
print("cycle . swap =", compose(cycle, swap), "(the transposition (1 3))")
print("signs:", sign(cycle), sign(swap), sign(compose(cycle, swap)))

# The block move used by the n-ary bracket relation: for n = 3, i = 2 it
# sends (x1, x2, y1, y2, y3) to (y1, x1, x2, y2, y3).
b = block_permutation(3, 2)
print("\nblock_permutation(3, 2) =", b)
print("acting on labels:", b.apply(("x1", "x2", "y1", "y2", "y3")))

# Unshuffles index the l-infinity relation terms.
print("\n(2,2)-unshuffles:", [p.images for p in unshuffles(2, 2)])

# Koszul signs: odd things passing odd things cost -1.
odd_pair = GradedTuple((1, 1))
print("\nswapping two odd elements:", koszul_sign(Permutation((2, 1)), odd_pair))
print("cycling three odd elements:", koszul_sign(cycle, GradedTuple((1, 1, 1))),
      "(two odd-odd inversions cancel)")
