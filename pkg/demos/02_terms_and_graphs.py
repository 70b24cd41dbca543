#!/usr/bin/env python3
"""From string-diagram expressions to layered normal forms to graphs.

A term is a tree of generators, units, permutations, horizontal and
vertical compositions.  Layerizing rewrites it, via the interchange law,
into a stack of full-width generator rows separated by permutation gaps;
lowering further to a decorated graph forgets exactly the unit padding, so
graph isomorphism is the right equality test for free-PROP monomials.
"""
from homprop.graphprop import isomorphic, term_to_graph
from homprop.term import (
    Gen,
    GeneratorSymbol,
    Tensor,
    UnitLeaf,
    VComp,
    infer_biarity,
    layerize,
    monomial_degree,
    vcomp,
)

mu = GeneratorSymbol("mu", 1, 2)

left = VComp(Gen(mu), Tensor(Gen(mu), UnitLeaf()))    # (xy)z
right = VComp(Gen(mu), Tensor(UnitLeaf(), Gen(mu)))   # x(yz)
print("biarity of (xy)z:", infer_biarity(left))

lm = layerize(right)
print("layers of x(yz):", [[str(f) for f in layer.factors] for layer in lm.layers])
print("monomial degree:", monomial_degree(lm))

g_left, g_right = term_to_graph(left), term_to_graph(right)
print("\ngraph of (xy)z:")
print(g_left.dump())
print("\n(xy)z vs x(yz) isomorphic?", isomorphic(g_left, g_right) is not None)

# The interchange law makes differently-written rectangles equal.
a, b, c, d = (GeneratorSymbol(n, 1, 1) for n in "abcd")
rect1 = Tensor(VComp(Gen(a), Gen(c)), VComp(Gen(b), Gen(d)))
rect2 = VComp(Tensor(Gen(a), Gen(b)), Tensor(Gen(c), Gen(d)))
print("\n(a.c) (x) (b.d) and (a (x) b).(c (x) d) layerize identically?",
      layerize(rect1) == layerize(rect2))
print("...and their graphs are isomorphic?",
      isomorphic(term_to_graph(rect1), term_to_graph(rect2)) is not None)
