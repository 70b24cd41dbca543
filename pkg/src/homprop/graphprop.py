"""Free PROPs as decorated directed (n,m)-graphs.

A graph has m input ports (bottom), n output ports (top) and vertices
decorated by generator symbols.  Edges run upward from an initial endpoint
(a graph input or a vertex output port) to a terminal endpoint (a graph
output or a vertex input port); ports are ordered and part of the data, so
isomorphisms must match them exactly.  The exceptional graph with n
parallel strands and no vertices is ``exceptional(n)``.

Horizontal composition is disjoint union, vertical composition grafting;
the unit and all permutations become bare strands, so interchange-equival-
ent terms lower to isomorphic graphs.  Isomorphism is decided by back-
tracking over vertices with (decoration, wiring) refinement, adequate for
the <= 12 vertex graphs produced here.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .term import (
    GeneratorSymbol,
    Layer,
    LayeredMonomial,
    UnitFactor,
    layerize,
    Term,
)

MAX_ISO_VERTICES = 12


class GraphSizeExceeded(ValueError):
    pass


class GraftMismatch(ValueError):
    pass


# Edge endpoints: ("in", i) graph input, ("out", j) graph output,
# ("vo", v, p) output port p of vertex v, ("vi", v, p) input port p of vertex v.
Endpoint = tuple


@dataclass(frozen=True)
class DecoratedGraph:
    n_out: int
    n_in: int
    decorations: tuple[GeneratorSymbol, ...]
    edges: frozenset[tuple[Endpoint, Endpoint]]

    def __post_init__(self) -> None:
        self._validate()

    def _validate(self) -> None:
        starts = [e[0] for e in self.edges]
        ends = [e[1] for e in self.edges]
        expected_starts = {("in", i) for i in range(1, self.n_in + 1)} | {
            ("vo", v, p)
            for v, g in enumerate(self.decorations)
            for p in range(1, g.out_arity + 1)
        }
        expected_ends = {("out", j) for j in range(1, self.n_out + 1)} | {
            ("vi", v, p)
            for v, g in enumerate(self.decorations)
            for p in range(1, g.in_arity + 1)
        }
        if sorted(starts) != sorted(expected_starts) or len(set(starts)) != len(starts):
            raise ValueError("edge initial endpoints must hit every source port exactly once")
        if sorted(ends) != sorted(expected_ends) or len(set(ends)) != len(ends):
            raise ValueError("edge terminal endpoints must hit every sink port exactly once")
        self._check_acyclic()

    def _check_acyclic(self) -> None:
        succ: dict[int, set[int]] = {v: set() for v in range(len(self.decorations))}
        for (a, b) in self.edges:
            if a[0] == "vo" and b[0] == "vi":
                succ[a[1]].add(b[1])
        seen: dict[int, int] = {}  # 0 = visiting, 1 = done

        def visit(v: int) -> None:
            state = seen.get(v)
            if state == 1:
                return
            if state == 0:
                raise ValueError("directed cycle created")
            seen[v] = 0
            for w in succ[v]:
                visit(w)
            seen[v] = 1

        for v in succ:
            visit(v)

    def dump(self) -> str:
        """Deterministic text form for golden-file comparisons."""
        lines = [f"graph ({self.n_out},{self.n_in})"]
        for v, g in enumerate(self.decorations):
            lines.append(f"  v{v}: {g.name} ({g.out_arity},{g.in_arity})")
        for a, b in sorted(self.edges):
            lines.append(f"  {a} -> {b}")
        return "\n".join(lines)


def exceptional(n: int) -> DecoratedGraph:
    return DecoratedGraph(
        n, n, (), frozenset((("in", i), ("out", i)) for i in range(1, n + 1))
    )


def corolla(g: GeneratorSymbol) -> DecoratedGraph:
    edges = {(("in", i), ("vi", 0, i)) for i in range(1, g.in_arity + 1)}
    edges |= {(("vo", 0, p), ("out", p)) for p in range(1, g.out_arity + 1)}
    return DecoratedGraph(g.out_arity, g.in_arity, (g,), frozenset(edges))


def permutation_graph(images: tuple[int, ...]) -> DecoratedGraph:
    """Strand i enters at input i and exits at output images[i-1]."""
    n = len(images)
    return DecoratedGraph(
        n, n, (), frozenset((("in", i), ("out", images[i - 1])) for i in range(1, n + 1))
    )


def _shift_endpoint(e: Endpoint, dv: int, din: int, dout: int) -> Endpoint:
    if e[0] == "in":
        return ("in", e[1] + din)
    if e[0] == "out":
        return ("out", e[1] + dout)
    if e[0] == "vo":
        return ("vo", e[1] + dv, e[2])
    return ("vi", e[1] + dv, e[2])


def disjoint_union(a: DecoratedGraph, b: DecoratedGraph) -> DecoratedGraph:
    """a's ports precede b's in the combined orderings."""
    dv, din, dout = len(a.decorations), a.n_in, a.n_out
    edges = set(a.edges)
    edges |= {
        (_shift_endpoint(x, dv, din, dout), _shift_endpoint(y, dv, din, dout))
        for x, y in b.edges
    }
    return DecoratedGraph(
        a.n_out + b.n_out, a.n_in + b.n_in, a.decorations + b.decorations, frozenset(edges)
    )


def graft(upper: DecoratedGraph, lower: DecoratedGraph) -> DecoratedGraph:
    """Fuse output j of ``lower`` to input j of ``upper``."""
    if upper.n_in != lower.n_out:
        raise GraftMismatch(f"grafting {upper.n_in} inputs onto {lower.n_out} outputs")
    dv = len(lower.decorations)
    up_from_input: dict[int, Endpoint] = {}
    up_edges = []
    for a, b in upper.edges:
        b2 = _shift_endpoint(b, dv, 0, 0) if b[0] != "out" else b
        a2 = _shift_endpoint(a, dv, 0, 0) if a[0] != "in" else a
        if a[0] == "in":
            up_from_input[a[1]] = b2
        else:
            up_edges.append((a2, b2))
    edges = set(up_edges)
    for a, b in lower.edges:
        if b[0] == "out":
            edges.add((a, up_from_input[b[1]]))
        else:
            edges.add((a, b))
    return DecoratedGraph(
        upper.n_out, lower.n_in, lower.decorations + upper.decorations, frozenset(edges)
    )


def term_to_graph(m: Term | LayeredMonomial) -> DecoratedGraph:
    """Lower a monomial to its decorated graph; permutations and units leave
    no vertices."""
    mono = layerize(m)
    g = permutation_graph(mono.top.perm.images)
    for layer in mono.layers:
        row = _layer_graph(layer)
        g = graft(g, row)
        g = graft(g, permutation_graph(layer.below.perm.images))
    return g


def _layer_graph(layer: Layer) -> DecoratedGraph:
    g: Optional[DecoratedGraph] = None
    for f in layer.factors:
        piece = exceptional(1) if isinstance(f, UnitFactor) else corolla(f)
        g = piece if g is None else disjoint_union(g, piece)
    assert g is not None
    return g


def _strand_map(g: DecoratedGraph) -> dict[Endpoint, Endpoint]:
    return {a: b for a, b in g.edges}


def isomorphic(a: DecoratedGraph, b: DecoratedGraph) -> Optional[dict[int, int]]:
    """A decoration- and port-preserving isomorphism as a vertex map, or None.

    Graph input/output port labels must correspond identically; vertex ports
    must match index by index.
    """
    if len(a.decorations) > MAX_ISO_VERTICES or len(b.decorations) > MAX_ISO_VERTICES:
        raise GraphSizeExceeded(f"isomorphism search limited to {MAX_ISO_VERTICES} vertices")
    if (a.n_in, a.n_out) != (b.n_in, b.n_out):
        return None
    if sorted(g.name for g in a.decorations) != sorted(g.name for g in b.decorations):
        return None
    a_next, b_next = _strand_map(a), _strand_map(b)

    def compatible(va: int, vb: int, partial: dict[int, int]) -> bool:
        if a.decorations[va] != b.decorations[vb]:
            return False
        ga = a.decorations[va]
        # Outgoing wiring must match under the partial map.
        for p in range(1, ga.out_arity + 1):
            ta, tb = a_next[("vo", va, p)], b_next[("vo", vb, p)]
            if ta[0] != tb[0]:
                return False
            if ta[0] == "out":
                if ta != tb:
                    return False
            else:
                if ta[2] != tb[2]:
                    return False
                if ta[1] in partial and partial[ta[1]] != tb[1]:
                    return False
        return True

    def full_check(partial: dict[int, int]) -> bool:
        # Verify the whole edge set once the vertex map is total.
        def rename(e: Endpoint) -> Endpoint:
            if e[0] in ("vo", "vi"):
                return (e[0], partial[e[1]], e[2])
            return e

        return {(rename(x), rename(y)) for x, y in a.edges} == set(b.edges)

    n = len(a.decorations)
    order = sorted(range(n), key=lambda v: (a.decorations[v].name, v))
    candidates = {
        va: [vb for vb in range(n) if b.decorations[vb] == a.decorations[va]]
        for va in range(n)
    }

    def search(idx: int, partial: dict[int, int], used: set[int]) -> Optional[dict[int, int]]:
        if idx == n:
            if full_check(partial):
                return dict(partial)
            return None
        va = order[idx]
        for vb in candidates[va]:
            if vb in used:
                continue
            partial[va] = vb
            if compatible(va, vb, partial):
                found = search(idx + 1, partial, used | {vb})
                if found is not None:
                    return found
            del partial[va]
        return None

    return search(0, {}, set())


def graphs_equal_as_elements(a: DecoratedGraph, b: DecoratedGraph) -> bool:
    """Equality of free-PROP monomials modulo graph isomorphism.

    Coinvariants under graph automorphisms can in principle introduce signs
    when odd-degree decorations meet a nontrivial automorphism; that case is
    outside the supported builtins and is rejected loudly.
    """
    iso = isomorphic(a, b)
    if iso is None:
        return False
    if any(g.degree % 2 for g in a.decorations):
        auto = _has_nontrivial_automorphism(a)
        if auto:
            raise NotImplementedError(
                "sign-twisted coinvariants: odd-degree decorations with a "
                "nontrivial graph automorphism are not supported"
            )
    return True


def _has_nontrivial_automorphism(g: DecoratedGraph) -> bool:
    n = len(g.decorations)
    if n < 2:
        return False
    nxt = _strand_map(g)

    def is_automorphism(perm: tuple[int, ...]) -> bool:
        mapping = {("in", i): ("in", i) for i in range(1, g.n_in + 1)}

        def rename(e: Endpoint) -> Endpoint:
            if e[0] == "vo":
                return ("vo", perm[e[1]], e[2])
            if e[0] == "vi":
                return ("vi", perm[e[1]], e[2])
            return e

        if any(g.decorations[v] != g.decorations[perm[v]] for v in range(n)):
            return False
        renamed = {(rename(a), rename(b)) for a, b in g.edges}
        return renamed == set(g.edges)

    for perm in itertools.permutations(range(n)):
        if perm != tuple(range(n)) and is_automorphism(perm):
            return True
    return False
