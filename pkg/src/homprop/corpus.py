"""Worked example algebras used by the demos, the CLI docs and the tests.

Each entry pairs a stock presentation with an exact structure map over a
small space and at least one non-identity endomorphism that is a morphism
of it, so the twisting constructions have something real to chew on:

- dual numbers  span(e, x), x^2 = 0        (associativity)
- sl2           span(h, e, f)              (alternating associativity sum)
- aff(1)        span(a, b), [a, b] = b     (binary bracket presentation)
- C2 group-like span(u, g), g^2 = u        (bialgebra)
- tensor flip   dim-2 V                    (Yang-Baxter relation)
- one odd line  span(1; t), t^2 = 0        (a-infinity tower, m2 only)
- odd Heisenberg span(t; z), [t, t] = z    (l-infinity tower, l2 only)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .algebra import StructureMap, structure_map
from .builtins import (
    SubgroupTag,
    a_infinity,
    as_g,
    associativity,
    bialgebra,
    generalized_bialgebra_plan,
    l_infinity,
    nambu,
    ybe,
)
from .linalg import GradedSpace, LinearMap, make_map, zero_map
from .presentation import HomPlan, Presentation, theta_min


def _diag(space: GradedSpace, values) -> LinearMap:
    n = space.dim
    rows = [[Fraction(values[r]) if r == c else Fraction(0) for c in range(n)]
            for r in range(n)]
    return make_map(space, space, rows)


# ---------------------------------------------------------------------------
# Dual numbers: e is the unit, x squares to zero.

DUAL_SPACE = GradedSpace.ungraded(2)


def dual_numbers() -> StructureMap:
    p = associativity()
    mu = p.signature["mu"]
    # columns e(x)e, e(x)x, x(x)e, x(x)x
    rows = [[1, 0, 0, 0],
            [0, 1, 1, 0]]
    return structure_map(
        DUAL_SPACE, {mu: make_map(DUAL_SPACE, DUAL_SPACE, rows, source_power=2)}
    )


def dual_numbers_beta(c: Union[int, Fraction] = 2) -> LinearMap:
    return _diag(DUAL_SPACE, [1, c])


# ---------------------------------------------------------------------------
# sl2 with [h,e] = 2e, [h,f] = -2f, [e,f] = h; basis order (h, e, f).

SL2_SPACE = GradedSpace.ungraded(3)

_SL2_BRACKET = {
    (0, 1): [(2, 1)],   # [h,e] = 2e
    (1, 0): [(-2, 1)],
    (0, 2): [(-2, 2)],  # [h,f] = -2f
    (2, 0): [(2, 2)],
    (1, 2): [(1, 0)],   # [e,f] = h
    (2, 1): [(-1, 0)],
}


def sl2() -> StructureMap:
    p = as_g(SubgroupTag.A3)
    mu = p.signature["mu"]
    rows = [[Fraction(0)] * 9 for _ in range(3)]
    for (i, j), images in _SL2_BRACKET.items():
        for coef, k in images:
            rows[k][3 * i + j] = Fraction(coef)
    return structure_map(
        SL2_SPACE, {mu: make_map(SL2_SPACE, SL2_SPACE, rows, source_power=2)}
    )


def sl2_beta(c: Union[int, Fraction] = 2) -> LinearMap:
    """h -> h, e -> c e, f -> f / c: a bracket morphism for any nonzero c."""
    return _diag(SL2_SPACE, [1, Fraction(c), 1 / Fraction(c)])


def sl2_gamma() -> LinearMap:
    """The automorphism h -> -h, e <-> f (an involution)."""
    rows = [[-1, 0, 0],
            [0, 0, 1],
            [0, 1, 0]]
    return make_map(SL2_SPACE, SL2_SPACE, rows)


# ---------------------------------------------------------------------------
# The 2-dimensional nonabelian Lie algebra as a binary bracket.

AFF_SPACE = GradedSpace.ungraded(2)


def aff1_bracket() -> StructureMap:
    p, _ = nambu(2)
    mu = p.signature["mu"]
    # [a,b] = b, [b,a] = -b, [a,a] = [b,b] = 0; basis order (a, b)
    rows = [[0, 0, 0, 0],
            [0, 1, -1, 0]]
    return structure_map(
        AFF_SPACE, {mu: make_map(AFF_SPACE, AFF_SPACE, rows, source_power=2)}
    )


def aff1_beta(c: Union[int, Fraction] = 2) -> LinearMap:
    return _diag(AFF_SPACE, [1, c])


# ---------------------------------------------------------------------------
# The group algebra of C2 with its group-like comultiplication.

C2_SPACE = GradedSpace.ungraded(2)


def c2_bialgebra() -> StructureMap:
    p = bialgebra()
    mu, delta = p.signature["mu"], p.signature["delta"]
    # basis (u, g): u unit, g^2 = u; Delta(u) = u(x)u, Delta(g) = g(x)g
    mu_rows = [[1, 0, 0, 1],
               [0, 1, 1, 0]]
    delta_rows = [[1, 0],
                  [0, 0],
                  [0, 0],
                  [0, 1]]
    return structure_map(C2_SPACE, {
        mu: make_map(C2_SPACE, C2_SPACE, mu_rows, source_power=2),
        delta: make_map(C2_SPACE, C2_SPACE, delta_rows, target_power=2),
    })


def c2_beta() -> LinearMap:
    """u -> u, g -> u: collapses the group to its identity."""
    return make_map(C2_SPACE, C2_SPACE, [[1, 1], [0, 0]])


# ---------------------------------------------------------------------------
# The tensor flip as a Yang-Baxter solution on a 2-dimensional space.

FLIP_SPACE = GradedSpace.ungraded(2)


def flip_ybe() -> StructureMap:
    p = ybe()
    b = p.signature["braiding"]
    rows = [[Fraction(0)] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            rows[2 * j + i][2 * i + j] = Fraction(1)
    return structure_map(
        FLIP_SPACE,
        {b: make_map(FLIP_SPACE, FLIP_SPACE, rows, source_power=2, target_power=2)},
    )


def flip_beta() -> LinearMap:
    """Unipotent upper-triangular map; the flip commutes with beta (x) beta."""
    return make_map(FLIP_SPACE, FLIP_SPACE, [[1, 1], [0, 1]])


# ---------------------------------------------------------------------------
# Graded examples: one even and one odd line.

DGA_SPACE = GradedSpace.from_dims({0: 1, 1: 1})


def exterior_dga(n_max: int = 3) -> StructureMap:
    """The free exterior algebra on one odd generator, packaged with m2 only
    and zero differential: a graded associative algebra."""
    p, _ = a_infinity(n_max)
    maps = {}
    for g in p.signature.generators:
        k = g.in_arity
        if k == 2:
            # basis (1, t): 1.1 = 1, 1.t = t.1 = t, t.t = 0
            rows = [[1, 0, 0, 0],
                    [0, 1, 1, 0]]
            maps[g] = make_map(DGA_SPACE, DGA_SPACE, rows, source_power=2)
        else:
            maps[g] = zero_map(DGA_SPACE, k, DGA_SPACE, 1, degree=g.degree)
    return structure_map(DGA_SPACE, maps)


def exterior_dga_beta(c: Union[int, Fraction] = 3) -> LinearMap:
    return _diag(DGA_SPACE, [1, c])


DGLA_SPACE = GradedSpace.from_dims({1: 1, 2: 1})


def odd_heisenberg_dgla(n_max: int = 3) -> StructureMap:
    """A two-line graded Lie algebra: an odd element t with [t, t] = z in
    even degree and z central, packaged with l2 only."""
    p, _ = l_infinity(n_max)
    maps = {}
    for g in p.signature.generators:
        k = g.in_arity
        if k == 2:
            # basis (t deg 1, z deg 2): [t,t] = z, everything else 0
            rows = [[0, 0, 0, 0],
                    [1, 0, 0, 0]]
            maps[g] = make_map(DGLA_SPACE, DGLA_SPACE, rows, source_power=2)
        else:
            maps[g] = zero_map(DGLA_SPACE, k, DGLA_SPACE, 1, degree=g.degree)
    return structure_map(DGLA_SPACE, maps)


def odd_heisenberg_beta(c: Union[int, Fraction] = 2) -> LinearMap:
    return _diag(DGLA_SPACE, [c, Fraction(c) ** 2])


# ---------------------------------------------------------------------------
# Registry for corpus-wide sweeps.


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    presentation: Presentation
    plan: Union[HomPlan, str, None]  # plan for the typed twist, or "multiplicative"
    algebra: Callable[[], StructureMap]
    betas: tuple[Callable[[], LinearMap], ...]


def corpus() -> tuple[CorpusEntry, ...]:
    """Every shipped (presentation, algebra, morphisms) triple."""
    as_p = associativity()
    a3_p = as_g(SubgroupTag.A3)
    nam_p, nam_plan = nambu(2)
    bi_p = bialgebra()
    ybe_p = ybe()
    ainf_p, ainf_plan = a_infinity(3)
    linf_p, linf_plan = l_infinity(3)
    return (
        CorpusEntry("dual-numbers", as_p, theta_min(as_p.labels), dual_numbers,
                    (dual_numbers_beta,)),
        CorpusEntry("sl2", a3_p, theta_min(a3_p.labels), sl2,
                    (sl2_beta,)),
        CorpusEntry("aff1-bracket", nam_p, nam_plan, aff1_bracket,
                    (aff1_beta,)),
        CorpusEntry("c2-bialgebra", bi_p, generalized_bialgebra_plan(), c2_bialgebra,
                    (c2_beta,)),
        CorpusEntry("flip-ybe", ybe_p, "multiplicative", flip_ybe,
                    (flip_beta,)),
        CorpusEntry("one-odd-line-dga", ainf_p, ainf_plan, exterior_dga,
                    (exterior_dga_beta,)),
        CorpusEntry("odd-heisenberg-dgla", linf_p, linf_plan, odd_heisenberg_dgla,
                    (odd_heisenberg_beta,)),
    )
