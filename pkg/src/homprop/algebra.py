"""Algebras over a presented PROP: structure maps, evaluation, checking.

A structure map assigns to each generator an exact matrix of the right
shape and homological degree.  Terms evaluate by layerizing first and then
folding rows: units become identities, permutation gaps become signed
permutation matrices, layers tensor their factors, and successive rows
compose.  A relation holds exactly when its evaluated matrix is the zero
matrix; no tolerances exist anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from .linalg import (
    GradedSpace,
    LinearMap,
    compose,
    identity_map,
    maps_equal,
    perm_action,
    tensor,
    tensor_power,
    zero_map,
)
from .presentation import Presentation
from .term import (
    GeneratorSymbol,
    Layer,
    LayeredMonomial,
    LinearTerm,
    Term,
    UnitFactor,
    layerize,
)


class MissingAssignment(KeyError):
    pass


@dataclass(frozen=True)
class StructureMap:
    """Candidate morphism from a presented PROP into the endomorphism PROP
    of ``space``, given on generators."""

    space: GradedSpace
    assignments: tuple[tuple[GeneratorSymbol, LinearMap], ...]

    def __post_init__(self) -> None:
        for g, m in self.assignments:
            if (m.source, m.source_power) != (self.space, g.in_arity) or (
                m.target, m.target_power
            ) != (self.space, g.out_arity):
                raise ValueError(f"assignment for {g!r} has the wrong shape")
            if m.degree != g.degree:
                raise ValueError(
                    f"assignment for {g!r} has degree {m.degree}, expected {g.degree}"
                )

    def __getitem__(self, g: GeneratorSymbol) -> LinearMap:
        for sym, m in self.assignments:
            if sym == g:
                return m
        raise MissingAssignment(f"no assignment for {g!r}")

    def get(self, g: GeneratorSymbol) -> Optional[LinearMap]:
        for sym, m in self.assignments:
            if sym == g:
                return m
        return None

    def symbols(self) -> tuple[GeneratorSymbol, ...]:
        return tuple(g for g, _ in self.assignments)

    def with_assignments(
        self, new: Mapping[GeneratorSymbol, LinearMap]
    ) -> "StructureMap":
        pairs = tuple((g, new.get(g, m)) for g, m in self.assignments)
        extra = tuple((g, m) for g, m in new.items() if self.get(g) is None)
        return StructureMap(self.space, pairs + extra)


def structure_map(
    space: GradedSpace, assignments: Mapping[GeneratorSymbol, LinearMap]
) -> StructureMap:
    return StructureMap(space, tuple(assignments.items()))


def _layer_matrix(lam: StructureMap, layer: Layer) -> LinearMap:
    mats = []
    for f in layer.factors:
        if isinstance(f, UnitFactor):
            mats.append(identity_map(lam.space))
        else:
            m = lam.get(f)
            if m is None:
                raise MissingAssignment(f"no assignment for generator {f!r}")
            mats.append(m)
    out = mats[0]
    for m in mats[1:]:
        out = tensor(out, m)
    return out


def eval_monomial(lam: StructureMap, mono: LayeredMonomial) -> LinearMap:
    out = perm_action(mono.top.perm, lam.space)
    for layer in mono.layers:
        out = compose(out, _layer_matrix(lam, layer))
        if not layer.below.perm.is_identity():
            out = compose(out, perm_action(layer.below.perm, lam.space))
    return out


def eval_term(
    lam: StructureMap, t: Union[LinearTerm, LayeredMonomial, Term]
) -> LinearMap:
    """Evaluate a monomial or a sum in the endomorphism PROP of the carrier."""
    if isinstance(t, LinearTerm):
        n, m = t.biarity
        total = zero_map(lam.space, m, lam.space, n)
        for coef, mono in t.terms:
            total = total.add(eval_monomial(lam, mono).scale(Fraction(coef)))
        return total
    if isinstance(t, LayeredMonomial):
        return eval_monomial(lam, t)
    return eval_monomial(lam, layerize(t))


@dataclass(frozen=True)
class RelationCheck:
    relation_index: int
    passed: bool
    value: LinearMap

    @property
    def max_abs_entry(self) -> Fraction:
        return self.value.max_abs_entry()


@dataclass(frozen=True)
class CheckReport:
    checks: tuple[RelationCheck, ...]

    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[RelationCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def check_algebra(lam: StructureMap, p: Presentation) -> CheckReport:
    """Evaluate every relation; Passed means the matrix is exactly zero."""
    checks = []
    for r, rel in enumerate(p.relations):
        value = eval_term(lam, rel)
        checks.append(RelationCheck(r, value.is_zero(), value))
    return CheckReport(tuple(checks))


@dataclass(frozen=True)
class MorphismCheck:
    holds: bool
    witness_generator: Optional[GeneratorSymbol]
    difference: Optional[LinearMap]


def is_morphism(
    f: LinearMap,
    lam: StructureMap,
    rho: StructureMap,
    p: Presentation,
) -> MorphismCheck:
    """Whether ``f`` intertwines the two structures on every generator.

    Checking generators suffices: both sides extend to PROP morphisms, so
    agreement on generators forces agreement everywhere.
    """
    if f.degree != 0:
        raise ValueError("algebra morphisms must have degree 0")
    for g in p.signature.generators:
        left = compose(tensor_power(f, g.out_arity), lam[g])
        right = compose(rho[g], tensor_power(f, g.in_arity))
        if not maps_equal(left, right):
            diff = left.add(right.scale(Fraction(-1)))
            return MorphismCheck(False, g, diff)
    return MorphismCheck(True, None, None)
