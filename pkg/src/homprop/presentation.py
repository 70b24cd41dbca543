"""PROP presentations and the hom-ification procedures.

A presentation is a signature plus relations stored in canonical layered
form; the unit-occurrence set I is recomputed from that representation, so
occurrence labels are reproducible.  Hom-ification replaces selected unit
occurrences with fresh (1,1) twisting generators:

- the multiplicative flavour adds a single ``alpha``, replaces every unit,
  and adds one compatibility relation per original generator;
- the typed flavour takes a plan (a subset S of I partitioned into named
  blocks), adds one twisting generator per block and adds no compatibility
  relations.

The projections send twisting generators back to the unit (or to the single
multiplicative ``alpha``); applying one to a hom-ified presentation recovers
the original relations up to graph isomorphism.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .graphprop import isomorphic, term_to_graph
from .term import (
    UNIT,
    GeneratorSymbol,
    LinearTerm,
    Signature,
    UnitOccurrence,
    index_units,
    monomial_degree,
    substitute,
)


class PlanError(ValueError):
    """Invalid subset/partition data for a hom-ification."""


class NameCollision(ValueError):
    """A twisting generator name already exists in the signature."""


@dataclass(frozen=True)
class Presentation:
    signature: Signature
    relations: tuple[LinearTerm, ...]
    unit_index: tuple[UnitOccurrence, ...] = field(init=False)

    def __post_init__(self) -> None:
        known = set(self.signature.generators)
        for rel in self.relations:
            for _, mono in rel.terms:
                for g in mono.generators():
                    if g not in known:
                        raise ValueError(f"relation uses {g!r} not in the signature")
        object.__setattr__(self, "unit_index", index_units(self.relations))

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(o.label for o in self.unit_index)


@dataclass(frozen=True)
class HomPlan:
    """A subset S of occurrence labels with a partition into named blocks."""

    S: tuple[int, ...]
    blocks: tuple[tuple[str, tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        if not self.S:
            raise PlanError("S must be non-empty")
        covered: list[int] = []
        for name, labels in self.blocks:
            if not labels:
                raise PlanError(f"block {name!r} is empty")
            covered.extend(labels)
        if sorted(covered) != sorted(set(covered)):
            raise PlanError("blocks overlap")
        if set(covered) != set(self.S):
            raise PlanError("blocks must cover S exactly")

    def block_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.blocks)


def theta_min(S: Sequence[int], name: str = "alpha") -> HomPlan:
    """The trivial partition: one block, one twisting map."""
    labels = tuple(sorted(S))
    return HomPlan(labels, ((name, labels),))


def theta_max(S: Sequence[int]) -> HomPlan:
    """Singleton blocks: one twisting map per unit occurrence."""
    labels = tuple(sorted(S))
    return HomPlan(labels, tuple((f"alpha_{s}", (s,)) for s in labels))


@dataclass(frozen=True)
class HomPresentation(Presentation):
    """A hom-ified presentation remembering where it came from."""

    base: Presentation = None  # type: ignore[assignment]
    plan: Optional[HomPlan] = None
    kind: Literal["multiplicative", "typed"] = "typed"
    twisting: tuple[GeneratorSymbol, ...] = ()

    def covers_all_units(self) -> bool:
        if self.kind == "multiplicative":
            return True
        assert self.plan is not None
        return set(self.plan.S) == set(self.base.labels)


def _fresh_symbol(sig: Signature, name: str) -> GeneratorSymbol:
    if name in sig:
        raise NameCollision(f"generator {name!r} already exists; rename before hom-ifying")
    return GeneratorSymbol(name, 1, 1, 0)


def _replace_units(
    p: Presentation, targets: dict[int, GeneratorSymbol]
) -> tuple[LinearTerm, ...]:
    out = []
    for r, rel in enumerate(p.relations):
        assignment = {
            occ: targets[occ.label]
            for occ in p.unit_index
            if occ.relation_index == r and occ.label in targets
        }
        out.append(substitute(rel, assignment, relation_index=r) if assignment else rel)
    return tuple(out)


def _compatibility_relation(g: GeneratorSymbol, alpha: GeneratorSymbol) -> LinearTerm:
    from .perm import identity
    from .term import Interlayer, Layer, LayeredMonomial

    n, m = g.out_arity, g.in_arity
    first = LayeredMonomial(
        Interlayer(identity(n)),
        (
            Layer((g,), Interlayer(identity(m))),
            Layer((alpha,) * m, Interlayer(identity(m))),
        ),
    )
    second = LayeredMonomial(
        Interlayer(identity(n)),
        (
            Layer((alpha,) * n, Interlayer(identity(n))),
            Layer((g,), Interlayer(identity(m))),
        ),
    )
    return LinearTerm(((Fraction(1), first), (Fraction(-1), second)))


def homify_multiplicative(p: Presentation) -> HomPresentation:
    """Adjoin one twisting generator alpha, make it commute with every
    generator, and replace every unit occurrence in the relations by it."""
    alpha = _fresh_symbol(p.signature, "alpha")
    compat = tuple(_compatibility_relation(g, alpha) for g in p.signature.generators)
    replaced = _replace_units(p, {occ.label: alpha for occ in p.unit_index})
    return HomPresentation(
        signature=p.signature.extend([alpha]),
        relations=compat + replaced,
        base=p,
        plan=None,
        kind="multiplicative",
        twisting=(alpha,),
    )


def homify_typed(p: Presentation, plan: HomPlan) -> HomPresentation:
    """Replace the units of S blockwise by per-block twisting generators."""
    valid = set(p.labels)
    if not set(plan.S) <= valid:
        raise PlanError(f"plan labels {sorted(set(plan.S) - valid)} not in I")
    symbols = []
    targets: dict[int, GeneratorSymbol] = {}
    sig = p.signature
    for name, labels in plan.blocks:
        sym = _fresh_symbol(sig, name)
        sig = sig.extend([sym])
        symbols.append(sym)
        for lab in labels:
            targets[lab] = sym
    replaced = _replace_units(p, targets)
    return HomPresentation(
        signature=sig,
        relations=replaced,
        base=p,
        plan=plan,
        kind="typed",
        twisting=tuple(symbols),
    )


def projection_pi(
    q: HomPresentation, kind: Literal["pi", "pi1", "pi2"]
) -> dict[GeneratorSymbol, object]:
    """The symbol-level substitution realizing the projection maps.

    ``pi`` sends every twisting generator of a typed hom-ification to the
    unit; ``pi2`` does the same for the multiplicative alpha; ``pi1`` sends
    every typed twisting generator to ``alpha`` and exists only when S = I.
    """
    if kind == "pi":
        if q.kind != "typed":
            raise PlanError("pi projects a typed hom-ification")
        return {sym: UNIT for sym in q.twisting}
    if kind == "pi2":
        if q.kind != "multiplicative":
            raise PlanError("pi2 projects a multiplicative hom-ification")
        return {sym: UNIT for sym in q.twisting}
    if kind == "pi1":
        if q.kind != "typed":
            raise PlanError("pi1 projects a typed hom-ification")
        if not q.covers_all_units():
            raise PlanError("pi1 exists only when S = I")
        alpha = GeneratorSymbol("alpha", 1, 1, 0)
        return {sym: alpha for sym in q.twisting}
    raise ValueError(f"unknown projection {kind!r}")


def apply_substitution_to_relations(
    relations: Sequence[LinearTerm], mapping: dict
) -> tuple[LinearTerm, ...]:
    return tuple(substitute(rel, mapping, relation_index=r) for r, rel in enumerate(relations))


# ---------------------------------------------------------------------------
# Normality


@dataclass(frozen=True)
class RelationNormality:
    relation_index: int
    homogeneous: bool
    degree: Optional[int]
    witness: Optional[tuple[tuple[int, int], tuple[int, int]]]  # (monomial, degree) pair


@dataclass(frozen=True)
class NormalityReport:
    entries: tuple[RelationNormality, ...]

    def all_normal(self) -> bool:
        return all(e.homogeneous and (e.degree or 0) >= 1 for e in self.entries)

    def degrees(self) -> tuple[Optional[int], ...]:
        return tuple(e.degree for e in self.entries)


def is_normal(p: Presentation) -> NormalityReport:
    """Per relation: homogeneous of which degree, or a witness pair."""
    entries = []
    for r, rel in enumerate(p.relations):
        degs = [monomial_degree(m) for _, m in rel.terms]
        base = degs[0]
        bad = next((i for i, d in enumerate(degs) if d != base), None)
        if bad is None:
            entries.append(RelationNormality(r, True, base, None))
        else:
            entries.append(
                RelationNormality(r, False, None, ((0, base), (bad, degs[bad])))
            )
    return NormalityReport(tuple(entries))


# ---------------------------------------------------------------------------
# Relation comparison modulo graph isomorphism


def simplify_relation(rel: LinearTerm) -> Optional[LinearTerm]:
    """Combine graph-isomorphic monomials; None if everything cancels."""
    groups: list[tuple[Fraction, object, LinearTerm]] = []  # (coef, graph, monomial)
    kept: list[list] = []
    for coef, mono in rel.terms:
        g = term_to_graph(mono)
        for entry in kept:
            if entry[1].n_in == g.n_in and entry[1].n_out == g.n_out and isomorphic(entry[1], g):
                entry[0] += coef
                break
        else:
            kept.append([coef, g, mono])
    remaining = tuple((c, m) for c, _, m in kept if c != 0)
    if not remaining:
        return None
    return LinearTerm(remaining)


def relations_match(r1: LinearTerm, r2: LinearTerm) -> bool:
    """Equality of relations up to graph isomorphism of monomials and an
    overall scalar."""
    a = simplify_relation(r1)
    b = simplify_relation(r2)
    if a is None or b is None:
        return a is None and b is None
    if len(a.terms) != len(b.terms) or a.biarity != b.biarity:
        return False
    ratio = None
    graphs_b = [(coef, term_to_graph(m)) for coef, m in b.terms]
    used = [False] * len(graphs_b)

    def match(i: int, ratio: Optional[Fraction]) -> bool:
        if i == len(a.terms):
            return True
        coef_a, mono_a = a.terms[i]
        g_a = term_to_graph(mono_a)
        for j, (coef_b, g_b) in enumerate(graphs_b):
            if used[j]:
                continue
            if isomorphic(g_a, g_b) is None:
                continue
            r = coef_b / coef_a
            if ratio is not None and r != ratio:
                continue
            used[j] = True
            if match(i + 1, r):
                return True
            used[j] = False
        return False

    return match(0, ratio)


def presentation_matches(
    p: Presentation, q: Presentation, *, rename: Optional[dict[str, str]] = None
) -> bool:
    """Same generators (up to optional renaming) and matching relation sets."""
    names = {g.name: g for g in p.signature.generators}
    if rename:
        renamed = {}
        for name, g in names.items():
            new = rename.get(name, name)
            renamed[new] = GeneratorSymbol(new, g.out_arity, g.in_arity, g.degree)
        names = renamed
    if names != {g.name: g for g in q.signature.generators}:
        return False
    if len(p.relations) != len(q.relations):
        return False
    mapping = {
        g: GeneratorSymbol(rename.get(g.name, g.name), g.out_arity, g.in_arity, g.degree)
        for g in p.signature.generators
    } if rename else None
    used = [False] * len(q.relations)
    for rel in p.relations:
        if mapping:
            rel = substitute(rel, mapping)
        hit = next(
            (j for j, other in enumerate(q.relations)
             if not used[j] and relations_match(rel, other)),
            None,
        )
        if hit is None:
            return False
        used[hit] = True
    return True
