"""Free-PROP expressions over a signature and their layered normal form.

A raw ``Term`` is a tree built from generators, the unit, permutations,
horizontal composition (``Tensor``) and vertical composition (``VComp``).
The canonical representation used everywhere downstream is the
``LayeredMonomial``: a top permutation gap followed by alternating generator
layers and permutation gaps,

    top . (layer_1 . gap_1) . (layer_2 . gap_2) . ... . (layer_k . gap_k)

read top-to-bottom, inputs at the bottom.  ``layerize`` rewrites any
well-typed monomial into this shape using the interchange law.

Unit occurrences are first-class data: hom-ification replaces selected ones
with twisting generators, so they must stay addressable.  A unit occurrence
lives either as a factor inside a mixed layer (``mu . (1 (x) mu)`` keeps its
unit next to ``mu``) or as a mark on a wire of a permutation gap (a purely
vertical unit string such as the bottom ``1 (x) 1 (x) 1`` of the expanded
associativity variants contributes no layer; its units decorate the gap).
Consequently the degree of a monomial is its number of generator layers,
and purely vertical unit/permutation monomials have degree 0.

Interlayer gap marks are per-wire: vertically stacked units on one wire
collapse when the representation is canonicalized.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .perm import Permutation, block_sum, compose, identity


class VCompArityMismatch(ValueError):
    """Vertical composition of shapes that do not meet."""

    def __init__(self, expected: int, found: int, subterm=None):
        self.expected = expected
        self.found = found
        self.subterm = subterm
        super().__init__(f"vertical composition expects inner arity {expected}, found {found}")


class SubstitutionError(ValueError):
    """Replacement that would break biarities."""


@dataclass(frozen=True)
class GeneratorSymbol:
    """Named generator with ``out_arity`` outputs, ``in_arity`` inputs and a
    homological degree (0 in ungraded settings)."""

    name: str
    out_arity: int
    in_arity: int
    degree: int = 0

    def __repr__(self) -> str:
        return f"{self.name}({self.out_arity},{self.in_arity})"


@dataclass(frozen=True)
class Signature:
    generators: tuple[GeneratorSymbol, ...]

    def __post_init__(self) -> None:
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")

    def __getitem__(self, name: str) -> GeneratorSymbol:
        for g in self.generators:
            if g.name == name:
                return g
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(g.name == name for g in self.generators)

    def extend(self, extra: Sequence[GeneratorSymbol]) -> "Signature":
        return Signature(self.generators + tuple(extra))


@dataclass(frozen=True)
class UnitFactor:
    """Marker for a unit occurrence used as a layer factor."""

    def __repr__(self) -> str:
        return "1"


UNIT = UnitFactor()

Factor = Union[GeneratorSymbol, UnitFactor]


# ---------------------------------------------------------------------------
# Raw term trees


@dataclass(frozen=True)
class Gen:
    symbol: GeneratorSymbol


@dataclass(frozen=True)
class UnitLeaf:
    pass


@dataclass(frozen=True)
class PermLeaf:
    perm: Permutation


@dataclass(frozen=True)
class Tensor:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class VComp:
    upper: "Term"
    lower: "Term"


Term = Union[Gen, UnitLeaf, PermLeaf, Tensor, VComp]


def tensor(*parts: Term) -> Term:
    """Right-associated n-ary horizontal composition."""
    if not parts:
        raise ValueError("tensor needs at least one part")
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Tensor(p, out)
    return out


def vcomp(*parts: Term) -> Term:
    """Right-associated n-ary vertical composition, top first."""
    if not parts:
        raise ValueError("vcomp needs at least one part")
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = VComp(p, out)
    return out


def infer_biarity(t: Term) -> tuple[int, int]:
    """Biarity ``(n, m)`` = (outputs, inputs) of a term, or raise."""
    if isinstance(t, Gen):
        return (t.symbol.out_arity, t.symbol.in_arity)
    if isinstance(t, UnitLeaf):
        return (1, 1)
    if isinstance(t, PermLeaf):
        return (t.perm.n, t.perm.n)
    if isinstance(t, Tensor):
        ln, lm = infer_biarity(t.left)
        rn, rm = infer_biarity(t.right)
        return (ln + rn, lm + rm)
    if isinstance(t, VComp):
        un, um = infer_biarity(t.upper)
        ln, lm = infer_biarity(t.lower)
        if um != ln:
            raise VCompArityMismatch(um, ln, t)
        return (un, lm)
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Layered monomials


@dataclass(frozen=True)
class Interlayer:
    """A permutation gap, possibly decorated with unit occurrences.

    ``marks`` are 1-based wire indices counted on the bottom side of the
    gap, sorted, distinct.  A mark stands for a unit occurrence riding that
    wire.
    """

    perm: Permutation
    marks: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if list(self.marks) != sorted(set(self.marks)):
            raise ValueError(f"marks must be sorted and distinct: {self.marks}")
        if any(not 1 <= s <= self.perm.n for s in self.marks):
            raise ValueError(f"mark out of range 1..{self.perm.n}: {self.marks}")

    @property
    def width(self) -> int:
        return self.perm.n


def _factor_out(f: Factor) -> int:
    return 1 if isinstance(f, UnitFactor) else f.out_arity


def _factor_in(f: Factor) -> int:
    return 1 if isinstance(f, UnitFactor) else f.in_arity


@dataclass(frozen=True)
class Layer:
    """A horizontal row of generator/unit factors with the gap below it."""

    factors: tuple[Factor, ...]
    below: Interlayer

    @property
    def out_width(self) -> int:
        return sum(_factor_out(f) for f in self.factors)

    @property
    def in_width(self) -> int:
        return sum(_factor_in(f) for f in self.factors)

    def __post_init__(self) -> None:
        if self.below.width != self.in_width:
            raise ValueError(
                f"gap width {self.below.width} != layer input width {self.in_width}"
            )


@dataclass(frozen=True)
class LayeredMonomial:
    top: Interlayer
    layers: tuple[Layer, ...]

    def __post_init__(self) -> None:
        width = self.top.width
        for layer in self.layers:
            if layer.out_width != width:
                raise ValueError(
                    f"layer output width {layer.out_width} does not meet {width} above it"
                )
            width = layer.below.width

    @property
    def out_arity(self) -> int:
        return self.top.width

    @property
    def in_arity(self) -> int:
        return self.layers[-1].below.width if self.layers else self.top.width

    @property
    def biarity(self) -> tuple[int, int]:
        return (self.out_arity, self.in_arity)

    def generators(self) -> list[GeneratorSymbol]:
        return [f for layer in self.layers for f in layer.factors
                if isinstance(f, GeneratorSymbol)]


def monomial_degree(m: LayeredMonomial) -> int:
    """Number of layers of the stored representation."""
    return len(m.layers)


def homological_degree(m: LayeredMonomial) -> int:
    return sum(g.degree for g in m.generators())


@dataclass(frozen=True)
class LinearTerm:
    """Finite sum of layered monomials with exact rational coefficients."""

    terms: tuple[tuple[Fraction, LayeredMonomial], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("a relation needs at least one monomial")
        biarities = {m.biarity for _, m in self.terms}
        if len(biarities) > 1:
            raise ValueError(f"monomials of mixed biarity in one sum: {biarities}")
        if any(c == 0 for c, _ in self.terms):
            raise ValueError("zero coefficients must be dropped before storing")

    @property
    def biarity(self) -> tuple[int, int]:
        return self.terms[0][1].biarity

    def scaled(self, c: Fraction) -> "LinearTerm":
        return LinearTerm(tuple((c * coef, m) for coef, m in self.terms))


def linear_term(pairs: Sequence[tuple]) -> LinearTerm:
    """Build a LinearTerm, coercing coefficients and layerizing raw terms."""
    out = []
    for coef, mono in pairs:
        c = Fraction(coef)
        if c == 0:
            continue
        out.append((c, mono if isinstance(mono, LayeredMonomial) else layerize(mono)))
    return LinearTerm(tuple(out))


# ---------------------------------------------------------------------------
# Layerization


def _chain_unit() -> LayeredMonomial:
    return LayeredMonomial(Interlayer(identity(1), (1,)), ())


def _chain_perm(p: Permutation) -> LayeredMonomial:
    return LayeredMonomial(Interlayer(p), ())


def _chain_gen(g: GeneratorSymbol) -> LayeredMonomial:
    return LayeredMonomial(
        Interlayer(identity(g.out_arity)),
        (Layer((g,), Interlayer(identity(g.in_arity))),),
    )


def _merge_gaps(upper: Interlayer, lower: Interlayer) -> Interlayer:
    """Fuse two adjacent gaps: compose permutations, carry marks along wires."""
    perm = compose(upper.perm, lower.perm)
    inv = lower.perm.inverse()
    carried = {inv(s) for s in upper.marks}
    return Interlayer(perm, tuple(sorted(carried | set(lower.marks))))


def _vcomp_chains(a: LayeredMonomial, b: LayeredMonomial) -> LayeredMonomial:
    if a.in_arity != b.out_arity:
        raise VCompArityMismatch(a.in_arity, b.out_arity)
    if not a.layers:
        return LayeredMonomial(_merge_gaps(a.top, b.top), b.layers)
    last = a.layers[-1]
    merged = Layer(last.factors, _merge_gaps(last.below, b.top))
    return LayeredMonomial(a.top, a.layers[:-1] + (merged,) + b.layers)


def _join_gaps(left: Interlayer, right: Interlayer) -> Interlayer:
    perm = block_sum(left.perm, right.perm)
    marks = left.marks + tuple(s + left.width for s in right.marks)
    return Interlayer(perm, tuple(sorted(marks)))


def _pad_chain(c: LayeredMonomial, k: int) -> LayeredMonomial:
    """Raise a chain to exactly ``k`` layers by adding unit rows below."""
    if len(c.layers) == k:
        return c
    if not c.layers:
        # A purely vertical gap: its permutation stays on top and its wires
        # become unit factors through all k rows (marks are absorbed).
        w = c.top.width
        rows = tuple(Layer((UNIT,) * w, Interlayer(identity(w))) for _ in range(k))
        return LayeredMonomial(Interlayer(c.top.perm), rows)
    w = c.in_arity
    pads = tuple(
        Layer((UNIT,) * w, Interlayer(identity(w))) for _ in range(k - len(c.layers))
    )
    return LayeredMonomial(c.top, c.layers + pads)


def _tensor_chains(a: LayeredMonomial, b: LayeredMonomial) -> LayeredMonomial:
    k = max(len(a.layers), len(b.layers))
    a, b = _pad_chain(a, k), _pad_chain(b, k)
    top = _join_gaps(a.top, b.top)
    layers = tuple(
        Layer(la.factors + lb.factors, _join_gaps(la.below, lb.below))
        for la, lb in zip(a.layers, b.layers)
    )
    return LayeredMonomial(top, layers)


def layerize(t: Term | LayeredMonomial) -> LayeredMonomial:
    """Canonical layered form of a monomial; idempotent on layered input."""
    if isinstance(t, LayeredMonomial):
        return t
    if isinstance(t, Gen):
        return _chain_gen(t.symbol)
    if isinstance(t, UnitLeaf):
        return _chain_unit()
    if isinstance(t, PermLeaf):
        return _chain_perm(t.perm)
    if isinstance(t, Tensor):
        return _tensor_chains(layerize(t.left), layerize(t.right))
    if isinstance(t, VComp):
        return _vcomp_chains(layerize(t.upper), layerize(t.lower))
    raise TypeError(f"not a term: {t!r}")


# ---------------------------------------------------------------------------
# Unit occurrences


@dataclass(frozen=True)
class UnitOccurrence:
    """Address of one unit inside a stored relation list.

    Rows of a monomial are numbered top to bottom: row 0 is the top gap,
    row ``2j - 1`` the factors of layer ``j``, row ``2j`` the gap below
    layer ``j``.  ``slot_index`` is the 1-based factor position (factor
    rows) or wire index (gap rows).  ``label`` is the 1-based position in
    the whole occurrence set I.
    """

    relation_index: int
    monomial_index: int
    layer_index: int
    slot_index: int
    label: int


def _monomial_unit_addresses(m: LayeredMonomial) -> list[tuple[int, int]]:
    """(row, slot) of every unit occurrence, top-to-bottom, left-to-right."""
    out = [(0, s) for s in m.top.marks]
    for j, layer in enumerate(m.layers, start=1):
        out.extend((2 * j - 1, i) for i, f in enumerate(layer.factors, start=1)
                   if isinstance(f, UnitFactor))
        out.extend((2 * j, s) for s in layer.below.marks)
    return out


def index_units(relations: Sequence[LinearTerm]) -> tuple[UnitOccurrence, ...]:
    """Deterministic labeling of every unit occurrence in a relation list."""
    out: list[UnitOccurrence] = []
    label = 1
    for r, rel in enumerate(relations):
        for mi, (_, mono) in enumerate(rel.terms):
            for row, slot in _monomial_unit_addresses(mono):
                out.append(UnitOccurrence(r, mi, row, slot, label))
                label += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# Substitution


def _check_unit_replacement(sym: Factor) -> None:
    if isinstance(sym, GeneratorSymbol) and (sym.out_arity, sym.in_arity) != (1, 1):
        raise SubstitutionError(f"units may only be replaced by (1,1) symbols, got {sym!r}")


def _substitute_factor(f: Factor, symbol_map: Mapping[GeneratorSymbol, Factor]) -> Factor:
    if isinstance(f, GeneratorSymbol) and f in symbol_map:
        new = symbol_map[f]
        if isinstance(new, GeneratorSymbol):
            if (new.out_arity, new.in_arity) != (f.out_arity, f.in_arity):
                raise SubstitutionError(f"cannot replace {f!r} by {new!r}: biarity changes")
        elif (f.out_arity, f.in_arity) != (1, 1):
            raise SubstitutionError(f"cannot replace {f!r} by the unit: biarity changes")
        return new
    return f


def _materialize_gap(gap: Interlayer, repl: Mapping[int, GeneratorSymbol]) -> tuple[Interlayer, Layer | None]:
    """Replace marked wires of a gap; returns the stripped gap and, if any
    replacement happened, the freshly created layer sitting below the
    permutation."""
    hit = {s: g for s, g in repl.items()}
    if not hit:
        return gap, None
    for g in hit.values():
        _check_unit_replacement(g)
    w = gap.width
    factors: list[Factor] = []
    for s in range(1, w + 1):
        if s in hit:
            factors.append(hit[s])
        else:
            # Unreplaced wires keep a unit in the new row (marked wires stay
            # occurrences; unmarked wires acquire padding units).
            factors.append(UNIT)
    new_layer = Layer(tuple(factors), Interlayer(identity(w)))
    return Interlayer(gap.perm), new_layer


def substitute(
    t: LinearTerm,
    assignment: Mapping,
    *,
    relation_index: int = 0,
    occurrences: Sequence[UnitOccurrence] = (),
) -> LinearTerm:
    """Occurrence-wise and symbol-wise replacement inside one relation.

    ``assignment`` keys are ``GeneratorSymbol`` (symbol-level renaming, the
    value may be a symbol of equal biarity or ``UNIT``) or ``UnitOccurrence``
    objects from ``occurrences`` addressing units of this relation; their
    values must be ``(1,1)`` symbols.
    """
    symbol_map: dict[GeneratorSymbol, Factor] = {}
    occ_map: dict[tuple[int, int, int], GeneratorSymbol] = {}
    occ_by_label = {o.label: o for o in occurrences}
    for key, value in assignment.items():
        if isinstance(key, GeneratorSymbol):
            symbol_map[key] = value
        elif isinstance(key, UnitOccurrence):
            if key.relation_index == relation_index:
                _check_unit_replacement(value)
                occ_map[(key.monomial_index, key.layer_index, key.slot_index)] = value
        elif isinstance(key, int):
            occ = occ_by_label.get(key)
            if occ is None:
                raise SubstitutionError(f"label {key} not present in occurrence list")
            if occ.relation_index == relation_index:
                _check_unit_replacement(value)
                occ_map[(occ.monomial_index, occ.layer_index, occ.slot_index)] = value
        else:
            raise SubstitutionError(f"bad assignment key {key!r}")

    new_terms = []
    for mi, (coef, mono) in enumerate(t.terms):
        top, top_layer = _materialize_gap(
            mono.top,
            {slot: g for (m, row, slot), g in occ_map.items() if m == mi and row == 0},
        )
        layers: list[Layer] = [] if top_layer is None else [top_layer]
        for j, layer in enumerate(mono.layers, start=1):
            factors = []
            for i, f in enumerate(layer.factors, start=1):
                g = occ_map.get((mi, 2 * j - 1, i))
                if g is not None:
                    if not isinstance(f, UnitFactor):
                        raise SubstitutionError(
                            f"occurrence (mono {mi}, row {2*j-1}, slot {i}) is not a unit"
                        )
                    _check_unit_replacement(g)
                    factors.append(g)
                else:
                    factors.append(_substitute_factor(f, symbol_map))
            gap, gap_layer = _materialize_gap(
                layer.below,
                {slot: g for (m, row, slot), g in occ_map.items() if m == mi and row == 2 * j},
            )
            layers.append(Layer(tuple(factors), gap))
            if gap_layer is not None:
                layers.append(gap_layer)
        new_terms.append((coef, LayeredMonomial(top, tuple(layers))))
    return LinearTerm(tuple(new_terms))
