"""JSON file formats for presentations, plans, spaces, matrices, algebras.

Rationals travel as strings ("p/q" or "n") so no consumer can lose
precision.  Term trees use the five-node schema

    {"gen": name} | {"unit": true} | {"perm": [images]} |
    {"tensor": [t1, t2, ...]} | {"vcomp": [top, ..., bottom]}

with n-ary tensor/vcomp nodes right-associated on parse.  Serialization of
a stored monomial emits one row per layer and permutation gap, so parsing
it back yields the identical canonical form; unit-occurrence labels survive
round trips.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .linalg import GradedSpace, LinearMap, make_map
from .presentation import HomPlan, Presentation
from .algebra import StructureMap, structure_map
from .term import (
    Gen,
    GeneratorSymbol,
    Interlayer,
    LayeredMonomial,
    LinearTerm,
    PermLeaf,
    Signature,
    Tensor,
    Term,
    UnitFactor,
    UnitLeaf,
    VComp,
    layerize,
    tensor as tensor_term,
    vcomp as vcomp_term,
)


class ParseError(ValueError):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ParseError(msg)


# ---------------------------------------------------------------------------
# Terms


def term_to_json(t: Term | LayeredMonomial) -> Any:
    if isinstance(t, LayeredMonomial):
        return _monomial_to_json(t)
    if isinstance(t, Gen):
        return {"gen": t.symbol.name}
    if isinstance(t, UnitLeaf):
        return {"unit": True}
    if isinstance(t, PermLeaf):
        return {"perm": list(t.perm.images)}
    if isinstance(t, Tensor):
        return {"tensor": [term_to_json(t.left), term_to_json(t.right)]}
    if isinstance(t, VComp):
        return {"vcomp": [term_to_json(t.upper), term_to_json(t.lower)]}
    raise TypeError(f"not a term: {t!r}")


def _gap_rows(gap: Interlayer) -> list[Any]:
    rows: list[Any] = []
    if not gap.perm.is_identity():
        rows.append({"perm": list(gap.perm.images)})
    if gap.marks:
        marked = set(gap.marks)
        cells = [
            {"unit": True} if s in marked else {"perm": [1]}
            for s in range(1, gap.width + 1)
        ]
        rows.append({"tensor": cells} if len(cells) > 1 else cells[0])
    return rows


def _monomial_to_json(m: LayeredMonomial) -> Any:
    rows: list[Any] = list(_gap_rows(m.top))
    for layer in m.layers:
        cells = [
            {"unit": True} if isinstance(f, UnitFactor) else {"gen": f.name}
            for f in layer.factors
        ]
        rows.append({"tensor": cells} if len(cells) > 1 else cells[0])
        rows.extend(_gap_rows(layer.below))
    if not rows:
        return {"perm": list(m.top.perm.images)}
    if len(rows) == 1:
        return rows[0]
    return {"vcomp": rows}


def term_from_json(data: Any, signature: Signature) -> Term:
    _require(isinstance(data, dict), f"term node must be an object, got {data!r}")
    if "gen" in data:
        name = data["gen"]
        _require(name in signature, f"unknown generator {name!r}")
        return Gen(signature[name])
    if "unit" in data:
        return UnitLeaf()
    if "perm" in data:
        from .perm import Permutation

        return PermLeaf(Permutation(tuple(data["perm"])))
    if "tensor" in data:
        parts = [term_from_json(p, signature) for p in data["tensor"]]
        _require(len(parts) >= 1, "empty tensor node")
        return tensor_term(*parts)
    if "vcomp" in data:
        parts = [term_from_json(p, signature) for p in data["vcomp"]]
        _require(len(parts) >= 1, "empty vcomp node")
        return vcomp_term(*parts)
    raise ParseError(f"unrecognized term node {data!r}")


# ---------------------------------------------------------------------------
# Presentations and plans


def presentation_to_json(p: Presentation) -> Any:
    return {
        "generators": [
            {"name": g.name, "out": g.out_arity, "in": g.in_arity, "degree": g.degree}
            for g in p.signature.generators
        ],
        "relations": [
            [
                {"coef": str(coef), "monomial": _monomial_to_json(mono)}
                for coef, mono in rel.terms
            ]
            for rel in p.relations
        ],
    }


def presentation_from_json(data: Any) -> Presentation:
    _require(isinstance(data, dict), "presentation file must be an object")
    _require("generators" in data and "relations" in data,
             "presentation needs 'generators' and 'relations'")
    gens = tuple(
        GeneratorSymbol(g["name"], g["out"], g["in"], g.get("degree", 0))
        for g in data["generators"]
    )
    sig = Signature(gens)
    relations = []
    for rel in data["relations"]:
        _require(len(rel) >= 1, "empty relation")
        pairs = []
        for item in rel:
            coef = Fraction(item["coef"])
            mono = layerize(term_from_json(item["monomial"], sig))
            pairs.append((coef, mono))
        relations.append(LinearTerm(tuple(pairs)))
    return Presentation(sig, tuple(relations))


def plan_to_json(plan: HomPlan) -> Any:
    return {
        "S": list(plan.S),
        "theta": [list(labels) for _, labels in plan.blocks],
        "names": [name for name, _ in plan.blocks],
    }


def plan_from_json(data: Any) -> HomPlan:
    _require(isinstance(data, dict) and "S" in data and "theta" in data,
             "plan file needs 'S' and 'theta'")
    blocks_labels = [tuple(b) for b in data["theta"]]
    names = data.get("names")
    if names is None:
        if len(blocks_labels) == 1:
            names = ["alpha"]
        else:
            names = [f"alpha_{min(b)}" for b in blocks_labels]
    _require(len(names) == len(blocks_labels), "names/theta length mismatch")
    return HomPlan(tuple(data["S"]), tuple(zip(names, blocks_labels)))


# ---------------------------------------------------------------------------
# Spaces, matrices, algebras


def space_to_json(space: GradedSpace) -> Any:
    return {"dims": {str(d): k for d, k in space.dims}}


def space_from_json(data: Any) -> GradedSpace:
    _require(isinstance(data, dict) and "dims" in data, "space needs 'dims'")
    return GradedSpace.from_dims({int(d): int(k) for d, k in data["dims"].items()})


def matrix_to_json(m: LinearMap) -> Any:
    return [[str(v) for v in row] for row in m.entries]


def matrix_rows_from_json(data: Any) -> list[list[Fraction]]:
    _require(isinstance(data, list), "matrix must be a list of rows")
    return [[Fraction(v) for v in row] for row in data]


def algebra_to_json(lam: StructureMap) -> Any:
    return {
        "space": space_to_json(lam.space),
        "maps": {g.name: matrix_to_json(m) for g, m in lam.assignments},
    }


def algebra_from_json(data: Any, p: Presentation) -> StructureMap:
    _require(isinstance(data, dict) and "space" in data and "maps" in data,
             "algebra file needs 'space' and 'maps'")
    space = space_from_json(data["space"])
    maps = {}
    for g in p.signature.generators:
        _require(g.name in data["maps"], f"algebra file missing map for {g.name!r}")
        rows = matrix_rows_from_json(data["maps"][g.name])
        maps[g] = make_map(
            space, space, rows,
            source_power=g.in_arity, target_power=g.out_arity, degree=g.degree,
        )
    return structure_map(space, maps)


def endomorphism_to_json(m: LinearMap) -> Any:
    return {"space": space_to_json(m.source), "matrix": matrix_to_json(m)}


def endomorphism_from_json(data: Any) -> LinearMap:
    _require(isinstance(data, dict) and "space" in data and "matrix" in data,
             "endomorphism file needs 'space' and 'matrix'")
    space = space_from_json(data["space"])
    rows = matrix_rows_from_json(data["matrix"])
    return make_map(space, space, rows)


def dumps(data: Any) -> str:
    """Stable JSON encoding: sorted keys, newline-terminated."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
