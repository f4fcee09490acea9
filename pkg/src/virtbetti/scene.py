"""Scene files: one JSON document naming atoms, complexes, pairs,
expressions, stratifications, arrangements and weight inputs.

Everything is validated on load, before any computation; cross-references
resolve by name.  Serialization is canonical (sorted names, lexicographic
maximal simplices, polynomials as text), so load -> dump -> load is the
identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .errors import SceneError, UnknownName, VirtBettiError
from .polynomial import parse_polynomial
from .scissor import (
    Atom,
    AtomRegistry,
    Blowup,
    ClosedDifference,
    DisjointUnion,
    Empty,
    Product,
    ScissorExpr,
)
from .simplicial import PairSpace, SimplicialComplex, Subcomplex, maximal_simplices
from .spectral import Arrangement
from .stratified import (
    CompactModel,
    DeclaredBeta,
    OpenModel,
    StratifiedSpec,
    StratumRecord,
)
from .weights import WeightSystemInput

__all__ = ["Scene", "scene_from_dict", "scene_to_dict", "load_scene", "dump_scene"]

SCHEMA_VERSION = 1


@dataclass
class Scene:
    """All named objects of one scene file."""

    atoms: AtomRegistry = field(default_factory=AtomRegistry)
    complexes: dict[str, SimplicialComplex] = field(default_factory=dict)
    pairs: dict[str, PairSpace] = field(default_factory=dict)
    expressions: dict[str, ScissorExpr] = field(default_factory=dict)
    stratifications: dict[str, StratifiedSpec] = field(default_factory=dict)
    arrangements: dict[str, Arrangement] = field(default_factory=dict)
    weight_inputs: dict[str, WeightSystemInput] = field(default_factory=dict)

    def complex(self, name: str) -> SimplicialComplex:
        return _get(self.complexes, name, "complex")

    def pair(self, name: str) -> PairSpace:
        return _get(self.pairs, name, "pair")

    def expression(self, name: str) -> ScissorExpr:
        return _get(self.expressions, name, "expression")

    def stratification(self, name: str) -> StratifiedSpec:
        return _get(self.stratifications, name, "stratification")

    def arrangement(self, name: str) -> Arrangement:
        return _get(self.arrangements, name, "arrangement")

    def weight_input(self, name: str) -> WeightSystemInput:
        return _get(self.weight_inputs, name, "weight input")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Scene)
            and self.atoms == other.atoms
            and self.complexes == other.complexes
            and self.pairs == other.pairs
            and self.expressions == other.expressions
            and self.stratifications == other.stratifications
            and self.arrangements == other.arrangements
            and self.weight_inputs == other.weight_inputs
        )


def _get(mapping: Mapping[str, Any], name: str, kind: str):
    try:
        return mapping[name]
    except KeyError:
        raise UnknownName(
            f"no {kind} named {name!r} in the scene",
            kind=kind,
            name=name,
            known=sorted(mapping),
        ) from None


# -- loading -----------------------------------------------------------------


def _expr_from_dict(data: Mapping, registry: AtomRegistry, path: str) -> ScissorExpr:
    if not isinstance(data, Mapping) or "op" not in data:
        raise SceneError(f"{path}: expression node needs an 'op' field")
    op = data["op"]
    if op == "atom":
        name = data.get("name")
        if name not in registry:
            raise SceneError(f"{path}: unknown atom {name!r}", atom=name)
        return Atom(name)
    if op == "empty":
        return Empty()
    if op == "union":
        return DisjointUnion(
            _expr_from_dict(data["left"], registry, path + ".left"),
            _expr_from_dict(data["right"], registry, path + ".right"),
        )
    if op == "product":
        return Product(
            _expr_from_dict(data["left"], registry, path + ".left"),
            _expr_from_dict(data["right"], registry, path + ".right"),
        )
    if op == "difference":
        return ClosedDifference(
            _expr_from_dict(data["total"], registry, path + ".total"),
            _expr_from_dict(data["closed"], registry, path + ".closed"),
        )
    if op == "blowup":
        return Blowup(
            base=_expr_from_dict(data["base"], registry, path + ".base"),
            center=_expr_from_dict(data["center"], registry, path + ".center"),
            exceptional=_expr_from_dict(data["exceptional"], registry, path + ".exceptional"),
            label=data.get("label"),
        )
    raise SceneError(f"{path}: unknown expression op {op!r}", op=op)


def _expr_to_dict(expr: ScissorExpr) -> dict:
    if isinstance(expr, Atom):
        return {"op": "atom", "name": expr.name}
    if isinstance(expr, Empty):
        return {"op": "empty"}
    if isinstance(expr, DisjointUnion):
        return {"op": "union", "left": _expr_to_dict(expr.left), "right": _expr_to_dict(expr.right)}
    if isinstance(expr, Product):
        return {"op": "product", "left": _expr_to_dict(expr.left), "right": _expr_to_dict(expr.right)}
    if isinstance(expr, ClosedDifference):
        return {
            "op": "difference",
            "total": _expr_to_dict(expr.total),
            "closed": _expr_to_dict(expr.closed_part),
        }
    if isinstance(expr, Blowup):
        out = {
            "op": "blowup",
            "base": _expr_to_dict(expr.base),
            "center": _expr_to_dict(expr.center),
            "exceptional": _expr_to_dict(expr.exceptional),
        }
        if expr.label is not None:
            out["label"] = expr.label
        return out
    raise TypeError(f"not a scissor expression: {expr!r}")


def _subcomplex_from(parent: SimplicialComplex, maximal: list, path: str) -> Subcomplex:
    try:
        return parent.subcomplex(maximal=[tuple(s) for s in maximal])
    except VirtBettiError as exc:
        raise SceneError(f"{path}: {exc.message}", **exc.context) from None


def _strat_model_from_dict(data: Mapping, scene: Scene, raw_strats: Mapping,
                           resolving: set[str], path: str):
    kind = data.get("kind")
    if kind == "compact":
        return CompactModel(scene.complex(data["complex"]))
    if kind == "declared":
        return DeclaredBeta(parse_polynomial(data["beta"]))
    if kind == "open":
        pair = scene.pair(data["pair"])
        boundary_strata = None
        if "boundary_strata" in data and data["boundary_strata"] is not None:
            boundary_strata = _resolve_stratification(
                data["boundary_strata"], scene, raw_strats, resolving
            )
        return OpenModel(
            pair=pair,
            boundary_nonsingular=bool(data.get("boundary_nonsingular", True)),
            boundary_strata=boundary_strata,
        )
    raise SceneError(f"{path}: unknown stratum model kind {kind!r}", kind=kind)


def _resolve_stratification(name: str, scene: Scene, raw_strats: Mapping,
                            resolving: set[str]) -> StratifiedSpec:
    if name in scene.stratifications:
        return scene.stratifications[name]
    if name not in raw_strats:
        raise SceneError(f"unknown stratification {name!r}", name=name)
    if name in resolving:
        raise SceneError(f"stratifications reference each other in a cycle at {name!r}")
    resolving.add(name)
    raw = raw_strats[name]
    strata = []
    for s in raw.get("strata", []):
        model = _strat_model_from_dict(
            s.get("model", {}), scene, raw_strats, resolving,
            f"stratification {name!r}, stratum {s.get('name')!r}",
        )
        strata.append(StratumRecord(s["name"], int(s["dim"]), model))
    frontier = {
        src: frozenset(targets)
        for src, targets in raw.get("frontier", {}).items()
    }
    spec = StratifiedSpec(name, tuple(strata), frontier)
    scene.stratifications[name] = spec
    resolving.discard(name)
    return spec


def scene_from_dict(data: Mapping) -> Scene:
    """Build and validate a Scene from its JSON dictionary."""
    if data.get("schema_version") != SCHEMA_VERSION:
        raise SceneError(
            f"unsupported schema_version {data.get('schema_version')!r}",
            expected=SCHEMA_VERSION,
        )
    scene = Scene()
    try:
        for name in sorted(data.get("complexes", {})):
            spec = data["complexes"][name]
            scene.complexes[name] = SimplicialComplex.from_maximal(
                tuple(spec["vertices"]),
                [tuple(s) for s in spec["maximal_simplices"]],
            )
        for name in sorted(data.get("pairs", {})):
            spec = data["pairs"][name]
            total = scene.complex(spec["total"])
            boundary = _subcomplex_from(
                total, spec.get("boundary_maximal", []), f"pair {name!r}"
            )
            scene.pairs[name] = PairSpace(total, boundary)
        for name in sorted(data.get("atoms", {})):
            spec = data["atoms"][name]
            if "model" in spec:
                scene.atoms.from_model(name, scene.complex(spec["model"]), spec["model"])
            else:
                beta = parse_polynomial(spec["beta"])
                chi = spec.get("chi_c")
                provenance = spec.get("provenance", "declared")
                if provenance == "recursive":
                    scene.atoms.recursive(name, beta, chi_c=chi)
                else:
                    scene.atoms.declare(
                        name, beta, chi_c=chi,
                        compact_nonsingular=bool(spec.get("compact_nonsingular", False)),
                    )
        for name in sorted(data.get("expressions", {})):
            scene.expressions[name] = _expr_from_dict(
                data["expressions"][name], scene.atoms, f"expression {name!r}"
            )
        raw_strats = data.get("stratifications", {})
        for name in sorted(raw_strats):
            _resolve_stratification(name, scene, raw_strats, set())
        for name in sorted(data.get("arrangements", {})):
            spec = data["arrangements"][name]
            total = scene.complex(spec["total"])
            pieces = tuple(
                (p["name"], _subcomplex_from(
                    total, p["maximal_simplices"], f"arrangement {name!r}, piece {p['name']!r}"
                ))
                for p in spec["pieces"]
            )
            scene.arrangements[name] = Arrangement(total, pieces)
        for name in sorted(data.get("weight_inputs", {})):
            spec = data["weight_inputs"][name]
            scene.weight_inputs[name] = WeightSystemInput(
                tuple(int(x) for x in spec["b"]),
                tuple(int(x) for x in spec["beta"]),
            )
    except VirtBettiError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SceneError(f"malformed scene: {exc}") from exc
    return scene


def scene_to_dict(scene: Scene) -> dict:
    """Canonical JSON dictionary for a scene."""
    def complex_dict(k: SimplicialComplex) -> dict:
        return {
            "vertices": list(k.vertices),
            "maximal_simplices": [list(s) for s in maximal_simplices(k)],
        }

    out: dict[str, Any] = {"schema_version": SCHEMA_VERSION}
    out["complexes"] = {
        name: complex_dict(k) for name, k in sorted(scene.complexes.items())
    }
    out["pairs"] = {
        name: {
            "total": _name_of(scene.complexes, pair.total, f"pair {name!r}"),
            "boundary_maximal": [
                list(s)
                for s in maximal_simplices(pair.total, pair.boundary.simplices)
            ],
        }
        for name, pair in sorted(scene.pairs.items())
    }
    atoms = {}
    for record in scene.atoms.records():
        if record.provenance.startswith("model:"):
            atoms[record.name] = {"model": record.provenance.split(":", 1)[1]}
        else:
            atoms[record.name] = {
                "beta": record.beta.to_text(),
                "chi_c": record.chi_c,
                "provenance": record.provenance,
                "compact_nonsingular": record.compact_nonsingular,
            }
    out["atoms"] = atoms
    out["expressions"] = {
        name: _expr_to_dict(e) for name, e in sorted(scene.expressions.items())
    }
    strats = {}
    for name, spec in sorted(scene.stratifications.items()):
        strata = []
        for s in spec.strata:
            model = s.model
            if isinstance(model, CompactModel):
                mdict = {
                    "kind": "compact",
                    "complex": _name_of(scene.complexes, model.complex, s.name),
                }
            elif isinstance(model, DeclaredBeta):
                mdict = {"kind": "declared", "beta": model.beta.to_text()}
            else:
                mdict = {
                    "kind": "open",
                    "pair": _name_of(scene.pairs, model.pair, s.name),
                    "boundary_nonsingular": model.boundary_nonsingular,
                }
                if model.boundary_strata is not None:
                    mdict["boundary_strata"] = model.boundary_strata.name
            strata.append({"name": s.name, "dim": s.dim, "model": mdict})
        strats[name] = {
            "strata": strata,
            "frontier": {
                src: sorted(targets) for src, targets in sorted(spec.frontier.items())
            },
        }
    out["stratifications"] = strats
    out["arrangements"] = {
        name: {
            "total": _name_of(scene.complexes, arr.total, f"arrangement {name!r}"),
            "pieces": [
                {
                    "name": pname,
                    "maximal_simplices": [
                        list(s) for s in maximal_simplices(arr.total, piece.simplices)
                    ],
                }
                for pname, piece in arr.pieces
            ],
        }
        for name, arr in sorted(scene.arrangements.items())
    }
    out["weight_inputs"] = {
        name: {"b": list(w.b), "beta": list(w.beta)}
        for name, w in sorted(scene.weight_inputs.items())
    }
    return out


def _name_of(mapping: Mapping[str, Any], value: Any, context: str) -> str:
    for name, candidate in mapping.items():
        if candidate is value or candidate == value:
            return name
    raise SceneError(f"{context}: object is not registered under a scene name")


def load_scene(path: str) -> Scene:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SceneError(f"cannot read scene file: {exc}", path=path) from None
    except json.JSONDecodeError as exc:
        raise SceneError(f"scene file is not valid JSON: {exc}", path=path) from None
    return scene_from_dict(data)


def dump_scene(scene: Scene, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(scene_to_dict(scene), fh, indent=1, sort_keys=True)
        fh.write("\n")
