"""JSON documents: ``kgraph-matrices-v1``, ``kgraph-skeleton-v1`` and reports.

Integers must be exact JSON integers; floats and booleans are rejected.
Serialized dicts have a fixed key order, so ``dumps(loads(s)) == s``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .construct import FiniteAbelianGroup
from .errors import InvalidInput
from .intlinalg import AbelianGroupPresentation, IntMatrix, SmithDecomposition
from .ktheory import (
    ComparisonReport,
    Constraint,
    CrosscheckResult,
    E2Page,
    K3RankCheck,
    KGroupReport,
    UnitClass,
)
from .model import Edge, SkeletonGraph, ValidationReport, VertexMatrixFamily

MATRICES_FORMAT = "kgraph-matrices-v1"
SKELETON_FORMAT = "kgraph-skeleton-v1"

FINITENESS = "a finite vertex set is required (it must be a JSON array of vertex names)"


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidInput(f"{what} must be an exact integer, got {x!r}")
    return x


def _vertices(doc: dict) -> tuple[str, ...]:
    vs = doc.get("vertices")
    if not isinstance(vs, list):
        raise InvalidInput(f"'vertices' is {vs!r}: {FINITENESS}; infinite vertex sets are not supported")
    if not vs:
        raise InvalidInput("'vertices' must be nonempty")
    if not all(isinstance(v, str) for v in vs):
        raise InvalidInput("vertex names must be strings")
    if len(set(vs)) != len(vs):
        raise InvalidInput("vertex names must be distinct")
    return tuple(vs)


def _check_format(doc, expected: str):
    if not isinstance(doc, dict):
        raise InvalidInput("document must be a JSON object")
    fmt = doc.get("format")
    if fmt != expected:
        raise InvalidInput(f"expected format {expected!r}, got {fmt!r}")


def matrix_from_json(data, what: str = "matrix", cols: int | None = None) -> IntMatrix:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise InvalidInput(f"{what} must be an array of arrays")
    rows = [[_int(x, f"{what} entry") for x in r] for r in data]
    try:
        return IntMatrix.from_rows(rows, cols)
    except ValueError as exc:
        raise InvalidInput(f"{what}: {exc}") from None


def family_from_json(doc: dict) -> VertexMatrixFamily:
    _check_format(doc, MATRICES_FORMAT)
    vertices = _vertices(doc)
    k = _int(doc.get("k"), "k")
    mats = doc.get("matrices")
    if not isinstance(mats, list) or len(mats) != k:
        raise InvalidInput(f"'matrices' must be an array of k = {k} matrices")
    matrices = tuple(matrix_from_json(m, f"matrices[{i}]") for i, m in enumerate(mats))
    return VertexMatrixFamily(vertices, matrices)


def family_to_json(family: VertexMatrixFamily) -> dict:
    return {
        "format": MATRICES_FORMAT,
        "k": family.k,
        "vertices": list(family.vertices),
        "matrices": [m.tolist() for m in family.matrices],
    }


def skeleton_from_json(doc: dict) -> SkeletonGraph:
    _check_format(doc, SKELETON_FORMAT)
    vertices = _vertices(doc)
    k = _int(doc.get("k"), "k")
    edges = []
    for i, e in enumerate(doc.get("edges", [])):
        if not isinstance(e, dict):
            raise InvalidInput(f"edges[{i}] must be an object")
        try:
            eid, color, rng, src = e["id"], e["color"], e["range"], e["source"]
        except KeyError as exc:
            raise InvalidInput(f"edges[{i}] lacks field {exc}") from None
        label = e.get("label")
        if label is not None:
            if not isinstance(label, list):
                raise InvalidInput(f"edges[{i}].label must be an array of residues")
            label = tuple(_int(x, f"edges[{i}].label entry") for x in label)
        edges.append(Edge(str(eid), _int(color, f"edges[{i}].color"), rng, src, label))
    return SkeletonGraph(k, vertices, tuple(edges))


def skeleton_to_json(skeleton: SkeletonGraph) -> dict:
    edges = []
    for e in skeleton.edges:
        d = {"id": e.id, "color": e.color, "range": e.range, "source": e.source}
        if e.label is not None:
            d["label"] = list(e.label)
        edges.append(d)
    return {
        "format": SKELETON_FORMAT,
        "k": skeleton.k,
        "vertices": list(skeleton.vertices),
        "edges": edges,
    }


def group_from_json(doc) -> FiniteAbelianGroup:
    if not isinstance(doc, dict) or not isinstance(doc.get("orders"), list):
        raise InvalidInput('group must be an object {"orders": [m1, ...]}')
    return FiniteAbelianGroup(tuple(_int(m, "group order") for m in doc["orders"]))


def labelling_from_json(doc) -> dict[str, tuple[int, ...]]:
    if not isinstance(doc, dict):
        raise InvalidInput("labelling must be an object mapping edge ids to residue arrays")
    out = {}
    for eid, lab in doc.items():
        if not isinstance(lab, list):
            raise InvalidInput(f"label of {eid!r} must be an array of residues")
        out[eid] = tuple(_int(x, f"label of {eid!r}") for x in lab)
    return out


def load_json(path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path}: not valid JSON ({exc})") from None
    except OSError as exc:
        raise InvalidInput(f"{path}: {exc.strerror}") from None


def load_family(path) -> VertexMatrixFamily:
    """Read a matrices document, or a skeleton document and count its edges."""
    from .model import matrices_from_skeleton

    doc = load_json(path)
    if isinstance(doc, dict) and doc.get("format") == SKELETON_FORMAT:
        return matrices_from_skeleton(skeleton_from_json(doc), validate=False)
    return family_from_json(doc)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# -- reports -----------------------------------------------------------------

def presentation_to_json(g: AbelianGroupPresentation | None):
    if g is None:
        return None
    return {"free_rank": g.free_rank, "torsion": list(g.torsion)}


def presentation_from_json(d) -> AbelianGroupPresentation:
    return AbelianGroupPresentation(_int(d["free_rank"], "free_rank"), tuple(d["torsion"]))


def constraint_to_json(c: Constraint | None):
    if c is None:
        return None
    return {
        "sub": presentation_to_json(c.sub),
        "quot": presentation_to_json(c.quot),
        "order": c.order,
        "sub_quotient_unknown": c.sub_quotient_unknown,
        "quot_subgroup_unknown": c.quot_subgroup_unknown,
    }


def e2_to_json(e2: E2Page) -> list:
    return [presentation_to_json(h) for h in e2.homology]


def report_to_json(rep: KGroupReport) -> dict:
    return {
        "k": rep.k,
        "status": {"k0": rep.k0_status, "k1": rep.k1_status},
        "k0": presentation_to_json(rep.k0),
        "k1": presentation_to_json(rep.k1),
        "k0_constraint": constraint_to_json(rep.k0_constraint),
        "k1_constraint": constraint_to_json(rep.k1_constraint),
        "e2": e2_to_json(rep.e2),
        "bounds": rep.bounds,
        "notes": list(rep.notes),
    }


def validation_to_json(rep: ValidationReport) -> dict:
    return {
        "ok": rep.ok,
        "failures": [{"kind": f.kind, "detail": f.detail} for f in rep.failures],
    }


def unit_class_to_json(u: UnitClass) -> dict:
    return {
        "k0": presentation_to_json(u.group),
        "free": list(u.free),
        "torsion": list(u.torsion),
        "order": u.order,
        "generates": u.generates(),
    }


def crosscheck_to_json(c: CrosscheckResult) -> dict:
    return {
        "r0_expected": c.r0_expected,
        "tor_k0_expected": list(c.tor_k0_expected),
        "tor_k1_expected": list(c.tor_k1_expected),
        "agrees": c.agrees,
    }


def k3check_to_json(c: K3RankCheck) -> dict:
    return {"applicable": c.applicable, "m": c.m, "consistent": c.consistent}


def comparison_to_json(c: ComparisonReport) -> dict:
    iso = None
    if c.isomorphism is not None:
        iso = {"vertex_permutation": list(c.isomorphism[0]), "colour_permutation": list(c.isomorphism[1])}
    return {
        "same_vertex_matrices": c.same_vertex_matrices,
        "isomorphism": iso,
        "invariants_agree": c.invariants_agree,
        "kgroups_determined": c.kgroups_determined,
        "unit_classes_agree": c.unit_classes_agree,
        "flags": dict(c.flags),
        "conclusion": c.conclusion,
    }


def snf_to_json(d: SmithDecomposition) -> dict:
    return {
        "invariant_factors": list(d.invariant_factors),
        "s": d.s.tolist(),
        "u": d.u.tolist(),
        "v": d.v.tolist(),
    }
