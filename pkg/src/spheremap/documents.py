"""Canonical JSON documents for labeled spheres and certificates.

One format serves both: certificate fields ride in ``metadata`` and are
optional.  Serialization is canonical -- sorted keys, facets sorted
lexicographically, integers only -- so equal objects produce byte-equal
text and documents double as regression fixtures.

Parsing fully re-validates: complex invariants, closedness, orientation
coherence (or a fresh orientation when the field is absent), labeling
range, sphere necessary conditions, and the degree engine; a mismatch with
``metadata.claimed_degree`` raises DegreeMismatch.
"""

from __future__ import annotations

import json

from .complexes import (
    OrientedComplex,
    build_complex,
    check_closed_pseudomanifold,
    coherence_failures,
    is_sphere,
    orient,
    parity_to_sorted,
    SphereStatus,
)
from .constructions import ConstructionCertificate, Recipe, _as_labeled
from .degree import LabeledSphere, degree, labeled_sphere
from .errors import (
    DegreeMismatch,
    DocumentSyntaxError,
    NonOrientable,
    SpheremapError,
    ValidationError,
)

FORMAT_VERSION = "1"

__all__ = [
    "FORMAT_VERSION",
    "serialize",
    "parse",
    "parse_with_metadata",
    "load_certificate",
]


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _recipe_to_json(recipe: Recipe) -> list:
    out = []
    for step in recipe:
        op, *args = step
        if op == "literal":
            core = args[0]
            out.append(
                [
                    "literal",
                    {
                        "dimension": core["dimension"],
                        "facets": [list(f) for f in core["facets"]],
                        "labels": {str(v): c for v, c in core["labels"].items()},
                        "orientation": [list(e) for e in core["orientation"]],
                    },
                ]
            )
        elif op == "insert":
            out.append(["insert", list(args[0])])
        else:
            out.append([op, *args])
    return out


def _recipe_from_json(data) -> Recipe:
    steps = []
    for raw in data:
        op, *args = raw
        if op == "insert":
            steps.append(("insert", tuple(int(v) for v in args[0])))
        elif op == "literal":
            steps.append(("literal", args[0]))
        else:
            steps.append((op, *args))
    return tuple(steps)


def _document_dict(obj) -> dict:
    if isinstance(obj, ConstructionCertificate):
        ls = obj.labeled
        metadata = {
            "claimed_degree": obj.claimed_degree,
            "claimed_vertex_count": obj.claimed_vertex_count,
            "recipe": _recipe_to_json(obj.recipe),
        }
    elif isinstance(obj, LabeledSphere):
        ls = obj
        metadata = {"claimed_degree": degree(obj).degree}
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")
    return {
        "format_version": FORMAT_VERSION,
        "dimension": ls.dimension,
        "facets": [list(f) for f in ls.complex.facets],
        "labels": {str(v): c for v, c in sorted(ls.labels.items())},
        "orientation": [
            [s, *f] for f, s in zip(ls.complex.facets, ls.oriented.signs)
        ],
        "metadata": metadata,
    }


def serialize(obj) -> str:
    """Canonical JSON text for a LabeledSphere or ConstructionCertificate."""
    return json.dumps(_document_dict(obj), sort_keys=True, indent=2) + "\n"


def parse(text: str) -> LabeledSphere:
    """Parse and fully re-validate a document."""
    return parse_with_metadata(text)[0]


def parse_with_metadata(text: str) -> tuple[LabeledSphere, dict]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(f"not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise DocumentSyntaxError("top level must be a JSON object")

    for field in ("format_version", "dimension", "facets", "labels"):
        if field not in doc:
            raise ValidationError(f"missing field {field!r}")
    if doc["format_version"] != FORMAT_VERSION:
        raise ValidationError(
            f"unsupported format_version {doc['format_version']!r}"
        )
    if not _is_int(doc["dimension"]) or doc["dimension"] < 0:
        raise ValidationError("dimension must be a non-negative integer")
    facets_raw = doc["facets"]
    if not isinstance(facets_raw, list) or not all(
        isinstance(f, list) and all(_is_int(v) for v in f) for f in facets_raw
    ):
        raise ValidationError("facets must be a list of integer lists")

    try:
        complex = build_complex(facets_raw)
    except SpheremapError as e:
        raise ValidationError(f"facets: {e}") from None
    if complex.dimension != doc["dimension"]:
        raise ValidationError(
            f"dimension field {doc['dimension']} != facet dimension {complex.dimension}"
        )

    report = check_closed_pseudomanifold(complex)
    if report.bad_ridges:
        ridge, k = report.bad_ridges[0]
        raise ValidationError(f"ridge {list(ridge)} lies in {k} facets, expected 2")
    if not report.connected:
        raise ValidationError("facet adjacency graph is disconnected")

    if "orientation" in doc and doc["orientation"] is not None:
        oriented = _oriented_from_field(complex, doc["orientation"])
    else:
        try:
            oriented = orient(complex)
        except NonOrientable as e:
            raise ValidationError(f"not orientable: {e}") from None

    labels_raw = doc["labels"]
    if not isinstance(labels_raw, dict):
        raise ValidationError("labels must be an object mapping vertex -> color")
    labels = {}
    for key, c in labels_raw.items():
        try:
            v = int(key)
        except (TypeError, ValueError):
            raise ValidationError(f"label key {key!r} is not a vertex id") from None
        if not _is_int(c):
            raise ValidationError(f"label of vertex {v} must be an integer")
        labels[v] = c
    try:
        ls = labeled_sphere(oriented, labels)
    except SpheremapError as e:
        raise ValidationError(f"labels: {e}") from None

    verdict = is_sphere(complex)
    if verdict.status is SphereStatus.NOT_SPHERE:
        failing = [name for name, ok in verdict.checks if not ok]
        raise ValidationError(f"sphere checks failed: {failing}")

    try:
        rep = degree(ls)
    except SpheremapError as e:  # pragma: no cover - coherence already checked
        raise ValidationError(f"degree engine: {e}") from None

    metadata = doc.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise ValidationError("metadata must be an object")
    claimed = metadata.get("claimed_degree")
    if claimed is not None:
        if not _is_int(claimed):
            raise ValidationError("metadata.claimed_degree must be an integer")
        if claimed != rep.degree:
            raise DegreeMismatch(
                f"metadata claims degree {claimed}, engine computes {rep.degree}"
            )
    claimed_v = metadata.get("claimed_vertex_count")
    if claimed_v is not None and claimed_v != len(oriented.vertices):
        raise ValidationError(
            f"metadata claims {claimed_v} vertices, document has {len(oriented.vertices)}"
        )
    return ls, metadata


def _oriented_from_field(complex, entries) -> OrientedComplex:
    if not isinstance(entries, list):
        raise ValidationError("orientation must be a list of signed orderings")
    signs: dict = {}
    for entry in entries:
        if not isinstance(entry, list) or len(entry) < 2:
            raise ValidationError(f"bad orientation entry {entry!r}")
        sign, *verts = entry
        if sign not in (1, -1) or not all(_is_int(v) for v in verts):
            raise ValidationError(f"bad orientation entry {entry!r}")
        facet = tuple(sorted(verts))
        if len(set(verts)) != len(verts) or facet not in complex.facet_set:
            raise ValidationError(f"orientation entry {entry!r} is not a facet")
        if facet in signs:
            raise ValidationError(f"orientation lists facet {list(facet)} twice")
        signs[facet] = sign * parity_to_sorted(verts)
    missing = [f for f in complex.facets if f not in signs]
    if missing:
        raise ValidationError(f"orientation missing facet {list(missing[0])}")
    oriented = OrientedComplex(complex, tuple(signs[f] for f in complex.facets))
    bad = coherence_failures(oriented)
    if bad:
        raise ValidationError(
            f"orientation not coherent across ridge {list(bad[0])}"
        )
    return oriented


def load_certificate(text: str) -> ConstructionCertificate:
    """Parse a document into a certificate, keeping any recipe metadata.

    Documents without a recipe get a literal seed so later construction
    steps still produce replayable recipes.
    """
    ls, metadata = parse_with_metadata(text)
    raw_recipe = metadata.get("recipe")
    if raw_recipe:
        recipe = _recipe_from_json(raw_recipe)
    else:
        _, recipe = _as_labeled(ls)
    return ConstructionCertificate(
        labeled=ls,
        claimed_degree=degree(ls).degree,
        claimed_vertex_count=len(ls.oriented.vertices),
        recipe=recipe,
    )
