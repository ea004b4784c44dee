import json

import pytest

from spheremap import (
    DegreeMismatch,
    DocumentSyntaxError,
    ValidationError,
    boundary_simplex,
    construct,
    cyclic_circle,
    degree,
    degree_four_witness,
    load_certificate,
    one_point_suspension,
    parse,
    parse_with_metadata,
    replay,
    serialize,
)

TORUS = [
    tuple(sorted((i + k) % 7 + 1 for k in off))
    for i in range(7)
    for off in ((0, 1, 3), (0, 2, 3))
]

RP2 = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
]


def doc_of(obj) -> dict:
    return json.loads(serialize(obj))


def bare_sphere_doc(facets, labels, dimension) -> str:
    return json.dumps({
        "format_version": "1",
        "dimension": dimension,
        "facets": [list(f) for f in facets],
        "labels": {str(v): c for v, c in labels.items()},
    })


def test_serialize_triangle_certificate():
    doc = doc_of(cyclic_circle(1))
    assert doc["dimension"] == 1
    assert doc["facets"] == [[1, 2], [1, 3], [2, 3]]
    assert doc["labels"] == {"1": 1, "2": 2, "3": 3}
    assert doc["metadata"]["claimed_degree"] == 1
    assert doc["metadata"]["claimed_vertex_count"] == 3
    assert doc["metadata"]["recipe"] == [["cyclic_circle", 1]]


def test_serialize_witness_certificate():
    doc = doc_of(degree_four_witness())
    assert len(doc["facets"]) == 20
    assert len(doc["labels"]) == 10
    assert doc["metadata"]["claimed_degree"] == 4


def test_serialize_has_no_floats_or_strings_in_numbers():
    def walk(x):
        assert not isinstance(x, float)
        if isinstance(x, dict):
            for k, v in x.items():
                assert isinstance(k, str)
                walk(v)
        elif isinstance(x, list):
            for v in x:
                walk(v)

    for obj in (construct(2, 3), degree_four_witness(), cyclic_circle(-2).labeled):
        walk(doc_of(obj))


def test_certificate_round_trip_is_byte_identical():
    for cert in (construct(2, 3), construct(1, -4), construct(3, 0),
                 degree_four_witness()):
        text = serialize(cert)
        assert serialize(load_certificate(text)) == text


def test_labeled_sphere_round_trip_idempotent():
    ls = construct(2, 4).labeled
    text = serialize(ls)
    assert serialize(parse(text)) == text


def test_parse_boundary_simplex():
    ls = parse(serialize(boundary_simplex(3)))
    assert degree(ls).degree == 1
    assert ls.dimension == 3


def test_parse_preserves_given_orientation():
    from spheremap import reverse_orientation

    ls = reverse_orientation(boundary_simplex(2).labeled)
    again = parse(serialize(ls))
    assert again.oriented.signs == ls.oriented.signs
    assert degree(again).degree == -1


def test_parse_without_orientation_reorients():
    doc = doc_of(construct(2, 2).labeled)
    del doc["orientation"]
    del doc["metadata"]  # claimed degree may differ in sign after reorienting
    ls = parse(json.dumps(doc))
    assert abs(degree(ls).degree) == 2


def test_parse_with_metadata_keeps_recipe():
    cert = construct(2, 3)
    _, metadata = parse_with_metadata(serialize(cert))
    assert metadata["claimed_degree"] == 3
    assert metadata["recipe"][0] == ["boundary_simplex", 2]


def test_load_certificate_without_recipe_gets_literal_seed():
    ls = cyclic_circle(2).labeled
    cert = load_certificate(serialize(ls))
    assert cert.recipe[0][0] == "literal"
    assert replay(cert.recipe).labeled == ls
    longer = one_point_suspension(cert)
    assert replay(longer.recipe).labeled == longer.labeled


def test_parse_rejects_bad_json():
    with pytest.raises(DocumentSyntaxError):
        parse("{not json")
    with pytest.raises(DocumentSyntaxError):
        parse("[1, 2, 3]")


def test_parse_rejects_missing_fields():
    doc = doc_of(boundary_simplex(2))
    for field in ("format_version", "dimension", "facets", "labels"):
        broken = dict(doc)
        del broken[field]
        with pytest.raises(ValidationError, match=field):
            parse(json.dumps(broken))


def test_parse_rejects_bad_format_version():
    doc = doc_of(boundary_simplex(2))
    doc["format_version"] = "2"
    with pytest.raises(ValidationError, match="format_version"):
        parse(json.dumps(doc))


def test_parse_rejects_non_integer_dimension_and_facets():
    doc = doc_of(boundary_simplex(2))
    doc["dimension"] = 2.0
    with pytest.raises(ValidationError, match="dimension"):
        parse(json.dumps(doc))
    doc = doc_of(boundary_simplex(2))
    doc["facets"][0] = [1, 2.5, 3]
    with pytest.raises(ValidationError, match="facets"):
        parse(json.dumps(doc))


def test_parse_rejects_dimension_mismatch():
    doc = doc_of(boundary_simplex(2))
    doc["dimension"] = 3
    with pytest.raises(ValidationError, match="dimension"):
        parse(json.dumps(doc))


def test_parse_rejects_invalid_complex():
    text = bare_sphere_doc(
        [(1, 2, 3), (1, 2)], {1: 1, 2: 2, 3: 3}, 2
    )
    with pytest.raises(ValidationError, match="facets"):
        parse(text)


def test_parse_names_overloaded_ridge():
    facets = [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5)]
    text = bare_sphere_doc(facets, {v: min(v, 4) for v in range(1, 6)}, 2)
    with pytest.raises(ValidationError, match=r"\[1, 2\]"):
        parse(text)


def test_parse_rejects_disconnected():
    facets = [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]
    text = bare_sphere_doc(facets, {v: (v - 1) % 3 + 1 for v in range(1, 7)}, 1)
    with pytest.raises(ValidationError, match="disconnected"):
        parse(text)


def test_parse_rejects_orientation_problems():
    base = doc_of(boundary_simplex(2))

    doc = json.loads(json.dumps(base))
    doc["orientation"][0][0] = -doc["orientation"][0][0]
    with pytest.raises(ValidationError, match="coherent"):
        parse(json.dumps(doc))

    doc = json.loads(json.dumps(base))
    doc["orientation"][0] = [2, 1, 2, 3]
    with pytest.raises(ValidationError, match="orientation"):
        parse(json.dumps(doc))

    doc = json.loads(json.dumps(base))
    doc["orientation"][0] = [1, 1, 2, 9]
    with pytest.raises(ValidationError, match="not a facet"):
        parse(json.dumps(doc))

    doc = json.loads(json.dumps(base))
    doc["orientation"].append(doc["orientation"][0])
    with pytest.raises(ValidationError, match="twice"):
        parse(json.dumps(doc))

    doc = json.loads(json.dumps(base))
    doc["orientation"] = doc["orientation"][:-1]
    with pytest.raises(ValidationError, match="missing facet"):
        parse(json.dumps(doc))

    doc = json.loads(json.dumps(base))
    doc["orientation"] = {"1,2,3": 1}
    with pytest.raises(ValidationError, match="orientation"):
        parse(json.dumps(doc))


def test_parse_accepts_unsorted_orientation_entries():
    # an entry in odd order means the opposite stored sign on the sorted tuple
    doc = doc_of(boundary_simplex(2))
    sign, a, b, c = doc["orientation"][0]
    doc["orientation"][0] = [-sign, b, a, c]
    ls = parse(json.dumps(doc))
    assert degree(ls).degree == 1


def test_parse_rejects_label_problems():
    base = doc_of(boundary_simplex(2))

    doc = json.loads(json.dumps(base))
    doc["labels"] = [1, 2, 3, 4]
    with pytest.raises(ValidationError, match="labels"):
        parse(json.dumps(doc))

    doc = json.loads(json.dumps(base))
    doc["labels"] = {"x": 1, "2": 2, "3": 3, "4": 4}
    with pytest.raises(ValidationError, match="vertex id"):
        parse(json.dumps(doc))

    doc = json.loads(json.dumps(base))
    doc["labels"]["1"] = 1.5
    with pytest.raises(ValidationError, match="integer"):
        parse(json.dumps(doc))

    doc = json.loads(json.dumps(base))
    del doc["labels"]["1"]
    with pytest.raises(ValidationError, match="labels"):
        parse(json.dumps(doc))

    doc = json.loads(json.dumps(base))
    doc["labels"]["1"] = 9
    with pytest.raises(ValidationError, match="labels"):
        parse(json.dumps(doc))


def test_parse_rejects_non_spheres():
    torus_doc = bare_sphere_doc(TORUS, {v: (v - 1) % 4 + 1 for v in range(1, 8)}, 2)
    with pytest.raises(ValidationError, match="sphere checks"):
        parse(torus_doc)
    rp2_doc = bare_sphere_doc(RP2, {v: (v - 1) % 4 + 1 for v in range(1, 7)}, 2)
    with pytest.raises(ValidationError, match="orientable"):
        parse(rp2_doc)


def test_parse_rejects_claim_mismatches():
    doc = doc_of(degree_four_witness())
    doc["metadata"]["claimed_degree"] = 5
    with pytest.raises(DegreeMismatch):
        parse(json.dumps(doc))

    doc = doc_of(degree_four_witness())
    doc["metadata"]["claimed_vertex_count"] = 11
    with pytest.raises(ValidationError, match="vertices"):
        parse(json.dumps(doc))

    doc = doc_of(degree_four_witness())
    doc["metadata"]["claimed_degree"] = "4"
    with pytest.raises(ValidationError, match="claimed_degree"):
        parse(json.dumps(doc))

    doc = doc_of(degree_four_witness())
    doc["metadata"] = ["not", "a", "dict"]
    with pytest.raises(ValidationError, match="metadata"):
        parse(json.dumps(doc))
