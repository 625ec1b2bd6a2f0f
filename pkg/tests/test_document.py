import json

import pytest

from bihomalg import catalog
from bihomalg.document import (
    algebra_to_document,
    build_algebra,
    canonical_json,
    validate_document,
)
from bihomalg.errors import SchemaError


def _minimal_doc():
    return {
        "schema_version": "1",
        "field": "Fp",
        "p": 5,
        "n": 2,
        "group": [2, 2],
        "alpha": [[1, 0], [0, 1]],
        "beta": [[1, 0], [0, 1]],
        "components": [
            {"degree": [0, 0], "basis": [["1", "0", "0", "1"]]},
            {"degree": [1, 0], "basis": [["1", "0", "0", "-1"]]},
        ],
        "psi": {"conjugator": ["1", "0", "0", "1"]},
        "phi": {"conjugator": ["1", "0", "0", "1"]},
    }


def test_minimal_document_builds(f5):
    algebra = build_algebra(_minimal_doc())
    assert algebra.field == f5
    assert algebra.dim == 2
    assert algebra.validate().passed


@pytest.mark.parametrize("name", list(catalog.names()))
def test_catalog_round_trips_through_documents(name):
    original = catalog.build(name)
    doc = algebra_to_document(original)
    rebuilt = build_algebra(json.loads(canonical_json(doc)))
    assert rebuilt.field == original.field
    assert rebuilt.n == original.n
    assert set(rebuilt.components) == set(original.components)
    for deg in original.components:
        assert rebuilt.components[deg] == original.components[deg]
    for _, b in original.homogeneous_basis():
        assert rebuilt.psi.apply(b) == original.psi.apply(b)
        assert rebuilt.phi.apply(b) == original.phi.apply(b)


def test_images_twist_round_trips(f5):
    original = catalog.build("twisted_pauli_f5")
    doc = algebra_to_document(original)
    # re-encode psi through explicit images instead of a conjugator
    basis = [b for _, b in original.homogeneous_basis()]
    doc["psi"] = {"images": [[str(x) for x in original.psi.apply(b).values] for b in basis]}
    rebuilt = build_algebra(doc)
    assert rebuilt.validate().passed
    for b in basis:
        assert rebuilt.psi.apply(b) == original.psi.apply(b)


@pytest.mark.parametrize(
    "mutate,location",
    [
        (lambda d: d.pop("field"), "$.field"),
        (lambda d: d.update(schema_version="2"), "$.schema_version"),
        (lambda d: d.update(extra=1), "$.extra"),
        (lambda d: d.update(n="2"), "$.n"),
        (lambda d: d.update(field="Q"), "$.p"),
        (lambda d: d.update(p=6), "$.p"),
        (lambda d: d["components"][0].pop("degree"), "$.components[0].degree"),
        (lambda d: d["components"][0]["basis"].append(["1", "0"]), "$.components[0].basis[1]"),
        (lambda d: d["components"][0]["basis"][0].__setitem__(0, 1), "$.components[0].basis[0][0]"),
        (lambda d: d.update(psi={}), "$.psi"),
        (
            lambda d: d.update(psi={"conjugator": ["1", "0", "0", "1"], "images": []}),
            "$.psi",
        ),
        (lambda d: d["alpha"].pop(), "$.alpha"),
        (lambda d: d.update(group=[]), "$.group"),
        (lambda d: d["components"][0]["basis"][0].__setitem__(0, "x"), "$.components[0].basis[0]"),
        (lambda d: d.update(psi={"conjugator": ["1", "1", "1", "1"]}), "$.psi.conjugator"),
    ],
)
def test_schema_violations_report_their_location(mutate, location):
    doc = _minimal_doc()
    mutate(doc)
    with pytest.raises(SchemaError) as err:
        build_algebra(doc)
    assert err.value.location == location


def test_lenient_mode_warns_instead_of_failing():
    doc = _minimal_doc()
    doc["comment"] = "scratch"
    warnings = validate_document(doc, lenient=True)
    assert any("comment" in w for w in warnings)
    algebra = build_algebra(doc, lenient=True)
    assert algebra.validate().passed
    with pytest.raises(SchemaError):
        validate_document(doc, lenient=False)


def test_images_length_must_match_basis():
    doc = _minimal_doc()
    doc["psi"] = {"images": [["1", "0", "0", "1"]]}  # two basis mats, one image
    with pytest.raises(SchemaError) as err:
        build_algebra(doc)
    assert err.value.location == "$.psi.images"


def test_canonical_json_is_deterministic():
    doc = algebra_to_document(catalog.build("pauli_f5"))
    assert canonical_json(doc) == canonical_json(json.loads(canonical_json(doc)))
    assert canonical_json({"b": 1, "a": 2}).index('"a"') < canonical_json({"b": 1, "a": 2}).index('"b"')


def test_degrees_reduce_modulo_group_orders():
    doc = _minimal_doc()
    doc["components"][1]["degree"] = [3, 2]  # reduces to (1, 0)
    algebra = build_algebra(doc)
    assert set(algebra.components) == {(0, 0), (1, 0)}


def test_fuzzed_documents_never_escape_the_schema_error():
    # random structural damage must surface as SchemaError (or build fine),
    # never as a bare TypeError/KeyError/IndexError
    import random

    junk = [None, True, -3, "x", 1.5, [], {}, [[1]], ["1"], {"a": 1}]
    rng = random.Random(20260810)
    for trial in range(300):
        doc = json.loads(canonical_json(_minimal_doc()))
        for _ in range(rng.randrange(1, 3)):
            target = doc
            if rng.random() < 0.5:
                spot = rng.choice(["components", "psi", "phi"])
                if spot == "components" and isinstance(doc.get("components"), list) and doc["components"]:
                    picked = rng.choice(doc["components"])
                    if isinstance(picked, dict):
                        target = picked
                elif isinstance(doc.get(spot), dict):
                    target = doc[spot]
            keys = list(target)
            if not keys:
                continue
            action = rng.randrange(3)
            key = rng.choice(keys)
            if action == 0:
                target.pop(key)
            elif action == 1:
                target[key] = rng.choice(junk)
            else:
                target[f"junk_{trial}"] = rng.choice(junk)
        try:
            algebra = build_algebra(doc)
            algebra.validate()
        except SchemaError:
            pass
