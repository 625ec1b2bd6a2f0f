"""Input documents: a strict JSON schema for graded algebras, plus loading,
validation and canonical serialization.

Scalars travel as strings ("4", "-1", "2/3") so no numeric precision is ever
implied; matrices are flat row-major arrays of such strings.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import GradedBiHomAlgebra, TwistMap
from .errors import SchemaError
from .fields import FieldSpec, prime_field, rationals
from .groups import BiHomGroup, GroupAuto, GroupSpec
from .linalg import Mat

SCHEMA_VERSION = "1"

_TOP_KEYS = {
    "schema_version",
    "field",
    "p",
    "n",
    "group",
    "alpha",
    "beta",
    "components",
    "psi",
    "phi",
}
_REQUIRED_KEYS = ("schema_version", "field", "n", "group", "alpha", "beta", "components", "psi", "phi")


def _expect(cond, location, message):
    if not cond:
        raise SchemaError(location, message)


def _check_int_list(value, location, length=None):
    _expect(isinstance(value, list), location, "expected a list of integers")
    _expect(
        all(isinstance(x, int) and not isinstance(x, bool) for x in value),
        location,
        "entries must be integers",
    )
    if length is not None:
        _expect(len(value) == length, location, f"expected length {length}")


def _check_int_matrix(value, location, size):
    _expect(isinstance(value, list) and len(value) == size, location, f"expected {size} rows")
    for i, row in enumerate(value):
        _check_int_list(row, f"{location}[{i}]", length=size)


def _check_scalar_matrix(value, location, n):
    _expect(isinstance(value, list), location, "expected a flat row-major array")
    _expect(len(value) == n * n, location, f"expected {n * n} entries for a {n}x{n} matrix")
    for i, x in enumerate(value):
        _expect(isinstance(x, str), f"{location}[{i}]", "scalar entries must be strings")


def validate_document(doc, lenient: bool = False) -> list[str]:
    """Check the document against the schema; returns lenient-mode warnings.

    Raises SchemaError at the first violation, carrying its location.
    """
    warnings: list[str] = []
    _expect(isinstance(doc, dict), "$", "document must be an object")
    unknown = sorted(set(doc) - _TOP_KEYS)
    if unknown:
        if lenient:
            warnings.append(f"ignoring unknown keys: {', '.join(unknown)}")
        else:
            _expect(False, f"$.{unknown[0]}", "unknown key")
    for key in _REQUIRED_KEYS:
        _expect(key in doc, f"$.{key}", "missing required key")

    _expect(doc["schema_version"] == SCHEMA_VERSION, "$.schema_version", f"expected {SCHEMA_VERSION!r}")
    _expect(doc["field"] in ("Q", "Fp"), "$.field", 'expected "Q" or "Fp"')
    if doc["field"] == "Fp":
        _expect(isinstance(doc.get("p"), int) and not isinstance(doc.get("p"), bool), "$.p", "expected a prime integer")
    elif "p" in doc:
        if lenient:
            warnings.append("ignoring modulus p on a rational field")
        else:
            _expect(False, "$.p", "the rational field takes no modulus")

    _expect(
        isinstance(doc["n"], int) and not isinstance(doc["n"], bool) and doc["n"] >= 1,
        "$.n",
        "expected a positive integer",
    )
    n = doc["n"]
    _check_int_list(doc["group"], "$.group")
    _expect(len(doc["group"]) >= 1, "$.group", "expected at least one cyclic order")
    _expect(all(m >= 1 for m in doc["group"]), "$.group", "cyclic orders must be >= 1")
    rank = len(doc["group"])
    _check_int_matrix(doc["alpha"], "$.alpha", rank)
    _check_int_matrix(doc["beta"], "$.beta", rank)

    comps = doc["components"]
    _expect(isinstance(comps, list), "$.components", "expected a list")
    basis_total = 0
    for i, comp in enumerate(comps):
        loc = f"$.components[{i}]"
        _expect(isinstance(comp, dict), loc, "expected an object")
        unknown = sorted(set(comp) - {"degree", "basis"})
        if unknown:
            if lenient:
                warnings.append(f"ignoring unknown keys in {loc}: {', '.join(unknown)}")
            else:
                _expect(False, f"{loc}.{unknown[0]}", "unknown key")
        _expect("degree" in comp, f"{loc}.degree", "missing required key")
        _expect("basis" in comp, f"{loc}.basis", "missing required key")
        _check_int_list(comp["degree"], f"{loc}.degree", length=rank)
        _expect(isinstance(comp["basis"], list), f"{loc}.basis", "expected a list of matrices")
        for j, mat in enumerate(comp["basis"]):
            _check_scalar_matrix(mat, f"{loc}.basis[{j}]", n)
            basis_total += 1

    for name in ("psi", "phi"):
        tw = doc[name]
        loc = f"$.{name}"
        _expect(isinstance(tw, dict), loc, "expected an object")
        keys = set(tw)
        unknown = sorted(keys - {"conjugator", "images"})
        if unknown:
            if lenient:
                warnings.append(f"ignoring unknown keys in {loc}: {', '.join(unknown)}")
            else:
                _expect(False, f"{loc}.{unknown[0]}", "unknown key")
        has_conj = "conjugator" in tw
        has_imgs = "images" in tw
        _expect(has_conj != has_imgs, loc, 'expected exactly one of "conjugator" or "images"')
        if has_conj:
            _check_scalar_matrix(tw["conjugator"], f"{loc}.conjugator", n)
        else:
            _expect(isinstance(tw["images"], list), f"{loc}.images", "expected a list of matrices")
            _expect(
                len(tw["images"]) == basis_total,
                f"{loc}.images",
                f"expected one image per basis matrix ({basis_total})",
            )
            for j, mat in enumerate(tw["images"]):
                _check_scalar_matrix(mat, f"{loc}.images[{j}]", n)
    return warnings


def _parse_mat(field: FieldSpec, n: int, flat, location: str) -> Mat:
    try:
        return Mat(n, field, (field.parse(x) for x in flat))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(location, f"bad scalar: {exc}") from None


def build_algebra(doc, lenient: bool = False) -> GradedBiHomAlgebra:
    """Validate the document and construct the algebra it describes."""
    validate_document(doc, lenient=lenient)
    if doc["field"] == "Q":
        field = rationals()
    else:
        try:
            field = prime_field(doc["p"])
        except ValueError as exc:
            raise SchemaError("$.p", str(exc)) from None
    n = doc["n"]
    spec = GroupSpec(tuple(doc["group"]))
    bhg = BiHomGroup(spec, GroupAuto(spec, doc["alpha"]), GroupAuto(spec, doc["beta"]))

    components: dict[tuple[int, ...], list[Mat]] = {}
    doc_basis: list[Mat] = []
    for i, comp in enumerate(doc["components"]):
        deg = spec.reduce(comp["degree"])
        mats = [
            _parse_mat(field, n, flat, f"$.components[{i}].basis[{j}]")
            for j, flat in enumerate(comp["basis"])
        ]
        components.setdefault(deg, []).extend(mats)
        doc_basis.extend(mats)

    def parse_twist(name: str) -> TwistMap:
        tw = doc[name]
        if "conjugator" in tw:
            s = _parse_mat(field, n, tw["conjugator"], f"$.{name}.conjugator")
            try:
                return TwistMap.conjugation(s)
            except ValueError:
                raise SchemaError(f"$.{name}.conjugator", "matrix is singular") from None
        images = [
            _parse_mat(field, n, flat, f"$.{name}.images[{j}]")
            for j, flat in enumerate(tw["images"])
        ]
        try:
            return TwistMap.from_images(doc_basis, images)
        except ValueError as exc:
            raise SchemaError(f"$.{name}.images", str(exc)) from None

    return GradedBiHomAlgebra(field, n, bhg, components, psi=parse_twist("psi"), phi=parse_twist("phi"))


def _mat_to_flat(m: Mat) -> list[str]:
    return [str(x) for x in m.values]


def _twist_to_document(algebra: GradedBiHomAlgebra, tw: TwistMap) -> dict:
    if tw.kind == "identity":
        return {"conjugator": _mat_to_flat(Mat.identity(algebra.n, algebra.field))}
    if tw.kind == "conjugation":
        return {"conjugator": _mat_to_flat(tw.conjugator)}
    return {"images": [_mat_to_flat(tw.apply(b)) for _, b in algebra.homogeneous_basis()]}


def algebra_to_document(algebra: GradedBiHomAlgebra) -> dict:
    """Serialize with canonical component bases, ready to round-trip."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "field": "Q" if algebra.field.is_rationals else "Fp",
        "n": algebra.n,
        "group": list(algebra.bhg.group.orders),
        "alpha": [list(r) for r in algebra.bhg.alpha.matrix],
        "beta": [list(r) for r in algebra.bhg.beta.matrix],
        "components": [
            {"degree": list(deg), "basis": [_mat_to_flat(b) for b in comp.basis]}
            for deg, comp in algebra.components.items()
        ],
        "psi": _twist_to_document(algebra, algebra.psi),
        "phi": _twist_to_document(algebra, algebra.phi),
    }
    if not algebra.field.is_rationals:
        doc["p"] = algebra.field.p
    return doc


def canonical_json(obj) -> str:
    """Deterministic rendering: sorted keys, fixed separators, one newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_path(path) -> dict:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from None
