import json

import pytest

from bihomalg.cli import main
from bihomalg.document import algebra_to_document, canonical_json
from bihomalg import catalog


@pytest.fixture()
def pauli_doc(tmp_path):
    path = tmp_path / "pauli.json"
    path.write_text(canonical_json(algebra_to_document(catalog.build("pauli_f5"))))
    return str(path)


@pytest.fixture()
def block_doc(tmp_path):
    path = tmp_path / "block.json"
    path.write_text(canonical_json(algebra_to_document(catalog.build("block_pair_f5"))))
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_ok(pauli_doc, capsys):
    code, out, _ = _run(capsys, ["validate", pauli_doc, "--format", "machine"])
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "ok"
    assert report["validation"]["passed"] is True
    assert "timing_ms" not in out


def test_validate_human_format_includes_timing(pauli_doc, capsys):
    code, out, _ = _run(capsys, ["validate", pauli_doc])
    assert code == 0
    assert "timing_ms" in out


def test_missing_path_exits_2(capsys):
    code, _, err = _run(capsys, ["validate", "/nonexistent/file.json"])
    assert code == 2
    assert "no such file" in err


def test_schema_violation_exits_3(tmp_path, capsys):
    path = tmp_path / "bad.json"
    doc = algebra_to_document(catalog.build("pauli_f5"))
    doc["unexpected"] = True
    path.write_text(canonical_json(doc))
    code, _, err = _run(capsys, ["validate", str(path)])
    assert code == 3
    assert "$.unexpected" in err


def test_invalid_json_exits_3(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = _run(capsys, ["support", str(path)])
    assert code == 3


def test_non_commuting_automorphisms_exit_1_with_witness(tmp_path, capsys):
    doc = algebra_to_document(catalog.build("pauli_f5"))
    doc["alpha"] = [[0, 1], [1, 0]]
    doc["beta"] = [[1, 0], [1, 1]]
    path = tmp_path / "noncommuting.json"
    path.write_text(canonical_json(doc))
    code, out, _ = _run(capsys, ["validate", str(path), "--format", "machine"])
    assert code == 1
    report = json.loads(out)
    assert report["status"] == "finding"
    checks = {c["check"]: c for c in report["validation"]["checks"]}
    assert checks["alpha_beta_commute"]["passed"] is False
    assert checks["alpha_beta_commute"]["witness"]


def test_analysis_commands_refuse_invalid_algebras(tmp_path, capsys):
    # swapping the degree-(0,0) and degree-(0,1) bases breaks grading closure,
    # so any analysis command reports the validation finding and exits 1
    doc = algebra_to_document(catalog.build("pauli_f5"))
    comps = {tuple(c["degree"]): c for c in doc["components"]}
    comps[(0, 0)]["basis"], comps[(0, 1)]["basis"] = comps[(0, 1)]["basis"], comps[(0, 0)]["basis"]
    path = tmp_path / "corrupted.json"
    path.write_text(canonical_json(doc))
    code, out, _ = _run(capsys, ["decompose", str(path), "--format", "machine"])
    assert code == 1
    report = json.loads(out)
    assert report["status"] == "finding"
    failed = {c["check"] for c in report["validation"]["checks"] if not c["passed"]}
    assert "product_respects_grading" in failed


def test_asymmetric_support_is_a_finding(tmp_path, capsys):
    doc = {
        "schema_version": "1",
        "field": "Fp",
        "p": 5,
        "n": 3,
        "group": [3],
        "alpha": [[1]],
        "beta": [[1]],
        "components": [
            {"degree": [1], "basis": [["0", "1", "0", "0", "0", "0", "0", "0", "0"]]}
        ],
        "psi": {"conjugator": ["1", "0", "0", "0", "1", "0", "0", "0", "1"]},
        "phi": {"conjugator": ["1", "0", "0", "0", "1", "0", "0", "0", "1"]},
    }
    path = tmp_path / "asymmetric.json"
    path.write_text(canonical_json(doc))
    code, out, _ = _run(capsys, ["validate", str(path)])
    assert code == 0  # the axioms hold; only the support is one-sided
    code, out, _ = _run(capsys, ["classes", str(path), "--format", "machine"])
    assert code == 1
    report = json.loads(out)
    assert report["finding"]["error"] == "AsymmetricSupportError"


def test_support_command(pauli_doc, capsys):
    code, out, _ = _run(capsys, ["support", pauli_doc, "--format", "machine"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["symmetric"] is True
    assert [1, 0] in result["support"]
    assert {"degree": [0, 0], "dim": 1} in result["degrees"]


def test_classes_with_witness_replay(block_doc, capsys):
    code, out, _ = _run(
        capsys, ["classes", block_doc, "--verify-witnesses", "--format", "machine"]
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["classes"] == [[[0, 1]], [[1, 0]]]
    assert all(r["ok"] for r in result["witness_replays"])


def test_decompose_command_with_bases(block_doc, capsys):
    code, out, _ = _run(capsys, ["decompose", block_doc, "--bases", "--format", "machine"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["direct"] is True
    assert len(result["ideals"]) == 2
    assert result["ideals"][0]["basis"]
    code, out, _ = _run(capsys, ["decompose", block_doc, "--format", "machine"])
    assert "basis" not in json.loads(out)["result"]["ideals"][0]


def test_simplicity_command_with_oracle(pauli_doc, capsys):
    code, out, _ = _run(capsys, ["simplicity", pauli_doc, "--oracle", "--format", "machine"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["graded_simple"] == "yes"
    assert result["oracle"] == "yes"
    assert result["oracle_agrees"] is True


def test_simplicity_without_oracle_flag_keeps_criterion_only(pauli_doc, capsys):
    code, out, _ = _run(capsys, ["simplicity", pauli_doc, "--format", "machine"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["graded_simple"] == "yes"
    assert result["oracle"] is None


def test_catalog_list(capsys):
    code, out, _ = _run(capsys, ["catalog", "list", "--format", "machine"])
    assert code == 0
    entries = json.loads(out)["entries"]
    assert {"name": "pauli_f5", "summary": catalog.CATALOG["pauli_f5"].summary} in entries


def test_catalog_emit_to_file_then_analyse(tmp_path, capsys):
    out_path = tmp_path / "emitted.json"
    code, out, _ = _run(
        capsys, ["catalog", "emit", "corner_f5", str(out_path), "--format", "machine"]
    )
    assert code == 0
    assert json.loads(out)["output_sha256"]
    code, out, _ = _run(capsys, ["decompose", str(out_path), "--format", "machine"])
    assert code == 0
    result = json.loads(out)["result"]
    assert result["direct"] is False
    assert result["complement_dim"] == 1


def test_catalog_emit_to_stdout(capsys):
    code, out, _ = _run(capsys, ["catalog", "emit", "pauli_f5"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == "1"


def test_catalog_emit_unknown_name(capsys):
    code, _, err = _run(capsys, ["catalog", "emit", "unknown_entry"])
    assert code == 2
    assert "unknown_entry" in err


def test_machine_reports_are_byte_identical(pauli_doc, block_doc, capsys):
    for argv in (
        ["validate", pauli_doc, "--format", "machine"],
        ["support", pauli_doc, "--format", "machine"],
        ["classes", block_doc, "--verify-witnesses", "--format", "machine"],
        ["decompose", block_doc, "--bases", "--format", "machine"],
        ["simplicity", pauli_doc, "--oracle", "--format", "machine"],
    ):
        _, first, _ = _run(capsys, argv)
        _, second, _ = _run(capsys, argv)
        assert first == second
