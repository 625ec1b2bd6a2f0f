"""Acceptance gate: the end-to-end guarantees of the package, one test per
criterion, each printing a PASS/FAIL line (run with -s to see them live).

All assertions are exact; the only tolerances are wall-clock budgets.
"""

import time
from contextlib import contextmanager

from bihomalg import (
    Mat,
    Subspace,
    brute_force_graded_ideals,
    catalog,
    centre,
    connected,
    connected_by_enumeration,
    connection_classes,
    decompose,
    degree_zero_generated,
    graded_simple,
    graded_subspace_candidate_count,
    intersect,
    prime_field,
    product_span,
    restrict_to_ideal,
    span,
    subspace_sum,
    verify_witness,
    zero_part_forms_agree,
)
from bihomalg.catalog import _pauli_matrices
from bihomalg.cli import main
from bihomalg.document import algebra_to_document, canonical_json


@contextmanager
def criterion(num, description, budget_seconds=None):
    started = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num}: FAIL  {description}")
        raise
    elapsed = time.perf_counter() - started
    if budget_seconds is not None and elapsed >= budget_seconds:
        print(f"ACCEPTANCE {num}: FAIL  {description} (took {elapsed:.2f}s)")
        raise AssertionError(
            f"criterion {num} exceeded its {budget_seconds}s budget: {elapsed:.2f}s"
        )
    print(f"ACCEPTANCE {num}: PASS  {description} ({elapsed:.3f}s)")


def test_criterion_1_pauli_pipeline():
    with criterion(1, "Pauli pipeline over F5", budget_seconds=1.0):
        f5 = prime_field(5)
        algebra = catalog.build("pauli_f5")
        report = algebra.validate()
        assert report.passed
        names = {c.name for c in report.checks}
        assert {"bihom_associativity", "psi_respects_grading", "phi_respects_grading",
                "product_respects_grading"} <= names

        assert set(algebra.support) == {(1, 0), (0, 1), (1, 1)}
        assert algebra.support_symmetric()
        assert len(connection_classes(algebra).classes) == 1

        dec = decompose(algebra)
        assert len(dec.ideals) == 1
        assert dec.ideals[0].total == algebra.carrier
        assert dec.complement.dim == 0
        assert dec.direct

        simplicity = graded_simple(algebra)
        assert simplicity.graded_simple == "yes"
        assert simplicity.criterion == "yes"
        assert simplicity.support_multiplicative.ok
        assert simplicity.maximal_length.ok
        assert simplicity.centre_zero.ok
        assert simplicity.degree_zero_generated.ok
        assert simplicity.all_connected.ok

        assert graded_subspace_candidate_count(algebra) == 16
        ideals = brute_force_graded_ideals(algebra)
        assert ideals == [Subspace.zero(2, f5), algebra.carrier]


def test_criterion_2_generalized_pauli():
    with criterion(2, "clock-shift grading of the 3x3 matrices over F7", budget_seconds=5.0):
        f7 = prime_field(7)
        algebra = catalog.build("clock_shift_f7_3")
        assert algebra.validate().passed

        eps = f7.scalar(2)
        x_a = algebra.component((1, 0)).basis[0]
        x_b = algebra.component((0, 1)).basis[0]
        assert x_a * x_b == (x_b * x_a).scale(eps)
        ident = Mat.identity(3, f7)
        assert x_a * x_a * x_a == ident
        assert x_b * x_b * x_b == ident

        assert len(algebra.components) == 9
        assert all(c.dim == 1 for c in algebra.components.values())

        simplicity = graded_simple(algebra)
        assert simplicity.support_multiplicative.ok
        assert simplicity.maximal_length.ok
        assert simplicity.graded_simple == "yes"

        partition = connection_classes(algebra)
        assert len(partition.classes) == 1
        assert len(partition.classes[0]) == 8


def test_criterion_3_two_class_decomposition():
    with criterion(3, "two-class block decomposition", budget_seconds=1.0):
        algebra = catalog.build("block_pair_f5")
        assert algebra.validate().passed
        dec = decompose(algebra)
        assert len(dec.partition.classes) == 2
        assert len(dec.ideals) == 2
        star = lambda x, y: algebra.star(x, y, check=False)
        i1, i2 = dec.ideals
        assert product_span(i1.total, i2.total, star).dim == 0
        assert product_span(i2.total, i1.total, star).dim == 0
        assert intersect(i1.total, i2.total).dim == 0
        assert dec.complement.dim == 0
        assert dec.direct
        assert subspace_sum(i1.total, i2.total).dim == 8
        assert subspace_sum(i1.total, i2.total) == algebra.carrier
        for ideal in dec.ideals:
            sub = restrict_to_ideal(algebra, ideal)
            assert sub.validate().passed
            assert graded_simple(sub).graded_simple == "yes"


def test_criterion_4_complement_and_centre():
    with criterion(4, "corner algebra: centre, complement, oracle verdict", budget_seconds=1.0):
        f5 = prime_field(5)
        algebra = catalog.build("corner_f5")
        assert algebra.validate().passed
        e33_line = span([Mat.unit(3, f5, 2, 2)])

        z = centre(algebra)
        assert z == e33_line
        assert z.dim == 1

        assert not degree_zero_generated(algebra).ok
        dec = decompose(algebra)
        assert dec.complement == e33_line
        assert not dec.direct

        oracle_ideals = brute_force_graded_ideals(algebra)
        assert e33_line in oracle_ideals

        simplicity = graded_simple(algebra)
        assert simplicity.graded_simple == "no"
        assert simplicity.oracle == "no"


def test_criterion_5_twisted_instance():
    with criterion(5, "twisted Pauli instance with nontrivial psi and alpha", budget_seconds=1.0):
        f5 = prime_field(5)
        algebra = catalog.build("twisted_pauli_f5")
        report = algebra.validate()
        assert report.passed
        assert next(c for c in report.checks if c.name == "bihom_associativity").passed
        assert not algebra.psi.is_identity()
        assert not algebra.bhg.alpha.is_identity()

        _, sigma3, sigma1, _ = _pauli_matrices(f5)
        image = algebra.psi.apply(sigma1)
        assert image == sigma3
        assert algebra.component((1, 0)).contains(image)

        partition = connection_classes(algebra)
        assert len(partition.classes) == 1
        dec = decompose(algebra)
        assert dec.direct
        assert dec.complement.dim == 0


def test_criterion_6_connection_relation_properties():
    with criterion(6, "equivalence relation, witness replay, enumeration agreement",
                   budget_seconds=30.0):
        for name in catalog.names():
            algebra = catalog.build(name)
            sigma = algebra.support
            partition = connection_classes(algebra)  # raises if not an equivalence
            table = {}
            for g in sigma:
                for h in sigma:
                    witness = connected(algebra, g, h)
                    table[(g, h)] = witness is not None
                    if witness is not None:
                        assert verify_witness(algebra, g, h, witness) == [], (name, g, h)
            for g in sigma:
                assert table[(g, g)], (name, g)
            for (g, h), v in table.items():
                assert v == table[(h, g)], (name, g, h)
            for g in sigma:
                for h in sigma:
                    for k in sigma:
                        if table[(g, h)] and table[(h, k)]:
                            assert table[(g, k)], (name, g, h, k)
            for (g, h), w in partition.witnesses.items():
                assert verify_witness(algebra, g, h, w) == [], (name, g, h)
            if algebra.bhg.group.size <= 9:
                for g in sigma:
                    for h in sigma:
                        assert table[(g, h)] == connected_by_enumeration(algebra, g, h), (
                            name, g, h,
                        )


def test_criterion_7_generator_form_consistency():
    with criterion(7, "both degree-zero generator recipes span the same parts",
                   budget_seconds=1.0):
        for name in catalog.names():
            algebra = catalog.build(name)
            for cls in connection_classes(algebra).classes:
                assert zero_part_forms_agree(algebra, cls), (name, cls)


def test_criterion_8_cli_determinism(tmp_path, capsys):
    with criterion(8, "byte-identical machine reports on identical inputs"):
        paths = {}
        for name in ("pauli_f5", "block_pair_f5", "corner_f5", "twisted_pauli_f5"):
            p = tmp_path / f"{name}.json"
            p.write_text(canonical_json(algebra_to_document(catalog.build(name))))
            paths[name] = str(p)

        commands = [
            ["validate", paths["twisted_pauli_f5"], "--format", "machine"],
            ["support", paths["pauli_f5"], "--format", "machine"],
            ["classes", paths["block_pair_f5"], "--verify-witnesses", "--format", "machine"],
            ["decompose", paths["corner_f5"], "--bases", "--format", "machine"],
            ["simplicity", paths["pauli_f5"], "--oracle", "--format", "machine"],
        ]
        for argv in commands:
            code_first = main(argv)
            first = capsys.readouterr().out
            code_second = main(argv)
            second = capsys.readouterr().out
            assert code_first == code_second == 0
            assert first == second, argv
        # emitted documents are byte-stable as well
        out1 = tmp_path / "emit1.json"
        out2 = tmp_path / "emit2.json"
        assert main(["catalog", "emit", "clock_shift_f7_3", str(out1)]) == 0
        assert main(["catalog", "emit", "clock_shift_f7_3", str(out2)]) == 0
        capsys.readouterr()
        assert out1.read_bytes() == out2.read_bytes()
