import pytest

from bihomalg import (
    Mat,
    catalog,
    connection_classes,
    decompose,
    graded_simple,
    prime_field,
    primitive_root_of_unity,
    rationals,
)
from bihomalg.catalog import (
    _pauli_matrices,
    block_diagonal_pair,
    generalized_pauli,
    pauli_m2,
    twisted_pauli,
)
from bihomalg.errors import NoSuchRootError


@pytest.mark.parametrize("name", list(catalog.names()))
def test_every_entry_validates(name):
    report = catalog.build(name).validate()
    assert report.passed, [c.name for c in report.failures()]


@pytest.mark.parametrize("name", list(catalog.names()))
def test_expectations_are_rederived(name):
    entry = catalog.CATALOG[name]
    algebra = entry.build()
    expected = entry.expected
    assert algebra.dim == expected["dim"]
    assert len(algebra.support) == expected["support_size"]
    report = decompose(algebra)
    assert len(report.partition.classes) == expected["classes"]
    assert report.centre_dim == expected["centre_dim"]
    assert report.direct == expected["direct"]
    assert report.complement.dim == expected["complement_dim"]
    assert graded_simple(algebra).graded_simple == expected["graded_simple"]


def test_pauli_components_are_one_dimensional(pauli):
    assert [comp.dim for comp in pauli.components.values()] == [1, 1, 1, 1]


def test_pauli_over_f13_uses_i_equals_5():
    f13 = prime_field(13)
    assert primitive_root_of_unity(f13, 4) == f13.scalar(5)
    assert (5 * 5) % 13 == 13 - 1  # 5 is a square root of -1
    algebra = pauli_m2(f13)
    assert algebra.validate().passed
    assert graded_simple(algebra).graded_simple == "yes"


def test_pauli_needs_a_square_root_of_minus_one():
    with pytest.raises(NoSuchRootError):
        pauli_m2(rationals())
    with pytest.raises(NoSuchRootError):
        pauli_m2(prime_field(7))  # 7 = 3 mod 4


def test_clock_shift_relations_hold_exactly(f7):
    n = 3
    eps = primitive_root_of_unity(f7, n)
    algebra = generalized_pauli(f7, n)
    x_a = algebra.component((1, 0)).basis[0]
    x_b = algebra.component((0, 1)).basis[0]
    assert x_a * x_b == (x_b * x_a).scale(eps)
    ident = Mat.identity(n, f7)
    assert x_a * x_a * x_a == ident
    assert x_b * x_b * x_b == ident


def test_clock_shift_has_nine_independent_monomials(clock_shift):
    assert len(clock_shift.components) == 9
    assert all(c.dim == 1 for c in clock_shift.components.values())
    assert clock_shift.dim == 9


def test_clock_shift_n2_coincides_with_pauli_grading(f5):
    pauli = pauli_m2(f5)
    clock = generalized_pauli(f5, 2)
    assert set(pauli.components) == set(clock.components)
    for deg in pauli.components:
        assert pauli.components[deg] == clock.components[deg]


def test_twisted_pauli_conjugation_images(f5):
    algebra = twisted_pauli(f5)
    ident, sigma3, sigma1, sigma2 = _pauli_matrices(f5)
    assert algebra.psi.apply(sigma1) == sigma3
    assert algebra.psi.apply(sigma3) == sigma1
    assert algebra.psi.apply(sigma2) == -sigma2
    # images land in the alpha-shifted components
    assert algebra.component((1, 0)).contains(algebra.psi.apply(sigma1))
    assert algebra.component((1, 1)).contains(algebra.psi.apply(sigma2))


def test_twisted_pauli_twists_commute(f5):
    algebra = twisted_pauli(f5)
    for _, b in algebra.homogeneous_basis():
        assert algebra.psi.apply(algebra.phi.apply(b)) == algebra.phi.apply(algebra.psi.apply(b))


def test_block_pair_component_dimensions(block_pair):
    dims = {deg: comp.dim for deg, comp in block_pair.components.items()}
    assert dims == {(0, 0): 4, (1, 0): 2, (0, 1): 2}
    assert block_pair.dim == 8


def test_block_pair_over_q_runs_the_exact_rational_path():
    algebra = block_diagonal_pair(rationals())
    assert algebra.validate().passed
    partition = connection_classes(algebra)
    assert len(partition.classes) == 2
    report = decompose(algebra)
    assert report.direct and report.centre_dim == 0


def test_corner_carrier_is_corner_plus_unit(corner, f5):
    e33 = Mat.unit(3, f5, 2, 2)
    assert corner.dim == 5
    assert corner.carrier.contains(e33)
    assert corner.zero_component.dim == 2


def test_catalog_names_are_stable():
    assert catalog.names()[0] == "pauli_f5"
    assert "corner_f5" in catalog.names()
    with pytest.raises(KeyError):
        catalog.build("no_such_entry")
