"""Ready-made graded algebras: Pauli and clock-shift fine gradings, a twisted
variant, and small synthetic instances that exercise multi-class
decomposition, nontrivial centres and degenerate products.

Every builder is deterministic, and every expectation stored with an entry is
re-derived by the test suite rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .algebra import GradedBiHomAlgebra, TwistMap
from .errors import RelationViolationError
from .fields import FieldSpec, prime_field, primitive_root_of_unity, rationals
from .groups import BiHomGroup, GroupAuto, GroupSpec
from .linalg import Mat


def _pauli_matrices(field: FieldSpec):
    """(identity, sigma3, sigma1, sigma2) with sigma2 built from i = sqrt(-1)."""
    i = primitive_root_of_unity(field, 4)
    one, zero = field.one(), field.zero()
    ident = Mat.identity(2, field)
    sigma3 = Mat.from_rows(field, [[one, zero], [zero, -one]])
    sigma1 = Mat.from_rows(field, [[zero, one], [one, zero]])
    sigma2 = Mat.from_rows(field, [[zero, i], [-i, zero]])
    return ident, sigma3, sigma1, sigma2


def pauli_m2(field: FieldSpec) -> GradedBiHomAlgebra:
    """The Z_2 x Z_2 grading of the 2x2 matrices by Pauli matrices.

    Needs a square root of -1 in the field (p = 1 mod 4).
    """
    ident, sigma3, sigma1, sigma2 = _pauli_matrices(field)
    bhg = BiHomGroup.untwisted((2, 2))
    return GradedBiHomAlgebra(
        field,
        2,
        bhg,
        {
            (0, 0): [ident],
            (1, 0): [sigma3],
            (0, 1): [sigma1],
            (1, 1): [sigma2],
        },
    )


def generalized_pauli(field: FieldSpec, n: int) -> GradedBiHomAlgebra:
    """The Z_n x Z_n grading of the n x n matrices by clock and shift matrices.

    X_a carries descending powers of a primitive n-th root of unity on the
    diagonal; X_b shifts cyclically (ones on the superdiagonal plus a one in
    the bottom-left corner).  The defining relations X_a X_b = eps X_b X_a and
    X_a^n = X_b^n = 1 are re-verified by exact multiplication.
    """
    eps = primitive_root_of_unity(field, n)
    x_a = Mat.diag(field, [eps ** (n - 1 - k) for k in range(n)])
    zero, one = field.zero(), field.one()
    vals = [zero] * (n * n)
    for i in range(n - 1):
        vals[i * n + i + 1] = one
    vals[(n - 1) * n] = one
    x_b = Mat(n, field, vals)

    ident = Mat.identity(n, field)
    if x_a * x_b != (x_b * x_a).scale(eps):
        raise RelationViolationError("clock and shift matrices fail the commutation relation")
    pow_a, pow_b = ident, ident
    for _ in range(n):
        pow_a, pow_b = pow_a * x_a, pow_b * x_b
    if pow_a != ident or pow_b != ident:
        raise RelationViolationError("clock or shift matrix is not of order n")

    bhg = BiHomGroup.untwisted((n, n))
    components = {}
    a_power = ident
    for k in range(n):
        b_power = ident
        for ell in range(n):
            components[(k, ell)] = [a_power * b_power]
            b_power = b_power * x_b
        a_power = a_power * x_a
    return GradedBiHomAlgebra(field, n, bhg, components)


def twisted_pauli(field: FieldSpec) -> GradedBiHomAlgebra:
    """Pauli components with a genuinely nontrivial twist pair.

    psi conjugates by S = [[1, 1], [1, -1]] (which swaps sigma1 and sigma3 up
    to sign), matched on the group side by alpha swapping the coordinates of
    Z_2 x Z_2; phi and beta stay identities.
    """
    ident, sigma3, sigma1, sigma2 = _pauli_matrices(field)
    one = field.one()
    s = Mat.from_rows(field, [[one, one], [one, -one]])
    spec = GroupSpec((2, 2))
    alpha = GroupAuto(spec, [[0, 1], [1, 0]])
    beta = GroupAuto.identity(spec)
    return GradedBiHomAlgebra(
        field,
        2,
        BiHomGroup(spec, alpha, beta),
        {
            (0, 0): [ident],
            (1, 0): [sigma3],
            (0, 1): [sigma1],
            (1, 1): [sigma2],
        },
        psi=TwistMap.conjugation(s),
        phi=TwistMap.identity(2, field),
    )


def hom_pauli(field: FieldSpec) -> GradedBiHomAlgebra:
    """Pauli components with equal twists on both sides (the Hom-type case).

    psi = phi = conjugation by S = [[1, 1], [1, -1]] and alpha = beta = the
    coordinate swap, so every twisted code path runs with nontrivial maps,
    including the beta-inverse used by the degree-zero generation check.
    """
    ident, sigma3, sigma1, sigma2 = _pauli_matrices(field)
    one = field.one()
    s = Mat.from_rows(field, [[one, one], [one, -one]])
    spec = GroupSpec((2, 2))
    swap = GroupAuto(spec, [[0, 1], [1, 0]])
    return GradedBiHomAlgebra(
        field,
        2,
        BiHomGroup(spec, swap, swap),
        {
            (0, 0): [ident],
            (1, 0): [sigma3],
            (0, 1): [sigma1],
            (1, 1): [sigma2],
        },
        psi=TwistMap.conjugation(s),
        phi=TwistMap.conjugation(s),
    )


def block_diagonal_pair(field: FieldSpec) -> GradedBiHomAlgebra:
    """Two orthogonal 2x2 blocks inside the 4x4 matrices.

    Degree zero holds both block diagonals; each nonzero degree holds one
    block antidiagonal, so the support splits into two connection classes.
    """
    e = lambda i, j: Mat.unit(4, field, i, j)
    bhg = BiHomGroup.untwisted((2, 2))
    return GradedBiHomAlgebra(
        field,
        4,
        bhg,
        {
            (0, 0): [e(0, 0), e(1, 1), e(2, 2), e(3, 3)],
            (1, 0): [e(0, 1), e(1, 0)],
            (0, 1): [e(2, 3), e(3, 2)],
        },
    )


def corner_with_annihilator(field: FieldSpec) -> GradedBiHomAlgebra:
    """A Pauli-graded 2x2 corner of the 3x3 matrices plus the unit E_33
    adjoined at degree zero.

    E_33 annihilates the corner block on both sides, so the degree-zero
    component is strictly bigger than what support products generate.
    """
    ident2, sigma3, sigma1, sigma2 = _pauli_matrices(field)

    def embed(m: Mat) -> Mat:
        big = Mat.zeros(3, field)
        vals = list(big.values)
        for i in range(2):
            for j in range(2):
                vals[i * 3 + j] = m.entry(i, j)
        return Mat(3, field, vals)

    bhg = BiHomGroup.untwisted((2, 2))
    return GradedBiHomAlgebra(
        field,
        3,
        bhg,
        {
            (0, 0): [embed(ident2), Mat.unit(3, field, 2, 2)],
            (1, 0): [embed(sigma3)],
            (0, 1): [embed(sigma1)],
            (1, 1): [embed(sigma2)],
        },
    )


def nilpotent_ladder(field: FieldSpec) -> GradedBiHomAlgebra:
    """Strictly upper-triangular 3x3 matrices graded by Z_2.

    The two single steps sit at degree one and their product E_13 at degree
    zero, which is central: a graded ideal inside the degree-zero component
    that really lies in the centre.
    """
    e = lambda i, j: Mat.unit(3, field, i, j)
    bhg = BiHomGroup.untwisted((2,))
    return GradedBiHomAlgebra(
        field,
        3,
        bhg,
        {
            (0,): [e(0, 2)],
            (1,): [e(0, 1), e(1, 2)],
        },
    )


def zero_product_line(field: FieldSpec) -> GradedBiHomAlgebra:
    """A single nilpotent line at degree one of Z_2; every product vanishes."""
    bhg = BiHomGroup.untwisted((2,))
    return GradedBiHomAlgebra(field, 2, bhg, {(1,): [Mat.unit(2, field, 0, 1)]})


def orthogonal_lines(field: FieldSpec) -> GradedBiHomAlgebra:
    """Two mutually annihilating nilpotent lines at different degrees.

    Disconnected support with an empty degree-zero component.
    """
    bhg = BiHomGroup.untwisted((2, 2))
    return GradedBiHomAlgebra(
        field,
        4,
        bhg,
        {
            (1, 0): [Mat.unit(4, field, 0, 1)],
            (0, 1): [Mat.unit(4, field, 2, 3)],
        },
    )


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    summary: str
    build: Callable[[], GradedBiHomAlgebra]
    expected: Mapping


CATALOG: dict[str, CatalogEntry] = {}


def _register(name, summary, build, **expected):
    CATALOG[name] = CatalogEntry(name=name, summary=summary, build=build, expected=dict(expected))


_register(
    "pauli_f5",
    "Pauli grading of the 2x2 matrices over F5 (i = 2)",
    lambda: pauli_m2(prime_field(5)),
    dim=4,
    support_size=3,
    classes=1,
    graded_simple="yes",
    centre_dim=0,
    direct=True,
    complement_dim=0,
    support_multiplicative=True,
    maximal_length=True,
    oracle_ideals=2,
)

_register(
    "pauli_f13",
    "Pauli grading of the 2x2 matrices over F13 (i = 5)",
    lambda: pauli_m2(prime_field(13)),
    dim=4,
    support_size=3,
    classes=1,
    graded_simple="yes",
    centre_dim=0,
    direct=True,
    complement_dim=0,
    support_multiplicative=True,
    maximal_length=True,
    oracle_ideals=2,
)

_register(
    "clock_shift_f7_3",
    "Z_3 x Z_3 clock-shift grading of the 3x3 matrices over F7 (eps = 2)",
    lambda: generalized_pauli(prime_field(7), 3),
    dim=9,
    support_size=8,
    classes=1,
    graded_simple="yes",
    centre_dim=0,
    direct=True,
    complement_dim=0,
    support_multiplicative=True,
    maximal_length=True,
    oracle_ideals=2,
)

_register(
    "clock_shift_f5_4",
    "Z_4 x Z_4 clock-shift grading of the 4x4 matrices over F5 (eps = 2)",
    lambda: generalized_pauli(prime_field(5), 4),
    dim=16,
    support_size=15,
    classes=1,
    graded_simple="yes",
    centre_dim=0,
    direct=True,
    complement_dim=0,
    support_multiplicative=True,
    maximal_length=True,
    oracle_ideals=None,
)

_register(
    "clock_shift_f5_2",
    "Z_2 x Z_2 clock-shift grading over F5; coincides with the Pauli grading",
    lambda: generalized_pauli(prime_field(5), 2),
    dim=4,
    support_size=3,
    classes=1,
    graded_simple="yes",
    centre_dim=0,
    direct=True,
    complement_dim=0,
    support_multiplicative=True,
    maximal_length=True,
    oracle_ideals=2,
)

_register(
    "twisted_pauli_f5",
    "Pauli components with conjugation twist psi and coordinate-swap alpha",
    lambda: twisted_pauli(prime_field(5)),
    dim=4,
    support_size=3,
    classes=1,
    graded_simple="yes",
    centre_dim=0,
    direct=True,
    complement_dim=0,
    support_multiplicative=True,
    maximal_length=True,
    oracle_ideals=2,
)

_register(
    "hom_pauli_f5",
    "Pauli components with equal conjugation twists and equal coordinate swaps",
    lambda: hom_pauli(prime_field(5)),
    dim=4,
    support_size=3,
    classes=1,
    graded_simple="yes",
    centre_dim=0,
    direct=True,
    complement_dim=0,
    support_multiplicative=True,
    maximal_length=True,
    oracle_ideals=2,
)

_register(
    "block_pair_f5",
    "Two orthogonal graded 2x2 blocks in the 4x4 matrices over F5",
    lambda: block_diagonal_pair(prime_field(5)),
    dim=8,
    support_size=2,
    classes=2,
    graded_simple="no",
    centre_dim=0,
    direct=True,
    complement_dim=0,
    support_multiplicative=False,
    maximal_length=False,
    oracle_ideals=4,
)

_register(
    "block_pair_q",
    "Two orthogonal graded 2x2 blocks in the 4x4 matrices over Q",
    lambda: block_diagonal_pair(rationals()),
    dim=8,
    support_size=2,
    classes=2,
    graded_simple="inapplicable",
    centre_dim=0,
    direct=True,
    complement_dim=0,
    support_multiplicative=False,
    maximal_length=False,
    oracle_ideals=None,
)

_register(
    "corner_f5",
    "Pauli 2x2 corner of the 3x3 matrices over F5 with E_33 adjoined at degree zero",
    lambda: corner_with_annihilator(prime_field(5)),
    dim=5,
    support_size=3,
    classes=1,
    graded_simple="no",
    centre_dim=1,
    direct=False,
    complement_dim=1,
    support_multiplicative=False,
    maximal_length=True,
    oracle_ideals=4,
)

_register(
    "nilpotent_ladder_f5",
    "Strictly upper-triangular 3x3 matrices over F5, graded by Z_2",
    lambda: nilpotent_ladder(prime_field(5)),
    dim=3,
    support_size=1,
    classes=1,
    graded_simple="no",
    centre_dim=1,
    direct=False,
    complement_dim=0,
    support_multiplicative=True,
    maximal_length=False,
    oracle_ideals=9,
)

_register(
    "zero_product_line_f5",
    "One nilpotent line at degree one of Z_2 over F5; all products vanish",
    lambda: zero_product_line(prime_field(5)),
    dim=1,
    support_size=1,
    classes=1,
    graded_simple="no",
    centre_dim=1,
    direct=False,
    complement_dim=0,
    support_multiplicative=True,
    maximal_length=True,
    oracle_ideals=2,
)

_register(
    "orthogonal_lines_f5",
    "Two mutually annihilating lines at different degrees of Z_2 x Z_2 over F5",
    lambda: orthogonal_lines(prime_field(5)),
    dim=2,
    support_size=2,
    classes=2,
    graded_simple="no",
    centre_dim=2,
    direct=False,
    complement_dim=0,
    support_multiplicative=True,
    maximal_length=True,
    oracle_ideals=4,
)


def names() -> list[str]:
    return list(CATALOG)


def build(name: str) -> GradedBiHomAlgebra:
    if name not in CATALOG:
        raise KeyError(f"unknown catalog entry {name!r}; choices: {', '.join(CATALOG)}")
    return CATALOG[name].build()
