"""Graded matrix algebras with a twisted product x * y = psi(x) . phi(y).

The carrier is the span of the supplied homogeneous components; it may be a
proper subalgebra of the full n x n matrix space.  validate() checks every
structural axiom exhaustively on homogeneous basis elements and reports each
one with a witness on failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError, NotInAlgebraError
from .fields import FieldSpec
from .groups import BiHomGroup
from .linalg import LinearSolver, Mat, Subspace, span, subspace_sum

IDENTITY = "identity"
CONJUGATION = "conjugation"
IMAGES = "images"


class TwistMap:
    """A linear map of the matrix space: identity, conjugation x -> S x S^-1,
    or explicit images of a fixed independent basis.

    Conjugation is multiplicative by construction; an images map is only as
    good as its data, which is why the algebra validator re-checks
    multiplicativity and bijectivity on the carrier either way.
    """

    __slots__ = ("kind", "n", "field", "conjugator", "_conj_inv", "basis", "images", "_solver")

    def __init__(self, kind, n, field, conjugator=None, basis=None, images=None):
        self.kind = kind
        self.n = n
        self.field = field
        self.conjugator = conjugator
        self._conj_inv = conjugator.inverse() if conjugator is not None else None
        self.basis = basis
        self.images = images
        self._solver = None
        if kind == IMAGES:
            if len(basis) != len(images):
                raise ValueError("basis and image lists differ in length")
            self._solver = LinearSolver([b.values for b in basis], field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "TwistMap":
        return cls(IDENTITY, n, field)

    @classmethod
    def conjugation(cls, s: Mat) -> "TwistMap":
        return cls(CONJUGATION, s.n, s.field, conjugator=s)

    @classmethod
    def from_images(cls, basis, images) -> "TwistMap":
        basis = list(basis)
        if not basis:
            raise ValueError("an images map needs at least one basis element")
        return cls(IMAGES, basis[0].n, basis[0].field, basis=basis, images=list(images))

    def apply(self, x: Mat) -> Mat:
        if x.n != self.n or x.field != self.field:
            raise DimensionMismatchError("matrix outside the map's space")
        if self.kind == IDENTITY:
            return x
        if self.kind == CONJUGATION:
            return self.conjugator * x * self._conj_inv
        coords = self._solver.coordinates(x.values)
        if coords is None:
            raise NotInAlgebraError("matrix outside the span of the twist basis")
        acc = Mat.zeros(self.n, self.field)
        for c, img in zip(coords, self.images):
            if c:
                acc = acc + img.scale(c)
        return acc

    __call__ = apply

    def is_identity(self) -> bool:
        return self.kind == IDENTITY


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        out = {"check": self.name, "passed": self.passed}
        if self.witness:
            out["witness"] = self.witness
        return out


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.as_dict() for c in self.checks]}


class GradedBiHomAlgebra:
    """Field + dimension + twisted group + degree -> component map + twists.

    Degrees are reduced modulo the group orders and zero components are
    dropped on construction; nothing else is trusted until validate() runs.
    """

    def __init__(self, field: FieldSpec, n: int, bhg: BiHomGroup, components, psi=None, phi=None):
        self.field = field
        self.n = n
        self.bhg = bhg
        comps: dict[tuple[int, ...], Subspace] = {}
        for degree, comp in components.items():
            deg = bhg.group.reduce(degree)
            if not isinstance(comp, Subspace):
                comp = span(list(comp), n=n, field=field)
            if comp.n != n or comp.field != field:
                raise DimensionMismatchError(f"component at {deg} has wrong ambient space")
            if comp.dim == 0:
                continue
            if deg in comps:
                comps[deg] = subspace_sum(comps[deg], comp)
            else:
                comps[deg] = comp
        self.components = dict(sorted(comps.items()))
        self.psi = psi if psi is not None else TwistMap.identity(n, field)
        self.phi = phi if phi is not None else TwistMap.identity(n, field)
        self._carrier = None
        self._hom_basis = None
        self._hom_solver = None

    # -- basic structure ---------------------------------------------------
    @property
    def zero_degree(self) -> tuple[int, ...]:
        return self.bhg.group.zero()

    def component(self, degree) -> Subspace:
        deg = self.bhg.group.reduce(degree)
        return self.components.get(deg, Subspace.zero(self.n, self.field))

    @property
    def support(self) -> tuple[tuple[int, ...], ...]:
        z = self.zero_degree
        return tuple(d for d in self.components if d != z)

    @property
    def zero_component(self) -> Subspace:
        return self.component(self.zero_degree)

    @property
    def carrier(self) -> Subspace:
        if self._carrier is None:
            total = Subspace.zero(self.n, self.field)
            for comp in self.components.values():
                total = subspace_sum(total, comp)
            self._carrier = total
        return self._carrier

    @property
    def dim(self) -> int:
        return self.carrier.dim

    def homogeneous_basis(self) -> tuple[tuple[tuple[int, ...], Mat], ...]:
        """Concatenated (degree, basis matrix) pairs in degree order."""
        if self._hom_basis is None:
            self._hom_basis = tuple(
                (deg, b) for deg, comp in self.components.items() for b in comp.basis
            )
        return self._hom_basis

    def support_symmetric(self) -> bool:
        sigma = set(self.support)
        return all(self.bhg.group.neg(g) in sigma for g in sigma)

    def contains(self, x: Mat) -> bool:
        return self.carrier.contains(x)

    def __repr__(self):
        return (
            f"GradedBiHomAlgebra({self.field.label()}, n={self.n}, "
            f"degrees={len(self.components)}, dim={self.dim})"
        )

    # -- products ------------------------------------------------------------
    def star(self, x: Mat, y: Mat, check: bool = True) -> Mat:
        """The twisted product psi(x) . phi(y)."""
        if check and not (self.contains(x) and self.contains(y)):
            raise NotInAlgebraError("star arguments must lie in the algebra")
        return self.psi.apply(x) * self.phi.apply(y)

    def homogeneous_decompose(self, x: Mat) -> dict[tuple[int, ...], Mat]:
        """The unique per-degree parts summing to x; exact solve."""
        basis = self.homogeneous_basis()
        if self._hom_solver is None:
            if not basis:
                self._hom_solver = False
            else:
                self._hom_solver = LinearSolver([b.values for _, b in basis], self.field)
        if self._hom_solver is False:
            if x.is_zero():
                return {}
            raise NotInAlgebraError("matrix outside the (zero) algebra")
        coords = self._hom_solver.coordinates(x.values)
        if coords is None:
            raise NotInAlgebraError("matrix outside the algebra carrier")
        parts: dict[tuple[int, ...], Mat] = {}
        for c, (deg, b) in zip(coords, basis):
            if c:
                parts[deg] = parts.get(deg, Mat.zeros(self.n, self.field)) + b.scale(c)
        return parts

    # -- validation ------------------------------------------------------------
    def validate(self) -> ValidationReport:
        checks: list[CheckResult] = []

        for name, ok, witness in self.bhg.check_automorphisms():
            checks.append(CheckResult(name, ok, witness))
        ok, witness = self.bhg.check_commuting()
        checks.append(CheckResult("alpha_beta_commute", ok, None if ok else f"at {witness}"))
        if not all(c.passed for c in checks):
            return ValidationReport(tuple(checks))

        checks.append(self._check_components_independent())
        closure = self._check_carrier_closed()
        checks.append(closure)

        basis = [b for _, b in self.homogeneous_basis()]
        for name, tw in (("psi", self.psi), ("phi", self.phi)):
            checks.append(self._check_twist_bijective(name, tw, basis))
        if closure.passed:
            for name, tw in (("psi", self.psi), ("phi", self.phi)):
                checks.append(self._check_twist_multiplicative(name, tw, basis))
        checks.append(self._check_twists_commute(basis))
        checks.append(self._check_twist_grading("psi", self.psi, self.bhg.alpha))
        checks.append(self._check_twist_grading("phi", self.phi, self.bhg.beta))
        checks.append(self._check_product_grading())
        checks.append(self._check_bihom_associativity())
        return ValidationReport(tuple(checks))

    def _check_components_independent(self) -> CheckResult:
        total = sum(c.dim for c in self.components.values())
        ok = self.carrier.dim == total
        return CheckResult(
            "components_independent",
            ok,
            None if ok else f"sum has dim {self.carrier.dim}, components total {total}",
        )

    def _check_carrier_closed(self) -> CheckResult:
        carrier = self.carrier
        for dg, cg in self.components.items():
            for dh, ch in self.components.items():
                for x in cg.basis:
                    for y in ch.basis:
                        if not carrier.contains(x * y):
                            return CheckResult(
                                "carrier_closed_under_matrix_product",
                                False,
                                f"product of degrees {dg} and {dh} leaves the carrier",
                            )
        return CheckResult("carrier_closed_under_matrix_product", True)

    def _check_twist_bijective(self, name, tw, basis) -> CheckResult:
        label = f"{name}_bijective_on_carrier"
        try:
            images = [tw.apply(b) for b in basis]
        except NotInAlgebraError:
            return CheckResult(label, False, "map undefined on part of the carrier")
        if not all(self.carrier.contains(i) for i in images):
            return CheckResult(label, False, "image leaves the carrier")
        rank = span(images, n=self.n, field=self.field).dim if images else 0
        ok = rank == self.carrier.dim
        return CheckResult(label, ok, None if ok else f"image rank {rank} < {self.carrier.dim}")

    def _check_twist_multiplicative(self, name, tw, basis) -> CheckResult:
        label = f"{name}_multiplicative"
        degrees = [deg for deg, _ in self.homogeneous_basis()]
        try:
            images = [tw.apply(b) for b in basis]
            for i, x in enumerate(basis):
                for j, y in enumerate(basis):
                    if tw.apply(x * y) != images[i] * images[j]:
                        return CheckResult(
                            label,
                            False,
                            f"fails on basis pair {i},{j} of degrees "
                            f"{degrees[i]},{degrees[j]}",
                        )
        except NotInAlgebraError:
            return CheckResult(label, False, "map undefined on a basis product")
        return CheckResult(label, True)

    def _check_twists_commute(self, basis) -> CheckResult:
        try:
            for i, b in enumerate(basis):
                if self.psi.apply(self.phi.apply(b)) != self.phi.apply(self.psi.apply(b)):
                    return CheckResult("psi_phi_commute", False, f"fails on basis element {i}")
        except NotInAlgebraError:
            return CheckResult("psi_phi_commute", False, "composition undefined on the carrier")
        return CheckResult("psi_phi_commute", True)

    def _check_twist_grading(self, name, tw, auto) -> CheckResult:
        label = f"{name}_respects_grading"
        for deg, comp in self.components.items():
            target = self.component(auto.apply(deg))
            try:
                for b in comp.basis:
                    if not target.contains(tw.apply(b)):
                        return CheckResult(label, False, f"image of degree {deg} misses its component")
            except NotInAlgebraError:
                return CheckResult(label, False, f"map undefined on degree {deg}")
        return CheckResult(label, True)

    def _check_product_grading(self) -> CheckResult:
        for dg, cg in self.components.items():
            for dh, ch in self.components.items():
                target = self.component(self.bhg.bihom_sum(dg, dh))
                for x in cg.basis:
                    for y in ch.basis:
                        try:
                            p = self.star(x, y, check=False)
                        except NotInAlgebraError:
                            return CheckResult(
                                "product_respects_grading", False, f"star undefined on ({dg},{dh})"
                            )
                        if not target.contains(p):
                            return CheckResult(
                                "product_respects_grading",
                                False,
                                f"product of degrees {dg} and {dh} misses degree "
                                f"{self.bhg.bihom_sum(dg, dh)}",
                            )
        return CheckResult("product_respects_grading", True)

    def _check_bihom_associativity(self) -> CheckResult:
        basis = [b for _, b in self.homogeneous_basis()]
        degrees = [deg for deg, _ in self.homogeneous_basis()]
        d = len(basis)
        try:
            psi_img = [self.psi.apply(b) for b in basis]
            phi_img = [self.phi.apply(b) for b in basis]
            prod = [[psi_img[i] * phi_img[j] for j in range(d)] for i in range(d)]
            for i in range(d):
                for j in range(d):
                    for k in range(d):
                        lhs = self.psi.apply(psi_img[i]) * self.phi.apply(prod[j][k])
                        rhs = self.psi.apply(prod[i][j]) * self.phi.apply(phi_img[k])
                        if lhs != rhs:
                            return CheckResult(
                                "bihom_associativity",
                                False,
                                f"fails on basis triple {i},{j},{k} of degrees "
                                f"{degrees[i]},{degrees[j]},{degrees[k]}",
                            )
        except NotInAlgebraError:
            return CheckResult("bihom_associativity", False, "a twist is undefined on a product")
        return CheckResult("bihom_associativity", True)
