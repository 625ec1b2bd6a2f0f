"""Structure tests for graded simplicity.

The criterion route checks support-multiplicativity and maximal length, then
trivial centre, degree-zero generation and full connectivity.  When the
criterion's hypotheses fail the verdict can still be settled by the
exhaustive oracle, which enumerates every graded subspace (one subspace
choice per degree) and filters by the ideal axioms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as iter_product

from .algebra import GradedBiHomAlgebra, TwistMap
from .connections import connection_classes
from .decompose import GradedIdeal, centre, decompose, degree_zero_generated
from .errors import HypothesisUnmetError, TheoremViolationError, TooLargeError
from .linalg import Mat, Subspace, product_span, span, subspace_sum

YES = "yes"
NO = "no"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        out = {"ok": self.ok}
        if self.witness:
            out["witness"] = self.witness
        return out


def support_multiplicative(algebra) -> Verdict:
    """Do homogeneous products fill their whole target component whenever the
    target degree lies in the support or is zero?"""
    sigma = algebra.support
    star = lambda x, y: algebra.star(x, y, check=False)
    targets = set(sigma) | {algebra.zero_degree}
    for g in sigma:
        for h in sigma:
            t = algebra.bhg.bihom_sum(g, h)
            if t not in targets:
                continue
            prod = product_span(algebra.component(g), algebra.component(h), star)
            if prod != algebra.component(t):
                return Verdict(False, f"product of {g} and {h} does not fill degree {t}")
    return Verdict(True)


def maximal_length(algebra) -> Verdict:
    for g in algebra.support:
        if algebra.component(g).dim != 1:
            return Verdict(False, f"component at {g} has dim {algebra.component(g).dim}")
    return Verdict(True)


def nonzero_star_product(algebra) -> Verdict:
    basis = [b for _, b in algebra.homogeneous_basis()]
    for x in basis:
        for y in basis:
            if not algebra.star(x, y, check=False).is_zero():
                return Verdict(True)
    return Verdict(False, "every product vanishes")


def ideal_in_zero_part_is_central(algebra, ideal_space: Subspace) -> bool:
    """Given the hypotheses (degree-zero part generated by support products,
    and a graded ideal inside the degree-zero part), is it central?

    Raises HypothesisUnmetError when the hypotheses fail, so an inapplicable
    call cannot masquerade as a refutation.
    """
    if not degree_zero_generated(algebra).ok:
        raise HypothesisUnmetError("degree-zero component is not generated by support products")
    if not ideal_space.is_subspace_of(algebra.zero_component):
        raise HypothesisUnmetError("candidate ideal is not inside the degree-zero component")
    star = lambda x, y: algebra.star(x, y, check=False)
    carrier = algebra.carrier
    absorbed = subspace_sum(
        product_span(ideal_space, carrier, star), product_span(carrier, ideal_space, star)
    )
    if not absorbed.is_subspace_of(ideal_space):
        raise HypothesisUnmetError("candidate subspace is not a two-sided ideal")
    for name, tw in (("psi", algebra.psi), ("phi", algebra.phi)):
        img = span([tw.apply(b) for b in ideal_space.basis], n=algebra.n, field=algebra.field)
        if not img.is_subspace_of(ideal_space):
            raise HypothesisUnmetError(f"candidate ideal is not stable under {name}")
    return ideal_space.is_subspace_of(centre(algebra))


# ---------------------------------------------------------------------------
# Exhaustive graded-ideal oracle.
# ---------------------------------------------------------------------------


def enumerate_subspaces(space: Subspace, max_count: int = 20000) -> list[Subspace]:
    """Every subspace of the given space, canonical and deterministic.

    Over F_p this walks all reduced row echelon shapes; over Q only ambient
    dimension <= 1 is enumerable (the lattice {0, everything}).
    """
    d = space.dim
    if d == 0:
        return [space]
    field = space.field
    if field.is_rationals:
        if d == 1:
            return [Subspace.zero(space.n, field), space]
        raise TooLargeError("cannot enumerate subspaces of a rational space of dim >= 2")
    p = field.p
    total = _subspace_count(d, p)
    if total > max_count:
        raise TooLargeError(f"{total} subspaces exceed the enumeration cap {max_count}")
    out = [Subspace.zero(space.n, field)]
    residues = [field.scalar(v) for v in range(p)]
    zero, one = residues[0], field.one()
    for k in range(1, d + 1):
        for pivots in combinations(range(d), k):
            free_slots = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, d)
                if c not in pivots
            ]
            for fill in iter_product(residues, repeat=len(free_slots)):
                rows = [[zero] * d for _ in range(k)]
                for r in range(k):
                    rows[r][pivots[r]] = one
                for (r, c), val in zip(free_slots, fill):
                    rows[r][c] = val
                mats = []
                for row in rows:
                    acc = Mat.zeros(space.n, field)
                    for coeff, b in zip(row, space.basis):
                        if coeff:
                            acc = acc + b.scale(coeff)
                    mats.append(acc)
                out.append(span(mats, n=space.n, field=field))
    return out


def _subspace_count(d: int, p: int) -> int:
    total = 0
    for k in range(d + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (d - i) - 1
            den *= p ** (k - i) - 1
        total += num // den
    return total


def graded_subspace_candidate_count(algebra) -> int:
    """How many graded subspaces the oracle would have to inspect."""
    count = 1
    for comp in algebra.components.values():
        if comp.field.is_rationals:
            if comp.dim > 1:
                raise TooLargeError("rational components of dim >= 2 are not enumerable")
            count *= 2
        else:
            count *= _subspace_count(comp.dim, comp.field.p)
    return count


def brute_force_graded_ideals(
    algebra, dim_cap: int = 10, max_candidates: int = 200000
) -> list[Subspace]:
    """All graded ideals, by exhausting graded subspaces and filtering.

    A graded subspace picks one subspace of each homogeneous component; the
    filter keeps exactly those stable under both twists and absorbing the
    whole algebra on both sides.  Refuses with TooLargeError beyond the caps.
    """
    if algebra.dim > dim_cap:
        raise TooLargeError(f"algebra dim {algebra.dim} exceeds the oracle cap {dim_cap}")
    degrees = list(algebra.components)
    pools = {d: enumerate_subspaces(algebra.components[d]) for d in degrees}
    count = 1
    for d in degrees:
        count *= len(pools[d])
    if count > max_candidates:
        raise TooLargeError(f"{count} candidates exceed the cap {max_candidates}")

    star = lambda x, y: algebra.star(x, y, check=False)
    bhg = algebra.bhg
    zero_space = Subspace.zero(algebra.n, algebra.field)
    identity_twists = algebra.psi.is_identity() and algebra.phi.is_identity()

    left_prod: dict = {}
    right_prod: dict = {}
    twist_img: dict = {}
    containment: dict = {}

    def contains(small: Subspace, big: Subspace) -> bool:
        key = (small.rows, big.rows)
        hit = containment.get(key)
        if hit is None:
            hit = small.is_subspace_of(big)
            containment[key] = hit
        return hit

    def left(d, idx, e):
        key = (d, idx, e)
        if key not in left_prod:
            left_prod[key] = product_span(pools[d][idx], algebra.components[e], star)
        return left_prod[key]

    def right(e, d, idx):
        key = (e, d, idx)
        if key not in right_prod:
            right_prod[key] = product_span(algebra.components[e], pools[d][idx], star)
        return right_prod[key]

    def image(name, tw, d, idx):
        key = (name, d, idx)
        if key not in twist_img:
            w = pools[d][idx]
            twist_img[key] = span(
                [tw.apply(b) for b in w.basis], n=algebra.n, field=algebra.field
            )
        return twist_img[key]

    survivors = []
    for combo in iter_product(*(range(len(pools[d])) for d in degrees)):
        choice = dict(zip(degrees, combo))

        def piece(deg) -> Subspace:
            deg = bhg.group.reduce(deg)
            if deg in choice:
                return pools[deg][choice[deg]]
            return zero_space

        ok = True
        for d in degrees:
            idx = choice[d]
            if pools[d][idx].dim == 0:
                continue
            if not identity_twists:
                if not contains(image("psi", algebra.psi, d, idx), piece(bhg.alpha.apply(d))):
                    ok = False
                    break
                if not contains(image("phi", algebra.phi, d, idx), piece(bhg.beta.apply(d))):
                    ok = False
                    break
            for e in degrees:
                if not contains(left(d, idx, e), piece(bhg.bihom_sum(d, e))):
                    ok = False
                    break
                if not contains(right(e, d, idx), piece(bhg.bihom_sum(e, d))):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        total = zero_space
        for d in degrees:
            total = subspace_sum(total, pools[d][choice[d]])
        survivors.append(total)
    survivors.sort(key=lambda s: (s.dim, [[str(x) for x in row] for row in s.rows]))
    return survivors


# ---------------------------------------------------------------------------
# The simplicity verdict.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimplicityReport:
    support_multiplicative: Verdict
    maximal_length: Verdict
    centre_zero: Verdict
    degree_zero_generated: Verdict
    all_connected: Verdict
    nonzero_product: Verdict
    criterion: str
    oracle: str | None
    oracle_agrees: bool | None
    graded_simple: str

    def as_dict(self) -> dict:
        return {
            "support_multiplicative": self.support_multiplicative.as_dict(),
            "maximal_length": self.maximal_length.as_dict(),
            "centre_zero": self.centre_zero.as_dict(),
            "degree_zero_generated": self.degree_zero_generated.as_dict(),
            "all_connected": self.all_connected.as_dict(),
            "nonzero_product": self.nonzero_product.as_dict(),
            "criterion": self.criterion,
            "oracle": self.oracle,
            "oracle_agrees": self.oracle_agrees,
            "graded_simple": self.graded_simple,
        }


def _oracle_verdict(algebra, dim_cap: int) -> str:
    ideals = brute_force_graded_ideals(algebra, dim_cap=dim_cap)
    trivial = {Subspace.zero(algebra.n, algebra.field), algebra.carrier}
    only_trivial = set(ideals) == trivial
    return YES if only_trivial and nonzero_star_product(algebra).ok else NO


def graded_simple(algebra, oracle: str = "auto", dim_cap: int = 10) -> SimplicityReport:
    """Tri-state graded-simplicity verdict.

    The criterion applies when the grading is support-multiplicative and of
    maximal length; then simple holds exactly when the centre vanishes, the
    degree-zero part is generated by support products, and the support is one
    connection class.  oracle="auto" falls back to exhaustive enumeration
    only when the criterion is inapplicable; "always" also cross-checks a
    decisive criterion; "never" skips enumeration entirely.
    """
    if oracle not in ("auto", "always", "never"):
        raise ValueError(f"unknown oracle mode {oracle!r}")
    sm = support_multiplicative(algebra)
    ml = maximal_length(algebra)
    z = centre(algebra)
    cz = Verdict(z.dim == 0, None if z.dim == 0 else f"centre has dim {z.dim}")
    m0 = degree_zero_generated(algebra)
    m0v = Verdict(m0.ok, None if m0.ok else "degree-zero component not generated")
    partition = connection_classes(algebra)
    conn = Verdict(
        len(partition.classes) <= 1,
        None if len(partition.classes) <= 1 else f"{len(partition.classes)} classes",
    )
    nz = nonzero_star_product(algebra)

    if sm.ok and ml.ok:
        criterion = YES if (cz.ok and m0v.ok and conn.ok) else NO
    else:
        criterion = INAPPLICABLE

    oracle_result: str | None = None
    if oracle == "always" or (oracle == "auto" and criterion == INAPPLICABLE):
        try:
            oracle_result = _oracle_verdict(algebra, dim_cap)
        except TooLargeError:
            oracle_result = None

    final = criterion
    if final == INAPPLICABLE and oracle_result is not None:
        final = oracle_result
    agrees = None
    if oracle_result is not None and criterion != INAPPLICABLE:
        agrees = oracle_result == criterion
    return SimplicityReport(
        support_multiplicative=sm,
        maximal_length=ml,
        centre_zero=cz,
        degree_zero_generated=m0v,
        all_connected=conn,
        nonzero_product=nz,
        criterion=criterion,
        oracle=oracle_result,
        oracle_agrees=agrees,
        graded_simple=final,
    )


def restrict_to_ideal(algebra, ideal: GradedIdeal) -> GradedBiHomAlgebra:
    """View a graded ideal as a graded algebra in its own right."""
    comps: dict = {}
    if ideal.zero_part.dim:
        comps[algebra.zero_degree] = ideal.zero_part
    for g in ideal.class_support:
        comps[g] = algebra.component(g)

    def restricted(tw: TwistMap) -> TwistMap:
        if tw.kind in ("identity", "conjugation"):
            return tw
        basis = [b for comp in comps.values() for b in comp.basis]
        return TwistMap.from_images(basis, [tw.apply(b) for b in basis])

    return GradedBiHomAlgebra(
        algebra.field,
        algebra.n,
        algebra.bhg,
        comps,
        psi=restricted(algebra.psi),
        phi=restricted(algebra.phi),
    )


def decompose_simple(algebra, dim_cap: int = 10):
    """Decompose into graded ideals and certify each one graded simple.

    Requires support-multiplicativity, maximal length, trivial centre and a
    generated degree-zero part; refuses otherwise.  Every restricted ideal is
    re-validated and re-classified rather than trusted.
    """
    for name, verdict in (
        ("support_multiplicative", support_multiplicative(algebra)),
        ("maximal_length", maximal_length(algebra)),
    ):
        if not verdict.ok:
            raise HypothesisUnmetError(f"{name} fails: {verdict.witness}")
    if centre(algebra).dim != 0:
        raise HypothesisUnmetError("centre is not trivial")
    if not degree_zero_generated(algebra).ok:
        raise HypothesisUnmetError("degree-zero component is not generated by support products")

    report = decompose(algebra)
    out = []
    for ideal in report.ideals:
        sub = restrict_to_ideal(algebra, ideal)
        validation = sub.validate()
        if not validation.passed:
            names = ", ".join(c.name for c in validation.failures())
            raise TheoremViolationError(
                f"restricted ideal for class {ideal.class_support} fails validation: {names}"
            )
        sub_report = graded_simple(sub, oracle="auto", dim_cap=dim_cap)
        if sub_report.graded_simple != YES:
            raise TheoremViolationError(
                f"ideal for class {ideal.class_support} is not graded simple"
            )
        sub_classes = connection_classes(sub)
        if len(sub_classes.classes) > 1:
            raise TheoremViolationError(
                f"ideal for class {ideal.class_support} splits into several classes"
            )
        out.append((ideal, sub_report))
    return out
