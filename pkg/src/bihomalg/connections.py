"""Connectivity between support degrees through twisted partial sums.

Two nonzero degrees are connected when some finite chain g_1, ..., g_k of
support degrees, entered through the (alpha, beta)-orbit of the source, keeps
all intermediate partial sums s_{t+1} = alpha(s_t) + beta(g_{t+1}) inside the
support and lands its total sum inside the signed orbit of the target.  The
search runs breadth-first over partial sums, which is equivalent to chain
enumeration because the recurrence only ever consults the current sum;
connected_by_enumeration() is the direct chain-walking oracle used to check
that equivalence in tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import AsymmetricSupportError, NotInSupportError, TheoremViolationError


@dataclass(frozen=True)
class ConnectionWitness:
    """An auditable certificate for one connection.

    chain[0] must be alpha^i beta^j(source) with the stored entry exponents;
    partial_sums holds s_2, ..., s_k (empty for singleton chains) and the last
    one must equal exit_sign * alpha^m beta^n(target).
    """

    source: tuple[int, ...]
    target: tuple[int, ...]
    chain: tuple[tuple[int, ...], ...]
    entry_exponents: tuple[int, int]
    exit_sign: int
    exit_exponents: tuple[int, int]
    partial_sums: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "chain": [list(g) for g in self.chain],
            "entry_exponents": list(self.entry_exponents),
            "exit_sign": "+" if self.exit_sign > 0 else "-",
            "exit_exponents": list(self.exit_exponents),
            "partial_sums": [list(s) for s in self.partial_sums],
        }


@dataclass(frozen=True)
class ClassPartition:
    """The support split into connection classes, with witnesses for every
    ordered same-class pair."""

    classes: tuple[tuple[tuple[int, ...], ...], ...]
    witnesses: dict

    def class_of(self, degree) -> tuple[tuple[int, ...], ...]:
        for cls in self.classes:
            if tuple(degree) in cls:
                return cls
        raise NotInSupportError(f"degree {tuple(degree)} is not in the support")

    def as_dict(self, include_witnesses: bool = True) -> dict:
        out = {"classes": [[list(g) for g in cls] for cls in self.classes]}
        if include_witnesses:
            out["witnesses"] = [
                {"pair": [list(g), list(h)], **w.as_dict()}
                for (g, h), w in sorted(self.witnesses.items())
            ]
        return out


def _require_support(algebra, *degrees):
    sigma = set(algebra.support)
    out = []
    for d in degrees:
        d = algebra.bhg.group.reduce(d)
        if d not in sigma:
            raise NotInSupportError(f"degree {d} is not in the support")
        out.append(d)
    if not algebra.support_symmetric():
        raise AsymmetricSupportError("connection search needs a symmetric support")
    return out


def connected(algebra, g, g_prime) -> ConnectionWitness | None:
    """Minimal-length connection witness from g to g_prime, or None.

    Deterministic: start states and extensions are scanned in lexicographic
    order, so ties break the same way on every run.
    """
    g, g_prime = _require_support(algebra, g, g_prime)
    starts = algebra.bhg.orbit_exponents(g)
    return _search(algebra, g, g_prime, starts)


def connected_from_start(algebra, g, g_prime, start, entry_exponents) -> ConnectionWitness | None:
    """Connection search restricted to one prescribed entry element."""
    g, g_prime = _require_support(algebra, g, g_prime)
    start = algebra.bhg.group.reduce(start)
    return _search(algebra, g, g_prime, {start: tuple(entry_exponents)})


def _search(algebra, g, g_prime, starts) -> ConnectionWitness | None:
    bhg = algebra.bhg
    sigma = set(algebra.support)
    accept = bhg.signed_orbit_exponents(g_prime)
    sorted_sigma = sorted(sigma)

    def witness(chain, sums, final):
        sign, m, n = accept[final]
        return ConnectionWitness(
            source=g,
            target=g_prime,
            chain=tuple(chain),
            entry_exponents=starts[chain[0]],
            exit_sign=sign,
            exit_exponents=(m, n),
            partial_sums=tuple(sums),
        )

    start_elems = sorted(e for e in starts if e in sigma)
    for e in start_elems:
        if e in accept:
            return witness([e], [], e)

    # States are partial sums; parents reconstruct the appended chain.
    parent: dict[tuple[int, ...], tuple[tuple[int, ...] | None, tuple[int, ...]]] = {}
    queue = deque()
    for e in start_elems:
        parent[e] = (None, e)
        queue.append(e)
    while queue:
        s = queue.popleft()
        alpha_s = bhg.alpha.apply(s)
        for h in sorted_sigma:
            s2 = bhg.group.add(alpha_s, bhg.beta.apply(h))
            if s2 in accept:
                chain = [h]
                sums = [s2]
                cur = s
                while True:
                    prev, elem = parent[cur]
                    if prev is None:
                        chain.append(elem)
                        break
                    chain.append(elem)
                    sums.append(cur)
                    cur = prev
                chain.reverse()
                sums.reverse()
                return witness(chain, sums, s2)
            if s2 in sigma and s2 not in parent:
                parent[s2] = (s, h)
                queue.append(s2)
    return None


def verify_witness(algebra, g, g_prime, witness: ConnectionWitness) -> list[str]:
    """Replay every certificate condition independently of the search.

    Returns the list of violated conditions; empty means the witness holds.
    """
    bhg = algebra.bhg
    sigma = set(algebra.support)
    problems = []
    g = bhg.group.reduce(g)
    g_prime = bhg.group.reduce(g_prime)
    chain = [bhg.group.reduce(c) for c in witness.chain]
    if not chain:
        return ["chain is empty"]
    if witness.source != g or witness.target != g_prime:
        problems.append("witness endpoints do not match the queried pair")
    outside = [c for c in chain if c not in sigma]
    if outside:
        problems.append(f"chain elements outside the support: {outside}")

    i, j = witness.entry_exponents
    if i < 0 or j < 0:
        problems.append("entry exponents must be nonnegative")
    else:
        e = g
        for _ in range(j):
            e = bhg.beta.apply(e)
        for _ in range(i):
            e = bhg.alpha.apply(e)
        if chain[0] != e:
            problems.append("entry condition fails: chain[0] is not alpha^i beta^j(source)")

    sums = []
    s = chain[0]
    for h in chain[1:]:
        s = bhg.group.add(bhg.alpha.apply(s), bhg.beta.apply(h))
        sums.append(s)
    if tuple(sums) != tuple(witness.partial_sums):
        problems.append("stored partial sums disagree with the recurrence")
    for inner in sums[:-1]:
        if inner not in sigma:
            problems.append(f"intermediate sum {inner} leaves the support")

    m, n = witness.exit_exponents
    if m < 0 or n < 0:
        problems.append("exit exponents must be nonnegative")
    else:
        t = g_prime
        for _ in range(n):
            t = bhg.beta.apply(t)
        for _ in range(m):
            t = bhg.alpha.apply(t)
        if witness.exit_sign < 0:
            t = bhg.group.neg(t)
        final = sums[-1] if sums else chain[0]
        if final != t:
            problems.append("exit condition fails: total sum misses the signed orbit element")
    return problems


def connection_classes(algebra) -> ClassPartition:
    """Partition of the support into connection classes.

    Runs the pairwise search over the whole support and checks that the
    resulting relation really is an equivalence before packaging it.
    """
    sigma = sorted(_require_support(algebra, *algebra.support)) if algebra.support else []
    witnesses = {}
    connected_pairs = set()
    for g in sigma:
        for h in sigma:
            w = connected(algebra, g, h)
            if w is not None:
                witnesses[(g, h)] = w
                connected_pairs.add((g, h))

    for g in sigma:
        if (g, g) not in connected_pairs:
            raise TheoremViolationError(f"connection relation is not reflexive at {g}")
    for g, h in list(connected_pairs):
        if (h, g) not in connected_pairs:
            raise TheoremViolationError(f"connection relation is not symmetric on ({g},{h})")
    for g, h in list(connected_pairs):
        for k in sigma:
            if (h, k) in connected_pairs and (g, k) not in connected_pairs:
                raise TheoremViolationError(
                    f"connection relation is not transitive on ({g},{h},{k})"
                )

    classes = []
    seen = set()
    for g in sigma:
        if g in seen:
            continue
        cls = tuple(sorted(h for h in sigma if (g, h) in connected_pairs))
        seen.update(cls)
        classes.append(cls)
    classes.sort(key=lambda cls: cls[0])
    return ClassPartition(classes=tuple(classes), witnesses=witnesses)


def connected_by_enumeration(algebra, g, g_prime, max_length: int | None = None) -> bool:
    """Chain-walking oracle: does any chain of length <= max_length connect?

    Walks chains directly off the definition, pruning prefixes whose partial
    sum leaves the support (such prefixes admit no valid extension) and
    memoising (partial sum, remaining length), which cannot change the
    answer because reachability is monotone in the remaining budget.
    """
    g, g_prime = _require_support(algebra, g, g_prime)
    sigma = sorted(set(algebra.support))
    if max_length is None:
        max_length = len(sigma) + 1
    starts = algebra.bhg.orbit_exponents(g)
    accept = set(algebra.bhg.signed_orbit_exponents(g_prime))
    bhg = algebra.bhg

    memo: dict[tuple[tuple[int, ...], int], bool] = {}

    def extend(s, budget) -> bool:
        if budget == 0:
            return False
        key = (s, budget)
        if key in memo:
            return memo[key]
        result = False
        alpha_s = bhg.alpha.apply(s)
        for h in sigma:
            s2 = bhg.group.add(alpha_s, bhg.beta.apply(h))
            if s2 in accept:
                result = True
                break
            if s2 in sigma and extend(s2, budget - 1):
                result = True
                break
        memo[key] = result
        return result

    for e in sorted(starts):
        if e not in sigma:
            continue
        if e in accept:
            return True
        if extend(e, max_length - 1):
            return True
    return False
