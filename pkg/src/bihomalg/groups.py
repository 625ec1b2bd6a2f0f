"""Finite abelian groups, their automorphisms, and the twisted (alpha, beta) sum.

Group elements are plain tuples of ints, always reduced componentwise modulo
the cyclic orders.  GroupSpec supplies the arithmetic so elements stay cheap
and hashable.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product


@dataclass(frozen=True)
class GroupSpec:
    """The product of cyclic groups Z_{m_1} x ... x Z_{m_k}."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders or any(m < 1 for m in self.orders):
            raise ValueError("orders must be a nonempty tuple of positive ints")
        object.__setattr__(self, "orders", tuple(int(m) for m in self.orders))

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        n = 1
        for m in self.orders:
            n *= m
        return n

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def reduce(self, coords) -> tuple[int, ...]:
        return tuple(int(c) % m for c, m in zip(coords, self.orders))

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.orders))

    def neg(self, a) -> tuple[int, ...]:
        return tuple((-x) % m for x, m in zip(a, self.orders))

    def elements(self):
        """All elements in lexicographic order."""
        return product(*(range(m) for m in self.orders))


class GroupAuto:
    """An endomorphism given by an integer matrix acting on coordinates.

    The map is g -> (matrix . g) reduced componentwise.  Whether that is
    well defined on the presentation, and bijective, is checked explicitly
    (exhaustively -- groups here are desk sized).
    """

    __slots__ = ("group", "matrix", "_inverse_map")

    def __init__(self, group: GroupSpec, matrix):
        rows = tuple(tuple(int(x) for x in row) for row in matrix)
        k = group.rank
        if len(rows) != k or any(len(r) != k for r in rows):
            raise ValueError(f"automorphism matrix must be {k}x{k}")
        self.group = group
        self.matrix = rows
        self._inverse_map = None

    @classmethod
    def identity(cls, group: GroupSpec) -> "GroupAuto":
        k = group.rank
        return cls(group, [[1 if i == j else 0 for j in range(k)] for i in range(k)])

    def apply(self, elem) -> tuple[int, ...]:
        return self.group.reduce(
            sum(self.matrix[i][j] * elem[j] for j in range(self.group.rank))
            for i in range(self.group.rank)
        )

    __call__ = apply

    def is_identity(self) -> bool:
        return all(self.apply(g) == g for g in self.group.elements())

    def well_defined(self) -> tuple[bool, str | None]:
        """The matrix respects the cyclic orders: m_i | a_ij * m_j."""
        ms = self.group.orders
        for i in range(self.group.rank):
            for j in range(self.group.rank):
                if (self.matrix[i][j] * ms[j]) % ms[i] != 0:
                    return False, f"entry ({i},{j}) breaks order divisibility"
        return True, None

    def is_bijective(self) -> bool:
        seen = set()
        for g in self.group.elements():
            seen.add(self.apply(g))
        return len(seen) == self.group.size

    def inverse_apply(self, elem) -> tuple[int, ...]:
        """Preimage under the map; built once by exhaustive search and cached."""
        if self._inverse_map is None:
            self._inverse_map = {self.apply(g): g for g in self.group.elements()}
            if len(self._inverse_map) != self.group.size:
                raise ValueError("map is not bijective; no inverse exists")
        return self._inverse_map[tuple(elem)]

    def __eq__(self, other):
        if not isinstance(other, GroupAuto):
            return NotImplemented
        if self.group != other.group:
            return False
        return all(self.apply(g) == other.apply(g) for g in self.group.elements())

    def __hash__(self):
        return hash((self.group, self.matrix))

    def __repr__(self):
        return f"GroupAuto({list(map(list, self.matrix))})"


@dataclass(frozen=True, eq=False)
class BiHomGroup:
    """A finite abelian group together with two automorphisms alpha, beta.

    The twisted sum is g (+) h = alpha(g) + beta(h); it is neither
    commutative nor associative in general.
    """

    group: GroupSpec
    alpha: GroupAuto
    beta: GroupAuto

    @classmethod
    def untwisted(cls, orders) -> "BiHomGroup":
        spec = GroupSpec(tuple(orders))
        return cls(spec, GroupAuto.identity(spec), GroupAuto.identity(spec))

    def bihom_sum(self, g, h) -> tuple[int, ...]:
        return self.group.add(self.alpha.apply(g), self.beta.apply(h))

    def check_automorphisms(self) -> list[tuple[str, bool, str | None]]:
        """Well-definedness and bijectivity findings for alpha and beta."""
        out = []
        for name, auto in (("alpha", self.alpha), ("beta", self.beta)):
            ok, witness = auto.well_defined()
            out.append((f"{name}_well_defined", ok, witness))
            bij = auto.is_bijective()
            out.append((f"{name}_bijective", bij, None if bij else "image not onto"))
        return out

    def check_commuting(self) -> tuple[bool, tuple[int, ...] | None]:
        """alpha o beta = beta o alpha pointwise; returns the first witness."""
        for g in self.group.elements():
            if self.alpha.apply(self.beta.apply(g)) != self.beta.apply(self.alpha.apply(g)):
                return False, g
        return True, None

    def orbit_exponents(self, g) -> dict[tuple[int, ...], tuple[int, int]]:
        """Closure of g under alpha and beta with one (i, j) exponent witness each.

        Breadth-first, so the recorded exponents have minimal i + j; applying
        alpha before beta at each level makes the choice deterministic.
        """
        g = self.group.reduce(g)
        seen = {g: (0, 0)}
        queue = deque([g])
        while queue:
            e = queue.popleft()
            i, j = seen[e]
            for nxt, exps in ((self.alpha.apply(e), (i + 1, j)), (self.beta.apply(e), (i, j + 1))):
                if nxt not in seen:
                    seen[nxt] = exps
                    queue.append(nxt)
        return seen

    def orbit(self, g, signed: bool = False) -> frozenset[tuple[int, ...]]:
        base = self.orbit_exponents(g)
        if not signed:
            return frozenset(base)
        return frozenset(base) | frozenset(self.group.neg(e) for e in base)

    def signed_orbit_exponents(self, g) -> dict[tuple[int, ...], tuple[int, int, int]]:
        """Map element -> (sign, i, j) covering {±alpha^i beta^j(g)}.

        Positive signs win on collision (iteration inserts them first).
        """
        base = self.orbit_exponents(g)
        out = {}
        for e, (i, j) in sorted(base.items(), key=lambda kv: (sum(kv[1]), kv[1], kv[0])):
            out.setdefault(e, (1, i, j))
        for e, (i, j) in sorted(base.items(), key=lambda kv: (sum(kv[1]), kv[1], kv[0])):
            out.setdefault(self.group.neg(e), (-1, i, j))
        return out
