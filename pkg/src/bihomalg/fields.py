"""Exact scalars: arbitrary-precision rationals and prime residue fields.

Every operation here is exact; nothing in this package ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZeroError, FieldMismatchError, NoSuchRootError

RATIONALS = "Q"
PRIME_FIELD = "Fp"

# Witness set sufficient for a deterministic Miller-Rabin below 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed witnesses)."""
    if n < 2:
        return False
    if n in _MR_WITNESSES:
        return True
    if any(n % q == 0 for q in _MR_WITNESSES):
        return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A base field: the rationals, or the integers modulo a prime."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONALS:
            if self.p is not None:
                raise ValueError("the rational field takes no modulus")
        elif self.kind == PRIME_FIELD:
            if self.p is None or self.p < 2 or not is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not a prime >= 2")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @property
    def is_rationals(self) -> bool:
        return self.kind == RATIONALS

    def label(self) -> str:
        return "Q" if self.is_rationals else f"F{self.p}"

    def scalar(self, value) -> "Scalar":
        """Wrap an int, Fraction or Scalar as an element of this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(
                    f"scalar over {value.field.label()} used in {self.label()}"
                )
            return value
        if self.is_rationals:
            return Scalar(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DivisionByZeroError(f"denominator vanishes mod {self.p}")
            num = value.numerator % self.p
            den = pow(value.denominator % self.p, self.p - 2, self.p)
            return Scalar(self, num * den % self.p)
        return Scalar(self, int(value) % self.p)

    def parse(self, text: str) -> "Scalar":
        """Parse a scalar string such as "4", "-1" or "2/3"."""
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            return self.scalar(Fraction(int(num), int(den)))
        return self.scalar(int(text))

    def zero(self) -> "Scalar":
        return self.scalar(0)

    def one(self) -> "Scalar":
        return self.scalar(1)


def rationals() -> FieldSpec:
    return FieldSpec(RATIONALS)


def prime_field(p: int) -> FieldSpec:
    return FieldSpec(PRIME_FIELD, p)


class Scalar:
    """An immutable element of a FieldSpec.

    Rationals are stored as reduced Fractions (positive denominator);
    prime-field elements as residues in [0, p).
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot mix {self.field.label()} and {other.field.label()}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.is_rationals:
            return Scalar(self.field, self.value + o.value)
        return Scalar(self.field, (self.value + o.value) % self.field.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.is_rationals:
            return Scalar(self.field, self.value - o.value)
        return Scalar(self.field, (self.value - o.value) % self.field.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.field.is_rationals:
            return Scalar(self.field, self.value * o.value)
        return Scalar(self.field, self.value * o.value % self.field.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        if self.field.is_rationals:
            return Scalar(self.field, -self.value)
        return Scalar(self.field, -self.value % self.field.p)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.field.is_rationals:
            return Scalar(self.field, self.value**exponent)
        return Scalar(self.field, pow(self.value, exponent, self.field.p))

    def inverse(self) -> "Scalar":
        if not self:
            raise DivisionByZeroError("division by zero")
        if self.field.is_rationals:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, self.field.p - 2, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == self.field.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value}:{self.field.label()}"


def primitive_root_of_unity(field: FieldSpec, n: int) -> Scalar:
    """Smallest element of multiplicative order exactly n, if one exists.

    Over the rationals only n in {1, 2} is realisable; over F_p the order
    must divide p - 1.  Deterministic: the least residue wins.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if field.is_rationals:
        if n == 1:
            return field.one()
        if n == 2:
            return field.scalar(-1)
        raise NoSuchRootError(f"no primitive {n}-th root of unity in Q")
    if (field.p - 1) % n != 0:
        raise NoSuchRootError(f"{n} does not divide {field.p} - 1")
    for c in range(1, field.p):
        if pow(c, n, field.p) != 1:
            continue
        if all(pow(c, k, field.p) != 1 for k in range(1, n)):
            return field.scalar(c)
    raise NoSuchRootError(f"no element of order {n} in {field.label()}")
