"""Exact scalar arithmetic over the rationals and prime fields.

Every scalar carries its field; mixing fields raises. Rationals are kept
fully reduced with positive denominator (``fractions.Fraction`` guarantees
this), prime-field residues live in ``[0, p)``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError


class Field:
    """Field descriptor. Instances are interned per characteristic."""

    characteristic: int

    def scalar(self, value) -> "Scalar":
        raise NotImplementedError

    @property
    def zero(self) -> "Scalar":
        return self.scalar(0)

    @property
    def one(self) -> "Scalar":
        return self.scalar(1)

    def _add(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError


class RationalField(Field):
    characteristic = 0

    def scalar(self, value):
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatchError("cannot coerce a scalar across fields")
            return value
        return Scalar(Fraction(value), self)

    def _add(self, a, b):
        return a + b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "QQ"


class PrimeField(Field):
    _cache: dict[int, "PrimeField"] = {}

    def __new__(cls, p):
        if p in cls._cache:
            return cls._cache[p]
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        field = super().__new__(cls)
        field.characteristic = p
        cls._cache[p] = field
        return field

    def scalar(self, value):
        if isinstance(value, Scalar):
            if value.field is not self:
                raise FieldMismatchError("cannot coerce a scalar across fields")
            return value
        if isinstance(value, Fraction):
            num = value.numerator % self.characteristic
            den = value.denominator % self.characteristic
            return Scalar(num * pow(den, -1, self.characteristic) % self.characteristic, self)
        return Scalar(int(value) % self.characteristic, self)

    def _add(self, a, b):
        return (a + b) % self.characteristic

    def _mul(self, a, b):
        return (a * b) % self.characteristic

    def _neg(self, a):
        return (-a) % self.characteristic

    def _inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.characteristic)

    def __repr__(self):
        return f"GF({self.characteristic})"

    def __str__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()


def GF(p) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec) -> Field:
    """Resolve a field from ``0`` (rationals) or a prime characteristic."""
    p = int(spec)
    return QQ if p == 0 else GF(p)


class Scalar:
    """An exact field element tagged with its field."""

    __slots__ = ("value", "field")

    def __init__(self, value, field):
        self.value = value
        self.field = field

    def _check(self, other):
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.field is not self.field:
            raise FieldMismatchError(f"mixed fields {self.field} and {other.field}")

    def __add__(self, other):
        self._check(other)
        return Scalar(self.field._add(self.value, other.value), self.field)

    def __sub__(self, other):
        self._check(other)
        return Scalar(self.field._add(self.value, self.field._neg(other.value)), self.field)

    def __mul__(self, other):
        self._check(other)
        return Scalar(self.field._mul(self.value, other.value), self.field)

    def __truediv__(self, other):
        self._check(other)
        return Scalar(self.field._mul(self.value, self.field._inv(other.value)), self.field)

    def __neg__(self):
        return Scalar(self.field._neg(self.value), self.field)

    def inverse(self):
        return Scalar(self.field._inv(self.value), self.field)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        return (
            isinstance(other, Scalar)
            and other.field is self.field
            and other.value == self.value
        )

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __repr__(self):
        return f"Scalar({self}, {self.field})"

    def __str__(self):
        return str(self.value)
