"""Exact base fields: arbitrary-precision rationals and prime fields GF(p).

Scalars are plain Python values: ``fractions.Fraction`` over the rationals
and ``int`` residues in ``[0, p)`` over GF(p).  Both representations are
canonical (Fraction keeps lowest terms with positive denominator), so
scalar equality is plain ``==``.  A ``Field`` instance supplies the
arithmetic; containers carry the field and refuse to mix two of them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Union

from .errors import DivisionByZero, InfiniteField, NonPrimeModulus

Scalar = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common interface of the two base fields."""

    zero: Scalar
    one: Scalar

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        raise NotImplementedError

    def neg(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def inv(self, a: Scalar) -> Scalar:
        raise NotImplementedError

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    @staticmethod
    def is_zero(a: Scalar) -> bool:
        return a == 0

    def from_int(self, n: int) -> Scalar:
        raise NotImplementedError

    def units(self) -> Iterator[Scalar]:
        """All nonzero elements, each exactly once."""
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        raise NotImplementedError

    def format_scalar(self, a: Scalar) -> str:
        raise NotImplementedError

    def parse_scalar(self, text: str) -> Scalar:
        raise NotImplementedError


class Rationals(Field):
    """The field of rationals with arbitrary-precision arithmetic."""

    zero = Fraction(0)
    one = Fraction(1)
    characteristic = 0

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by 0 in Q")
        return Fraction(a) / b

    def from_int(self, n):
        return Fraction(n)

    def units(self):
        raise InfiniteField("cannot enumerate the units of Q")

    @property
    def is_finite(self):
        return False

    def format_scalar(self, a):
        return str(a)

    def parse_scalar(self, text):
        return Fraction(text)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """GF(p) for a prime p, with residues stored reduced in [0, p)."""

    zero = 0
    one = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeModulus(f"modulus {p} is not prime")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero(f"inverse of 0 in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n):
        return n % self.p

    def units(self):
        return iter(range(1, self.p))

    @property
    def is_finite(self):
        return True

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def format_scalar(self, a):
        return f"{a % self.p} mod {self.p}"

    def parse_scalar(self, text):
        text = text.strip()
        if text.endswith(f"mod {self.p}"):
            text = text[: -len(f"mod {self.p}")].strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self.div(int(num) % self.p, int(den) % self.p)
        return int(text) % self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    field = _gf_cache.get(p)
    if field is None:
        field = _gf_cache[p] = PrimeField(p)
    return field
