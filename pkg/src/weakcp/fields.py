"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

Every matrix in the engine carries one of these field objects; all entry
arithmetic goes through it, so no rounding can ever occur.  Rational entries
are `fractions.Fraction`, prime-field entries are ints in `0..p-1`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldMismatchError(ValueError):
    """Operands from two different fields were mixed in one computation."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class RationalField:
    """The field of rational numbers with arbitrary-precision integers."""

    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        return Fraction(x)

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
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by 0")
        return Fraction(a) / b

    def parse(self, s):
        if isinstance(s, str):
            return Fraction(s)
        if isinstance(s, int):
            return Fraction(s)
        raise ValueError(f"cannot parse rational from {s!r}")

    def fmt(self, a) -> str:
        return str(a)

    def descriptor(self) -> dict:
        return {"type": "Q"}

    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """The prime field with p elements, entries stored as ints in 0..p-1."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return f"F{self.p}"

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, s):
        if isinstance(s, int):
            return s % self.p
        if isinstance(s, str):
            return int(s) % self.p
        raise ValueError(f"cannot parse F{self.p} element from {s!r}")

    def fmt(self, a) -> str:
        return str(a)

    def descriptor(self) -> dict:
        return {"type": "Fp", "p": self.p}

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """The prime field with p elements (cached, so GF(p) is GF(p))."""
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_from_descriptor(d: dict):
    """Inverse of Field.descriptor(); used by the JSON loaders."""
    if not isinstance(d, dict) or "type" not in d:
        raise ValueError(f"bad field descriptor: {d!r}")
    if d["type"] == "Q":
        return QQ
    if d["type"] == "Fp":
        return GF(int(d["p"]))
    raise ValueError(f"unknown field type {d['type']!r}")


def same_field(*fields):
    """Check that all arguments are the same field and return it."""
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatchError(f"mixed fields {first!r} and {f!r}")
    return first
