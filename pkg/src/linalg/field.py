"""Base fields: the rationals (default) and prime fields F_p."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import isprime

from src.core.errors import FieldMismatchError, ValidationError


class Residue:
    """Element of F_p, kept reduced into [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> "Residue | None":
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot mix F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return Residue(other, self.p)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Residue(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Residue(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return Residue(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, Residue]


@dataclass(frozen=True)
class FieldSpec:
    """`kind` is "rationals" or "prime_field"; `p` is set only for prime fields."""

    kind: str = "rationals"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.p is not None:
                raise ValueError("the rationals take no characteristic")
        elif self.kind == "prime_field":
            if self.p is None or not isprime(self.p):
                raise ValueError(f"prime field needs a prime characteristic, got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls()

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime_field", p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accepts "Q" or "Fp:<p>" (the settings/CLI spelling)."""
        text = text.strip()
        if text == "Q":
            return cls.rationals()
        if text.startswith("Fp:"):
            return cls.prime(int(text[3:]))
        raise ValidationError("field", f"expected 'Q' or 'Fp:<p>', got {text!r}")

    @property
    def characteristic(self) -> int:
        return self.p or 0

    @property
    def zero(self) -> Scalar:
        return self.coerce(0)

    @property
    def one(self) -> Scalar:
        return self.coerce(1)

    def coerce(self, value) -> Scalar:
        """Canonical field element from an int, Fraction, Residue or "p/q" string."""
        if isinstance(value, str):
            value = parse_rational(value)
        if self.kind == "rationals":
            if isinstance(value, Residue):
                raise FieldMismatchError("residue given where a rational is expected")
            return Fraction(value)
        if isinstance(value, Residue):
            if value.p != self.p:
                raise FieldMismatchError(f"residue mod {value.p} given to F_{self.p}")
            return value
        value = Fraction(value)
        if value.denominator % self.p == 0:
            raise ValidationError("scalar", f"{value} has no image in F_{self.p}")
        return Residue(value.numerator, self.p) / Residue(value.denominator, self.p)

    def owns(self, value) -> bool:
        if self.kind == "rationals":
            return isinstance(value, Fraction)
        return isinstance(value, Residue) and value.p == self.p

    def to_json(self):
        return "Q" if self.kind == "rationals" else {"Fp": self.p}

    def __str__(self):
        return "Q" if self.kind == "rationals" else f"F_{self.p}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError("scalar", f"not an exact rational: {text!r}") from e


def format_scalar(value) -> str:
    """Exact string form: "p/q" or "p" for rationals, the residue for F_p."""
    return str(value)
