"""Exact coefficient fields: the rationals and prime fields GF(p).

Rational scalars are plain :class:`fractions.Fraction` values.  Prime-field
scalars are :class:`Mod` instances, which mix freely with Python ints.
"""

from fractions import Fraction

from .errors import FieldMismatchError, ParseError


class RationalField:
    characteristic = 0

    def __call__(self, value):
        if isinstance(value, Mod):
            raise FieldMismatchError(f"cannot coerce {value!r} into the rationals")
        return Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "QQ"

    @property
    def descriptor(self):
        return "rational"

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {text!r}") from exc

    def format(self, value):
        return str(Fraction(value))

    def contains(self, value):
        return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


QQ = RationalField()


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, value):
        if isinstance(value, Mod):
            if value.p != self.p:
                raise FieldMismatchError(f"GF({value.p}) element used in GF({self.p})")
            return value
        if isinstance(value, Fraction):
            return Mod(value.numerator, self.p) / value.denominator
        return Mod(value, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    @property
    def descriptor(self):
        return f"prime:{self.p}"

    def parse(self, text):
        try:
            return self(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad GF({self.p}) scalar {text!r}") from exc

    def format(self, value):
        return str(self(value).value)

    def contains(self, value):
        return isinstance(value, Mod) and value.p == self.p

    def elements(self):
        return [Mod(v, self.p) for v in range(self.p)]


def GF(p):
    return PrimeField(p)


def field_from_descriptor(text):
    """Parse ``rational``/``q`` or ``prime:P``/``fp:P``."""
    text = text.strip().lower()
    if text in ("rational", "q", "qq"):
        return QQ
    for prefix in ("prime:", "fp:"):
        if text.startswith(prefix):
            try:
                return PrimeField(int(text[len(prefix):]))
            except ValueError as exc:
                raise ParseError(f"bad field descriptor {text!r}: {exc}") from exc
    raise ParseError(f"unknown field descriptor {text!r}")


class Mod:
    """Element of GF(p), stored as a representative in ``range(p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) and GF({other.p}) elements mixed")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return Mod(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) / self

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __pow__(self, n):
        if n < 0:
            return Mod(pow(self.value, -1, self.p), self.p) ** (-n)
        return Mod(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.value - o) % self.p == 0

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Mod({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)
