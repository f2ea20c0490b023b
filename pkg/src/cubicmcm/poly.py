"""Sparse multivariate polynomials with exact coefficients.

Terms are kept in a dict ``{exponent tuple: nonzero coefficient}``.  The
canonical term order everywhere (printing, serialization) is graded
lexicographic with ``x0 > x1 > ...``.
"""

import functools
import re
from fractions import Fraction

from .errors import ArityMismatchError, FieldMismatchError, ParseError
from .fields import QQ, Mod


@functools.total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial: below every integer, absorbs addition."""

    def __eq__(self, other):
        return isinstance(other, _MinusInfinity)

    def __lt__(self, other):
        return not isinstance(other, _MinusInfinity)

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __hash__(self):
        return hash("-inf")

    def __repr__(self):
        return "-oo"


MINUS_INFINITY = _MinusInfinity()


def default_names(n):
    return tuple(f"x{i}" for i in range(n))


def grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("field", "nvars", "terms", "names")

    def __init__(self, field, nvars, terms=None, names=None):
        self.field = field
        self.nvars = nvars
        self.names = tuple(names) if names is not None else default_names(nvars)
        if len(self.names) != nvars:
            raise ArityMismatchError("one name per variable required")
        clean = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ArityMismatchError(f"bad exponent vector {exps}")
            coef = field(coef)
            if coef != 0:
                clean[exps] = clean.get(exps, 0) + coef
                if clean[exps] == 0:
                    del clean[exps]
        self.terms = clean

    # constructors

    @classmethod
    def zero(cls, field, nvars, names=None):
        return cls(field, nvars, {}, names)

    @classmethod
    def constant(cls, field, nvars, c, names=None):
        return cls(field, nvars, {(0,) * nvars: c}, names)

    @classmethod
    def var(cls, field, nvars, i, names=None):
        exps = [0] * nvars
        exps[i] = 1
        return cls(field, nvars, {tuple(exps): 1}, names)

    def _like(self, terms):
        p = MultiPoly.__new__(MultiPoly)
        p.field, p.nvars, p.names, p.terms = self.field, self.nvars, self.names, terms
        return p

    # arithmetic

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ArityMismatchError(f"{self.nvars} vs {other.nvars} variables")
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction, Mod)):
            return MultiPoly.constant(self.field, self.nvars, other, self.names)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Mod)):
            return self.scalar_mul(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return self._like(terms)

    def __rmul__(self, other):
        return self * other

    def scalar_mul(self, c):
        c = self.field(c)
        if c == 0:
            return self._like({})
        return self._like({e: v * c for e, v in self.terms.items()})

    def __truediv__(self, c):
        """Division by a nonzero scalar only."""
        if isinstance(c, MultiPoly):
            if not c.is_constant() or c.is_zero():
                raise TypeError("only division by nonzero scalars is supported")
            c = c.constant_term()
        c = self.field(c)
        if c == 0:
            raise ZeroDivisionError("division by zero scalar")
        return self.scalar_mul(1 / c if isinstance(c, Fraction) else c ** -1)

    def __pow__(self, n):
        result = MultiPoly.constant(self.field, self.nvars, 1, self.names)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Mod)):
            other = MultiPoly.constant(self.field, self.nvars, other, self.names)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # queries

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.field(0))

    def degree(self):
        if not self.terms:
            return MINUS_INFINITY
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def eval(self, point):
        if len(point) != self.nvars:
            raise ArityMismatchError(f"point of length {len(point)} for {self.nvars} variables")
        point = [self.field(v) for v in point]
        total = self.field(0)
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(point, exps):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def substitute(self, images):
        """Replace variable ``i`` by the polynomial ``images[i]``."""
        if len(images) != self.nvars:
            raise ArityMismatchError("one image per variable required")
        target = images[0]
        result = MultiPoly.zero(target.field, target.nvars, target.names)
        for exps, c in self.terms.items():
            term = MultiPoly.constant(target.field, target.nvars, c, target.names)
            for img, e in zip(images, exps):
                if e:
                    term = term * img ** e
            result = result + term
        return result

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.field(0))

    # text form

    def to_text(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            sign, mag = _split_sign(self.field, c)
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, exps) if e
            )
            if not mono:
                body = mag
            elif mag == "1":
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.to_text()!r}, field={self.field!r})"

    @classmethod
    def from_text(cls, text, field=QQ, names=None, nvars=None):
        if names is None:
            nvars = nvars if nvars is not None else 3
            names = default_names(nvars)
        return _parse(text, field, tuple(names))


def _split_sign(field, c):
    if isinstance(c, Mod):
        return "+", str(c.value)
    c = Fraction(c)
    return ("-" if c < 0 else "+"), str(abs(c))


def polys(field, names):
    """Generators of the polynomial ring over ``field`` in the given variable names."""
    n = len(names)
    return tuple(MultiPoly.var(field, n, i, names) for i in range(n))


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_]\w*)|(\^)|(\*)|([+-]))")


def _parse(text, field, names):
    index = {n: i for i, n in enumerate(names)}
    n = len(names)
    tokens = []
    pos = 0
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if not m:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", 1, col)
        tokens.append((m.start(m.lastindex) + 1, m.lastindex, m.group(m.lastindex)))
        pos = m.end()
    tokens.append((len(text) + 1, 0, ""))
    i = 0

    def factor():
        nonlocal i
        col, kind, tok = tokens[i]
        if kind == 1:
            value = MultiPoly.constant(field, n, Fraction(tok), names)
        elif kind == 2:
            if tok not in index:
                raise ParseError(f"unknown variable {tok!r}", 1, col)
            value = MultiPoly.var(field, n, index[tok], names)
        else:
            raise ParseError(f"expected a number or variable, got {tok or 'end of input'!r}", 1, col)
        i += 1
        if tokens[i][1] == 3:
            i += 1
            col, kind, tok = tokens[i]
            if kind != 1 or "/" in tok:
                raise ParseError("exponent must be a nonnegative integer", 1, col)
            value = value ** int(tok)
            i += 1
        return value

    def term():
        nonlocal i
        value = factor()
        while tokens[i][1] == 4:
            i += 1
            value = value * factor()
        return value

    result = MultiPoly.zero(field, n, names)
    sign = 1
    if tokens[i][1] == 5:
        sign = -1 if tokens[i][2] == "-" else 1
        i += 1
    result = result + term() * sign
    while tokens[i][1] == 5:
        sign = -1 if tokens[i][2] == "-" else 1
        i += 1
        result = result + term() * sign
    if tokens[i][1] != 0:
        raise ParseError(f"unexpected {tokens[i][2]!r}", 1, tokens[i][0])
    return result
