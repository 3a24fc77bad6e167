"""Bivariate polynomials over Q and the expression parser.

Grammar (whitespace ignored)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INTEGER)?
    atom   := INTEGER ('/' INTEGER)? | 'x' | 'y' | '(' expr ')'

Multiplication must be written explicitly (``2*x``, not ``2x``) and ``/``
only appears inside rational literals.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb

from sigsurf.errors import PolynomialSyntaxError, UnsupportedVariable

__all__ = ["BivariatePoly", "parse_polynomial"]


class BivariatePoly:
    """Finite map ``(i, j) -> coefficient`` for the monomial ``x^i y^j``.

    Zero coefficients are never stored; the zero polynomial has no terms.
    Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), a in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            a = Fraction(a)
            if a:
                clean[(int(i), int(j))] = a
        self._terms = clean

    @classmethod
    def constant(cls, a):
        return cls({(0, 0): a})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, i, j):
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivariatePoly.constant(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"BivariatePoly({self.to_string()!r})"

    def to_string(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), a in sorted(self._terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = [f"x^{i}" if i > 1 else "x"] * (i > 0) + [f"y^{j}" if j > 1 else "y"] * (j > 0)
            mag = abs(a)
            coef = "" if mag == 1 and mono else str(mag)
            body = "*".join(([coef] if coef else []) + mono)
            sign = "-" if a < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other):
        other = _lift(other)
        out = dict(self._terms)
        for k, a in other._terms.items():
            out[k] = out.get(k, 0) + a
        return BivariatePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({k: -a for k, a in self._terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        out = {}
        for (i1, j1), a in self._terms.items():
            for (i2, j2), b in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = BivariatePoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def swap_variables(self):
        return BivariatePoly({(j, i): a for (i, j), a in self._terms.items()})

    def order(self):
        """Lowest total degree of a monomial (the multiplicity at the origin)."""
        if not self._terms:
            raise ValueError("the zero polynomial has no order")
        return min(i + j for i, j in self._terms)

    def substitute_branch(self, p, q, c):
        """``G(s^q, s^p (c + t)) / s^w`` with ``w`` the least weight ``q*i + p*j``.

        Returned as a polynomial in ``(s, t)``.
        """
        w = min(q * i + p * j for i, j in self._terms)
        out = {}
        for (i, j), a in self._terms.items():
            shift = q * i + p * j - w
            # (c + t)^j
            cpow = Fraction(1)
            coeffs = []
            for r in range(j, -1, -1):
                coeffs.append((r, cpow))
                cpow *= c
            for r, cp in coeffs:
                key = (shift, r)
                out[key] = out.get(key, 0) + a * comb(j, r) * cp
        return BivariatePoly(out)


def _lift(value):
    if isinstance(value, BivariatePoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BivariatePoly.constant(value)
    raise TypeError(f"cannot combine BivariatePoly with {type(value).__name__}")


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            # trailing whitespace only
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(message, tok[2], self.text)

    def expect_op(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.fail(f"expected {op!r}", tok)

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            tok = self.peek()
            if tok[0] in ("int", "name") or tok[1] == "(":
                self.fail("missing '*' between factors", tok)
            self.fail(f"unexpected {tok[1]!r}", tok)
        return value

    def expr(self):
        value = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer literal", tok)
            base = base ** tok[1]
        return base

    def atom(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "int":
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "int":
                    self.fail("expected denominator after '/'", den)
                if den[1] == 0:
                    self.fail("zero denominator", den)
                return BivariatePoly.constant(Fraction(value, den[1]))
            return BivariatePoly.constant(value)
        if kind == "name":
            if value == "x":
                return BivariatePoly.x()
            if value == "y":
                return BivariatePoly.y()
            raise UnsupportedVariable(f"unsupported variable {value!r} (only x and y)", pos, self.text)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected {value!r}", tok)


def parse_polynomial(text: str) -> BivariatePoly:
    """Parse ``text`` into a canonical :class:`BivariatePoly` over Q.

    >>> parse_polynomial("(y^2-x^3)^2").terms == {(0, 4): 1, (3, 2): -2, (6, 0): 1}
    True
    """
    return _Parser(text).parse()
