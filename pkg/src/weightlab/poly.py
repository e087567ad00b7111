"""Sparse multivariate polynomials over the rationals.

Monomials are exponent tuples; terms are kept in graded lexicographic
order for canonical printing.  The string syntax accepted by parse()
covers what descriptor files need: integer and p/q literals, named
variables, +, -, *, parentheses, and ^ or ** powers.
"""

from __future__ import annotations

import re
from fractions import Fraction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[tuple[int, ...], Fraction] | None = None):
        self.nvars = nvars
        self.terms = {
            m: Fraction(c) for m, c in (terms or {}).items() if c != 0
        }

    @staticmethod
    def constant(nvars: int, value) -> "Polynomial":
        return Polynomial(nvars, {tuple(0 for _ in range(nvars)): Fraction(value)})

    @staticmethod
    def variable(nvars: int, index: int) -> "Polynomial":
        mono = tuple(int(i == index) for i in range(nvars))
        return Polynomial(nvars, {mono: Fraction(1)})

    def __add__(self, other: "Polynomial") -> "Polynomial":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Polynomial(self.nvars, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        terms: dict[tuple[int, ...], Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return Polynomial(self.nvars, terms)

    def scale(self, value) -> "Polynomial":
        v = Fraction(value)
        return Polynomial(self.nvars, {m: c * v for m, c in self.terms.items()})

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = Polynomial.constant(self.nvars, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, coords) -> Fraction:
        point = [Fraction(c) for c in coords]
        if len(point) != self.nvars:
            raise ValueError("wrong number of coordinates")
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, mono):
                if e:
                    v *= x**e
            total += v
        return total

    def graded_terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Terms in graded lex order, highest first."""
        return sorted(
            self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True
        )

    def to_string(self, names) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.graded_terms():
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not parts:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        names = default_names(self.nvars)
        return f"Polynomial({self.to_string(names)})"


def default_names(nvars: int) -> tuple[str, ...]:
    letters = ("t", "u", "v", "w", "x", "y", "z")
    if nvars <= len(letters):
        return letters[:nvars]
    return tuple(f"t{i+1}" for i in range(nvars))


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"bad character in polynomial: {text[pos:]!r}")
            break
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return tokens


def parse(text: str, names) -> Polynomial:
    """Parse a polynomial in the given variable names."""
    names = tuple(names)
    nvars = len(names)
    index = {n: i for i, n in enumerate(names)}
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def atom() -> Polynomial:
        tok = peek()
        if tok is None:
            raise ValueError(f"unexpected end of polynomial: {text!r}")
        if tok == "(":
            take()
            e = expr()
            if peek() != ")":
                raise ValueError(f"missing ')' in {text!r}")
            take()
            return e
        if tok == "-":
            take()
            return -atom()
        if tok == "+":
            take()
            return atom()
        take()
        if tok.isdigit():
            value = Fraction(int(tok))
            if peek() == "/":
                take()
                den = take()
                if not den.isdigit():
                    raise ValueError(f"bad rational literal in {text!r}")
                value /= int(den)
            return Polynomial.constant(nvars, value)
        if tok in index:
            return Polynomial.variable(nvars, index[tok])
        raise ValueError(f"unknown variable {tok!r} (ring variables: {', '.join(names)})")

    def power() -> Polynomial:
        base = atom()
        while peek() in ("^", "**"):
            take()
            exp = take()
            if not exp.isdigit():
                raise ValueError(f"exponent must be a nonnegative integer in {text!r}")
            base = base ** int(exp)
        return base

    def term() -> Polynomial:
        out = power()
        while peek() == "*":
            take()
            out = out * power()
        return out

    def expr() -> Polynomial:
        out = term()
        while peek() in ("+", "-"):
            if take() == "+":
                out = out + term()
            else:
                out = out - term()
        return out

    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in polynomial {text!r}")
    return result
