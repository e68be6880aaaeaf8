"""Text and JSON forms of bicomplex numbers and polynomials.

Expression grammar (whitespace is ignored between tokens)::

    expr    := [sign] term (sign term)*
    term    := factor (['*'] factor)*
    factor  := atom ['^' integer]
    atom    := number | variable | '(' expr ')'
    variable:= 'Z' | 'Zb' | 'Zs' | 'Zd'

Inside parentheses the units ``i``, ``j`` and ``k`` are also atoms, so a
bicomplex coefficient is written ``(1+2i-1k)``.  Numbers are decimals
(``2``, ``-0.5``, ``1e-3``) or rationals ``p/q``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict

from .core import Bicomplex, I, J, K, QComplex
from .errors import ParseError
from .polynomial import VARIABLES, BCPolynomial

__all__ = [
    "parse_expr", "format_expr", "parse_bicomplex", "format_bicomplex",
    "format_scalar", "scalar_to_json", "scalar_from_json",
    "bicomplex_to_json", "bicomplex_from_json",
    "polynomial_to_json",
]

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?")
_INTEGER = re.compile(r"\d+")
_UNITS = {"i": I, "j": J, "k": K}
_VAR_POLYS = {name: BCPolynomial.variable(name) for name in VARIABLES}


def _make_scalar(text: str, mode: str):
    if "/" in text:
        num, den = text.split("/")
        if Fraction(den) == 0:
            raise ZeroDivisionError
        value = Fraction(num) / Fraction(den)
    else:
        value = Fraction(text)
    return value if mode == "exact" else float(value)


class _Parser:
    def __init__(self, text: str, mode: str):
        if mode not in ("exact", "float"):
            raise ValueError(f"mode must be 'exact' or 'float', got {mode!r}")
        self.text = text
        self.mode = mode
        self.pos = 0
        self.depth = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message, expected):
        raise ParseError(message, self.pos, expected)

    def expr(self) -> BCPolynomial:
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        total = self.term() * sign
        while self.peek() and self.peek() in "+-":
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
            total = total + self.term() * sign
        return total

    def _starts_atom(self, ch: str) -> bool:
        return bool(ch) and (ch.isdigit() or ch in ".(Z" or (self.depth > 0 and ch in _UNITS))

    def term(self) -> BCPolynomial:
        expected = {"number", "variable", "'('"} | ({"unit"} if self.depth else set())
        if not self._starts_atom(self.peek()):
            self.fail("expected a term", expected)
        value = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                if not self._starts_atom(self.peek()):
                    self.fail("expected a factor after '*'", expected)
                value = value * self.factor()
            elif self._starts_atom(ch):
                value = value * self.factor()
            else:
                return value

    def factor(self) -> BCPolynomial:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            m = _INTEGER.match(self.text, self.pos)
            if not m:
                self.fail("incomplete power", {"integer"})
            self.pos = m.end()
            base = base ** int(m.group())
        return base

    def atom(self) -> BCPolynomial:
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            self.depth += 1
            inner = self.expr()
            if self.peek() != ")":
                self.fail("unbalanced parenthesis", {"')'", "'+'", "'-'"})
            self.pos += 1
            self.depth -= 1
            return inner
        if ch == "Z":
            nxt = self.text[self.pos + 1:self.pos + 2]
            if nxt in ("b", "s", "d"):
                self.pos += 2
                return _VAR_POLYS["Z" + nxt]
            self.pos += 1
            return _VAR_POLYS["Z"]
        if self.depth and ch in _UNITS:
            self.pos += 1
            return BCPolynomial.constant(_UNITS[ch])
        m = _NUMBER.match(self.text, self.pos)
        if m:
            try:
                value = _make_scalar(m.group(), self.mode)
            except ZeroDivisionError:
                raise ParseError("zero denominator", start, {"number"}) from None
            self.pos = m.end()
            return BCPolynomial.constant(value)
        self.fail("expected a number, variable or '('", {"number", "variable", "'('"})

    def parse(self) -> BCPolynomial:
        if not self.text.strip():
            self.fail("empty expression", {"number", "variable", "'('"})
        result = self.expr()
        if self.peek():
            self.fail(f"unexpected character {self.peek()!r}", {"'+'", "'-'", "'*'", "end of input"})
        return result


def parse_expr(text: str, mode: str = "exact") -> BCPolynomial:
    """Parse a polynomial expression.

    Raises:
        ParseError: with the failing offset and the set of acceptable tokens.
    """
    return _Parser(text, mode).parse()


def parse_bicomplex(text: str, mode: str = "exact") -> Bicomplex:
    """Parse a number literal such as ``3``, ``1/2-2i`` or ``1+2i-3j+4k``."""
    p = _Parser(text, mode)
    p.depth = 1  # units allowed at top level
    P = p.parse()
    if any(sum(e) for e in P):
        raise ParseError("a number literal cannot contain variables", 0, {"number", "unit"})
    return P[(0, 0, 0, 0)]


def format_scalar(x) -> str:
    """Canonical text for a real scalar: ``p/q`` for exact values, shortest repr for floats."""
    if isinstance(x, Fraction):
        return str(x)
    x = float(x)
    if x == 0:
        return "0"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x)) + ".0"
    return repr(x)


def _cartesian(c: Bicomplex):
    return c.to_cartesian()


def format_bicomplex(c: Bicomplex) -> str:
    """Cartesian text ``x1+x2i+x3j+x4k``; zero parts are omitted."""
    parts = []
    for value, unit in zip(_cartesian(c), ("", "i", "j", "k")):
        if value == 0:
            continue
        s = format_scalar(value) + unit
        if parts and not s.startswith("-"):
            s = "+" + s
        parts.append(s)
    return "".join(parts) or "0"


def _format_monomial(e) -> str:
    out = []
    for name, k in zip(VARIABLES, e):
        if k == 1:
            out.append(name)
        elif k > 1:
            out.append(f"{name}^{k}")
    return " ".join(out)


def format_expr(P: BCPolynomial) -> str:
    """Canonical text of ``P`` in descending graded-lex order; ``parse_expr`` inverts it."""
    pieces = []
    for e, c in P.sorted_terms():
        mono = _format_monomial(e)
        x1, x2, x3, x4 = _cartesian(c)
        if x2 == 0 and x3 == 0 and x4 == 0:
            negative = x1 < 0
            mag = -x1 if negative else x1
            if mono and mag == 1:
                body = mono
            else:
                body = format_scalar(mag) + (" " + mono if mono else "")
        else:
            negative = False
            body = f"({format_bicomplex(c)})" + (" " + mono if mono else "")
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces) or "0"


# JSON

def scalar_to_json(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return float(x)


def scalar_from_json(v, mode: str = "exact"):
    if isinstance(v, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(v, int):
        return Fraction(v) if mode == "exact" else float(v)
    if isinstance(v, float):
        return Fraction(v) if mode == "exact" else v
    if isinstance(v, str):
        return _make_scalar(v.strip(), mode)
    raise TypeError(f"cannot read a scalar from {v!r}")


def bicomplex_to_json(c: Bicomplex, form: str = "cartesian"):
    if form == "cartesian":
        return {"cartesian": [scalar_to_json(x) for x in c.to_cartesian()]}
    if form == "idempotent":
        return {"idempotent": {
            "l1": [scalar_to_json(c.l1.real), scalar_to_json(c.l1.imag)],
            "l2": [scalar_to_json(c.l2.real), scalar_to_json(c.l2.imag)],
        }}
    raise ValueError(f"unknown JSON form {form!r}")


def bicomplex_from_json(obj, mode: str = "exact") -> Bicomplex:
    if "cartesian" in obj:
        xs = [scalar_from_json(v, mode) for v in obj["cartesian"]]
        if len(xs) != 4:
            raise ValueError("cartesian form needs four numbers")
        return Bicomplex.from_cartesian(*xs)
    if "idempotent" in obj:
        d = obj["idempotent"]
        (a, b), (c, e) = ([scalar_from_json(v, mode) for v in d[k]] for k in ("l1", "l2"))
        comp = (lambda re, im: QComplex(re, im)) if mode == "exact" else (lambda re, im: complex(re, im))
        return Bicomplex(comp(a, b), comp(c, e))
    raise ValueError("expected a 'cartesian' or 'idempotent' object")


def polynomial_to_json(P: BCPolynomial) -> Dict:
    return {
        "expr": format_expr(P),
        "terms": [{"exponents": list(e), **bicomplex_to_json(c)} for e, c in P.sorted_terms()],
    }
