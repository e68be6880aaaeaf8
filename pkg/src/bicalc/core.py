"""Bicomplex and hyperbolic numbers.

A bicomplex number ``Z = z1 + j z2`` (``z1, z2`` in C(i)) is stored through
its idempotent components ``Z = l1 e1 + l2 e2`` with ``e1 = (1+k)/2`` and
``e2 = (1-k)/2``.  In that basis addition, multiplication and inversion act
componentwise and the three conjugations are swaps and/or complex
conjugations, so every operation below is a couple of complex operations.

Two scalar modes share the same classes:

* exact: components are :class:`QComplex` (Gaussian rationals backed by
  :class:`fractions.Fraction`); arithmetic never rounds.
* float: components are builtin :class:`complex`.

Ints and Fractions select exact mode, floats and complex values select float
mode.  Mixing the two promotes to float.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import ExactModeUnsupported, ZeroDivisorError

__all__ = [
    "QComplex", "Bicomplex", "Hyperbolic", "Complexlike",
    "from_cartesian", "to_cartesian", "conjugate", "inverse",
    "modulus_sq", "finsler_pow4", "euclidean_norm", "euclidean_norm_sq",
    "hyperbolic_norm", "hyp_leq", "dplus_contains", "bc_exp",
    "ONE", "ZERO", "I", "J", "K", "E1", "E2",
]


def _is_exact_scalar(x) -> bool:
    return isinstance(x, (Rational, QComplex)) and not isinstance(x, bool)


class QComplex:
    """Complex number with exact rational real and imaginary parts.

    Mirrors the small part of the :class:`complex` interface the rest of
    the package relies on (``real``, ``imag``, ``conjugate()``, arithmetic).
    Operations against floats or complex values fall back to builtin complex.
    """

    __slots__ = ("real", "imag")

    def __init__(self, real=0, imag=0):
        if isinstance(real, QComplex):
            real, imag = real.real, real.imag + Fraction(imag)
        self.real = Fraction(real)
        self.imag = Fraction(imag)

    @classmethod
    def _make(cls, real: Fraction, imag: Fraction) -> QComplex:
        # trusted constructor: both parts already Fractions
        q = object.__new__(cls)
        q.real = real
        q.imag = imag
        return q

    # coercion
    def __complex__(self):
        return complex(float(self.real), float(self.imag))

    @staticmethod
    def _lift(other):
        if isinstance(other, QComplex):
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return QComplex(other)
        return None

    def conjugate(self) -> QComplex:
        return QComplex._make(self.real, -self.imag)

    def abs_sq(self) -> Fraction:
        return self.real * self.real + self.imag * self.imag

    def __abs__(self):
        return _sqrt_scalar(self.abs_sq())

    def __bool__(self):
        return bool(self.real) or bool(self.imag)

    def __neg__(self):
        return QComplex._make(-self.real, -self.imag)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = other if type(other) is QComplex else self._lift(other)
        if o is None:
            return complex(self) + other if isinstance(other, (float, complex)) else NotImplemented
        return QComplex._make(self.real + o.real, self.imag + o.imag)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if type(other) is QComplex else self._lift(other)
        if o is None:
            return complex(self) - other if isinstance(other, (float, complex)) else NotImplemented
        return QComplex._make(self.real - o.real, self.imag - o.imag)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = other if type(other) is QComplex else self._lift(other)
        if o is None:
            return complex(self) * other if isinstance(other, (float, complex)) else NotImplemented
        return QComplex._make(self.real * o.real - self.imag * o.imag,
                              self.real * o.imag + self.imag * o.real)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return complex(self) / other if isinstance(other, (float, complex)) else NotImplemented
        d = o.abs_sq()
        if d == 0:
            raise ZeroDivisionError("QComplex division by zero")
        num = self * o.conjugate()
        return QComplex._make(num.real / d, num.imag / d)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return other / complex(self) if isinstance(other, (float, complex)) else NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return complex(self) ** n
        if n < 0:
            return (QComplex(1) / self) ** (-n)
        result, base = QComplex(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = other if type(other) is QComplex else self._lift(other)
        if o is not None:
            return self.real == o.real and self.imag == o.imag
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.imag == 0:
            return hash(self.real)
        return hash((self.real, self.imag))

    def __repr__(self):
        return f"QComplex({self.real}, {self.imag})"


Complexlike = Union[complex, QComplex]


def _coerce_component(x) -> Complexlike:
    if isinstance(x, QComplex):
        return x
    if _is_exact_scalar(x):
        return QComplex(x)
    return complex(x)


def _coerce_pair(a, b):
    a, b = _coerce_component(a), _coerce_component(b)
    if isinstance(a, QComplex) != isinstance(b, QComplex):
        a, b = complex(a), complex(b)
    return a, b


def _abs_sq(c: Complexlike):
    if isinstance(c, QComplex):
        return c.abs_sq()
    return c.real * c.real + c.imag * c.imag


def _sqrt_scalar(x):
    """Square root that stays exact when ``x`` is a perfect rational square."""
    if isinstance(x, Fraction):
        if x < 0:
            raise ValueError("square root of a negative scalar")
        n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
        if n * n == x.numerator and d * d == x.denominator:
            return Fraction(n, d)
        return math.sqrt(x)
    return math.sqrt(x)


class Bicomplex:
    """Element of BC stored as idempotent components ``l1 e1 + l2 e2``."""

    __slots__ = ("l1", "l2")

    def __init__(self, l1=0, l2=0):
        self.l1, self.l2 = _coerce_pair(l1, l2)

    @classmethod
    def _make(cls, l1, l2) -> Bicomplex:
        # trusted constructor: components already share one scalar type
        Z = object.__new__(cls)
        Z.l1 = l1
        Z.l2 = l2
        return Z

    # construction
    @classmethod
    def from_cartesian(cls, x1=0, x2=0, x3=0, x4=0) -> Bicomplex:
        """Build ``x1 + i x2 + j x3 + k x4``."""
        x1, x2, x3, x4 = (_as_scalar(x) for x in (x1, x2, x3, x4))
        return cls(_cx(x1 + x4, x2 - x3), _cx(x1 - x4, x2 + x3))

    @classmethod
    def from_z(cls, z1, z2=0) -> Bicomplex:
        """Build ``z1 + j z2`` from two C(i) numbers."""
        z1, z2 = _coerce_pair(z1, z2)
        iz2 = _times_i(z2)
        return cls(z1 - iz2, z1 + iz2)

    @classmethod
    def lift(cls, x) -> Bicomplex:
        """Coerce a scalar or C(i) number into BC; Bicomplex values pass through."""
        if isinstance(x, Bicomplex):
            return x
        return cls(x, x)

    # views
    @property
    def is_exact(self) -> bool:
        return isinstance(self.l1, QComplex)

    @property
    def z1(self) -> Complexlike:
        return (self.l1 + self.l2) * _half(self.l1)

    @property
    def z2(self) -> Complexlike:
        return _times_i(self.l1 - self.l2) * _half(self.l1)

    def to_cartesian(self) -> tuple:
        z1, z2 = self.z1, self.z2
        return (z1.real, z1.imag, z2.real, z2.imag)

    def to_float(self) -> Bicomplex:
        return Bicomplex(complex(self.l1), complex(self.l2))

    def to_exact(self) -> Bicomplex:
        """Exact copy; float components are converted without rounding."""
        return Bicomplex(QComplex(Fraction(self.l1.real), Fraction(self.l1.imag)),
                         QComplex(Fraction(self.l2.real), Fraction(self.l2.imag)))

    def components(self) -> tuple:
        return (self.l1, self.l2)

    def is_hyperbolic(self, tol=0) -> bool:
        """True when both idempotent components are real (within ``tol``)."""
        return abs(self.l1.imag) <= tol and abs(self.l2.imag) <= tol

    def is_zero_divisor(self) -> bool:
        return not self.l1 or not self.l2

    # conjugations
    def bar(self) -> Bicomplex:
        return Bicomplex._make(self.l2.conjugate(), self.l1.conjugate())

    def dagger(self) -> Bicomplex:
        return Bicomplex._make(self.l2, self.l1)

    def star(self) -> Bicomplex:
        return Bicomplex._make(self.l1.conjugate(), self.l2.conjugate())

    # arithmetic
    def __add__(self, other):
        o = other if type(other) is Bicomplex else _lift_or_none(other)
        if o is None:
            return NotImplemented
        return Bicomplex._make(self.l1 + o.l1, self.l2 + o.l2)

    __radd__ = __add__

    def __sub__(self, other):
        o = other if type(other) is Bicomplex else _lift_or_none(other)
        if o is None:
            return NotImplemented
        return Bicomplex._make(self.l1 - o.l1, self.l2 - o.l2)

    def __rsub__(self, other):
        o = _lift_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = other if type(other) is Bicomplex else _lift_or_none(other)
        if o is None:
            return NotImplemented
        return Bicomplex._make(self.l1 * o.l1, self.l2 * o.l2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _lift_or_none(other)
        if o is None:
            return NotImplemented
        return self * inverse(o)

    def __rtruediv__(self, other):
        o = _lift_or_none(other)
        if o is None:
            return NotImplemented
        return o * inverse(self)

    def __neg__(self):
        return Bicomplex._make(-self.l1, -self.l2)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("bicomplex powers are defined for integer exponents only")
        if n < 0:
            return inverse(self) ** (-n)
        return Bicomplex(self.l1 ** n, self.l2 ** n)

    def __abs__(self):
        return euclidean_norm(self)

    def __bool__(self):
        return bool(self.l1) or bool(self.l2)

    def __eq__(self, other):
        o = other if type(other) is Bicomplex else _lift_or_none(other)
        if o is None:
            return NotImplemented
        return self.l1 == o.l1 and self.l2 == o.l2

    def __hash__(self):
        return hash((self.l1, self.l2))

    def __repr__(self):
        return f"Bicomplex(l1={self.l1!r}, l2={self.l2!r})"

    def __str__(self):
        from .parsing import format_bicomplex
        return format_bicomplex(self)


def _as_scalar(x):
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x)
    return float(x)


def _cx(re, im) -> Complexlike:
    if isinstance(re, Fraction) and isinstance(im, Fraction):
        return QComplex(re, im)
    return complex(float(re), float(im))


def _times_i(c: Complexlike) -> Complexlike:
    if isinstance(c, QComplex):
        return QComplex(-c.imag, c.real)
    return complex(-c.imag, c.real)


def _half(like):
    return Fraction(1, 2) if isinstance(like, QComplex) else 0.5


def _lift_or_none(x):
    if isinstance(x, Bicomplex):
        return x
    if isinstance(x, (Rational, float, complex, QComplex)):
        return Bicomplex(x, x)
    return None


ZERO = Bicomplex(0, 0)
ONE = Bicomplex(1, 1)
I = Bicomplex.from_cartesian(0, 1, 0, 0)
J = Bicomplex.from_cartesian(0, 0, 1, 0)
K = Bicomplex.from_cartesian(0, 0, 0, 1)
E1 = Bicomplex(1, 0)
E2 = Bicomplex(0, 1)


class Hyperbolic:
    """Hyperbolic number ``x + k y`` stored as ``s e1 + t e2`` (s = x+y, t = x-y)."""

    __slots__ = ("s", "t")

    def __init__(self, s=0, t=0):
        self.s = _as_scalar(s)
        self.t = _as_scalar(t)
        if isinstance(self.s, float) or isinstance(self.t, float):
            self.s, self.t = float(self.s), float(self.t)

    @classmethod
    def from_xy(cls, x, y) -> Hyperbolic:
        x, y = _as_scalar(x), _as_scalar(y)
        return cls(x + y, x - y)

    @classmethod
    def from_bicomplex(cls, Z: Bicomplex, tol=0) -> Hyperbolic:
        """Down-cast a bicomplex value whose components are real."""
        if not Z.is_hyperbolic(tol):
            raise ValueError(f"{Z!r} is not hyperbolic")
        return cls(Z.l1.real, Z.l2.real)

    @property
    def x(self):
        return (self.s + self.t) / 2

    @property
    def y(self):
        return (self.s - self.t) / 2

    def to_bicomplex(self) -> Bicomplex:
        return Bicomplex(self.s, self.t)

    def diamond(self) -> Hyperbolic:
        """Hyperbolic conjugate ``x - k y``."""
        return Hyperbolic(self.t, self.s)

    def modulus_sq(self):
        """``|h|_D^2 = x^2 - y^2 = s t``."""
        return self.s * self.t

    def __add__(self, other):
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.s + other.s, self.t + other.t)

    def __sub__(self, other):
        if not isinstance(other, Hyperbolic):
            return NotImplemented
        return Hyperbolic(self.s - other.s, self.t - other.t)

    def __mul__(self, other):
        if isinstance(other, Hyperbolic):
            return Hyperbolic(self.s * other.s, self.t * other.t)
        if isinstance(other, (Rational, float)):
            return Hyperbolic(self.s * other, self.t * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return Hyperbolic(-self.s, -self.t)

    def __le__(self, other):
        return hyp_leq(self, other)

    def __ge__(self, other):
        return hyp_leq(other, self)

    def __eq__(self, other):
        if isinstance(other, Hyperbolic):
            return self.s == other.s and self.t == other.t
        return NotImplemented

    def __hash__(self):
        return hash((self.s, self.t))

    def __repr__(self):
        return f"Hyperbolic(s={self.s}, t={self.t})"


def from_cartesian(x1, x2, x3, x4) -> Bicomplex:
    return Bicomplex.from_cartesian(x1, x2, x3, x4)


def to_cartesian(Z: Bicomplex) -> tuple:
    return Z.to_cartesian()


def inverse(Z: Bicomplex) -> Bicomplex:
    """Return ``l1^-1 e1 + l2^-1 e2``.

    Raises:
        ZeroDivisorError: if ``Z`` is a zero divisor (an idempotent component vanishes).
    """
    if Z.is_zero_divisor():
        raise ZeroDivisorError(f"{Z!r} is a zero divisor and has no inverse")
    return Bicomplex(1 / Z.l1, 1 / Z.l2)


_CONJUGATIONS = {"bar": Bicomplex.bar, "dagger": Bicomplex.dagger, "star": Bicomplex.star}


def conjugate(Z: Bicomplex, variant: str) -> Bicomplex:
    try:
        return _CONJUGATIONS[variant](Z)
    except KeyError:
        raise ValueError(f"unknown conjugation {variant!r}; use bar, dagger or star") from None


def modulus_sq(Z: Bicomplex, variant: str) -> Bicomplex:
    """Square of the i-, j- or k-modulus: ``Z Z^dagger``, ``Z Zbar`` or ``Z Z^*``."""
    l1, l2 = Z.l1, Z.l2
    if variant == "i":
        p = l1 * l2
        return Bicomplex(p, p)
    if variant == "j":
        return Bicomplex(l1 * l2.conjugate(), l1.conjugate() * l2)
    if variant == "k":
        return Bicomplex(_abs_sq(l1), _abs_sq(l2))
    raise ValueError(f"unknown modulus {variant!r}; use i, j or k")


def finsler_pow4(Z: Bicomplex):
    """Fourth power of the Finsler-type norm, ``Z Zbar Z* Z^dagger = |l1|^2 |l2|^2``."""
    return _abs_sq(Z.l1) * _abs_sq(Z.l2)


def euclidean_norm_sq(Z: Bicomplex):
    return (_abs_sq(Z.l1) + _abs_sq(Z.l2)) / 2


def euclidean_norm(Z: Bicomplex) -> float:
    return math.sqrt(euclidean_norm_sq(Z))


def hyperbolic_norm(Z: Bicomplex) -> Hyperbolic:
    """D+-valued norm ``|l1| e1 + |l2| e2``."""
    return Hyperbolic(_sqrt_scalar(_abs_sq(Z.l1)), _sqrt_scalar(_abs_sq(Z.l2)))


def dplus_contains(a: Hyperbolic) -> bool:
    return a.s >= 0 and a.t >= 0


def hyp_leq(a: Hyperbolic, b: Hyperbolic) -> bool:
    """Partial order on D: ``a <= b`` iff ``b - a`` lies in D+."""
    return dplus_contains(b - a)


def bc_exp(Z: Bicomplex) -> Bicomplex:
    if Z.is_exact:
        raise ExactModeUnsupported("bc_exp needs float-mode operands; call Z.to_float() first")
    return Bicomplex(cmath.exp(Z.l1), cmath.exp(Z.l2))
