"""Polynomials in the four formal variables Z, Zbar, Z*, Z^dagger and their calculus.

A :class:`BCPolynomial` is a sparse map from exponent quadruples ``(m, n, p, q)``
to bicomplex coefficients and stands for

    sum  a_{m,n,p,q} Z^m Zbar^n (Z*)^p (Z^dagger)^q.

The four variables are treated as independent, so the Wirtinger-type
operators are plain formal partial derivatives.  This matches the idempotent
forms ``d/dZ = d/dl1 e1 + d/dl2 e2`` (and likewise for the conjugates), which
give ``dZ/dZ = 1``.

:class:`ExpPolynomial` represents ``P * exp(W)`` and is closed under the four
derivatives, which is all the Rodrigues-type formulas need.
"""
from __future__ import annotations

import operator
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

import numpy as np

from .core import Bicomplex, bc_exp
from .errors import NotStarPolyanalytic

__all__ = [
    "BCPolynomial", "ExpPolynomial", "VARIABLES",
    "Z", "Zb", "Zs", "Zd",
    "poly_add", "poly_mul", "poly_scale",
    "wirtinger_derivative", "eval_poly", "evaluate_idempotent", "conjugate_poly",
    "laplacian", "landau_star", "landau_A", "landau_B",
    "exppoly_derivative", "rodrigues", "rodrigues_tower",
    "multiorder", "star_decompose", "star_reassemble",
]

ExponentQuad = Tuple[int, int, int, int]

#: canonical variable names, in exponent-slot order
VARIABLES = ("Z", "Zb", "Zs", "Zd")

_WRT_ALIASES = {
    "Z": 0,
    "Zb": 1, "Zbar": 1, "bar": 1,
    "Zs": 2, "Zstar": 2, "star": 2,
    "Zd": 3, "Zdag": 3, "Zdagger": 3, "dagger": 3,
}

# exponent permutation and coefficient conjugation induced by each conjugation
_CONJ_PERM = {
    "bar": (1, 0, 3, 2),
    "star": (2, 3, 0, 1),
    "dagger": (3, 2, 1, 0),
}


def _slot(wrt) -> int:
    if isinstance(wrt, int) and 0 <= wrt < 4:
        return wrt
    try:
        return _WRT_ALIASES[wrt]
    except KeyError:
        raise ValueError(f"unknown variable {wrt!r}; use one of {VARIABLES}") from None


class BCPolynomial:
    """Sparse polynomial over BC in (Z, Zb, Zs, Zd).

    Zero coefficients are never stored, so ``BCPolynomial() == 0`` and two
    polynomials are equal exactly when their term maps coincide.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExponentQuad, object] | None = None):
        clean: Dict[ExponentQuad, Bicomplex] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != 4 or min(exps) < 0:
                raise ValueError(f"exponents must be four non-negative ints, got {exps}")
            c = Bicomplex.lift(c)
            clean[exps] = clean[exps] + c if exps in clean else c
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, terms: Dict[ExponentQuad, Bicomplex]) -> BCPolynomial:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, m=0, n=0, p=0, q=0, coeff=1) -> BCPolynomial:
        return cls({(m, n, p, q): coeff})

    @classmethod
    def constant(cls, c) -> BCPolynomial:
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def variable(cls, name) -> BCPolynomial:
        exps = [0, 0, 0, 0]
        exps[_slot(name)] = 1
        return cls({tuple(exps): 1})

    @classmethod
    def coerce(cls, x) -> BCPolynomial:
        if isinstance(x, BCPolynomial):
            return x
        return cls.constant(x)

    # container protocol
    @property
    def terms(self) -> Dict[ExponentQuad, Bicomplex]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[ExponentQuad]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, exps) -> Bicomplex:
        return self._terms.get(tuple(exps), Bicomplex(0, 0))

    def __bool__(self):
        return bool(self._terms)

    def sorted_terms(self):
        """Terms in descending graded-lex order on (m, n, p, q)."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def degree(self, wrt=None) -> int:
        """Total degree, or the degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if wrt is None:
            return max(sum(e) for e in self._terms)
        s = _slot(wrt)
        return max(e[s] for e in self._terms)

    @property
    def is_exact(self) -> bool:
        return all(c.is_exact for c in self._terms.values())

    def to_float(self) -> BCPolynomial:
        return BCPolynomial._raw({e: c.to_float() for e, c in self._terms.items()})

    # ring operations
    def __add__(self, other):
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return BCPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BCPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        out: Dict[ExponentQuad, Bicomplex] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return BCPolynomial._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result, base = BCPolynomial.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> BCPolynomial:
        c = Bicomplex.lift(c)
        return BCPolynomial._raw({e: v for e, v in ((e, a * c) for e, a in self._terms.items()) if v})

    def __eq__(self, other):
        other = _poly_or_none(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # calculus and evaluation
    def diff(self, wrt, times: int = 1) -> BCPolynomial:
        return wirtinger_derivative(self, wrt, times)

    def __call__(self, Z: Bicomplex) -> Bicomplex:
        return eval_poly(self, Z)

    def __repr__(self):
        from .parsing import format_expr
        return f"BCPolynomial({format_expr(self)!r})"

    def __str__(self):
        from .parsing import format_expr
        return format_expr(self)


def _poly_or_none(x):
    if isinstance(x, BCPolynomial):
        return x
    if isinstance(x, ExpPolynomial):
        return None
    try:
        return BCPolynomial.constant(x)
    except (TypeError, ValueError):
        return None


Z = BCPolynomial.variable("Z")
Zb = BCPolynomial.variable("Zb")
Zs = BCPolynomial.variable("Zs")
Zd = BCPolynomial.variable("Zd")


def poly_add(P: BCPolynomial, Q: BCPolynomial) -> BCPolynomial:
    return P + Q


def poly_mul(P: BCPolynomial, Q: BCPolynomial) -> BCPolynomial:
    return P * Q


def poly_scale(P: BCPolynomial, c) -> BCPolynomial:
    return P.scale(c)


def wirtinger_derivative(P: BCPolynomial, wrt, times: int = 1) -> BCPolynomial:
    """Formal partial derivative of ``P`` in one of Z, Zb, Zs, Zd, applied ``times`` times."""
    s = _slot(wrt)
    terms = P._terms
    for _ in range(times):
        out = {}
        for e, c in terms.items():
            k = e[s]
            if k == 0:
                continue
            ne = list(e)
            ne[s] = k - 1
            out[tuple(ne)] = c * k
        terms = out
    return BCPolynomial._raw({e: c for e, c in terms.items() if c})


def _component_values(Z: Bicomplex):
    # values taken by (Z, Zb, Zs, Zd) in the e1 and e2 components
    l1, l2 = Z.l1, Z.l2
    c1, c2 = l1.conjugate(), l2.conjugate()
    return (l1, c2, c1, l2), (l2, c1, c2, l1)


def _eval_component(P: BCPolynomial, values, which: str):
    powers = [{0: 1} for _ in range(4)]

    def pw(slot, k):
        cache = powers[slot]
        if k not in cache:
            cache[k] = values[slot] ** k
        return cache[k]

    total = 0
    for (m, n, p, q), c in P._terms.items():
        term = getattr(c, which)
        for slot, k in ((0, m), (1, n), (2, p), (3, q)):
            if k:
                term = term * pw(slot, k)
        total = total + term
    return total


def eval_poly(P: BCPolynomial, Z: Bicomplex) -> Bicomplex:
    """Substitute ``Z`` and its conjugates for the formal variables.

    Evaluation is done componentwise: in the e1 slot the variables take the
    values ``(l1, conj l2, conj l1, l2)`` and in the e2 slot
    ``(l2, conj l1, conj l2, l1)``.
    """
    Z = Bicomplex.lift(Z)
    v1, v2 = _component_values(Z)
    return Bicomplex(_eval_component(P, v1, "l1"), _eval_component(P, v2, "l2"))


def evaluate_idempotent(P: BCPolynomial, lam1, lam2):
    """Vectorised float evaluation on arrays of idempotent components.

    Returns the pair of arrays ``(f1, f2)`` with ``P(Z) = f1 e1 + f2 e2`` for
    ``Z = lam1 e1 + lam2 e2``.
    """
    lam1 = np.asarray(lam1, dtype=complex)
    lam2 = np.asarray(lam2, dtype=complex)
    shape = np.broadcast(lam1, lam2).shape
    vals1 = (lam1, np.conj(lam2), np.conj(lam1), lam2)
    vals2 = (lam2, np.conj(lam1), np.conj(lam2), lam1)
    f1 = np.zeros(shape, dtype=complex)
    f2 = np.zeros(shape, dtype=complex)
    for e, c in P._terms.items():
        t1 = np.full(shape, complex(c.l1))
        t2 = np.full(shape, complex(c.l2))
        for slot, k in enumerate(e):
            if k:
                t1 = t1 * vals1[slot] ** k
                t2 = t2 * vals2[slot] ** k
        f1 += t1
        f2 += t2
    return f1, f2


def conjugate_poly(P: BCPolynomial, variant: str) -> BCPolynomial:
    """Polynomial ``Q`` with ``Q(Z) = conj_variant(P(Z))`` for every Z."""
    try:
        perm = _CONJ_PERM[variant]
    except KeyError:
        raise ValueError(f"unknown conjugation {variant!r}") from None
    conj = operator.methodcaller(variant)
    return BCPolynomial._raw({tuple(e[perm[i]] for i in range(4)): conj(c)
                              for e, c in P._terms.items()})


_LAPLACIANS = {
    "i": ("Z", "Zb"),
    "j": ("Z", "Zd"),
    "k": ("Z", "Zs"),
    "F": ("Z", "Zb", "Zs", "Zd"),
}


def laplacian(P: BCPolynomial, variant: str) -> BCPolynomial:
    try:
        wrts = _LAPLACIANS[variant]
    except KeyError:
        raise ValueError(f"unknown Laplacian {variant!r}; use i, j, k or F") from None
    for w in wrts:
        P = wirtinger_derivative(P, w)
    return P


def landau_A(P: BCPolynomial) -> BCPolynomial:
    return wirtinger_derivative(P, "Zs")


def landau_B(P: BCPolynomial) -> BCPolynomial:
    return Zs * P - wirtinger_derivative(P, "Z")


def landau_star(P: BCPolynomial) -> BCPolynomial:
    """Landau operator ``-Delta_k + Z* d/dZ*``."""
    return Zs * wirtinger_derivative(P, "Zs") - laplacian(P, "k")


class ExpPolynomial:
    """``prefactor * exp(exponent)`` with both parts polynomials."""

    __slots__ = ("prefactor", "exponent")

    def __init__(self, prefactor, exponent):
        self.prefactor = BCPolynomial.coerce(prefactor)
        self.exponent = BCPolynomial.coerce(exponent)

    def diff(self, wrt, times: int = 1) -> ExpPolynomial:
        E = self
        for _ in range(times):
            E = exppoly_derivative(E, wrt)
        return E

    def __call__(self, Z: Bicomplex) -> Bicomplex:
        Z = Bicomplex.lift(Z).to_float()
        return eval_poly(self.prefactor, Z) * bc_exp(eval_poly(self.exponent, Z))

    def __eq__(self, other):
        if not isinstance(other, ExpPolynomial):
            return NotImplemented
        return self.prefactor == other.prefactor and self.exponent == other.exponent

    def __hash__(self):
        return hash((self.prefactor, self.exponent))

    def __repr__(self):
        return f"ExpPolynomial({self.prefactor!r}, {self.exponent!r})"


def exppoly_derivative(E: ExpPolynomial, wrt) -> ExpPolynomial:
    """Chain rule: ``d(P e^W) = (dP + P dW) e^W``."""
    P, W = E.prefactor, E.exponent
    return ExpPolynomial(P.diff(wrt) + P * W.diff(wrt), W)


_WEIGHTS = {
    "star": "Zs",
    "bar": "Zb",
    "dagger": "Zd",
}


def rodrigues_tower(weight: BCPolynomial, orders: Sequence[Tuple[str, int]]) -> BCPolynomial:
    """Prefactor of ``(-1)^N e^{W} d^{...}(e^{-W})`` for derivative counts ``orders``.

    ``orders`` is a sequence of ``(variable, count)`` applied left to right;
    ``N`` is the total count.
    """
    E = ExpPolynomial(1, -weight)
    total = 0
    for wrt, k in orders:
        E = E.diff(wrt, k)
        total += k
    return -E.prefactor if total % 2 else E.prefactor


def rodrigues(m: int, n: int, weight: str = "star", z_first: bool = True) -> BCPolynomial:
    """``(-1)^{m+n} e^{W} d_C^m d_Z^n e^{-W}`` with ``W = Z C`` and C the conjugate variable.

    ``weight`` picks C; ``z_first`` controls whether the Z-derivatives are
    applied before the conjugate ones (the result does not depend on it).
    """
    if m < 0 or n < 0:
        raise ValueError("Rodrigues orders must be non-negative")
    try:
        conj = _WEIGHTS[weight]
    except KeyError:
        raise ValueError(f"unknown weight {weight!r}; use star, bar or dagger") from None
    W = Z * BCPolynomial.variable(conj)
    orders = [("Z", n), (conj, m)] if z_first else [(conj, m), ("Z", n)]
    return rodrigues_tower(W, orders)


def multiorder(P: BCPolynomial) -> Tuple[int, int, int]:
    """Minimal (l, k, q) with d_Zb^l P = d_Zs^k P = d_Zd^q P = 0."""
    return (P.degree("Zb") + 1 if P else 1,
            P.degree("Zs") + 1 if P else 1,
            P.degree("Zd") + 1 if P else 1)


def star_decompose(P: BCPolynomial):
    """Split a *-polyanalytic polynomial as ``sum_l (Z*)^l f_l(Z)``.

    Returns the list ``[f_0, ..., f_{n-1}]`` of Z-only polynomials, where
    ``n`` is the *-order.  The zero polynomial decomposes as ``[0]``.

    Raises:
        NotStarPolyanalytic: if any term carries a Zb or Zd exponent.
    """
    bad = [e for e in P if e[1] or e[3]]
    if bad:
        raise NotStarPolyanalytic(
            f"term with exponents {bad[0]} depends on Zb or Zd; not *-polyanalytic")
    order = max((e[2] for e in P), default=0) + 1
    parts = [dict() for _ in range(order)]
    for (m, _, p, _), c in P.items():
        parts[p][(m, 0, 0, 0)] = c
    return [BCPolynomial._raw(d) for d in parts]


def star_reassemble(parts: Iterable[BCPolynomial]) -> BCPolynomial:
    out = BCPolynomial()
    for l, f in enumerate(parts):
        out = out + f * Zs ** l
    return out
