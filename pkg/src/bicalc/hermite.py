"""Bicomplex Hermite (Ito) polynomials.

First kind, for each conjugate variable C in {Zbar, Z*, Z^dagger}::

    H_{m,n}(Z, C) = sum_k (-1)^k k! binom(m,k) binom(n,k) Z^{m-k} C^{n-k}

Second kind: the Rodrigues construction on the weight exp(-|Z|_F^4) is the
definition used here.  The closed triple-sum formula is available as
:func:`hermite_second_closed` purely for comparison; the two disagree (a
sign already at order (0,0,0,1)), and :func:`second_kind_discrepancies`
tabulates every mismatch.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .core import Bicomplex, bc_exp
from .errors import ExponentUnderflow
from .polynomial import BCPolynomial, Z, Zb, Zd, Zs, rodrigues_tower

__all__ = [
    "CONJUGATE_VARIABLE", "ito_coefficient", "complex_hermite",
    "hermite_first", "hermite_eval_split",
    "hermite_second_rodrigues", "hermite_second_closed", "second_kind_discrepancies",
    "generating_sum", "generating_closed_form",
]

#: formal variable slot of the conjugate used by each first-kind family
CONJUGATE_VARIABLE = {"bar": "Zb", "star": "Zs", "dagger": "Zd"}
_SLOT = {"bar": 1, "star": 2, "dagger": 3}

FINSLER = Z * Zb * Zs * Zd


def ito_coefficient(m: int, n: int, k: int) -> int:
    return (-1) ** k * factorial(k) * comb(m, k) * comb(n, k)


def complex_hermite(m: int, n: int, z, zbar=None):
    """Classical complex Hermite polynomial H_{m,n}(z, zbar).

    ``zbar`` defaults to the complex conjugate of ``z``; passing it
    explicitly allows evaluation with an independent second argument.
    Works on Python scalars, :class:`~bicalc.core.QComplex` and numpy arrays.
    """
    if zbar is None:
        zbar = z.conjugate()
    total = 0
    for k in range(min(m, n) + 1):
        total = total + ito_coefficient(m, n, k) * z ** (m - k) * zbar ** (n - k)
    return total


@lru_cache(maxsize=None)
def hermite_first(variant: str, m: int, n: int) -> BCPolynomial:
    """First-kind bicomplex Hermite polynomial H_{m,n}(Z, C) as an exact polynomial."""
    if m < 0 or n < 0:
        raise ValueError("Hermite indices must be non-negative")
    try:
        slot = _SLOT[variant]
    except KeyError:
        raise ValueError(f"unknown variant {variant!r}; use bar, star or dagger") from None
    terms = {}
    for k in range(min(m, n) + 1):
        e = [m - k, 0, 0, 0]
        e[slot] = n - k
        terms[tuple(e)] = ito_coefficient(m, n, k)
    return BCPolynomial(terms)


def hermite_eval_split(m: int, n: int, Z: Bicomplex) -> Bicomplex:
    """H_{m,n}(Z, Z*) through the complex polynomials of the idempotent components."""
    Z = Bicomplex.lift(Z)
    return Bicomplex(complex_hermite(m, n, Z.l1), complex_hermite(m, n, Z.l2))


@lru_cache(maxsize=None)
def hermite_second_rodrigues(m: int, n: int, p: int, q: int) -> BCPolynomial:
    """Second-kind polynomial
    ``(-1)^{m+n+p+q} e^{F} d_Zb^m d_Z^n d_Zs^p d_Zd^q e^{-F}`` with ``F = Z Zb Zs Zd``.
    """
    if min(m, n, p, q) < 0:
        raise ValueError("Hermite indices must be non-negative")
    return rodrigues_tower(FINSLER, [("Zd", q), ("Zs", p), ("Z", n), ("Zb", m)])


def hermite_second_closed(m: int, n: int, p: int, q: int) -> BCPolynomial:
    """The closed triple-sum formula for the second kind, taken literally.

    Raises:
        ExponentUnderflow: when q < n, q < p or q < m, since the leading
            monomial ``Z^{q-n} (Z*)^{q-p} Zbar^{q-m}`` then has a negative power.
    """
    if min(m, n, p, q) < 0:
        raise ValueError("Hermite indices must be non-negative")
    if q < n or q < p or q < m:
        raise ExponentUnderflow(
            f"order {(m, n, p, q)}: closed form needs q >= m, n, p "
            f"(exponents {q - n}, {q - p}, {q - m})")
    acc = BCPolynomial()
    for ell in range(p + 1):
        for k in range(m + 1):
            for s in range(n + 1):
                j = ell + k + s
                c = Fraction((-1) ** j * comb(p, ell) * comb(m, k) * comb(n, s)
                             * comb(q + j, n), factorial(q + j))
                acc = acc + BCPolynomial.monomial(j, j, j, j, c)
    lead = BCPolynomial.monomial(q - n, q - m, q - p, 0,
                                 (-1) ** q * factorial(m) * factorial(n) * factorial(p) * factorial(q))
    return lead * acc


def second_kind_discrepancies(max_order: int = 2):
    """Compare the Rodrigues and closed second-kind forms for all orders <= ``max_order``.

    Returns a list of records ``{"order", "rodrigues", "closed_form", "equal"}``
    in lexicographic order of (m, n, p, q).  ``closed_form`` is the formatted
    polynomial, or ``{"error": ..., "message": ...}`` when it is undefined.
    """
    from .parsing import format_expr

    report = []
    rng = range(max_order + 1)
    for m in rng:
        for n in rng:
            for p in rng:
                for q in rng:
                    rod = hermite_second_rodrigues(m, n, p, q)
                    try:
                        closed = hermite_second_closed(m, n, p, q)
                    except ExponentUnderflow as exc:
                        closed_out, equal = {"error": "ExponentUnderflow", "message": str(exc)}, False
                    else:
                        closed_out, equal = format_expr(closed), closed == rod
                    report.append({
                        "order": [m, n, p, q],
                        "rodrigues": format_expr(rod),
                        "closed_form": closed_out,
                        "equal": equal,
                    })
    return report


def _conjugate_value(Z: Bicomplex, variant: str) -> Bicomplex:
    return getattr(Z, variant)()


def generating_sum(variant: str, U, V, Z, M: int) -> Bicomplex:
    """Truncated generating series ``sum_{m,n<=M} H_{m,n}(Z,C) U^m V^n / (m! n!)``.

    Exact when all inputs are exact.
    """
    if M < 0:
        raise ValueError("truncation order must be non-negative")
    U, V, Z = (Bicomplex.lift(x) for x in (U, V, Z))
    C = _conjugate_value(Z, variant)
    slot = _SLOT[variant]
    zpow, cpow, upow, vpow = ([X ** k for k in range(M + 1)] for X in (Z, C, U, V))
    exact = U.is_exact and V.is_exact and Z.is_exact
    fact = [factorial(k) for k in range(M + 1)]
    if not exact:
        return Bicomplex(*(_generating_component(variant, M, fact, comp, zpow, cpow, upow, vpow)
                           for comp in ("l1", "l2")))
    total = Bicomplex(0, 0) if exact else Bicomplex(0.0, 0.0)
    for m in range(M + 1):
        for n in range(M + 1):
            h = Bicomplex(0, 0)
            for e, c in hermite_first(variant, m, n).items():
                h = h + c * zpow[e[0]] * cpow[e[slot]]
            scale = Fraction(1, fact[m] * fact[n]) if exact else 1.0 / (fact[m] * fact[n])
            total = total + h * upow[m] * vpow[n] * scale
    return total


def _generating_component(variant, M, fact, comp, zpow, cpow, upow, vpow) -> complex:
    # float path: multiplication is componentwise, so run on plain complex numbers
    slot = _SLOT[variant]
    zp, cp, up, vp = ([complex(getattr(x, comp)) for x in seq] for seq in (zpow, cpow, upow, vpow))
    total = 0j
    for m in range(M + 1):
        for n in range(M + 1):
            h = sum(complex(getattr(c, comp)) * zp[e[0]] * cp[e[slot]]
                    for e, c in hermite_first(variant, m, n).items())
            total += h * up[m] * vp[n] / (fact[m] * fact[n])
    return total


def generating_closed_form(variant: str, U, V, Z) -> Bicomplex:
    """``exp(U Z + V C - U V)``, the limit of :func:`generating_sum`.

    Raises:
        ExactModeUnsupported: for exact inputs (convert with ``to_float`` first).
    """
    U, V, Z = (Bicomplex.lift(x) for x in (U, V, Z))
    C = _conjugate_value(Z, variant)
    return bc_exp(U * Z + V * C - U * V)
