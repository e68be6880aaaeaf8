"""Poly-Fock and poly-Bergman reproducing kernels, complex and bicomplex.

The complex kernels accept Python scalars or numpy arrays (broadcasting), so
they can be handed straight to the quadrature routines.  The bicomplex
kernels work on float-mode :class:`~bicalc.core.Bicomplex` values.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, pi

import numpy as np

from .core import Bicomplex, bc_exp, inverse, modulus_sq
from .errors import DomainViolation

__all__ = [
    "fock_kernel_c", "bergman_kernel_c",
    "fock_kernel_bc", "fock_kernel_bc_split",
    "bergman_kernel_bc", "bergman_kernel_bc_direct",
    "KernelSection",
]


def _check_order(n):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"kernel order must be an integer >= 1, got {n!r}")


def _scalar_out(x):
    return complex(x) if np.ndim(x) == 0 else x


def fock_kernel_c(n: int, z, w):
    """Poly-Fock kernel of order ``n`` on C.

    ``K_n(z, w) = exp(z conj(w)) sum_{k<n} (-1)^k / k! binom(n, k+1) |z-w|^{2k}``
    """
    _check_order(n)
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    d2 = np.abs(z - w) ** 2
    s = sum((-1) ** k / factorial(k) * comb(n, k + 1) * d2 ** k for k in range(n))
    return _scalar_out(np.exp(z * np.conj(w)) * s)


def _check_disc(*points):
    for x in points:
        if np.any(np.abs(x) >= 1):
            raise DomainViolation("Bergman kernel arguments must lie in the open unit disc")


def bergman_kernel_c(n: int, z, w):
    """Poly-Bergman kernel of order ``n`` on the unit disc.

    Raises:
        DomainViolation: if ``|z| >= 1`` or ``|w| >= 1``.
    """
    _check_order(n)
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    _check_disc(z, w)
    a = 1 - np.conj(w) * z
    a2 = np.abs(a) ** 2
    d2 = np.abs(z - w) ** 2
    s = sum((-1) ** k * comb(n, k + 1) * comb(n + k, n) * a2 ** (n - 1 - k) * d2 ** k
            for k in range(n))
    return _scalar_out(n / (pi * a ** (2 * n)) * s)


def fock_kernel_bc(n: int, Z: Bicomplex, W: Bicomplex) -> Bicomplex:
    """Bicomplex poly-Fock kernel ``exp(Z W*) sum_l (-1)^l/l! binom(n,l+1) (|Z-W|_k^2)^l``."""
    _check_order(n)
    Z, W = Bicomplex.lift(Z).to_float(), Bicomplex.lift(W).to_float()
    d = modulus_sq(Z - W, "k")
    s = Bicomplex(0.0, 0.0)
    for l in range(n):
        s = s + d ** l * ((-1) ** l / factorial(l) * comb(n, l + 1))
    return bc_exp(Z * W.star()) * s


def fock_kernel_bc_split(n: int, Z: Bicomplex, W: Bicomplex) -> Bicomplex:
    """``K_n(l1, m1) e1 + K_n(l2, m2) e2`` from the complex kernel."""
    Z, W = Bicomplex.lift(Z), Bicomplex.lift(W)
    return Bicomplex(fock_kernel_c(n, complex(Z.l1), complex(W.l1)),
                     fock_kernel_c(n, complex(Z.l2), complex(W.l2)))


def _check_product_ball(*points):
    for X in points:
        if abs(complex(X.l1)) >= 1 or abs(complex(X.l2)) >= 1:
            raise DomainViolation(
                f"{X!r} is outside the product unit ball (both idempotent components need |.| < 1)")


def bergman_kernel_bc(n: int, Z: Bicomplex, W: Bicomplex) -> Bicomplex:
    """Bicomplex poly-Bergman kernel on the product unit ball, evaluated componentwise.

    Raises:
        DomainViolation: if ``Z`` or ``W`` is outside the product unit ball.
    """
    Z, W = Bicomplex.lift(Z), Bicomplex.lift(W)
    _check_product_ball(Z, W)
    return Bicomplex(bergman_kernel_c(n, complex(Z.l1), complex(W.l1)),
                     bergman_kernel_c(n, complex(Z.l2), complex(W.l2)))


def bergman_kernel_bc_direct(n: int, Z: Bicomplex, W: Bicomplex) -> Bicomplex:
    """The same kernel built from bicomplex arithmetic and k-moduli (integer powers only)."""
    _check_order(n)
    Z, W = Bicomplex.lift(Z).to_float(), Bicomplex.lift(W).to_float()
    _check_product_ball(Z, W)
    a = 1 - W.star() * Z
    a2 = modulus_sq(a, "k")
    d2 = modulus_sq(Z - W, "k")
    s = Bicomplex(0.0, 0.0)
    for l in range(n):
        s = s + a2 ** (n - 1 - l) * d2 ** l * float((-1) ** l * comb(n, l + 1) * comb(n + l, n))
    return inverse(a) ** (2 * n) * s * (n / pi)


@dataclass(frozen=True)
class KernelSection:
    """The function ``K(., anchor)`` of one of the kernels above."""

    space: str
    order: int
    anchor: object
    realm: str = "bicomplex"

    def __post_init__(self):
        if self.space not in ("fock", "bergman"):
            raise ValueError(f"unknown space {self.space!r}")
        if self.realm not in ("complex", "complex-diagonal", "bicomplex"):
            raise ValueError(f"unknown realm {self.realm!r}")
        _check_order(self.order)
        if self.space == "bergman":
            if self.realm == "bicomplex":
                _check_product_ball(Bicomplex.lift(self.anchor))
            else:
                _check_disc(np.asarray(self.anchor, dtype=complex))

    def __call__(self, z):
        if self.realm == "bicomplex":
            fn = fock_kernel_bc if self.space == "fock" else bergman_kernel_bc
        else:
            fn = fock_kernel_c if self.space == "fock" else bergman_kernel_c
        return fn(self.order, z, self.anchor)
