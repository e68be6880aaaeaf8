"""Quadrature on the Gaussian plane, the unit disc and their bicomplex products.

Integrands are callables taking numpy arrays of complex nodes.  Polynomials
(:class:`~bicalc.polynomial.BCPolynomial`) are accepted wherever a
split or full bicomplex integrand is expected.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil, pi

import numpy as np

from .core import Bicomplex
from .errors import NotSplitCompatible
from .polynomial import BCPolynomial, evaluate_idempotent

__all__ = [
    "QuadratureRule", "gauss_hermite_nodes", "gaussian_plane_rule", "disc_rule",
    "nodes_for_degree",
    "gaussian_inner_product_c", "split_inner_product", "full_inner_product",
    "disc_inner_product", "gram_matrix",
    "fock_reproduce", "bergman_reproduce",
]

NORMALIZATIONS = ("raw", "pi-normalized")


@dataclass(frozen=True)
class QuadratureRule:
    kind: str
    nodes: np.ndarray
    weights: np.ndarray
    normalization: str = "raw"

    def __post_init__(self):
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(f"normalization must be one of {NORMALIZATIONS}")
        if np.any(self.weights <= 0):
            raise ValueError("quadrature weights must be positive")

    def integrate(self, values) -> complex:
        """Weighted sum of integrand values sampled at ``nodes``."""
        return complex(np.sum(self.weights * values))


def gauss_hermite_nodes(N: int) -> QuadratureRule:
    """One-dimensional Gauss-Hermite rule for the weight exp(-t^2)."""
    if N < 1:
        raise ValueError("need at least one node")
    t, w = np.polynomial.hermite.hermgauss(N)
    return QuadratureRule("gauss-hermite", t, w)


def gaussian_plane_rule(N: int, normalization: str = "pi-normalized") -> QuadratureRule:
    """Tensor Gauss-Hermite rule for exp(-|z|^2) dA(z); weights divided by pi if normalized."""
    r = gauss_hermite_nodes(N)
    x, y = np.meshgrid(r.nodes, r.nodes, indexing="ij")
    w = np.outer(r.weights, r.weights)
    if normalization == "pi-normalized":
        w = w / pi
    return QuadratureRule("gauss-hermite-plane", (x + 1j * y).ravel(), w.ravel(), normalization)


def disc_rule(Nr: int = 32, Ntheta: int = 64) -> QuadratureRule:
    """Polar rule on the unit disc for dA: Gauss-Legendre in r^2, uniform in theta."""
    u, wu = np.polynomial.legendre.leggauss(Nr)
    u = (u + 1) / 2          # r^2 in (0, 1)
    wu = wu / 2
    theta = 2 * pi * np.arange(Ntheta) / Ntheta
    r = np.sqrt(u)
    z = np.outer(r, np.exp(1j * theta)).ravel()
    # dA = r dr dtheta = (1/2) d(r^2) dtheta
    w = np.outer(wu / 2, np.full(Ntheta, 2 * pi / Ntheta)).ravel()
    return QuadratureRule("disc-polar", z, w)


def nodes_for_degree(total_degree: int) -> int:
    """Node count that integrates a polynomial integrand of ``total_degree`` exactly."""
    return ceil(total_degree / 2) + 2


def _sample(f, z):
    if callable(f):
        return np.broadcast_to(np.asarray(f(z), dtype=complex), z.shape)
    return np.full(z.shape, complex(f))


def gaussian_inner_product_c(f, g, N: int = 32, normalization: str = "pi-normalized") -> complex:
    """``int f conj(g) exp(-|z|^2) dA``, divided by pi when ``pi-normalized``."""
    rule = gaussian_plane_rule(N, normalization)
    z = rule.nodes
    return rule.integrate(_sample(f, z) * np.conj(_sample(g, z)))


def _split_components(F, lam):
    if isinstance(F, BCPolynomial):
        bad = [e for e in F if e[1] or e[3]]
        if bad:
            raise NotSplitCompatible(
                f"term {bad[0]} involves Zb or Zd; split inner products need (Z, Zs) only")
        return evaluate_idempotent(F, lam, lam)
    if callable(F):
        out = F(lam)
        if isinstance(out, tuple):
            return tuple(np.broadcast_to(np.asarray(o, dtype=complex), lam.shape) for o in out)
        out = np.broadcast_to(np.asarray(out, dtype=complex), lam.shape)
        return out, out
    B = Bicomplex.lift(F)
    return np.full(lam.shape, complex(B.l1)), np.full(lam.shape, complex(B.l2))


def split_inner_product(F, G, N: int = 32) -> Bicomplex:
    """Split-space inner product ``<F1, G1> e1 + <F2, G2> e2`` (pi-normalized Gaussian).

    ``F`` and ``G`` are polynomials in (Z, Zs), bicomplex constants, or
    callables of one complex array returning either one array (used for both
    components) or a pair ``(f1, f2)``.

    Raises:
        NotSplitCompatible: if a polynomial argument involves Zb or Zd.
    """
    rule = gaussian_plane_rule(N)
    lam = rule.nodes
    f1, f2 = _split_components(F, lam)
    g1, g2 = _split_components(G, lam)
    return Bicomplex(rule.integrate(f1 * np.conj(g1)), rule.integrate(f2 * np.conj(g2)))


def _full_components(F, l1, l2):
    if isinstance(F, BCPolynomial):
        return evaluate_idempotent(F, l1, l2)
    if callable(F):
        out = F(l1, l2)
        if isinstance(out, tuple):
            return tuple(np.broadcast_to(np.asarray(o, dtype=complex), l1.shape) for o in out)
        out = np.broadcast_to(np.asarray(out, dtype=complex), l1.shape)
        return out, out
    B = Bicomplex.lift(F)
    return np.full(l1.shape, complex(B.l1)), np.full(l1.shape, complex(B.l2))


def full_inner_product(F, G, N: int = 16) -> Bicomplex:
    """Full-space inner product over C^2 with weight exp(-(|l1|^2+|l2|^2)) / pi^2.

    Callables receive ``(l1, l2)`` arrays; a single returned array is used for
    both idempotent components.
    """
    rule = gaussian_plane_rule(N)
    l1, l2 = np.meshgrid(rule.nodes, rule.nodes, indexing="ij")
    w = np.outer(rule.weights, rule.weights)
    f1, f2 = _full_components(F, l1, l2)
    g1, g2 = _full_components(G, l1, l2)
    return Bicomplex(complex(np.sum(w * f1 * np.conj(g1))), complex(np.sum(w * f2 * np.conj(g2))))


def disc_inner_product(f, g, Nr: int = 32, Ntheta: int = 64) -> complex:
    """``int_{|z|<1} f conj(g) dA`` with the polar rule of :func:`disc_rule`."""
    rule = disc_rule(Nr, Ntheta)
    z = rule.nodes
    return rule.integrate(_sample(f, z) * np.conj(_sample(g, z)))


def gram_matrix(max_m: int = 4, max_n: int = 4, N: int = 32, variant: str = "star"):
    """Split Gram matrix of H_{m,n}(Z, Z*) for m <= max_m, n <= max_n.

    Returns ``(pairs, G1, G2)``: the (m, n) index pairs in graded-lex order
    and the e1/e2 component matrices.
    """
    from .hermite import hermite_first

    if variant != "star":
        raise NotSplitCompatible("only the Z* family lives in the split Gaussian space")
    pairs = sorted(((m, n) for m in range(max_m + 1) for n in range(max_n + 1)),
                   key=lambda mn: (mn[0] + mn[1], mn))
    rule = gaussian_plane_rule(N)
    lam = rule.nodes
    vals = [evaluate_idempotent(hermite_first("star", m, n), lam, lam) for m, n in pairs]
    A1 = np.array([v[0] for v in vals])
    A2 = np.array([v[1] for v in vals])
    w = rule.weights
    G1 = (A1 * w) @ np.conj(A1).T
    G2 = (A2 * w) @ np.conj(A2).T
    return pairs, G1, G2


def fock_reproduce(f, n: int, w, N: int = 64) -> complex:
    """``<f, K_n(., w)>`` in the pi-normalized Gaussian space."""
    from .kernels import fock_kernel_c
    return gaussian_inner_product_c(f, lambda z: fock_kernel_c(n, z, w), N)


def bergman_reproduce(f, n: int, w, Nr: int = 48, Ntheta: int = 96) -> complex:
    """``<f, B_n(., w)>`` on the unit disc with Lebesgue measure."""
    from .kernels import bergman_kernel_c
    return disc_inner_product(f, lambda z: bergman_kernel_c(n, z, w), Nr, Ntheta)
