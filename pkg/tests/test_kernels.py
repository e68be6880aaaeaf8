import cmath
from math import factorial, pi

import numpy as np
import pytest

from bicalc import DomainViolation, E1, E2, Bicomplex, bc_exp
from bicalc.core import euclidean_norm
from bicalc.hermite import complex_hermite
from bicalc.kernels import (
    KernelSection, bergman_kernel_bc, bergman_kernel_bc_direct, bergman_kernel_c,
    fock_kernel_bc, fock_kernel_bc_split, fock_kernel_c,
)
from bicalc.sampling import random_ball_bicomplex


def fock_by_expansion(n, z, w, M=60):
    # orthonormal-basis oracle: sum_{j<n} sum_m H_mj(z) conj(H_mj(w)) / (m! j!)
    return sum(complex_hermite(m, j, z) * np.conj(complex_hermite(m, j, w)) / (factorial(m) * factorial(j))
               for j in range(n) for m in range(M))


def test_fock_examples():
    z, w = 0.4 - 0.3j, -0.2 + 0.9j
    assert fock_kernel_c(1, z, w) == pytest.approx(cmath.exp(z * w.conjugate()), rel=1e-15)
    two = cmath.exp(z * w.conjugate()) * (2 - abs(z - w) ** 2)
    assert fock_kernel_c(2, z, w) == pytest.approx(two, rel=1e-14)
    for n in range(1, 6):
        assert fock_kernel_c(n, w, w) == pytest.approx(n * np.exp(abs(w) ** 2), rel=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fock_matches_hermite_expansion(n):
    rng = np.random.default_rng(n)
    for _ in range(5):
        z, w = (complex(*rng.uniform(-0.8, 0.8, 2)) for _ in range(2))
        assert fock_kernel_c(n, z, w) == pytest.approx(fock_by_expansion(n, z, w), rel=1e-11)


def test_fock_vectorized():
    z = np.linspace(-1, 1, 7) + 0.5j
    out = fock_kernel_c(3, z, 0.2)
    assert out.shape == z.shape
    assert out[2] == pytest.approx(fock_kernel_c(3, complex(z[2]), 0.2))


def test_bergman_examples():
    z, w = 0.3 + 0.2j, -0.5j
    assert bergman_kernel_c(1, z, w) == pytest.approx(1 / (pi * (1 - w.conjugate() * z) ** 2), rel=1e-15)
    for n in range(1, 6):
        assert bergman_kernel_c(n, 0, 0) == pytest.approx(n ** 2 / pi, rel=1e-15)
    with pytest.raises(DomainViolation):
        bergman_kernel_c(1, 1.0, 0)
    with pytest.raises(DomainViolation):
        bergman_kernel_c(2, 0, 1.5j)


def test_kernel_order_validation():
    for bad in (0, -1, 1.5):
        with pytest.raises(ValueError):
            fock_kernel_c(bad, 0, 0)


def test_hermitian_and_positive():
    rng = np.random.default_rng(0)
    for n in (1, 2, 4):
        for _ in range(10):
            z, w = (complex(*rng.uniform(-0.6, 0.6, 2)) for _ in range(2))
            assert fock_kernel_c(n, z, w) == pytest.approx(np.conj(fock_kernel_c(n, w, z)), rel=1e-13)
            assert bergman_kernel_c(n, z, w) == pytest.approx(np.conj(bergman_kernel_c(n, w, z)), rel=1e-13)
            assert fock_kernel_c(n, z, z).real > 0 and bergman_kernel_c(n, z, z).real > 0


def test_bicomplex_fock_examples():
    rng = np.random.default_rng(1)
    Z, W = random_ball_bicomplex(rng), random_ball_bicomplex(rng)
    assert euclidean_norm(fock_kernel_bc(1, Z, W) - bc_exp(Z * W.star())) < 1e-15
    for n in range(1, 5):
        K0 = fock_kernel_bc(n, Bicomplex(0.0, 0.0), Bicomplex(0.0, 0.0))
        assert K0 == Bicomplex(float(n), float(n))


def test_bicomplex_split_identities_100():
    rng = np.random.default_rng(2)
    for _ in range(100):
        Z, W = random_ball_bicomplex(rng), random_ball_bicomplex(rng)
        Zb, Wb = Bicomplex(0.6 * Z.l1, 0.6 * Z.l2), Bicomplex(0.6 * W.l1, 0.6 * W.l2)
        for n in range(1, 5):
            S = fock_kernel_bc_split(n, Z, W)
            assert euclidean_norm(fock_kernel_bc(n, Z, W) - S) <= 1e-12 * euclidean_norm(S)
            B = bergman_kernel_bc(n, Zb, Wb)
            assert euclidean_norm(bergman_kernel_bc_direct(n, Zb, Wb) - B) <= 1e-12 * euclidean_norm(B)


def test_bicomplex_bergman_examples():
    Z, W = Bicomplex(0.2 + 0.1j, -0.3j), Bicomplex(0.4, 0.1 - 0.2j)
    B1 = bergman_kernel_bc(1, Z, W)
    one = Bicomplex(1.0, 1.0)
    direct = (one / ((one - W.star() * Z) ** 2)) * (1 / pi)
    assert euclidean_norm(B1 - direct) < 1e-14
    for n in range(1, 5):
        B0 = bergman_kernel_bc(n, Bicomplex(0.0, 0.0), Bicomplex(0.0, 0.0))
        assert euclidean_norm(B0 - Bicomplex(n * n / pi, n * n / pi)) < 1e-14
    with pytest.raises(DomainViolation):
        bergman_kernel_bc(1, E1 + 0.5 * E2, 2 * E1 + 0 * E2)
    with pytest.raises(DomainViolation):
        bergman_kernel_bc_direct(1, E1 + 0.5 * E2, 2 * E1 + 0 * E2)


def test_kernel_section():
    sec = KernelSection("fock", 2, 0.3 + 0.1j, realm="complex")
    assert sec(0.5) == pytest.approx(fock_kernel_c(2, 0.5, 0.3 + 0.1j))
    with pytest.raises(DomainViolation):
        KernelSection("bergman", 1, 1.2, realm="complex")
    with pytest.raises(ValueError):
        KernelSection("hardy", 1, 0)
