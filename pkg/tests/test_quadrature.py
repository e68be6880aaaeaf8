from math import factorial, gamma, pi, sqrt

import numpy as np
import pytest

from bicalc import Bicomplex, NotSplitCompatible, Z, Zb, Zs
from bicalc.hermite import complex_hermite, hermite_first
from bicalc.quadrature import (
    QuadratureRule, bergman_reproduce, disc_inner_product, disc_rule, fock_reproduce,
    full_inner_product, gauss_hermite_nodes, gaussian_inner_product_c, gaussian_plane_rule,
    gram_matrix, nodes_for_degree, split_inner_product,
)


def test_gauss_hermite_small_rules():
    r = gauss_hermite_nodes(1)
    assert r.nodes == pytest.approx([0.0], abs=1e-15)
    assert r.weights == pytest.approx([sqrt(pi)], rel=1e-15)
    r = gauss_hermite_nodes(2)
    assert sorted(r.nodes) == pytest.approx([-1 / sqrt(2), 1 / sqrt(2)], rel=1e-15)
    assert r.weights == pytest.approx([sqrt(pi) / 2] * 2, rel=1e-15)
    with pytest.raises(ValueError):
        gauss_hermite_nodes(0)


def test_gauss_hermite_moment_oracle():
    # int t^(2k) e^(-t^2) dt = Gamma(k + 1/2); an 8-point rule is exact to degree 15
    r = gauss_hermite_nodes(8)
    for k in range(8):
        assert np.sum(r.weights * r.nodes ** (2 * k)) == pytest.approx(gamma(k + 0.5), rel=1e-13)
    assert abs(np.sum(r.weights * r.nodes ** 7)) < 1e-12


def test_rule_validation():
    with pytest.raises(ValueError):
        QuadratureRule("x", np.zeros(1), np.array([-1.0]))
    with pytest.raises(ValueError):
        QuadratureRule("x", np.zeros(1), np.array([1.0]), normalization="unit")


def test_gaussian_inner_products():
    assert gaussian_inner_product_c(1, 1) == pytest.approx(1, rel=1e-14)
    assert gaussian_inner_product_c(1, 1, normalization="raw") == pytest.approx(pi, rel=1e-14)
    h21 = lambda z: complex_hermite(2, 1, z)
    assert gaussian_inner_product_c(h21, h21) == pytest.approx(2, rel=1e-8)
    h10 = lambda z: complex_hermite(1, 0, z)
    h01 = lambda z: complex_hermite(0, 1, z)
    assert abs(gaussian_inner_product_c(h10, h01)) < 1e-10


def test_complex_hermite_orthogonality():
    idx = [(m, n) for m in range(4) for n in range(4)]
    for a in idx:
        for b in idx:
            v = gaussian_inner_product_c(lambda z: complex_hermite(*a, z), lambda z: complex_hermite(*b, z))
            want = factorial(a[0]) * factorial(a[1]) if a == b else 0
            assert abs(v - want) < 1e-9 * max(1, want)


def test_split_inner_product_examples():
    H10, H01, H22 = (hermite_first("star", m, n) for m, n in ((1, 0), (0, 1), (2, 2)))
    v = split_inner_product(H10, H10)
    assert abs(v.l1 - 1) < 1e-12 and abs(v.l2 - 1) < 1e-12
    v = split_inner_product(H22, H22)
    assert abs(v.l1 - 4) <= 4e-8 and abs(v.l2 - 4) <= 4e-8
    v = split_inner_product(H10, H01)
    assert abs(v.l1) < 1e-10 and abs(v.l2) < 1e-10
    with pytest.raises(NotSplitCompatible):
        split_inner_product(Zb, Z)


def test_split_inner_product_separates_components():
    c = Bicomplex(2.0, 3.0j)
    v = split_inner_product(Z.scale(c), Z)
    assert abs(v.l1 - 2) < 1e-12 and abs(v.l2 - 3j) < 1e-12
    v = split_inner_product(lambda lam: (lam, 2 * lam), lambda lam: lam)
    assert abs(v.l1 - 1) < 1e-12 and abs(v.l2 - 2) < 1e-12


def test_full_inner_product_examples():
    v = full_inner_product(1, 1)
    assert abs(v.l1 - 1) < 1e-12 and abs(v.l2 - 1) < 1e-12
    v = full_inner_product(lambda a, b: a, lambda a, b: a)
    assert abs(v.l1 - 1) < 1e-10
    v = full_inner_product(lambda a, b: a, lambda a, b: b)
    assert abs(v.l1) < 1e-10
    # polynomial integrand: |Z|_k^2 has e1 component |l1|^2, mean 1
    v = full_inner_product(Z * Zs, 1)
    assert abs(v.l1 - 1) < 1e-10 and abs(v.l2 - 1) < 1e-10


def test_disc_inner_products():
    assert disc_inner_product(1, 1) == pytest.approx(pi, abs=1e-12)
    assert disc_inner_product(lambda z: z, lambda z: z) == pytest.approx(pi / 2, abs=1e-12)
    assert abs(disc_inner_product(lambda z: z, lambda z: z ** 2)) < 1e-12
    for k in range(5):
        got = disc_inner_product(lambda z: z ** k, lambda z: z ** k)
        assert got == pytest.approx(pi / (k + 1), rel=1e-12)
    r = disc_rule(8, 16)
    assert r.nodes.shape == (128,) and np.all(np.abs(r.nodes) < 1)


def test_plane_rule_normalization():
    raw = gaussian_plane_rule(4, "raw")
    normed = gaussian_plane_rule(4)
    assert np.sum(raw.weights) == pytest.approx(pi)
    assert np.sum(normed.weights) == pytest.approx(1)


def test_gram_matrix_shape_and_values():
    pairs, G1, G2 = gram_matrix(2, 2, 16)
    assert pairs[:3] == [(0, 0), (0, 1), (1, 0)]
    assert G1.shape == (9, 9)
    want = np.diag([factorial(m) * factorial(n) for m, n in pairs])
    assert np.allclose(G1, want, atol=1e-10) and np.allclose(G2, want, atol=1e-10)
    with pytest.raises(NotSplitCompatible):
        gram_matrix(1, 1, 8, variant="bar")


def test_nodes_for_degree_is_exact():
    d = 12
    N = nodes_for_degree(d)
    H = hermite_first("star", 3, 3)
    v = split_inner_product(H, H, N=N)
    assert abs(v.l1 - 36) < 1e-9


def test_reproducing_properties():
    w = 0.7 - 0.4j
    assert fock_reproduce(lambda z: z ** 3, 1, w) == pytest.approx(w ** 3, abs=1e-10)
    # z conj(z) is 2-analytic: reproduced by K_2 but not by K_1
    f = lambda z: z * np.conj(z)
    assert fock_reproduce(f, 2, w) == pytest.approx(abs(w) ** 2, abs=1e-10)
    assert abs(fock_reproduce(f, 1, w) - abs(w) ** 2) > 0.1
    assert bergman_reproduce(lambda z: z ** 2, 1, 0.3j) == pytest.approx((0.3j) ** 2, abs=1e-10)
    g = lambda z: np.conj(z) * z
    assert bergman_reproduce(g, 2, 0.2 + 0.1j) == pytest.approx(0.05, abs=1e-8)


def test_fock_reproduction_stable_up_to_radius_one_and_a_half():
    # N=64 against N=96 and against the exact value, on the edge of the anchor range
    for n in (1, 2, 3):
        for j in range(5):
            for k in range(n):
                f = lambda z: z ** j * np.conj(z) ** k
                for w in (1.5, 1.5j, -1.06 - 1.06j):
                    a, b = fock_reproduce(f, n, w, N=64), fock_reproduce(f, n, w, N=96)
                    assert abs(a - b) < 1e-10
                    assert abs(a - w ** j * np.conj(w) ** k) < 1e-6
