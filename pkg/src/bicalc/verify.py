"""Self-verification suites behind ``bicalc verify``.

Each suite returns a :class:`SuiteResult` made of named checks.  Exact
identities are compared as exact polynomials/numbers; only quadrature,
exponentials and finite differences use tolerances.  A ``tol`` passed to
:func:`run_suites` replaces every float tolerance.
"""
from __future__ import annotations

import cmath
import random
import time
from dataclasses import dataclass, field
from math import factorial, pi, sqrt
from typing import Callable, Dict, List, Optional

import numpy as np

from . import core
from .core import E1, Bicomplex, euclidean_norm, finsler_pow4, modulus_sq
from .hermite import (
    generating_closed_form, generating_sum, hermite_eval_split,
    hermite_first, hermite_second_rodrigues, second_kind_discrepancies,
)
from .kernels import (
    bergman_kernel_bc, bergman_kernel_bc_direct, bergman_kernel_c,
    fock_kernel_bc, fock_kernel_bc_split, fock_kernel_c,
)
from .polynomial import (
    BCPolynomial, Z, Zb, Zd, Zs, eval_poly, landau_A, landau_B, landau_star,
    multiorder, rodrigues,
)
from .quadrature import bergman_reproduce, fock_reproduce, gram_matrix
from .sampling import random_ball_bicomplex, random_exact_bicomplex, random_polynomial, random_rational

SUITES = ("algebra", "calculus", "appell", "rodrigues", "landau", "genfun",
          "orthogonality", "kernels", "second-kind")
VARIANTS = ("bar", "star", "dagger")
WRT = ("Z", "Zb", "Zs", "Zd")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: List[Check] = field(default_factory=list)
    seconds: float = 0.0
    extra: Dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), detail))

    def to_json(self):
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }
        out.update(self.extra)
        return out


# independent oracles

def cartesian_product(x, y):
    """Product of ``x1 + i x2 + j x3 + k x4`` tuples from the multiplication table."""
    x1, x2, x3, x4 = x
    y1, y2, y3, y4 = y
    return (x1 * y1 - x2 * y2 - x3 * y3 + x4 * y4,
            x1 * y2 + x2 * y1 - x3 * y4 - x4 * y3,
            x1 * y3 + x3 * y1 - x2 * y4 - x4 * y2,
            x1 * y4 + x4 * y1 + x2 * y3 + x3 * y2)


def numeric_wirtinger(P, Zpt: Bicomplex, wrt: str, h: float = 1e-5) -> Bicomplex:
    """Central-difference Wirtinger derivative of ``Z -> P(Z)`` in the idempotent coordinates.

    ``P`` is anything callable on a float :class:`Bicomplex`, such as a
    polynomial or an exp-polynomial.
    """
    l = [complex(Zpt.l1), complex(Zpt.l2)]

    def f(comp, slot, delta):
        pt = list(l)
        pt[slot] += delta
        v = P(Bicomplex(pt[0], pt[1]))
        return complex(v.l1 if comp == 0 else v.l2)

    def d(comp, slot, conj):
        dx = (f(comp, slot, h) - f(comp, slot, -h)) / (2 * h)
        dy = (f(comp, slot, 1j * h) - f(comp, slot, -1j * h)) / (2 * h)
        return (dx + 1j * dy) / 2 if conj else (dx - 1j * dy) / 2

    # (e1 slot, conj?), (e2 slot, conj?) for each operator
    table = {
        "Z": ((0, False), (1, False)),
        "Zb": ((1, True), (0, True)),
        "Zs": ((0, True), (1, True)),
        "Zd": ((1, False), (0, False)),
    }
    (s1, c1), (s2, c2) = table[wrt]
    return Bicomplex(d(0, s1, c1), d(1, s2, c2))


def _rel(a: Bicomplex, b: Bicomplex) -> float:
    nb = euclidean_norm(b)
    return euclidean_norm(a - b) / (nb if nb else 1.0)


# suites

def suite_algebra(tol=None, **_) -> SuiteResult:
    r = SuiteResult("algebra")
    rng = random.Random(20240101)
    carts = [tuple(random_rational(rng) for _ in range(4)) for _ in range(2000)]
    xs, ys = carts[::2], carts[1::2]
    pairs = [(Bicomplex.from_cartesian(*x), Bicomplex.from_cartesian(*y)) for x, y in zip(xs, ys)]
    r.add("componentwise product = Cartesian product (1000 exact pairs)",
          all(A * B == Bicomplex.from_cartesian(*cartesian_product(x, y))
              for (A, B), x, y in zip(pairs, xs, ys)))
    sub = pairs[:250]  # 1000 pairs for the product table, 250 for the remaining identities
    r.add("Cartesian round trip exact",
          all(A.to_cartesian() == x for (A, _), x in zip(sub, xs)))

    def table_ok(A, x):
        x1, x2, x3, x4 = x
        return (A.bar() == Bicomplex.from_cartesian(x1, -x2, x3, -x4)
                and A.dagger() == Bicomplex.from_cartesian(x1, x2, -x3, -x4)
                and A.star() == Bicomplex.from_cartesian(x1, -x2, -x3, x4))
    r.add("conjugation table (Cartesian sign pattern vs idempotent swap/conjugate)",
          all(table_ok(A, x) for (A, _), x in zip(sub, xs)))
    r.add("conjugations are involutions",
          all(A.bar().bar() == A and A.star().star() == A and A.dagger().dagger() == A
              for A, _ in sub))
    r.add("any two conjugations compose to the third",
          all(A.dagger().bar() == A.star() and A.star().bar() == A.dagger()
              and A.star().dagger() == A.bar() for A, _ in sub))

    def moduli_ok(A):
        l1, l2 = A.l1, A.l2
        mi, mj, mk = modulus_sq(A, "i"), modulus_sq(A, "j"), modulus_sq(A, "k")
        return (mi == A * A.dagger() and mi.l1 == mi.l2 == l1 * l2
                and mj == A * A.bar() and mj == Bicomplex(l1 * l2.conjugate(), l1.conjugate() * l2)
                and mk == A * A.star() and mk == Bicomplex(l1.abs_sq(), l2.abs_sq()))
    r.add("moduli lemma (exact)", all(moduli_ok(A) for A, _ in sub))
    r.add("|Z|_i^2 = z1^2 + z2^2 (Cartesian form)",
          all(modulus_sq(A, "i") == Bicomplex.lift(A.z1 * A.z1 + A.z2 * A.z2) for A, _ in sub))

    def finsler_ok(A):
        prod = A * A.bar() * A.star() * A.dagger()
        f = finsler_pow4(A)
        return prod.l1 == prod.l2 == f and f == A.l1.abs_sq() * A.l2.abs_sq()
    r.add("Finsler factorization |Z|_F^4 = |l1|^2 |l2|^2 (exact)", all(finsler_ok(A) for A, _ in sub))

    t = tol if tol is not None else 1e-15
    err = abs(euclidean_norm(E1) - 1 / sqrt(2))
    r.add("||e1|| = 1/sqrt(2)", err <= t, f"err={err:.3e}")
    err = abs(euclidean_norm(E1 * E1) - sqrt(2) * euclidean_norm(E1) ** 2)
    r.add("norm inequality sharp at e1", err <= t, f"err={err:.3e}")
    r.add("||ZW|| <= sqrt(2) ||Z|| ||W||",
          all(euclidean_norm(A * B) <= sqrt(2) * euclidean_norm(A) * euclidean_norm(B) * (1 + 1e-15)
              for A, B in sub))
    r.add("inverse: Z Z^-1 = 1 (exact)",
          all(A * core.inverse(A) == core.ONE for A, _ in sub if not A.is_zero_divisor()))
    hn_ok = True
    for A, B in sub[:100]:
        hab, ha, hb = core.hyperbolic_norm(A * B), core.hyperbolic_norm(A), core.hyperbolic_norm(B)
        hn_ok &= abs(hab.s - ha.s * hb.s) <= 1e-9 and abs(hab.t - ha.t * hb.t) <= 1e-9
    r.add("hyperbolic norm multiplicative", hn_ok)
    return r


def suite_calculus(tol=None, max_degree=None, **_) -> SuiteResult:
    r = SuiteResult("calculus")
    deg = max_degree if max_degree is not None else 6
    rng = random.Random(7)
    polys = [random_polynomial(rng, deg, 5) for _ in range(30)]
    leib = lin = comm = True
    for P, Q in zip(polys[::2], polys[1::2]):
        c = random_exact_bicomplex(rng)
        for w in WRT:
            leib &= (P * Q).diff(w) == P.diff(w) * Q + P * Q.diff(w)
            lin &= (P.scale(c) + Q).diff(w) == P.diff(w).scale(c) + Q.diff(w)
            for v in WRT:
                comm &= P.diff(w).diff(v) == P.diff(v).diff(w)
    r.add(f"Leibniz rule (exact, degree <= {deg})", leib)
    r.add("linearity (exact)", lin)
    r.add("derivatives commute (exact)", comm)

    t = tol if tol is not None else 1e-6
    nrng = np.random.default_rng(11)
    worst = 0.0
    for i in range(20):
        P = random_polynomial(rng, min(deg, 6), 6, exact=False, touch_all=True)
        pt = random_ball_bicomplex(nrng, 1.0)
        for w in WRT:
            worst = max(worst, _rel(numeric_wirtinger(P, pt, w), eval_poly(P.diff(w), pt)))
    r.add("formal derivatives match finite differences (20 points)", worst <= t, f"max rel err={worst:.3e}")

    ok = all(((Z * Zb) ** k).diff("Zb") == (Z * (Z * Zb) ** (k - 1)).scale(k) for k in range(1, 6))
    r.add("d/dZbar (Z Zbar)^k = k Z (Z Zbar)^(k-1), k <= 5", ok)
    F = Z * Zb * Zs * Zd
    r.add("Finsler-norm partials", F.diff("Z") == Zb * Zs * Zd and F.diff("Zb") == Z * Zs * Zd
          and F.diff("Zs") == Z * Zb * Zd and F.diff("Zd") == Z * Zb * Zs)

    diag_ok = True
    for _ in range(10):
        P = BCPolynomial({e: c for e, c in random_polynomial(rng, deg, 5).items()
                          if e[1] == 0 and e[3] == 0})
        z = core.QComplex(rng.randint(-5, 5), rng.randint(-5, 5))
        coeffs = {e: c for e, c in P.items()}
        # classical C-R value g(z, zbar) with complex coefficients
        for e, c in coeffs.items():
            coeffs[e] = Bicomplex.lift(c.l1)
        Pc = BCPolynomial(coeffs)
        g = sum((c.l1 * z ** e[0] * z.conjugate() ** e[2] for e, c in Pc.items()), core.QComplex(0))
        diag_ok &= eval_poly(Pc, Bicomplex(z, z)) == Bicomplex(g, g)
    r.add("diagonal embedding recovers complex C-R evaluation", diag_ok)

    fac = all(landau_star(P) == landau_B(landau_A(P)) for P in polys)
    r.add("Landau factorization G* = B A (exact)", fac)
    return r


def suite_appell(max_degree=None, **_) -> SuiteResult:
    r = SuiteResult("appell")
    top = max_degree if max_degree is not None else 10
    for v in VARIANTS:
        conj = {"bar": "Zb", "star": "Zs", "dagger": "Zd"}[v]
        ok = True
        for m in range(top + 1):
            for n in range(top + 1):
                H = hermite_first(v, m, n)
                dz = H.diff("Z")
                dc = H.diff(conj)
                ok &= dz == (hermite_first(v, m - 1, n).scale(m) if m else BCPolynomial())
                ok &= dc == (hermite_first(v, m, n - 1).scale(n) if n else BCPolynomial())
        r.add(f"Appell identities, {v} variant, m,n <= {top}", ok)
    return r


def suite_rodrigues(max_degree=None, **_) -> SuiteResult:
    r = SuiteResult("rodrigues")
    top = max_degree if max_degree is not None else 8
    for v in VARIANTS:
        ok = order_ok = True
        for m in range(top + 1):
            for n in range(top + 1):
                R = rodrigues(m, n, v)
                ok &= R == hermite_first(v, m, n)
                order_ok &= R == rodrigues(m, n, v, z_first=False)
        r.add(f"Rodrigues = defining sum, {v} variant, m,n <= {top}", ok)
        r.add(f"Rodrigues independent of derivative order, {v}", order_ok)
    rng = random.Random(3)
    split_ok = True
    for _ in range(200):
        m, n = rng.randint(0, 5), rng.randint(0, 5)
        A = random_exact_bicomplex(rng, 3, 3)
        split_ok &= eval_poly(hermite_first("star", m, n), A) == hermite_eval_split(m, n, A)
    r.add("split evaluation = polynomial evaluation (200 exact samples)", split_ok)
    return r


def suite_landau(max_degree=None, **_) -> SuiteResult:
    r = SuiteResult("landau")
    top = max_degree if max_degree is not None else 8
    eig = mo = True
    for m in range(top + 1):
        for n in range(top + 1):
            H = hermite_first("star", m, n)
            eig &= landau_star(H) == H.scale(n)
            mo &= multiorder(H) == (1, n + 1, 1)
    r.add(f"G* H_mn = n H_mn, m,n <= {top}", eig)
    r.add(f"multiorder(H_mn(Z,Z*)) = (1, n+1, 1), m,n <= {top}", mo)
    return r


def suite_genfun(tol=None, **_) -> SuiteResult:
    r = SuiteResult("genfun")
    t_abs = tol if tol is not None else 1e-10
    t_hyp = tol if tol is not None else 1e-12
    rng = np.random.default_rng(5)
    samples = [tuple(random_ball_bicomplex(rng) for _ in range(3)) for _ in range(50)]
    M = 25
    for v in VARIANTS:
        worst = max(euclidean_norm(generating_sum(v, U, V, Zp, M) - generating_closed_form(v, U, V, Zp))
                    for U, V, Zp in samples)
        r.add(f"generating sum M={M} vs exp, {v} variant (50 samples)", worst <= t_abs,
              f"max abs err={worst:.3e}")
    worst = max(max(abs(S.l1.imag), abs(S.l2.imag))
                for S in (generating_sum("star", U, U.star(), Zp, M) for U, _, Zp in samples))
    r.add("V = U* gives a hyperbolic value", worst <= t_hyp, f"max |imag|={worst:.3e}")
    return r


def suite_orthogonality(tol=None, max_degree=None, **_) -> SuiteResult:
    r = SuiteResult("orthogonality")
    top = max_degree if max_degree is not None else 4
    t_rel = tol if tol is not None else 1e-8
    t_off = tol if tol is not None else 1e-10
    pairs, G1, G2 = gram_matrix(top, top, 32)
    expect = np.array([factorial(m) * factorial(n) for m, n in pairs], dtype=float)
    diag = max(np.max(np.abs(np.diag(G) - expect) / expect) for G in (G1, G2))
    off = max(np.max(np.abs(G - np.diag(np.diag(G)))) for G in (G1, G2))
    r.add(f"Gram diagonal = m! n! (m,n <= {top}, N=32)", diag <= t_rel, f"max rel err={diag:.3e}")
    r.add("Gram off-diagonal vanishes", off <= t_off, f"max abs={off:.3e}")
    return r


def suite_kernels(tol=None, **_) -> SuiteResult:
    r = SuiteResult("kernels")
    rng = np.random.default_rng(9)
    t_split = tol if tol is not None else 1e-12
    t_rep = tol if tol is not None else 1e-6
    pts = [complex(*rng.uniform(-1.5, 1.5, 2)) for _ in range(40)]
    ok = all(abs(fock_kernel_c(1, z, w) - cmath.exp(z * w.conjugate())) <= 1e-15 * abs(cmath.exp(z * w.conjugate()))
             for z, w in zip(pts[::2], pts[1::2]))
    r.add("K_1(z,w) = exp(z conj w)", ok)
    disc = [complex(*rng.uniform(-0.6, 0.6, 2)) for _ in range(40)]
    ok = all(abs(bergman_kernel_c(1, z, w) - 1 / (pi * (1 - w.conjugate() * z) ** 2)) <= 1e-15 * abs(bergman_kernel_c(1, z, w))
             for z, w in zip(disc[::2], disc[1::2]))
    r.add("B_1(z,w) = 1/(pi (1 - conj(w) z)^2)", ok)

    worst_f = worst_b = 0.0
    for _ in range(100):
        Zp, Wp = random_ball_bicomplex(rng, 1.0), random_ball_bicomplex(rng, 1.0)
        Zk = Bicomplex(0.7 * complex(*rng.uniform(-1, 1, 2)) / sqrt(2), 0.7 * complex(*rng.uniform(-1, 1, 2)) / sqrt(2))
        Wk = Bicomplex(0.7 * complex(*rng.uniform(-1, 1, 2)) / sqrt(2), 0.7 * complex(*rng.uniform(-1, 1, 2)) / sqrt(2))
        for n in range(1, 5):
            worst_f = max(worst_f, _rel(fock_kernel_bc(n, Zp, Wp), fock_kernel_bc_split(n, Zp, Wp)))
            worst_b = max(worst_b, _rel(bergman_kernel_bc_direct(n, Zk, Wk), bergman_kernel_bc(n, Zk, Wk)))
    r.add("bicomplex Fock kernel split identity (n <= 4)", worst_f <= t_split, f"max rel err={worst_f:.3e}")
    r.add("bicomplex Bergman kernel split identity (n <= 4)", worst_b <= t_split, f"max rel err={worst_b:.3e}")

    worst = 0.0
    anchors = [0.3 + 0.4j, -1.0 + 0.5j, 0.9 - 1.1j]
    for n in range(1, 4):
        for j in range(4):
            for k in range(n):
                for w in anchors:
                    got = fock_reproduce(lambda z: z ** j * np.conj(z) ** k, n, w, N=64)
                    worst = max(worst, abs(got - w ** j * w.conjugate() ** k))
    r.add("Fock reproducing property (n <= 3, z^j zbar^k, k < n)", worst <= t_rep, f"max abs err={worst:.3e}")

    worst = 0.0
    for j in range(5):
        for w in (0.2 + 0.1j, -0.4 + 0.3j, 0.5j):
            got = bergman_reproduce(lambda z: z ** j, 1, w)
            worst = max(worst, abs(got - w ** j))
    r.add("Bergman reproducing property (analytic z^j, j <= 4)", worst <= t_rep, f"max abs err={worst:.3e}")

    herm = all(abs(fock_kernel_c(n, z, w) - np.conj(fock_kernel_c(n, w, z))) <= 1e-12 * abs(fock_kernel_c(n, z, w))
               for n in range(1, 5) for z, w in zip(pts[::2], pts[1::2]))
    r.add("Hermitian symmetry of K_n", herm)
    pos = all(fock_kernel_c(n, w, w).real > 0 and bergman_kernel_c(n, v, v).real > 0
              for n in range(1, 5) for w, v in zip(pts, disc))
    r.add("positivity on the diagonal", pos)
    return r


def suite_second_kind(**_) -> SuiteResult:
    r = SuiteResult("second-kind")
    r.add("H_{0,0,0,0} = 1", hermite_second_rodrigues(0, 0, 0, 0) == BCPolynomial.constant(1))
    r.add("H_{0,0,0,1} = Z Zbar Z*", hermite_second_rodrigues(0, 0, 0, 1) == Z * Zb * Zs)
    r.add("H_{1,0,0,0} = Z Z* Zdag", hermite_second_rodrigues(1, 0, 0, 0) == Z * Zs * Zd)
    report = second_kind_discrepancies(2)
    r.add("closed form compared for all orders <= 2", len(report) == 81)
    entry = next(e for e in report if e["order"] == [0, 0, 0, 1])
    r.add("report records the (0,0,0,1) sign disagreement", entry["equal"] is False,
          f"closed form: {entry['closed_form']}")
    agree = sum(e["equal"] for e in report)
    r.extra["discrepancy_report"] = report
    r.extra["agreements"] = agree
    return r


_RUNNERS: Dict[str, Callable[..., SuiteResult]] = {
    "algebra": suite_algebra,
    "calculus": suite_calculus,
    "appell": suite_appell,
    "rodrigues": suite_rodrigues,
    "landau": suite_landau,
    "genfun": suite_genfun,
    "orthogonality": suite_orthogonality,
    "kernels": suite_kernels,
    "second-kind": suite_second_kind,
}


def run_suites(names=("all",), max_degree: Optional[int] = None, tol: Optional[float] = None):
    """Run the named suites (``"all"`` expands to every suite) and return results in order."""
    names = list(SUITES) if "all" in names else list(names)
    results = []
    for name in names:
        if name not in _RUNNERS:
            raise ValueError(f"unknown suite {name!r}")
        t0 = time.perf_counter()
        res = _RUNNERS[name](tol=tol, max_degree=max_degree)
        res.seconds = time.perf_counter() - t0
        results.append(res)
    return results
