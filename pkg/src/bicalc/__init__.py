"""Bicomplex algebra, bicomplex Wirtinger calculus, Hermite-Ito polynomials and kernels."""

from .core import (
    E1, E2, I, J, K, ONE, ZERO,
    Bicomplex, Hyperbolic, QComplex,
    bc_exp, conjugate, dplus_contains, euclidean_norm, finsler_pow4, from_cartesian,
    hyp_leq, hyperbolic_norm, inverse, modulus_sq, to_cartesian,
)
from .errors import (
    BicalcError, DomainViolation, ExactModeUnsupported, ExponentUnderflow,
    NotSplitCompatible, NotStarPolyanalytic, ParseError, ZeroDivisorError,
)
from .hermite import (
    generating_closed_form, generating_sum, hermite_eval_split, hermite_first,
    hermite_second_closed, hermite_second_rodrigues, second_kind_discrepancies,
)
from .kernels import bergman_kernel_bc, bergman_kernel_c, fock_kernel_bc, fock_kernel_c
from .parsing import format_bicomplex, format_expr, parse_bicomplex, parse_expr
from .polynomial import (
    BCPolynomial, ExpPolynomial, Z, Zb, Zd, Zs,
    conjugate_poly, eval_poly, exppoly_derivative, landau_star, laplacian,
    multiorder, rodrigues, star_decompose, wirtinger_derivative,
)
from .quadrature import (
    disc_inner_product, full_inner_product, gauss_hermite_nodes,
    gaussian_inner_product_c, split_inner_product,
)

__version__ = "0.1.0"
