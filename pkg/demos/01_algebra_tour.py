# A walk through bicomplex arithmetic in idempotent form.
from fractions import Fraction

from bicalc import (E1, E2, ONE, J, K, from_cartesian, inverse,
                    modulus_sq, finsler_pow4, euclidean_norm, hyperbolic_norm)

Z = from_cartesian(1, 2, -1, Fraction(1, 2))   # 1 + 2i - j + k/2
print("Z          =", Z)
print("idempotent =", Z.l1, Z.l2)

# multiplication is componentwise in (l1, l2)
W = ONE + J
print("(1+j)^2    =", W * W)
print("e1 e2      =", E1 * E2)
print("k^2        =", K * K)

# three conjugations
for name in ("bar", "star", "dagger"):
    print(f"{name:7s}    =", getattr(Z, name)())

# hyperbolic-valued moduli and the real Finsler norm
for v in "ijk":
    print(f"|Z|_{v}^2     =", modulus_sq(Z, v))
print("|Z|_F^4    =", finsler_pow4(Z))
print("||Z||      =", euclidean_norm(Z))
print("||Z||_D+   =", hyperbolic_norm(Z))

# zero divisors have no inverse
print("Z^-1 Z     =", inverse(Z) * Z)
try:
    inverse(E1)
except ZeroDivisionError as exc:
    print("inverse(e1):", exc)
