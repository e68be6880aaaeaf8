# Hermite-Ito polynomials in the bicomplex setting.
from bicalc import (hermite_first, rodrigues, landau_star, multiorder, star_decompose,
                    format_expr, parse_expr, wirtinger_derivative)

for v in ("bar", "star", "dagger"):
    print(v, "H_22 =", format_expr(hermite_first(v, 2, 2)))

# the same polynomial from the Rodrigues formula with weight exp(-Z Z*)
print("Rodrigues H_22 =", format_expr(rodrigues(2, 2, "star")))

# Appell: d/dZ lowers m, d/dZ* lowers n
H = hermite_first("star", 3, 2)
print("d_Z H_32  =", format_expr(wirtinger_derivative(H, "Z")))
print("3 H_22    =", format_expr(hermite_first("star", 2, 2) * 3))

# eigenfunctions of the Landau operator
for n in range(4):
    H = hermite_first("star", 2, n)
    print(f"G* H_2{n} == {n} H_2{n}:", landau_star(H) == H * n, " multiorder", multiorder(H))

P = parse_expr("Z Zs^2 - 2 Z Zs + 3")
print("decompose:", [format_expr(f) for f in star_decompose(P)])
