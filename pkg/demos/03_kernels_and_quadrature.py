# Reproducing kernels checked by quadrature.
import numpy as np

from bicalc import Bicomplex, fock_kernel_bc
from bicalc.kernels import fock_kernel_bc_split
from bicalc.quadrature import fock_reproduce, bergman_reproduce, gram_matrix

w = 0.6 - 0.3j
f = lambda z: z ** 2 * np.conj(z)          # polyanalytic of order 2
print("f(w)              =", f(w))
print("<f, K_2(., w)>    =", fock_reproduce(f, 2, w))
print("<f, K_1(., w)>    =", fock_reproduce(f, 1, w), "(order 1 misses it)")

g = lambda z: z ** 3
print("<g, B_1(., 0.4i)> =", bergman_reproduce(g, 1, 0.4j), "vs", (0.4j) ** 3)

Z, W = Bicomplex(0.3 + 0.1j, -0.2j), Bicomplex(0.5, 0.1 + 0.4j)
print("K_3 bicomplex     =", fock_kernel_bc(3, Z, W))
print("K_3 split         =", fock_kernel_bc_split(3, Z, W))

pairs, G1, G2 = gram_matrix(3, 3, 32)
np.set_printoptions(precision=3, suppress=True, linewidth=120)
print(pairs)
print(G1.real)
