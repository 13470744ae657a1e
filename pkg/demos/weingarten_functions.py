"""The unitary Weingarten function, exactly.

Wg_{n,z} is the convolution inverse of Omega_{n,z}(sigma) = z^#sigma in the
group algebra of S_n.  Its 1/z expansion is a signed count of monotone
transposition factorizations.
"""

from hwz.weingarten import omega, omega_via_jm, wg, wg_pole_locations, wg_series

n = 3
print(f"Wg for n = {n}, by conjugacy class:")
for lam, val in wg(n).values.items():
    print(f"  class {lam}: {val}")

print("\nOmega factors through Jucys-Murphy elements (z+J_1)...(z+J_n):")
print("  omega_via_jm == omega:", omega_via_jm(n) == omega(n))

print("\nmonotone-series coefficients of Wg on the class (3):")
series = wg_series(n, 5)[(3,)]
for k in sorted(series.coeffs, reverse=True):
    print(f"  z^{k}: {series[k]}")

print("\npoles of Wg are integers in (-(n-1), ..., n-1):")
for m in (2, 3, 4):
    print(f"  n={m}: {sorted(wg_pole_locations(m))}")
