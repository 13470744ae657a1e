"""The 1/N^2 expansion of Wishart and inverse Wishart trace cumulants.

Every coefficient is an exact rational function of c = M/N, produced two
independent ways: from Hurwitz counts and from the Weingarten oracle.
"""

from fractions import Fraction

from hwz.cumulants import (
    scaled_cumulant_hurwitz,
    scaled_cumulant_oracle,
    time_delay_coefficients,
)

print("E tr W (Wishart) and E tr W^-1 (inverse), symbolic in c:")
print("  wishart :", scaled_cumulant_hurwitz((1,), False, 2).coeffs[0])
print("  inverse :", scaled_cumulant_hurwitz((1,), True, 2).coeffs[0])

print("\nE tr W^-2: genus coefficients, then specialized at c = 2")
series = scaled_cumulant_hurwitz((2,), True, gmax=4)
for g, f in enumerate(series.coeffs):
    print(f"  g={g}: {f}   at c=2 -> {f(Fraction(2))}")
print("  (sums to 2N^2/(N^2-1): every coefficient is 2 at c = 2)")

print("\nthird cumulant of (tr W^-1)^3, leading order:")
print(" ", scaled_cumulant_hurwitz((1, 1, 1), True, gmax=0).coeffs[0])

print("\nboth routes agree exactly, e.g. mu = (2,1), inverse, g <= 2:")
a = scaled_cumulant_hurwitz((2, 1), True, 2)
b = scaled_cumulant_oracle((2, 1), True, 2)
print("  match:", a.coeffs == b.coeffs)

print("\ntime-delay coefficients c_2g(mu) are nonnegative integers:")
for mu in ((2,), (1, 1), (3,), (2, 1), (1, 1, 1)):
    print(f"  mu={mu}: {time_delay_coefficients(mu, gmax=3)}")
