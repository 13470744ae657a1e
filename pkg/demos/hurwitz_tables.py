"""Tables of monotone and strictly monotone double Hurwitz numbers.

H_g(mu, nu) counts tuples (alpha, tau_1, ..., tau_r) with alpha of cycle
type mu, the product alpha tau_1...tau_r of type nu, r = #mu + #nu + 2g - 2
transpositions whose larger entries increase weakly (monotone) or strictly,
and <alpha, tau_i> transitive.
"""

from hwz import HurwitzQuery, count_double_hurwitz

for kind in ("monotone", "strict"):
    print(f"\n{kind} double Hurwitz numbers, mu = (1,1,1), genus 0:")
    table = count_double_hurwitz(HurwitzQuery((1, 1, 1), None, 0, kind))
    for nu, count in table.items():
        print(f"  nu = {nu}: {count}")

print("\nH_g((2),(2)) for g = 0..5 (one monotone tuple at every genus):")
from hwz import hurwitz_number

print(" ", [hurwitz_number((2,), (2,), g) for g in range(6)])

print("\ngenus where strict counts die (r <= n-1), mu = nu = (3,1):")
from hwz.hurwitz import strict_genus_bound

print("  last possibly nonzero genus:", strict_genus_bound((3, 1), (3, 1)))
