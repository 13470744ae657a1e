"""Cumulants of traces of Wishart (W) and inverse Wishart (W^-1) matrices.

Two independent routes:

* the Hurwitz route: the 1/N^2 expansion with coefficients
  sum_nu (c-1)^-(n+2g-2+#mu+#nu) H_g(mu,nu)      (inverse, monotone counts)
  sum_nu c^(n-(2g-2+#mu+#nu)) H_g(mu,nu)          (Wishart, strict counts)

* the Weingarten oracle: exact expectations of products of matrix entries
  summed over S_n with weights Omega_{n,cN} (Wishart) or the Weingarten
  function at z = (1-c)N (inverse), combined into cumulants by Moebius
  inversion over set partitions of the trace factors.

Everything is exact: results are rational functions of c (and N), never
floats.  The scaled cumulant of mu is (|mu|!/z_mu) N^(2(#mu-1)) times the
plain cumulant of the normalized traces tr W^(mu_i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import LaurentSeries, Poly, RatFunc, poly_lcm, series_expand_at_infinity
from .hurwitz import _class_table, ResourceGuardError
from .symcore import (
    IntPartition,
    canonical_of_type,
    cycle_type_tuple,
    num_cycles,
    partition_list,
    partitions_of_set,
)
from .weingarten import wg

VAR_N = "N"
VAR_C = "c"

MAX_N_ORACLE = 7
MAX_BELL = 6


def c_poly(coeffs) -> RatFunc:
    return RatFunc(Poly(coeffs), var=VAR_C)


C = RatFunc.variable(VAR_C)
C_MINUS_1 = c_poly([-1, 1])


@dataclass(frozen=True)
class TraceMonomial:
    """prod_i tr W^(s * mu_i) with s = +1 (Wishart) or -1 (inverse)."""

    powers: tuple[int, ...]
    inverse: bool = False

    def __post_init__(self):
        if not self.powers or any(p < 1 for p in self.powers):
            raise ValueError("powers must be positive")

    @property
    def mu(self) -> tuple[int, ...]:
        return tuple(sorted(self.powers, reverse=True))


@dataclass(frozen=True)
class WishartParams:
    """Wishart parameters; c = M/N, alpha = M - N = (c-1)N.

    The inverse-moment formulas are valid for c > 1 + n/N; positive moments
    for c > 1 - 1/N.  Validity is metadata, not an arithmetic obstruction.
    """

    c: Fraction | None = None  # None means symbolic
    N: int | None = None

    def inverse_validity(self, n: int) -> str:
        return f"convergent for N > {n}/(c-1)"


@dataclass(frozen=True)
class CumulantSeries:
    """Truncated expansion sum_g N^(-2g) coeffs[g](c), coefficients exact.

    exact=True means every omitted coefficient is zero (the series
    terminates, as in the Wishart case).
    """

    coeffs: tuple[RatFunc, ...]
    exact: bool
    validity: str = ""

    @property
    def gmax(self) -> int:
        return len(self.coeffs) - 1

    def at_c(self, cval: Fraction) -> list[Fraction]:
        return [f(Fraction(cval)) for f in self.coeffs]

    def __eq__(self, other) -> bool:
        return isinstance(other, CumulantSeries) and self.coeffs == other.coeffs


# ---------------------------------------------------------------------------
# Hurwitz route
# ---------------------------------------------------------------------------


def scaled_cumulant_hurwitz(
    mu: tuple[int, ...], inverse: bool, gmax: int = 3
) -> CumulantSeries:
    """Scaled cumulant of tr W^(+-mu_i) from double Hurwitz numbers."""
    mu = tuple(sorted(mu, reverse=True))
    n, ell = sum(mu), len(mu)
    kind = "monotone" if inverse else "strict"
    rmax = ell + n + 2 * gmax - 2
    table = _class_table(mu, max(rmax, 0), kind)
    class_size = IntPartition(mu).class_size()
    coeffs = []
    for g in range(gmax + 1):
        acc = RatFunc(0, var=VAR_C)
        for nu in partition_list(n):
            r = ell + len(nu) + 2 * g - 2
            if r < 0:
                continue
            h = class_size * table.get(nu, (0,) * (r + 1))[r]
            if h == 0:
                continue
            if inverse:
                term = C_MINUS_1 ** (-(n + 2 * g - 2 + ell + len(nu)))
            else:
                term = C ** (n - (2 * g - 2 + ell + len(nu)))
            acc = acc + Fraction(h) * term
        coeffs.append(acc)
    if inverse:
        return CumulantSeries(
            tuple(coeffs), exact=False, validity=f"convergent for N > {n}/(c-1)"
        )
    # strict counts vanish once r > n-1; the smallest r at genus gmax+1 is
    # ell + 1 + 2(gmax+1) - 2, so beyond that every coefficient is zero
    exact = ell + 2 * (gmax + 1) - 1 > n - 1
    return CumulantSeries(tuple(coeffs), exact=exact)


def time_delay_coefficients(mu: tuple[int, ...], gmax: int = 3) -> list[int]:
    """c_2g(mu) = 2^(l-1) (z_mu/|mu|!) sum_nu H_g(mu,nu) at c = 2.

    Hard-fails if any coefficient is not a nonnegative integer: these are
    the time-delay cumulant coefficients whose integrality the monotone
    factorization count makes manifest.
    """
    mu = tuple(sorted(mu, reverse=True))
    n, ell = sum(mu), len(mu)
    part = IntPartition(mu)
    rmax = ell + n + 2 * gmax - 2
    table = _class_table(mu, max(rmax, 0), "monotone")
    out = []
    for g in range(gmax + 1):
        total = 0
        for nu in partition_list(n):
            r = ell + len(nu) + 2 * g - 2
            if r >= 0:
                total += part.class_size() * table.get(nu, (0,) * (r + 1))[r]
        val = Fraction(2 ** (ell - 1) * part.z() * total, factorial(n))
        if val.denominator != 1 or val < 0:
            raise AssertionError(f"time-delay coefficient not in N: {mu}, g={g}: {val}")
        out.append(int(val))
    return out


# ---------------------------------------------------------------------------
# Weingarten / moment oracle route
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def trace_moment_oracle(powers: tuple[int, ...], inverse: bool) -> RatFunc:
    """E prod_i Tr W^(+-k_i), exact in N with coefficients rational in c.

    Collapses the matrix-index sums combinatorially: with alpha the
    canonical permutation whose cycle lengths are the trace powers,
    E prod Tr W^k  = sum_sigma N^(#sigma + #(alpha sigma^-1) - n) c^(#sigma)
    and for the inverse, weight (-N)^n Wg_{n,(1-c)N}(sigma) N^(#(alpha sigma^-1)).
    """
    powers = tuple(sorted(powers, reverse=True))
    n = sum(powers)
    if n > MAX_N_ORACLE:
        raise ResourceGuardError(f"oracle moment limited to total power <= {MAX_N_ORACLE}")
    alpha = canonical_of_type(powers).images
    if inverse:
        return _inverse_moment(alpha, n)
    return _wishart_moment(alpha, n)


def _cycles_of_alpha_sigma_inv(alpha, sigma_imgs, n) -> int:
    inv = [0] * n
    for i, img in enumerate(sigma_imgs, start=1):
        inv[img - 1] = i
    return num_cycles(tuple(alpha[x - 1] for x in inv))


def _wishart_moment(alpha: tuple[int, ...], n: int) -> RatFunc:
    # dict N-exponent -> polynomial in c
    terms: dict[int, list[Fraction]] = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        k_s = num_cycles(sigma)
        k_as = _cycles_of_alpha_sigma_inv(alpha, sigma, n)
        e = k_s + k_as - n
        row = terms.setdefault(e, [Fraction(0)] * (n + 1))
        row[k_s] += 1
    shift = max(0, -min(terms))
    num_coeffs = [RatFunc(0, var=VAR_C)] * (max(terms) + shift + 1)
    for e, row in terms.items():
        num_coeffs[e + shift] = RatFunc(Poly(row), var=VAR_C)
    return RatFunc(Poly(num_coeffs), Poly.x() ** shift, var=VAR_N)


@lru_cache(maxsize=None)
def _wg_common_denominator(n: int):
    """Wg values over one common denominator: (numerators by class, D)."""
    wgn = wg(n)
    D = Poly([1])
    for val in wgn.values.values():
        D = poly_lcm(D, val.den)
    nums = {
        lam: val.num * D.exact_div(val.den) for lam, val in wgn.values.items()
    }
    return nums, D


def _subst_one_minus_c_N(p: Poly) -> Poly:
    """Substitute z = (1-c)N into a z-polynomial with Fraction coefficients.

    Returns a polynomial in N whose coefficients are rational functions in c.
    """
    one_minus_c = c_poly([1, -1])
    coeffs = []
    pw = RatFunc(1, var=VAR_C)
    for j, a in enumerate(p.coeffs):
        coeffs.append(Fraction(a) * pw)
        pw = pw * one_minus_c
    return Poly(coeffs)


def _inverse_moment(alpha: tuple[int, ...], n: int) -> RatFunc:
    nums, D = _wg_common_denominator(n)
    # histogram sigma by (class of sigma, #(alpha sigma^-1))
    hist: dict[tuple[tuple[int, ...], int], int] = {}
    for sigma in itertools.permutations(range(1, n + 1)):
        lam = cycle_type_tuple(sigma)
        k_as = _cycles_of_alpha_sigma_inv(alpha, sigma, n)
        hist[(lam, k_as)] = hist.get((lam, k_as), 0) + 1
    num = Poly()
    for (lam, k_as), cnt in hist.items():
        p_N = _subst_one_minus_c_N(nums[lam])
        num = num + Fraction(cnt) * p_N.shift(n + k_as)
    num = Fraction((-1) ** n) * num
    den = _subst_one_minus_c_N(D)
    return RatFunc(num, den, var=VAR_N)


def cumulant_from_moments(moment_of_block, ell: int):
    """C_ell = sum over set partitions pi of [ell] of
    (|pi|-1)! (-1)^(|pi|-1) prod_B E(block B).

    ``moment_of_block`` maps a tuple of 0-based indices to a joint moment;
    values may be rational functions or Laurent series (any ring with + *).
    """
    if ell > MAX_BELL:
        raise ResourceGuardError(f"cumulant order limited to <= {MAX_BELL}")
    total = None
    for pi in partitions_of_set(tuple(range(ell))):
        sign = (-1) ** (len(pi) - 1) * factorial(len(pi) - 1)
        prod = None
        for block in pi:
            m = moment_of_block(block)
            prod = m if prod is None else prod * m
        term = prod.scale(Fraction(sign)) if isinstance(prod, LaurentSeries) else Fraction(sign) * prod
        total = term if total is None else total + term
    return total


def relative_cumulant(moment_of_block, blocks: tuple[tuple[int, ...], ...]):
    """Relative cumulant C_{nu,1}: the cumulant of the block products of nu."""

    def grouped(sel: tuple[int, ...]):
        merged = tuple(i for b in sel for i in blocks[b])
        return moment_of_block(merged)

    return cumulant_from_moments(grouped, len(blocks))


def _exact_scaled_cumulant(mu: tuple[int, ...], inverse: bool) -> RatFunc:
    """(|mu|!/z_mu) N^(l-2) C_l(Tr W^(+-mu_i)) as an exact RatFunc in N."""
    mu = tuple(sorted(mu, reverse=True))
    ell = len(mu)

    def moment(block: tuple[int, ...]) -> RatFunc:
        return trace_moment_oracle(tuple(mu[i] for i in block), inverse)

    cum = cumulant_from_moments(moment, ell)
    part = IntPartition(mu)
    pref = Fraction(factorial(part.n), part.z())
    npow = RatFunc(Poly.x(), var=VAR_N) ** (ell - 2)
    return pref * npow * cum


def scaled_cumulant_oracle(
    mu: tuple[int, ...], inverse: bool, gmax: int = 3
) -> CumulantSeries:
    """Scaled cumulant from the Weingarten moment oracle, expanded in 1/N.

    Hard-fails if any odd 1/N coefficient survives: at beta = 2 the odd
    orders vanish identically, so a nonzero one signals a bug.
    """
    mu = tuple(sorted(mu, reverse=True))
    n, ell = sum(mu), len(mu)
    if not inverse:
        exact = _exact_scaled_cumulant(mu, inverse=False)
        if exact.den.degree > 0 and any(
            c != 0 for c in exact.den.coeffs[:-1]
        ):
            raise AssertionError("Wishart scaled cumulant is not a Laurent polynomial in N")
        # a Laurent polynomial: expanding past the denominator degree captures
        # every term, so termination below N^(-2 gmax) can be checked exactly
        order = max(2 * gmax, exact.den.degree)
        series = series_expand_at_infinity(exact, order)
        terminated = all(
            series[k] == 0 for k in range(series.min_exp, -2 * gmax)
        )
        return _series_to_cumulants(series, gmax, exact_flag=terminated)

    # inverse: combine truncated Laurent expansions of the block moments
    depth = 2 * gmax + 2 * ell + 2

    def moment_series(block: tuple[int, ...]) -> LaurentSeries:
        f = trace_moment_oracle(tuple(mu[i] for i in block), True)
        return series_expand_at_infinity(f, depth)

    cum = cumulant_from_moments(moment_series, ell)
    part = IntPartition(mu)
    series = cum.scale(Fraction(factorial(n), part.z())).shift(ell - 2)
    return _series_to_cumulants(
        series, gmax, exact_flag=False, validity=f"convergent for N > {n}/(c-1)"
    )


def _series_to_cumulants(
    series: LaurentSeries, gmax: int, exact_flag: bool, validity: str = ""
) -> CumulantSeries:
    for k in range(series.min_exp, series.max_exp + 1):
        if k > 0 and series[k] != 0:
            raise AssertionError(f"scaled cumulant has positive N power {k}")
        if k >= -2 * gmax and k % 2 != 0 and series[k] != 0:
            raise AssertionError(f"odd 1/N coefficient survives at N^{k}")
    coeffs = []
    for g in range(gmax + 1):
        v = series[-2 * g]
        if isinstance(v, Fraction):
            v = RatFunc(Poly([v]), var=VAR_C)
        coeffs.append(v)
    return CumulantSeries(tuple(coeffs), exact=exact_flag, validity=validity)


def scaled_cumulant(
    mu: tuple[int, ...], inverse: bool, gmax: int = 3, route: str = "hurwitz"
) -> CumulantSeries:
    """Front end choosing the route: 'hurwitz', 'oracle', or 'both'.

    With route='both' the two series are compared coefficientwise and a
    mismatch raises AssertionError.
    """
    if route == "hurwitz":
        return scaled_cumulant_hurwitz(mu, inverse, gmax)
    if route == "oracle":
        return scaled_cumulant_oracle(mu, inverse, gmax)
    if route == "both":
        a = scaled_cumulant_hurwitz(mu, inverse, gmax)
        b = scaled_cumulant_oracle(mu, inverse, gmax)
        if a.coeffs != b.coeffs:
            raise AssertionError(f"route mismatch for mu={mu}, inverse={inverse}")
        return a
    raise ValueError(f"unknown route {route!r}")
