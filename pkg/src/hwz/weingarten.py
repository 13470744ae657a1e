"""The central element Omega_{n,z}(sigma) = z^#sigma and its convolution
inverse, the unitary Weingarten function Wg_{n,z}.

Class functions on S_n are stored as maps {cycle type: RatFunc in z}.  All
convolutions go through the class-algebra structure constants, computed once
per n by brute force over S_n and cached.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    LaurentSeries,
    Poly,
    RatFunc,
    poly_lcm,
    rational_roots,
    series_expand_at_infinity,
    solve_linear,
)
from .hurwitz import _jm_transfer
from .symcore import (
    Permutation,
    canonical_of_type,
    cycle_type_tuple,
    partition_list,
)

VAR_Z = "z"


class CentralElement:
    """A class function on S_n with RatFunc-in-z values."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: dict[tuple[int, ...], RatFunc]):
        expected = set(partition_list(n))
        if set(values) != expected:
            raise ValueError("values must cover every partition of n")
        self.n = n
        self.values = dict(values)

    def __getitem__(self, lam: tuple[int, ...]) -> RatFunc:
        return self.values[tuple(sorted(lam, reverse=True))]

    def of_permutation(self, p: Permutation) -> RatFunc:
        return self[p.cycle_type().parts]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CentralElement)
            and self.n == other.n
            and self.values == other.values
        )

    def __repr__(self) -> str:
        return f"CentralElement(n={self.n}, {self.values!r})"


@lru_cache(maxsize=None)
def class_data(n: int):
    """Partitions of n (reverse-lex), class sizes, and one representative each."""
    parts = partition_list(n)
    reps = {lam: canonical_of_type(lam) for lam in parts}
    sizes = {}
    from .symcore import IntPartition

    for lam in parts:
        sizes[lam] = IntPartition(lam).class_size()
    return parts, sizes, reps


@lru_cache(maxsize=None)
def convolution_table(n: int):
    """c[nu][lam][mu] = #{tau in C_lam : class(tau^-1 rho_nu) = mu}.

    Enough to convolve any two class functions: (f*g)(rho_nu) =
    sum_{lam,mu} f(lam) g(mu) c[nu][lam][mu].
    """
    parts, _, reps = class_data(n)
    table = {nu: {lam: {} for lam in parts} for nu in parts}
    for nu in parts:
        rho = reps[nu].images
        for tau_imgs in itertools.permutations(range(1, n + 1)):
            lam = cycle_type_tuple(tau_imgs)
            inv = [0] * n
            for i, img in enumerate(tau_imgs, start=1):
                inv[img - 1] = i
            # tau^-1 * rho with (p*q)(k) = p(q(k))
            prod = tuple(inv[r - 1] for r in rho)
            mu = cycle_type_tuple(prod)
            row = table[nu][lam]
            row[mu] = row.get(mu, 0) + 1
    return table


def convolve(f: CentralElement, g: CentralElement) -> CentralElement:
    """Convolution (f*g)(sigma) = sum_tau f(tau) g(tau^-1 sigma)."""
    if f.n != g.n:
        raise ValueError("size mismatch")
    n = f.n
    parts, _, _ = class_data(n)
    table = convolution_table(n)
    out = {}
    for nu in parts:
        acc = RatFunc(0, var=VAR_Z)
        for lam in parts:
            flam = f.values[lam]
            if flam.is_zero():
                continue
            for mu, cnt in table[nu][lam].items():
                gmu = g.values[mu]
                if not gmu.is_zero():
                    acc = acc + flam * gmu * Fraction(cnt)
        out[nu] = acc
    return CentralElement(n, out)


def delta_id(n: int) -> CentralElement:
    parts, _, _ = class_data(n)
    one = (1,) * n
    return CentralElement(
        n,
        {lam: RatFunc(1 if lam == one else 0, var=VAR_Z) for lam in parts},
    )


def omega(n: int) -> CentralElement:
    """Omega_{n,z}: value z^{#lambda} on the class of type lambda."""
    if n < 1:
        raise ValueError("n must be >= 1")
    parts, _, _ = class_data(n)
    z = Poly.x()
    return CentralElement(
        n, {lam: RatFunc(z ** len(lam), var=VAR_Z) for lam in parts}
    )


@lru_cache(maxsize=None)
def wg(n: int) -> CentralElement:
    """Weingarten function: the convolution inverse of Omega_{n,z}.

    Solves the p(n) x p(n) linear system (Wg * Omega)(rho_nu) = delta_id
    by fraction-free elimination over polynomials in z.
    """
    parts, _, _ = class_data(n)
    table = convolution_table(n)
    z = Poly.x()
    idx = {lam: i for i, lam in enumerate(parts)}
    matrix = [[Poly() for _ in parts] for _ in parts]
    for nu in parts:
        for lam in parts:
            acc = Poly()
            for mu, cnt in table[nu][lam].items():
                acc = acc + Fraction(cnt) * z ** len(mu)
            matrix[idx[nu]][idx[lam]] = acc
    one = (1,) * n
    rhs = [Poly([1]) if nu == one else Poly() for nu in parts]
    sol = solve_linear(matrix, rhs, var=VAR_Z)
    return CentralElement(n, {lam: sol[idx[lam]] for lam in parts})


def jm_element(n: int, k: int) -> dict[tuple[int, ...], Poly]:
    """J_k = (1 k) + ... + (k-1 k) as a group-algebra vector."""
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    out: dict[tuple[int, ...], Poly] = {}
    for a in range(1, k):
        imgs = list(range(1, n + 1))
        imgs[a - 1], imgs[k - 1] = imgs[k - 1], imgs[a - 1]
        out[tuple(imgs)] = Poly([1])
    return out


def ga_multiply(
    u: dict[tuple[int, ...], Poly], v: dict[tuple[int, ...], Poly]
) -> dict[tuple[int, ...], Poly]:
    """Product in C[S_n] with polynomial coefficients."""
    out: dict[tuple[int, ...], Poly] = {}
    for p, cp in u.items():
        for q, cq in v.items():
            pq = tuple(p[x - 1] for x in q)
            c = cp * cq
            out[pq] = out.get(pq, Poly()) + c
    return {p: c for p, c in out.items() if not c.is_zero()}


def omega_via_jm(n: int) -> CentralElement:
    """Omega via the factorization (z + J_1)(z + J_2)...(z + J_n).

    Expands the product in the group algebra and checks that the result is
    central; a non-central result is an implementation bug, not an input
    error, hence the hard failure.
    """
    z = Poly.x()
    ident = tuple(range(1, n + 1))
    vec: dict[tuple[int, ...], Poly] = {ident: Poly([1])}
    for k in range(1, n + 1):
        factor = {ident: z}
        for perm, c in jm_element(n, k).items():
            factor[perm] = factor.get(perm, Poly()) + c
        vec = ga_multiply(vec, factor)
    by_class: dict[tuple[int, ...], Poly] = {}
    for perm, c in vec.items():
        lam = cycle_type_tuple(perm)
        if lam in by_class and by_class[lam] != c:
            raise AssertionError("JM product is not central: implementation bug")
        by_class[lam] = c
    parts, _, _ = class_data(n)
    return CentralElement(
        n, {lam: RatFunc(by_class.get(lam, Poly()), var=VAR_Z) for lam in parts}
    )


def wg_series(n: int, order: int) -> dict[tuple[int, ...], LaurentSeries]:
    """Monotone-tuple expansion of Wg: coefficient of z^{-n-r} on the class
    of sigma is (-1)^r times the number of monotone tuples with product sigma.
    """
    ident = tuple(range(1, n + 1))
    vec = _jm_transfer(ident, order, strict=False)
    parts, _, reps = class_data(n)
    out = {}
    for lam in parts:
        rho = reps[lam].images
        coeffs = vec.get(rho, [0] * (order + 1))
        series = {
            -n - r: Fraction((-1) ** r * coeffs[r]) for r in range(order + 1)
        }
        out[lam] = LaurentSeries(series, min_exp=-n - order)
    return out


def wg_matches_series(n: int, order: int) -> bool:
    """Check the exact Wg expansion against the monotone-series expansion."""
    exact = wg(n)
    mono = wg_series(n, order)
    for lam, series in mono.items():
        expanded = series_expand_at_infinity(exact.values[lam], n + order)
        if not expanded.agrees_with(series):
            return False
    return True


def wg_pole_locations(n: int) -> set[Fraction]:
    """Union of the rational roots of all Wg denominators."""
    poles: set[Fraction] = set()
    for lam, val in wg(n).values.items():
        den = val.den
        roots = rational_roots(den)
        # denominators of Wg factor completely over the integers
        prod = Poly([1])
        for root in roots:
            factor = Poly([-root, 1])
            while den.divmod(factor)[1].is_zero():
                den = den.exact_div(factor)
                prod = prod * factor
        if den.degree != 0:
            raise AssertionError(f"Wg denominator has non-rational factors: {val}")
        poles.update(roots)
    return poles
