from fractions import Fraction

import pytest

from hwz.algebra import Poly, RatFunc
from hwz.weingarten import (
    CentralElement,
    convolve,
    delta_id,
    jm_element,
    omega,
    omega_via_jm,
    wg,
    wg_matches_series,
    wg_pole_locations,
)


def test_wg_n2_closed_form():
    z = Poly.x()
    got = wg(2)
    assert got[(1, 1)] == RatFunc(Poly([1]), z**2 - 1, var="z")
    assert got[(2,)] == RatFunc(Poly([-1]), z * (z**2 - 1), var="z")


def test_wg_is_two_sided_inverse():
    for n in range(1, 5):
        assert convolve(wg(n), omega(n)) == delta_id(n)
        assert convolve(omega(n), wg(n)) == delta_id(n)


def test_omega_via_jm_factorization():
    for n in range(1, 5):
        assert omega_via_jm(n) == omega(n)


def test_monotone_series_matches_exact_expansion():
    for n in range(1, 5):
        assert wg_matches_series(n, 5)


def test_pole_locations_are_small_integers():
    for n in range(2, 5):
        poles = wg_pole_locations(n)
        assert poles <= {Fraction(k) for k in range(-(n - 1), n)}
        assert Fraction(n - 1) in poles


def test_jm_element_is_sum_of_transpositions():
    jk = jm_element(4, 3)
    assert len(jk) == 2  # (1 3) and (2 3)
    assert all(c == Poly([1]) for c in jk.values())


def test_central_element_requires_full_support():
    with pytest.raises(ValueError):
        CentralElement(2, {(2,): RatFunc(1, var="z")})
