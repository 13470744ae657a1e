from fractions import Fraction

import pytest

from hwz.identities import (
    IdentityReport,
    MonotonePath,
    check_covariance_duality,
    check_duality,
    check_functional_relation,
    check_preimage,
    check_reciprocity,
    check_recursion,
    enumerate_minimal,
    minimal_count,
    phi_map,
    preimage_count,
    run_all,
    schroeder_S,
    schroeder_closed_form,
    w_weight,
)


def test_phi_worked_example():
    w = MonotonePath(5, ((1, 3), (2, 3), (1, 5), (4, 5)))
    assert phi_map(w).transpositions == ((1, 3),)


def test_phi_edge_cases():
    # first larger entry already n+1 -> empty output
    w = MonotonePath(3, ((1, 3), (2, 3)))
    assert phi_map(w).transpositions == ()
    # empty path maps to the empty path
    assert phi_map(MonotonePath(4, ())).transpositions == ()


def test_phi_rejects_non_minimal_input():
    # (1 2)(1 2) does not keep splitting cycles
    with pytest.raises(ValueError):
        phi_map(MonotonePath(3, ((1, 2), (1, 2))))


def test_phi_lands_in_strict_sets():
    for n in (2, 3, 4):
        strict = {
            taus
            for l in range(0, n)
            for taus in enumerate_minimal(n, l, kind="strict")
        }
        for r in range(0, n + 1):
            for taus in enumerate_minimal(n + 1, r):
                img = phi_map(MonotonePath(n + 1, taus))
                assert img.transpositions in strict


def test_preimage_count_values():
    assert preimage_count(MonotonePath(2, (), "strict"), 0) == 1
    assert preimage_count(MonotonePath(3, ((1, 2),), "strict"), 2) == 2
    # binomial vanishes for r > n
    assert preimage_count(MonotonePath(3, ((1, 2),), "strict"), 4) == 0


def test_preimage_aggregate_invariant():
    # sum_l C(n-l, r-l) #F_upup(n,l) = #F_up(n+1,r)
    from math import comb

    for n in range(1, 6):
        for r in range(0, n + 1):
            lhs = sum(
                comb(n - l, r - l) * minimal_count(n, l, "strict")
                for l in range(0, min(r, n) + 1)
            )
            assert lhs == minimal_count(n + 1, r), (n, r)


def test_schroeder_values():
    assert [schroeder_S(n, 0) for n in range(0, 7)] == [1, 1, 2, 6, 22, 90, 394]
    assert schroeder_S(0, 1) == 0 and schroeder_S(1, 2) == 0
    for n in range(0, 8):
        assert schroeder_closed_form(n) == schroeder_S(n, 0)


def test_schroeder_matches_enumeration():
    # independent cross-check of the group-algebra route against raw DFS
    from hwz.hurwitz import PathQuery, count_paths
    from hwz.symcore import canonical_of_type

    for n in (2, 3, 4):
        for d in (0, 1):
            alpha = canonical_of_type((n,))
            dfs = sum(
                count_paths(PathQuery(alpha, r, d))
                for r in range(2 * d, n + 2 * d)
            )
            assert dfs == schroeder_S(n, d)


def test_w_weight():
    assert w_weight(1, 5) == 1
    assert w_weight(2, 1) == 5
    assert all(w_weight(n, 0) == 1 for n in range(1, 5))
    assert w_weight(3, 1) == 1 + 4 + 9


def test_identity_checks_pass():
    assert check_duality(4).passed
    assert check_reciprocity(3).passed
    assert check_functional_relation(3, 1).passed
    assert check_recursion(4, 2).passed
    assert check_preimage(4).passed


def test_covariance_duality_report_documents_variant():
    rep = check_covariance_duality(4)
    assert rep.passed
    assert "vacuous" in rep.notes
    assert "holds nonvacuously" in rep.notes


def test_run_all_sorted_and_serializable():
    reports = run_all(nmax=3, gmax=1, dmax=2)
    names = [r.name for r in reports]
    assert names == sorted(names)
    for r in reports:
        assert isinstance(r, IdentityReport)
        js = r.to_json()
        assert set(js) == {"identity", "params", "passed", "witnesses", "notes"}
