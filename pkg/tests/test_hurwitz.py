import itertools

import pytest

from hwz.hurwitz import (
    HurwitzQuery,
    PathQuery,
    ResourceGuardError,
    count_constellations,
    count_double_hurwitz,
    count_paths,
    count_paths_fast,
    count_tuples_dfs,
    hurwitz_number,
    iter_monotone_tuples,
    strict_genus_bound,
)
from hwz.symcore import IntPartition, Permutation, canonical_of_type, partition_list


def test_example_tables_genus_zero():
    mono = count_double_hurwitz(HurwitzQuery((1, 1, 1), None, 0, "monotone"))
    assert mono == {(3,): 4, (2, 1): 12, (1, 1, 1): 8}
    strict = count_double_hurwitz(HurwitzQuery((1, 1, 1), None, 0, "strict"))
    assert strict == {(3,): 2, (2, 1): 0, (1, 1, 1): 0}


def test_single_cycle_examples():
    # H_g((1),(1)) is 1 at genus 0 and 0 after (no transpositions exist)
    assert hurwitz_number((1,), (1,), 0) == 1
    assert hurwitz_number((1,), (1,), 2) == 0
    # H_g((2),(2)) = 1 for every g: powers of the unique transposition
    for g in range(0, 4):
        assert hurwitz_number((2,), (2,), g, "monotone") == 1
    # strict counts vanish beyond r <= n - 1
    assert hurwitz_number((1,), (1,), 2, "strict") == 0
    assert strict_genus_bound((2,), (2,)) == 0


def test_dfs_matches_group_algebra():
    for mu in partition_list(4):
        alpha = canonical_of_type(mu)
        for kind in ("monotone", "strict"):
            for r in range(0, 5):
                for d in range(0, 2):
                    q = PathQuery(alpha, r, d, kind)
                    assert count_paths(q) == count_paths_fast(q), (mu, kind, r, d)


def test_hurwitz_sums_over_whole_class():
    # the count over the class equals class size times the canonical count
    for n in range(2, 5):
        for mu in partition_list(n):
            for nu in partition_list(n):
                for g in (0, 1):
                    r = len(mu) + len(nu) + 2 * g - 2
                    if r < 0:
                        continue
                    literal = 0
                    for imgs in itertools.permutations(range(1, n + 1)):
                        alpha = Permutation(imgs)
                        if alpha.cycle_type().parts != mu:
                            continue
                        literal += count_tuples_dfs(alpha, r, nu)
                    assert literal == hurwitz_number(mu, nu, g), (mu, nu, g)


def test_strict_counts_match_constellations():
    for mu in partition_list(3):
        for nu in partition_list(3):
            for g in (0, 1):
                assert hurwitz_number(mu, nu, g, "strict") == count_constellations(
                    mu, nu, g
                ), (mu, nu, g)


def test_monotone_tuple_stream_is_monotone():
    alpha = canonical_of_type((4,))
    for taus in iter_monotone_tuples(alpha, 3, 4):
        bs = [b for _, b in taus]
        assert bs == sorted(bs)
        assert all(a < b for a, b in taus)


def test_resource_guard(monkeypatch):
    from hwz import hurwitz as mod

    mod._class_table.cache_clear()
    monkeypatch.setenv("HWZ_MAX_N", "3")
    with pytest.raises(ResourceGuardError):
        hurwitz_number((4,), (4,), 0)
    monkeypatch.delenv("HWZ_MAX_N")
    # genus 0 with mu = nu = (4): only the empty tuple, once per class element
    assert hurwitz_number((4,), (4,), 0) == IntPartition((4,)).class_size()


def test_query_validation():
    with pytest.raises(ValueError):
        HurwitzQuery((2,), (1, 1, 1), 0, "monotone")
    with pytest.raises(ValueError):
        HurwitzQuery((2,), None, 0, "weird")
    with pytest.raises(ValueError):
        PathQuery(canonical_of_type((2,)), -1, 0)
