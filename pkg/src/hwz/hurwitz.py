"""Counting (strictly) monotone transposition factorizations in S_n.

Two independent routes are provided:

* a depth-first search over normalized transpositions (a b), a < b, with the
  larger entries b weakly (kind="monotone") or strictly (kind="strict")
  increasing, pruning on Cayley-distance parity bounds -- the reference;

* a transfer computation in the group algebra: the sum over monotone tuples
  of length r of tau_1...tau_r equals h_r(J_2, ..., J_n) (e_r for strict),
  applied as iterated truncated products of Jucys-Murphy elements, with
  transitivity recovered by Moebius inversion over set partitions that are
  coarser than the cycle partition of the base permutation.

Double Hurwitz numbers H_g(mu, nu) count tuples (alpha, tau_1..tau_r, beta)
with alpha running over the whole conjugacy class of type mu, the product
alpha tau_1...tau_r equal to beta of type nu, r = #mu + #nu + 2g - 2, the
group generated by (alpha, tau_i) transitive, and the tuple monotone.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .symcore import (
    DisjointSet,
    IntPartition,
    Permutation,
    canonical_of_type,
    cycle_type_tuple,
    cycles_of,
    mobius_to_top,
    num_cycles,
    partitions_of_set,
)


class ResourceGuardError(RuntimeError):
    """Raised when a query would exceed the configured enumeration limits."""


DEFAULT_MAX_N_DFS = 7
DEFAULT_MAX_N_GROUPALGEBRA = 9


def max_n_groupalgebra() -> int:
    return int(os.environ.get("HWZ_MAX_N", DEFAULT_MAX_N_GROUPALGEBRA))


@dataclass(frozen=True)
class HurwitzQuery:
    """A double Hurwitz number query; nu=None sums over all nu."""

    mu: tuple[int, ...]
    nu: tuple[int, ...] | None
    genus: int
    kind: str  # "monotone" | "strict"

    def __post_init__(self):
        if self.kind not in ("monotone", "strict"):
            raise ValueError("kind must be 'monotone' or 'strict'")
        if self.genus < 0:
            raise ValueError("genus must be >= 0")
        if self.nu is not None and sum(self.mu) != sum(self.nu):
            raise ValueError("|mu| != |nu|")


@dataclass(frozen=True)
class PathQuery:
    """Count monotone paths from alpha with r steps and defect d.

    The endpoint condition is #(alpha tau_1...tau_r) = #alpha + r - 2d.
    """

    alpha: Permutation
    r: int
    d: int
    kind: str = "monotone"

    def __post_init__(self):
        if self.kind not in ("monotone", "strict"):
            raise ValueError("kind must be 'monotone' or 'strict'")
        if self.r < 0 or self.d < 0:
            raise ValueError("r and d must be >= 0")


# ---------------------------------------------------------------------------
# reference route: depth-first search
# ---------------------------------------------------------------------------


def _same_cycle(images: list[int], a: int, b: int) -> bool:
    x = images[a - 1]
    while x != a:
        if x == b:
            return True
        x = images[x - 1]
    return False


def iter_monotone_tuples(
    alpha: Permutation,
    r: int,
    target_cycles: int | None,
    kind: str = "monotone",
    transitive: bool = True,
):
    """Yield monotone transposition tuples tau with the requested endpoint.

    Yields tuples of (a, b) pairs such that #(alpha tau_1...tau_r) equals
    target_cycles (any endpoint if None) and, when transitive is set, the
    group generated by alpha and the taus acts transitively on [n].
    """
    n = alpha.n
    strict = kind == "strict"
    cur = list(alpha.images)
    cc = alpha.num_cycles
    ds = DisjointSet(n)
    for cyc in alpha.cycles():
        for x in cyc[1:]:
            ds.union(cyc[0], x)
    path: list[tuple[int, int]] = []

    def rec(steps_left: int, min_b: int, last_b: int):
        nonlocal cc
        if steps_left == 0:
            if target_cycles is not None and cc != target_cycles:
                return
            if transitive and ds.ncomp != 1:
                return
            yield tuple(path)
            return
        if target_cycles is not None:
            gap = abs(target_cycles - cc)
            if gap > steps_left or (gap - steps_left) % 2 != 0:
                return
        if transitive and ds.ncomp - 1 > steps_left:
            return
        b_lo = max(min_b, 2)
        if strict and n - b_lo + 1 < steps_left:
            return
        for b in range(b_lo, n + 1):
            if strict and n - b < steps_left - 1:
                break
            for a in range(1, b):
                merged = not _same_cycle(cur, a, b)
                cur[a - 1], cur[b - 1] = cur[b - 1], cur[a - 1]
                cc += 1 if not merged else -1
                ds.union(a, b)
                path.append((a, b))
                nb = b + 1 if strict else b
                yield from rec(steps_left - 1, nb, b)
                path.pop()
                ds.undo()
                cc += -1 if not merged else 1
                cur[a - 1], cur[b - 1] = cur[b - 1], cur[a - 1]

    yield from rec(r, 2, 0)


def count_paths(q: PathQuery) -> int:
    """Reference DFS count of #F_{n,r,d}(alpha) for the given kind."""
    target = q.alpha.num_cycles + q.r - 2 * q.d
    if target < 1 or target > q.alpha.n:
        return 0
    return sum(
        1 for _ in iter_monotone_tuples(q.alpha, q.r, target, kind=q.kind)
    )


def count_tuples_dfs(
    alpha: Permutation, r: int, nu: tuple[int, ...], kind: str = "monotone"
) -> int:
    """DFS count of transitive monotone tuples with cycle_type(alpha*taus) = nu."""
    cur_type = lambda tup: cycle_type_tuple(_apply_tuple(alpha, tup))
    count = 0
    for tup in iter_monotone_tuples(alpha, r, len(nu), kind=kind):
        if cur_type(tup) == tuple(sorted(nu, reverse=True)):
            count += 1
    return count


def _apply_tuple(alpha: Permutation, taus) -> tuple[int, ...]:
    cur = list(alpha.images)
    for a, b in taus:
        cur[a - 1], cur[b - 1] = cur[b - 1], cur[a - 1]
    return tuple(cur)


# ---------------------------------------------------------------------------
# fast route: Jucys-Murphy transfer in the group algebra
# ---------------------------------------------------------------------------


def _jm_transfer(alpha_images: tuple[int, ...], rmax: int, strict: bool):
    """Vector alpha * prod_k (sum_j x^j J_k^j) in C[S_n], truncated at x^rmax.

    Returns {permutation image tuple: [count_r for r in 0..rmax]}.  The
    coefficient of beta at degree r is the number of monotone (strict:
    strictly monotone) transposition tuples of length r with product
    alpha tau_1...tau_r = beta.  No transitivity constraint.
    """
    n = len(alpha_images)
    vec: dict[tuple[int, ...], list[int]] = {
        alpha_images: [1] + [0] * rmax
    }
    for k in range(2, n + 1):
        if strict:
            # multiply by (1 + x J_k)
            new = {p: list(c) for p, c in vec.items()}
            for perm, coeffs in vec.items():
                for a in range(1, k):
                    q = list(perm)
                    q[a - 1], q[k - 1] = q[k - 1], q[a - 1]
                    q = tuple(q)
                    tgt = new.setdefault(q, [0] * (rmax + 1))
                    for r in range(rmax):
                        if coeffs[r]:
                            tgt[r + 1] += coeffs[r]
            vec = new
        else:
            # multiply by sum_j x^j J_k^j: iterate u <- x * u * J_k
            new = {p: list(c) for p, c in vec.items()}
            u = vec
            for _ in range(rmax):
                nxt: dict[tuple[int, ...], list[int]] = {}
                alive = False
                for perm, coeffs in u.items():
                    for a in range(1, k):
                        q = list(perm)
                        q[a - 1], q[k - 1] = q[k - 1], q[a - 1]
                        q = tuple(q)
                        tgt = nxt.setdefault(q, [0] * (rmax + 1))
                        for r in range(rmax):
                            if coeffs[r]:
                                tgt[r + 1] += coeffs[r]
                                alive = True
                for perm, coeffs in nxt.items():
                    tgt = new.setdefault(perm, [0] * (rmax + 1))
                    for r in range(rmax + 1):
                        tgt[r] += coeffs[r]
                if not alive:
                    break
                u = nxt
            vec = new
    return vec


@lru_cache(maxsize=None)
def _nontransitive_by_class(
    alpha_images: tuple[int, ...], rmax: int, strict: bool
) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Counts of monotone tuples by cycle type of the product, no transitivity."""
    vec = _jm_transfer(alpha_images, rmax, strict)
    out: dict[tuple[int, ...], list[int]] = {}
    for perm, coeffs in vec.items():
        lam = cycle_type_tuple(perm)
        tgt = out.setdefault(lam, [0] * (rmax + 1))
        for r in range(rmax + 1):
            tgt[r] += coeffs[r]
    return {lam: tuple(c) for lam, c in out.items()}


def _relabel_restriction(
    alpha_images: tuple[int, ...], block: tuple[int, ...]
) -> tuple[int, ...]:
    """Restrict alpha to an invariant block and relabel order-preservingly."""
    pos = {x: i + 1 for i, x in enumerate(block)}
    return tuple(pos[alpha_images[x - 1]] for x in block)


def transitive_counts_by_class(
    alpha: Permutation, rmax: int, kind: str = "monotone"
) -> dict[tuple[int, ...], tuple[int, ...]]:
    """T[nu][r]: transitive monotone tuples from alpha with product of type nu.

    Computed from non-transitive per-block counts by Moebius inversion over
    the set partitions coarser than the cycle partition of alpha: monotone
    tuples supported on the blocks of a partition merge uniquely into a
    global monotone tuple, so the non-transitive count factorizes.
    """
    if alpha.n > max_n_groupalgebra():
        raise ResourceGuardError(
            f"n={alpha.n} exceeds group-algebra guard {max_n_groupalgebra()}; "
            "use count_paths (DFS) or raise HWZ_MAX_N"
        )
    strict = kind == "strict"
    cyc_supports = tuple(tuple(sorted(c)) for c in cycles_of(alpha.images))
    total: dict[tuple[int, ...], list[int]] = {}
    for grouping in partitions_of_set(cyc_supports):
        moeb = mobius_to_top(len(grouping))
        # per-partition counts: convolve block tables over (type, r)
        acc: dict[tuple[tuple[int, ...], int], int] = {((), 0): 1}
        for grp in grouping:
            block = tuple(sorted(x for cyc in grp for x in cyc))
            sub = _relabel_restriction(alpha.images, block)
            table = _nontransitive_by_class(sub, rmax, strict)
            nxt: dict[tuple[tuple[int, ...], int], int] = {}
            for (lam_acc, r_acc), cnt in acc.items():
                for lam, coeffs in table.items():
                    merged = tuple(sorted(lam_acc + lam, reverse=True))
                    for r, c in enumerate(coeffs):
                        if c and r_acc + r <= rmax:
                            key = (merged, r_acc + r)
                            nxt[key] = nxt.get(key, 0) + cnt * c
            acc = nxt
        for (lam, r), cnt in acc.items():
            tgt = total.setdefault(lam, [0] * (rmax + 1))
            tgt[r] += moeb * cnt
    return {lam: tuple(c) for lam, c in total.items() if any(c)}


def count_paths_fast(q: PathQuery) -> int:
    """Group-algebra count of #F_{n,r,d}(alpha); identical to count_paths."""
    target = q.alpha.num_cycles + q.r - 2 * q.d
    if target < 1 or target > q.alpha.n:
        return 0
    table = transitive_counts_by_class(q.alpha, q.r, kind=q.kind)
    return sum(
        coeffs[q.r] for lam, coeffs in table.items() if len(lam) == target
    )


# ---------------------------------------------------------------------------
# double Hurwitz numbers and constellations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _class_table(mu: tuple[int, ...], rmax: int, kind: str):
    alpha = canonical_of_type(mu)
    return transitive_counts_by_class(alpha, rmax, kind=kind)


def hurwitz_number(
    mu: tuple[int, ...], nu: tuple[int, ...], g: int, kind: str = "monotone"
) -> int:
    """H_g(mu, nu): monotone (or strict) double Hurwitz number.

    Counts tuples over the full conjugacy class of type mu; the count for a
    fixed representative is a class function, so it is evaluated once at the
    canonical representative and multiplied by the class size n!/z_mu.
    """
    mu = tuple(sorted(mu, reverse=True))
    nu = tuple(sorted(nu, reverse=True))
    if sum(mu) != sum(nu):
        raise ValueError("|mu| != |nu|")
    r = len(mu) + len(nu) + 2 * g - 2
    if r < 0:
        return 0
    table = _class_table(mu, r, kind)
    per_rep = table.get(nu, (0,) * (r + 1))[r]
    return IntPartition(mu).class_size() * per_rep


def count_double_hurwitz(q: HurwitzQuery) -> dict[tuple[int, ...], int]:
    """All H_g(mu, nu) for the query, keyed by nu in reverse-lex order."""
    from .symcore import partition_list

    n = sum(q.mu)
    nus = [tuple(q.nu)] if q.nu is not None else list(partition_list(n))
    return {
        nu: hurwitz_number(q.mu, nu, q.genus, kind=q.kind) for nu in nus
    }


def count_constellations(mu: tuple[int, ...], nu: tuple[int, ...], g: int) -> int:
    """Pairs (alpha, beta) with [alpha]=mu, [alpha beta]=nu, the Euler
    condition #mu + #beta + #nu - n = 2 - 2g, and <alpha, beta> transitive.

    Brute force over S_n^2 restricted to the class of mu; the independent
    oracle for the strict Hurwitz numbers.
    """
    import itertools

    from .symcore import orbit_partition

    mu = tuple(sorted(mu, reverse=True))
    nu = tuple(sorted(nu, reverse=True))
    n = sum(mu)
    if sum(nu) != n:
        raise ValueError("|mu| != |nu|")
    if n > DEFAULT_MAX_N_DFS:
        raise ResourceGuardError(f"constellation brute force limited to n <= {DEFAULT_MAX_N_DFS}")
    count = 0
    for pa in itertools.permutations(range(1, n + 1)):
        if cycle_type_tuple(pa) != mu:
            continue
        alpha = Permutation(pa)
        for pb in itertools.permutations(range(1, n + 1)):
            beta = Permutation(pb)
            prod = alpha * beta
            if cycle_type_tuple(prod.images) != nu:
                continue
            if len(mu) + beta.num_cycles + len(nu) - n != 2 - 2 * g:
                continue
            if orbit_partition([alpha, beta], n).num_blocks != 1:
                continue
            count += 1
    return count


def strict_genus_bound(mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    """Largest genus with possibly nonzero strict count: r <= n - 1."""
    n = sum(mu)
    top = n - 1 - len(mu) - len(nu) + 2
    return top // 2 if top >= 0 else -1
