"""Independent brute-force certifiers for the J polynomials.

Nothing here reuses the recurrence or the explicit formulas: forests are
generated as raw parent maps filtered by an acyclicity check (not built
level by level, which would mirror the proof structure being certified),
and parking functions as raw value tuples filtered by the sorted-prefix
condition.  Agreement of these enumerators with the closed-form polynomials
is the strongest correctness evidence the package produces.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import comb

from .exactpoly import UniPoly, one, zero
from .qcalc import qbracket
from .jpoly import (JTable, build_jtable, compositions, multinomial,
                    reciprocal)
from .report import CheckReport

DEFAULT_CAP = 10_000_000


class EnumerationCapExceeded(Exception):
    """The candidate space is larger than the configured cap."""

    def __init__(self, projected: int, cap: int):
        super().__init__(f"enumeration would visit {projected} candidates "
                         f"(cap {cap})")
        self.projected = projected
        self.cap = cap


# ---------------------------------------------------------------------------
# rankings: for every subset P of {1..n}, a bijection P -> {1..|P|}

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4B7C15


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class Ranking:
    """Deterministic per-subset rank assignment, memoized by subset."""

    def __init__(self):
        self._memo = {}

    def ranks(self, subset: tuple) -> dict:
        """Map each element of the (ascending) subset tuple to its rank."""
        table = self._memo.get(subset)
        if table is None:
            table = self._build(subset)
            self._memo[subset] = table
        return table

    def _build(self, subset):
        raise NotImplementedError


class IncreasingRanking(Ranking):
    kind = "increasing"

    def _build(self, subset):
        return {v: i + 1 for i, v in enumerate(subset)}


class DecreasingRanking(Ranking):
    kind = "decreasing"

    def _build(self, subset):
        p = len(subset)
        return {v: p - i for i, v in enumerate(subset)}


class SeededRanking(Ranking):
    """Fisher-Yates order driven by a splitmix64 stream.

    The stream is seeded by the ranking seed XOR a fold of the subset, so
    ranks are reproducible bit for bit on any platform: only 64-bit integer
    arithmetic is involved, no platform RNG.
    """

    kind = "seeded"

    def __init__(self, seed: int):
        super().__init__()
        self.seed = seed & _MASK64

    def _build(self, subset):
        fold = 0
        for v in subset:
            fold = _mix64(fold ^ (v & _MASK64))
        state = self.seed ^ fold
        order = list(subset)
        for i in range(len(order) - 1, 0, -1):
            state = (state + _GAMMA) & _MASK64
            j = _mix64(state) % (i + 1)
            order[i], order[j] = order[j], order[i]
        return {v: i + 1 for i, v in enumerate(order)}


def make_ranking(kind: str, seed: int = 0) -> Ranking:
    if kind in ("increasing", "plus", "+"):
        return IncreasingRanking()
    if kind in ("decreasing", "minus", "-"):
        return DecreasingRanking()
    if kind == "seeded":
        return SeededRanking(seed)
    raise ValueError(f"unknown ranking kind {kind!r}")


# ---------------------------------------------------------------------------
# forests


@dataclass(frozen=True)
class Forest:
    """Labeled rooted forest on {1..n} with root set roots.

    parent maps every non-root to its parent; levels[i] is the ascending
    tuple of vertices at distance i from the roots, levels[0] being the
    roots themselves.
    """

    n: int
    roots: tuple
    parent: dict
    levels: tuple

    def level_sizes(self) -> tuple:
        return tuple(len(l) for l in self.levels)

    def to_json_dict(self, stat=None) -> dict:
        d = {"parent": {str(v): p for v, p in sorted(self.parent.items())},
             "levels": [list(l) for l in self.levels]}
        if stat is not None:
            d["stat"] = stat
        return d


def _check_roots(n: int, roots) -> tuple:
    rs = tuple(sorted(set(roots)))
    if not rs or any(not (1 <= v <= n) for v in rs):
        raise ValueError("roots must be a nonempty subset of {1..n}")
    return rs


def _raw_forests(n: int, roots: tuple):
    """Yield (parent_array, depth_array, levels) for each acyclic parent map.

    parent_array and depth_array are indexed by vertex (slot 0 unused);
    candidates where some parent chain never reaches a root are dropped.
    The parent array is reused between iterations: consumers keep a copy of
    anything they hold past the current step.
    """
    nonroots = [v for v in range(1, n + 1) if v not in roots]
    base_depth = [-1] * (n + 1)
    for rt in roots:
        base_depth[rt] = 0
    parent = [0] * (n + 1)
    for choice in itertools.product(range(1, n + 1), repeat=len(nonroots)):
        for v, p in zip(nonroots, choice):
            parent[v] = p
        depth = base_depth[:]
        ok = True
        for v in nonroots:
            if depth[v] >= 0:
                continue
            path = []
            x = v
            while depth[x] < 0:
                path.append(x)
                x = parent[x]
                if len(path) > n:
                    ok = False
                    break
            if not ok:
                break
            d = depth[x]
            for u in reversed(path):
                d += 1
                depth[u] = d
        if not ok:
            continue
        height = max(depth)
        levels = [[] for _ in range(height + 1)]
        for v in range(1, n + 1):
            levels[depth[v]].append(v)
        yield parent, depth, tuple(tuple(l) for l in levels)


def projected_forest_candidates(n: int, roots) -> int:
    roots = _check_roots(n, roots)
    return n ** (n - len(roots))


def enumerate_forests(n: int, roots, cap: int = DEFAULT_CAP):
    """Stream every rooted forest on {1..n} with the given root set."""
    roots = _check_roots(n, roots)
    projected = n ** (n - len(roots))
    if projected > cap:
        raise EnumerationCapExceeded(projected, cap)
    for parent, _depth, levels in _raw_forests(n, roots):
        pmap = {v: parent[v] for v in range(1, n + 1) if v not in roots}
        yield Forest(n, roots, pmap, levels)


def _weight_shortfall(parent, depth, nonroots, rank_tables) -> int:
    """sum over non-roots of (parent's rank within its level - 1)."""
    s = 0
    for v in nonroots:
        p = parent[v]
        s += rank_tables[depth[p]][p] - 1
    return s


def sigma_statistic(u, include_root=None) -> int:
    """Sum of u_i * u_j over index pairs at distance >= 2.

    With include_root = r the sequence is prepended with r, so level 0
    participates in the pairing.
    """
    seq = ((include_root,) if include_root is not None else ()) + tuple(u)
    total = 0
    for i in range(len(seq)):
        for j in range(i + 2, len(seq)):
            total += seq[i] * seq[j]
    return total


def level_statistic(forest: Forest, ranking: Ranking) -> int:
    """Inversion-type statistic: sum C(u_i, 2) over non-root levels, plus
    the parent-rank shortfall under the ranking; 0 for the edgeless
    (all-roots) forest.

    Worked arithmetic: a 13-vertex forest with 3 roots and level sizes
    (3, 4, 5, 1) contributes C(4,2) + C(5,2) + C(1,2) = 16 from the level
    sizes; if the ten non-root vertices see parent ranks summing to the
    shortfall (4-1) + 2(1-1) + 3(4-1) + (2-1) + (3-1) + 2(1-1) = 15, the
    statistic is 31.
    """
    base = sum(comb(len(l), 2) for l in forest.levels[1:])
    rank_tables = [ranking.ranks(l) for l in forest.levels]
    s = base
    for v, p in forest.parent.items():
        lvl = next(i for i, l in enumerate(forest.levels) if p in l)
        s += rank_tables[lvl][p] - 1
    return s


def reciprocal_level_statistic(forest: Forest, ranking: Ranking) -> int:
    """Companion statistic whose enumerator is the reciprocal polynomial:
    the distance-2 product sum of the level sizes (roots included) plus the
    same parent-rank shortfall."""
    sizes = forest.level_sizes()
    base = sigma_statistic(sizes[1:], include_root=sizes[0])
    rank_tables = [ranking.ranks(l) for l in forest.levels]
    s = base
    for v, p in forest.parent.items():
        lvl = next(i for i, l in enumerate(forest.levels) if p in l)
        s += rank_tables[lvl][p] - 1
    return s


def forest_enumerator_polys(n: int, roots, rankings, variant: str = "standard",
                            cap: int = DEFAULT_CAP):
    """Sum q^statistic over all forests, once per ranking, in a single pass.

    variant "standard" uses the level statistic, "reciprocal" the companion
    statistic; the returned polynomials are indexed like rankings.
    """
    if variant not in ("standard", "reciprocal"):
        raise ValueError(f"unknown variant {variant!r}")
    roots = _check_roots(n, roots)
    projected = n ** (n - len(roots))
    if projected > cap:
        raise EnumerationCapExceeded(projected, cap)
    nonroots = [v for v in range(1, n + 1) if v not in roots]
    counters = [{} for _ in rankings]
    for parent, depth, levels in _raw_forests(n, roots):
        sizes = [len(l) for l in levels]
        if variant == "standard":
            base = sum(comb(u, 2) for u in sizes[1:])
        else:
            base = sigma_statistic(sizes)
        for counter, ranking in zip(counters, rankings):
            rank_tables = [ranking.ranks(l) for l in levels]
            s = base + _weight_shortfall(parent, depth, nonroots, rank_tables)
            counter[s] = counter.get(s, 0) + 1
    polys = []
    for counter in counters:
        size = max(counter) + 1 if counter else 0
        coeffs = [0] * size
        for s, c in counter.items():
            coeffs[s] = c
        polys.append(UniPoly(coeffs))
    return polys


def forest_enumerator_poly(n: int, roots, ranking: Ranking,
                           variant: str = "standard",
                           cap: int = DEFAULT_CAP) -> UniPoly:
    return forest_enumerator_polys(n, roots, [ranking], variant, cap)[0]


# ---------------------------------------------------------------------------
# parking functions


def parking_candidates(m: int, r: int) -> int:
    return (r + m - 1) ** m if m > 0 else 1


def is_parking_function(a, r: int) -> bool:
    """The i-th smallest value must be below r + i - 1 (1-based i)."""
    b = sorted(a)
    return all(b[i] < r + i for i in range(len(b)))


def parking_enumerator_poly(m: int, r: int, cap: int = DEFAULT_CAP) -> UniPoly:
    """Sum of q^(a_1 + ... + a_m) over parking functions with offset r.

    Exhaustively generates {0..r+m-2}^m and filters on the sorted condition;
    the empty case m = 0 contributes the empty sum 1.
    """
    if m < 0 or r < 1:
        raise ValueError("need m >= 0 and r >= 1")
    if m == 0:
        return one
    projected = parking_candidates(m, r)
    if projected > cap:
        raise EnumerationCapExceeded(projected, cap)
    counter = {}
    for a in itertools.product(range(r + m - 1), repeat=m):
        b = sorted(a)
        if all(b[i] < r + i for i in range(m)):
            s = sum(a)
            counter[s] = counter.get(s, 0) + 1
    size = max(counter) + 1 if counter else 0
    coeffs = [0] * size
    for s, c in counter.items():
        coeffs[s] = c
    return UniPoly(coeffs)


# ---------------------------------------------------------------------------
# composition-sum forms of the reciprocal


def reciprocal_explicit_check(n_max: int) -> CheckReport:
    """Both composition sums for the reciprocal polynomial, checked against
    the reversed table entries.

    Form one weights a composition u of n - r by q^(sigma(u) + r(n-r-u_1));
    form two prepends the root count and uses q^sigma(u with root), which
    shifts the same exponent bookkeeping into the sequence itself.
    """
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    report = CheckReport()
    table = build_jtable(n_max)
    for n in range(2, n_max + 1):
        for r in range(1, n):
            m = n - r
            expected = reciprocal(n, r, table)
            acc1 = zero
            acc2 = zero
            for u in compositions(m):
                w = qbracket(r) ** u[0]
                for i in range(1, len(u)):
                    w = w * qbracket(u[i - 1]) ** u[i]
                count = multinomial(m, u)
                acc1 = acc1 + w * UniPoly.monomial(
                    sigma_statistic(u) + r * (m - u[0]), count)
                acc2 = acc2 + w * UniPoly.monomial(
                    sigma_statistic(u, include_root=r), count)
            report.check("reciprocal-composition-formula", acc1 == expected,
                         detail=f"lhs={acc1} expected={expected}", n=n, r=r)
            report.check("reciprocal-rooted-composition-formula",
                         acc2 == expected,
                         detail=f"lhs={acc2} expected={expected}", n=n, r=r)
    return report


# ---------------------------------------------------------------------------
# the oracle battery


def oracle_suite_report(n_max: int, seed: int = 0, cap: int = DEFAULT_CAP,
                        table: JTable | None = None) -> CheckReport:
    """Forest and parking enumerators against the closed-form table.

    Every (n, r) with 1 <= r < n <= n_max whose candidate count fits the cap
    is enumerated; rankings are the increasing, the decreasing, and three
    seeded ones (seeds seed, seed+1, seed+2).  Root sets are varied with n
    to exercise label independence.
    """
    report = CheckReport()
    if table is None or table.n_max < n_max:
        table = build_jtable(max(n_max, 2))
    seeds = [seed, seed + 1, seed + 2]
    rankings = [IncreasingRanking(), DecreasingRanking()] + \
        [SeededRanking(s) for s in seeds]
    ranking_names = ["increasing", "decreasing"] + [f"seeded:{s}" for s in seeds]
    report.add_pass("ranking-seeds", seeds=",".join(str(s) for s in seeds))

    for n in range(2, n_max + 1):
        for r in range(1, n):
            if n ** (n - r) > cap:
                report.add_pass("forest-oracle-skipped-by-cap", n=n, r=r)
                continue
            # rotate the root labels so independence from the label choice
            # is exercised across the suite
            roots = tuple(((r + i + n - 2) % n) + 1 for i in range(r))
            expected = table.entry(n, r)
            expected_rec = reciprocal(n, r, table)
            std = forest_enumerator_polys(n, roots, rankings, "standard", cap)
            rec = forest_enumerator_polys(n, roots, rankings, "reciprocal", cap)
            for name, poly in zip(ranking_names, std):
                report.check("forest-level-enumerator", poly == expected,
                             detail=f"got={poly} expected={expected}",
                             n=n, r=r, ranking=name)
            for name, poly in zip(ranking_names, rec):
                report.check("forest-reciprocal-enumerator", poly == expected_rec,
                             detail=f"got={poly} expected={expected_rec}",
                             n=n, r=r, ranking=name)
            count = std[0].evaluate(1)
            report.check("forest-count", count == r * n ** (n - r - 1),
                         detail=f"got={count}", n=n, r=r)

    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            m = n - r
            if parking_candidates(m, r) > cap:
                report.add_pass("parking-oracle-skipped-by-cap", n=n, r=r)
                continue
            got = parking_enumerator_poly(m, r, cap)
            expected = reciprocal(n, r, table)
            report.check("parking-sum-enumerator", got == expected,
                         detail=f"got={got} expected={expected}", m=m, r=r)

    report.merge(reciprocal_explicit_check(max(n_max, 2)))
    return report


def forests_json_lines(n: int, roots, ranking: Ranking,
                       variant: str = "standard", cap: int = DEFAULT_CAP):
    """One JSON object per accepted forest, with its statistic."""
    stat = level_statistic if variant == "standard" else reciprocal_level_statistic
    for forest in enumerate_forests(n, roots, cap):
        yield json.dumps(forest.to_json_dict(stat(forest, ranking)),
                         separators=(",", ":"))
