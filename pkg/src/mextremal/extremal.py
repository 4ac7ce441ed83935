"""Exact finite-n extremal numbers for colored patterns.

The search assigns every vertex pair, in lexicographic pair order, a subset of
the ``r`` colors. Three prunings keep it tractable at desk scale:

* after each assignment only copies of a pattern that use the new pair are
  looked for (earlier pairs were already checked, and adding colors can
  only create copies, never destroy them);
* an optimistic completion bound (every unassigned pair gets every color);
* color-degree symmetry breaking: once vertices ``a`` and ``a + 1`` have all
  their pairs assigned, their per-color degree vectors must be
  lexicographically non-increasing. Sorting the vertices of any graph by
  that vector gives an isomorphic graph satisfying the rule, so no
  isomorphism class is lost.

Subsets are tried from most colors to fewest (``full, ..., empty``), and the
first witness in that order is returned, which makes results reproducible.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import ColorCountMismatch, PatternHasNoEdge, SearchTooLarge
from .graphcore import ColoredMultigraph, contains_colored

MEX = "mex"
MAX_TOTAL = "max-total-edges"


@dataclass(frozen=True)
class SearchProblem:
    n: int
    r: int
    patterns: tuple[ColoredMultigraph, ...] = ()
    objective: str = MEX

    def __post_init__(self):
        object.__setattr__(self, "patterns", tuple(self.patterns))
        if self.objective not in (MEX, MAX_TOTAL):
            raise ValueError(f"unknown objective {self.objective!r}")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        for i, p in enumerate(self.patterns):
            if p.r != self.r:
                raise ColorCountMismatch(f"pattern {i} has r={p.r}, problem has r={self.r}")
            if p.num_edges == 0:
                raise PatternHasNoEdge(f"pattern {i} has no edges")


@dataclass
class MexResult:
    value: int
    witness: ColoredMultigraph
    exhaustive: bool
    nodes_explored: int = 0
    objective: str = MEX
    decisions: list = field(default_factory=list)  # (threshold, feasible) in query order

    def verify(self, patterns: Sequence[ColoredMultigraph]) -> bool:
        """Re-check the witness against every pattern and the reported value."""
        if any(contains_colored(self.witness, p) is not None for p in patterns):
            return False
        counts = self.witness.edge_counts()
        got = min(counts) if self.objective == MEX else sum(counts)
        return got == self.value


class _Budget(Exception):
    pass


class _PatternIndex:
    """Per-pattern data for copies forced through a given host pair."""

    def __init__(self, p: ColoredMultigraph):
        self.n = p.n
        self.masks = p.masks
        self.cdeg = p.color_degrees
        self.seeds = []  # (pair mask, a, b, order, checks)
        for a, b in p.pairs():
            pm = p.masks[a][b]
            for x, y in ((a, b), (b, a)):
                order, checks = self._order(p, x, y)
                self.seeds.append((pm, x, y, order, checks))

    @staticmethod
    def _order(p, a, b):
        placed = [a, b]
        rest = [v for v in range(p.n) if v not in (a, b) and p.degree(v) > 0]
        order, checks = [], []
        m = p.masks
        while rest:
            v = max(rest, key=lambda v: (sum(1 for u in placed if m[v][u]), p.degree(v), -v))
            rest.remove(v)
            checks.append(tuple((u, m[v][u]) for u in placed if m[v][u]))
            order.append(v)
            placed.append(v)
        return tuple(order), tuple(checks)


def _fits(dx, need) -> bool:
    for h, q in zip(dx, need):
        if h < q:
            return False
    return True


def _extend(i, order, checks, pdeg, phi, used, masks, cdeg, n) -> bool:
    if i == len(order):
        return True
    a = order[i]
    cons = checks[i]
    need = pdeg[a]
    for x in range(n):
        if used[x]:
            continue
        row = masks[x]
        for b, pm in cons:
            if pm & ~row[phi[b]]:
                break
        else:
            if not _fits(cdeg[x], need):
                continue
            phi[a] = x
            used[x] = True
            ok = _extend(i + 1, order, checks, pdeg, phi, used, masks, cdeg, n)
            used[x] = False
            if ok:
                return True
    return False


class _Search:
    def __init__(self, problem: SearchProblem, symmetry: bool = True, node_limit: int | None = None):
        self.n, self.r = problem.n, problem.r
        n = self.n
        self.pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        self.P = len(self.pairs)
        full = (1 << self.r) - 1
        self.values = sorted(range(full + 1), key=lambda m: (-bin(m).count("1"), m))
        self.full = full
        self.patterns = [_PatternIndex(p) for p in problem.patterns if p.n <= n]
        self.symmetry = symmetry
        self.node_limit = node_limit
        self.nodes = 0
        # comparisons to make once pair index i is assigned
        self.row_checks: list[list[int]] = [[] for _ in range(self.P)]
        if symmetry:
            for i, (u, v) in enumerate(self.pairs):
                if v == n - 1:
                    if u >= 1:
                        self.row_checks[i].append(u - 1)
                    if u == n - 2:
                        self.row_checks[i].append(u)

    # -- state -------------------------------------------------------------

    def _reset(self):
        n, r = self.n, self.r
        self.masks = [[0] * n for _ in range(n)]
        self.cdeg = [[0] * r for _ in range(n)]
        self.counts = [0] * r
        self.assign: list[int] = []

    def _set(self, u, v, m, sign):
        self.masks[u][v] = self.masks[v][u] = m if sign > 0 else 0
        du, dv, cnt = self.cdeg[u], self.cdeg[v], self.counts
        c = 0
        while m:
            if m & 1:
                du[c] += sign
                dv[c] += sign
                cnt[c] += sign
            m >>= 1
            c += 1

    def _creates_copy(self, u, v, m) -> bool:
        masks, cdeg, n = self.masks, self.cdeg, self.n
        for pat in self.patterns:
            phi = [-1] * pat.n
            used = [False] * n
            for pm, a, b, order, checks in pat.seeds:
                if pm & ~m:
                    continue
                if not (_fits(cdeg[u], pat.cdeg[a]) and _fits(cdeg[v], pat.cdeg[b])):
                    continue
                phi[a], phi[b] = u, v
                used[u] = used[v] = True
                found = _extend(0, order, checks, pat.cdeg, phi, used, masks, cdeg, n)
                used[u] = used[v] = False
                phi[a] = phi[b] = -1
                if found:
                    return True
        return False

    def _sym_ok(self, i) -> bool:
        cdeg = self.cdeg
        for a in self.row_checks[i]:
            if cdeg[a] < cdeg[a + 1]:
                return False
        return True

    # -- decision ------------------------------------------------------------

    def _choices(self, i, thresholds, total):
        """Values allowed at pair ``i`` by the completion bound, or None to prune."""
        left = self.P - i  # pairs not yet assigned, including pair i
        required = 0
        if thresholds is not None:
            for c, t in enumerate(thresholds):
                slack = self.counts[c] + left - t
                if slack < 0:
                    return None
                if slack == 0:
                    required |= 1 << c
        vals = [m for m in self.values if m & required == required]
        if total is not None:
            have = sum(self.counts)
            rest = self.r * (left - 1)
            vals = [m for m in vals if have + bin(m).count("1") + rest >= total]
        return vals

    def _place(self, i, m) -> bool:
        """Assign value ``m`` to pair ``i``; False (and undone) if it breaks a rule."""
        u, v = self.pairs[i]
        self._set(u, v, m, +1)
        self.assign.append(m)
        if (m and self._creates_copy(u, v, m)) or not self._sym_ok(i):
            self._unplace(i)
            return False
        return True

    def _unplace(self, i):
        u, v = self.pairs[i]
        m = self.assign.pop()
        self._set(u, v, m, -1)

    def _dfs(self, i, thresholds, total, stop_depth=None, sink=None) -> bool:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Budget
        if stop_depth is not None and i == stop_depth:
            sink.append(tuple(self.assign))
            return False
        if i == self.P:
            return True
        vals = self._choices(i, thresholds, total)
        if not vals:
            return False
        good: list[int] = []  # values known copy-free at this node
        for m in vals:
            u, v = self.pairs[i]
            if m and not any(m & g == m for g in good):
                self._set(u, v, m, +1)
                bad = self._creates_copy(u, v, m)
                self._set(u, v, m, -1)
                if bad:
                    continue
                good.append(m)
            self._set(u, v, m, +1)
            self.assign.append(m)
            if self._sym_ok(i):
                if self._dfs(i + 1, thresholds, total, stop_depth, sink):
                    return True
            self.assign.pop()
            self._set(u, v, m, -1)
        return False

    def _replay(self, prefix) -> bool:
        for i, m in enumerate(prefix):
            if not self._place(i, m):
                return False
        return True

    def decide(self, thresholds=None, total=None, prefix=()) -> list[int] | None:
        """Pair values of the first feasible assignment extending ``prefix``."""
        self._reset()
        if not self._replay(prefix):
            return None
        if self._dfs(len(prefix), thresholds, total):
            return list(self.assign)
        return None

    def prefixes(self, depth, thresholds=None, total=None) -> list[tuple[int, ...]]:
        self._reset()
        sink: list = []
        self._dfs(0, thresholds, total, stop_depth=min(depth, self.P), sink=sink)
        return sink

    def graph(self, values) -> ColoredMultigraph:
        return ColoredMultigraph.from_masks(self.n, self.r, dict(zip(self.pairs, values)))


def _subtree(problem, symmetry, thresholds, total, prefix):
    s = _Search(problem, symmetry)
    found = s.decide(thresholds, total, prefix)
    return found, s.nodes


def _workers(threads: int | None) -> int:
    if threads is None:
        threads = int(os.environ.get("MEXTREMAL_THREADS", "1") or 1)
    return max(1, threads)


def _decide(problem, thresholds, total, symmetry, node_limit, threads):
    """Returns ``(values or None, nodes explored, search object)``."""
    workers = _workers(threads)
    s = _Search(problem, symmetry, node_limit)
    if workers == 1 or s.P < 4:
        return s.decide(thresholds, total), s.nodes, s
    # split the top of the tree; scanning results in prefix order keeps the
    # answer identical to the sequential search
    depth = 1
    while (1 << s.r) ** depth < 4 * workers and depth < s.P - 1:
        depth += 1
    tops = s.prefixes(depth, thresholds, total)
    nodes = s.nodes
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futs = [pool.submit(_subtree, problem, symmetry, thresholds, total, p) for p in tops]
        found = None
        for k, fut in enumerate(futs):
            res, cnt = fut.result()
            nodes += cnt
            if res is not None:
                found = res
                for f in futs[k + 1:]:
                    f.cancel()
                break
    return found, nodes, s


def _problem(n, r, patterns, objective):
    return SearchProblem(n, r, tuple(patterns), objective)


def decision_avoidable(
    n: int,
    r: int,
    patterns: Sequence[ColoredMultigraph],
    thresholds: Sequence[int],
    *,
    symmetry: bool = True,
    node_limit: int | None = None,
    threads: int | None = None,
) -> ColoredMultigraph | None:
    """A pattern-free ``r``-colored multigraph on ``n`` vertices with at least
    ``thresholds[c - 1]`` edges of each color ``c``, or None if there is none.

    Raises SearchTooLarge when ``node_limit`` runs out before an answer.
    """
    problem = _problem(n, r, patterns, MEX)
    if len(thresholds) != r:
        raise ValueError(f"need {r} thresholds, got {len(thresholds)}")
    P = comb(n, 2)
    if any(t > P for t in thresholds):
        return None
    try:
        vals, _, s = _decide(problem, tuple(thresholds), None, symmetry, node_limit, threads)
    except _Budget:
        raise SearchTooLarge(f"node limit {node_limit} exhausted") from None
    return None if vals is None else s.graph(vals)


def _optimize(problem, symmetry, node_limit, threads) -> MexResult:
    n, r = problem.n, problem.r
    P = comb(n, 2)
    mex = problem.objective == MEX

    def query(t):
        if mex:
            return _decide(problem, (t,) * r, None, symmetry, node_limit, threads)
        return _decide(problem, None, t, symmetry, node_limit, threads)

    def score(g):
        return min(g.edge_counts()) if mex else g.num_edges

    nodes = 0
    decisions = []
    exhaustive = True
    try:
        vals, cnt, s = query(0)
    except _Budget:
        raise SearchTooLarge(f"node limit {node_limit} exhausted before any witness") from None
    nodes += cnt
    best = s.graph(vals)
    decisions.append((0, True))
    lo, hi = score(best), (P if mex else r * P)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        try:
            vals, cnt, s = query(mid)
        except _Budget:
            exhaustive = False
            break
        nodes += cnt
        decisions.append((mid, vals is not None))
        if vals is None:
            hi = mid - 1
        else:
            best = s.graph(vals)
            lo = score(best)
    return MexResult(score(best), best, exhaustive, nodes, problem.objective, decisions)


def mex_exact(
    n: int,
    r: int,
    patterns: Sequence[ColoredMultigraph],
    *,
    symmetry: bool = True,
    node_limit: int | None = None,
    threads: int | None = None,
) -> MexResult:
    """Largest ``T`` such that some pattern-free ``r``-colored multigraph on
    ``n`` vertices has at least ``T`` edges in every color.

    Binary search on ``T`` over :func:`decision_avoidable`. If ``node_limit``
    runs out mid-search the best value found so far is returned with
    ``exhaustive=False``.
    """
    return _optimize(_problem(n, r, patterns, MEX), symmetry, node_limit, threads)


def max_edges_avoiding(
    n: int,
    r: int,
    patterns: Sequence[ColoredMultigraph],
    *,
    symmetry: bool = True,
    node_limit: int | None = None,
    threads: int | None = None,
) -> MexResult:
    """Largest total edge count (summed over colors) of a pattern-free
    ``r``-colored multigraph on ``n`` vertices."""
    return _optimize(_problem(n, r, patterns, MAX_TOTAL), symmetry, node_limit, threads)
