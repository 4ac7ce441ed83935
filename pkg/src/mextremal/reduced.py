"""Quotients by proper partitions and the reduced maximum matching number."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .coloring import Partition, chromatic_number, enumerate_proper_partitions
from .errors import ImproperPartition
from .graphcore import ColoredMultigraph, hom_exists, mask_colors


@dataclass(frozen=True)
class ReducedGraph:
    """Quotient of a graph by a proper partition.

    ``base`` has one vertex per class; ``colorsets[(i, j)]`` (``i < j``) holds
    exactly the colors of source edges running between classes ``i`` and ``j``.
    """

    base: ColoredMultigraph
    partition: Partition
    colorsets: dict

    def multiplicity(self, i: int, j: int) -> int:
        return len(self.colorsets.get((min(i, j), max(i, j)), ()))


@dataclass(frozen=True)
class MatchingResult:
    size: int
    edges: tuple[tuple[int, int, int], ...]  # (class i, class j, the single color)


def quotient(g: ColoredMultigraph, p: Partition) -> ReducedGraph:
    if p.n != g.n:
        raise ImproperPartition(f"partition covers {p.n} vertices, graph has {g.n}")
    bad = p.violation(g)
    if bad is not None:
        i, (u, v) = bad
        raise ImproperPartition(f"class {i} {p.classes[i]} contains edge ({u}, {v})")
    lab = p.labels()
    m = g.masks
    agg: dict[tuple[int, int], int] = {}
    for u, v in g.pairs():
        a, b = lab[u], lab[v]
        key = (a, b) if a < b else (b, a)
        agg[key] = agg.get(key, 0) | m[u][v]
    base = ColoredMultigraph.from_masks(p.k, g.r, agg)
    colorsets = {key: frozenset(mask_colors(mask)) for key, mask in agg.items()}
    return ReducedGraph(base, p, colorsets)


def multiplicity_one_matching(rg: ReducedGraph) -> MatchingResult:
    """Maximum matching among class pairs joined by exactly one color.

    Exhaustive over vertex subsets with memoization; intended for the class
    counts of chromatic partitions (a dozen or so).
    """
    k = rg.base.n
    single = {}
    for (i, j), cs in rg.colorsets.items():
        if len(cs) == 1:
            single[(i, j)] = next(iter(cs))
    nbrs = [[j for j in range(k) if (min(i, j), max(i, j)) in single] for i in range(k)]

    @lru_cache(maxsize=None)
    def best(avail: int) -> tuple[int, tuple]:
        if avail == 0:
            return 0, ()
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        top = best(rest)
        for u in nbrs[v]:
            if rest >> u & 1:
                size, edges = best(rest & ~(1 << u))
                if size + 1 > top[0]:
                    top = (size + 1, ((v, u, single[(v, u)]),) + edges)
        return top

    size, edges = best((1 << k) - 1)
    return MatchingResult(size, tuple(sorted(edges)))


def reduced_max_matching(g: ColoredMultigraph) -> tuple[int, tuple[Partition, MatchingResult]]:
    """The reduced maximum matching number of ``g`` with a witnessing partition.

    Maximizes the multiplicity-one matching over the quotients of all proper
    ``chi(g)``-partitions; the witness is the first maximizer in enumeration
    order.
    """
    chi = chromatic_number(g)
    cap = chi // 2
    best_val, witness = -1, None
    for p in enumerate_proper_partitions(g, chi):
        mr = multiplicity_one_matching(quotient(g, p))
        if mr.size > best_val:
            best_val, witness = mr.size, (p, mr)
            if best_val == cap:
                break
    return best_val, witness


def is_reduced(target: ColoredMultigraph, g: ColoredMultigraph) -> bool:
    """Whether ``target`` is a reduced graph of ``g``.

    Requires a colored homomorphism ``g -> target`` (its fibers are then
    automatically independent) and none into any proper induced subgraph.
    Homomorphisms into an induced subgraph are also homomorphisms into every
    larger induced subgraph, so only the one-vertex deletions are checked.
    """
    if hom_exists(g, target) is None:
        return False
    for x in range(target.n):
        rest = [v for v in range(target.n) if v != x]
        if hom_exists(g, target.induced(rest)) is not None:
            return False
    return True
