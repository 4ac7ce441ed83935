"""Exact vertex coloring of the underlying simple graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import EmptyVertexSet
from .graphcore import ColoredMultigraph


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty vertex classes covering ``0..n-1``.

    Classes are sorted internally and ordered by least element, so two
    partitions are equal exactly when they group vertices the same way.
    """

    classes: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cls = sorted((tuple(sorted(c)) for c in self.classes), key=lambda c: c[0] if c else -1)
        if any(not c for c in cls):
            raise ValueError("partition classes must be nonempty")
        flat = [v for c in cls for v in c]
        if sorted(flat) != list(range(len(flat))):
            raise ValueError(f"classes {cls} do not partition 0..{len(flat) - 1}")
        object.__setattr__(self, "classes", tuple(cls))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        groups: dict[int, list[int]] = {}
        for v, lab in enumerate(labels):
            groups.setdefault(lab, []).append(v)
        return cls(tuple(tuple(g) for g in groups.values()))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.classes)

    @property
    def k(self) -> int:
        return len(self.classes)

    def labels(self) -> tuple[int, ...]:
        """``labels()[v]`` is the index of the class containing ``v``."""
        lab = [0] * self.n
        for i, c in enumerate(self.classes):
            for v in c:
                lab[v] = i
        return tuple(lab)

    def violation(self, g: ColoredMultigraph) -> tuple[int, tuple[int, int]] | None:
        """First ``(class index, edge)`` with both ends in one class, if any."""
        m = g.masks
        for i, c in enumerate(self.classes):
            for a in range(len(c)):
                for b in range(a + 1, len(c)):
                    if m[c[a]][c[b]]:
                        return i, (c[a], c[b])
        return None

    def is_proper(self, g: ColoredMultigraph) -> bool:
        return self.n == g.n and self.violation(g) is None


def _adjacency(g: ColoredMultigraph) -> list[int]:
    """Neighbor bitsets of the underlying simple graph."""
    m = g.masks
    adj = [0] * g.n
    for u in range(g.n):
        row = m[u]
        for v in range(g.n):
            if row[v]:
                adj[u] |= 1 << v
    return adj


def _greedy_clique(adj: list[int], n: int) -> list[int]:
    best: list[int] = []
    for start in sorted(range(n), key=lambda v: -bin(adj[v]).count("1")):
        clique = [start]
        cand = adj[start]
        while cand:
            v = max((u for u in range(n) if cand >> u & 1), key=lambda u: bin(adj[u] & cand).count("1"))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return best


def optimal_coloring(g: ColoredMultigraph) -> tuple[int, ...]:
    """A proper coloring with the fewest colors, as labels ``0..chi-1``.

    DSATUR branch and bound: a greedy DSATUR pass gives the first upper
    bound, a greedy clique (precolored) gives the lower bound.
    """
    n = g.n
    if n == 0:
        raise EmptyVertexSet("graph has no vertices")
    adj = _adjacency(g)
    deg = [bin(a).count("1") for a in adj]

    clique = _greedy_clique(adj, n)
    lower = len(clique)

    best_count = n + 1
    best: list[int] = list(range(n))

    colors = [-1] * n
    for i, v in enumerate(clique):
        colors[v] = i

    def pick() -> int:
        top, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            nb = adj[v]
            sat = len({colors[u] for u in range(n) if nb >> u & 1 and colors[u] >= 0})
            k = (sat, deg[v], -v)
            if key is None or k > key:
                top, key = v, k
        return top

    def rec(used: int, left: int) -> bool:
        nonlocal best_count, best
        if used >= best_count:
            return False
        if left == 0:
            if used < best_count:
                best_count, best = used, colors[:]
            return best_count == lower
        v = pick()
        forbidden = {colors[u] for u in range(n) if adj[v] >> u & 1}
        for c in range(used):
            if c not in forbidden:
                colors[v] = c
                if rec(used, left - 1):
                    return True
        if used + 1 < best_count:
            colors[v] = used
            if rec(used + 1, left - 1):
                return True
        colors[v] = -1
        return False

    rec(lower, n - len(clique))
    # relabel so the result is a canonical labeling by first occurrence
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(c, len(seen)) for c in best)


def chromatic_number(g: ColoredMultigraph) -> int:
    """Chromatic number of the underlying simple graph of ``g``."""
    return max(optimal_coloring(g)) + 1


def enumerate_proper_partitions(g: ColoredMultigraph, k: int) -> Iterator[Partition]:
    """Yield every partition of the vertices into exactly ``k`` independent classes.

    Partitions are generated as restricted growth strings (vertex 0 in class
    0, each later vertex in an existing class or the next new one), so each
    unordered partition appears once, in lexicographic RGS order.
    """
    n = g.n
    if k < 1 or k > n:
        return
    adj = _adjacency(g)
    labels = [0] * n
    members = [0] * k  # bitset of vertices per class

    def rec(v: int, used: int) -> Iterator[Partition]:
        if v == n:
            if used == k:
                yield Partition.from_labels(labels)
            return
        if k - used > n - v:
            return
        for c in range(min(used + 1, k)):
            if members[c] & adj[v]:
                continue
            labels[v] = c
            members[c] |= 1 << v
            yield from rec(v + 1, max(used, c + 1))
            members[c] &= ~(1 << v)

    yield from rec(0, 0)
