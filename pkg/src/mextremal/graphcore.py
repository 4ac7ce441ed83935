"""Edge-colored multigraphs, colored containment and colored homomorphisms.

Vertices are ``0..n-1`` and colors are ``1..r``. A vertex pair carries a
subset of the colors; internally that subset is stored as a bitmask with bit
``c - 1`` set when color ``c`` is present.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ColorCountMismatch, ColorOutOfRange, Loop, VertexOutOfRange

Pair = tuple[int, int]


def color_mask(colors: Iterable[int]) -> int:
    m = 0
    for c in colors:
        m |= 1 << (c - 1)
    return m


def mask_colors(mask: int) -> tuple[int, ...]:
    out = []
    c = 1
    while mask:
        if mask & 1:
            out.append(c)
        mask >>= 1
        c += 1
    return tuple(out)


@dataclass(frozen=True)
class ColoredMultigraph:
    """An ``r``-edge-colored multigraph on ``n`` vertices.

    ``edges[c - 1]`` is the set of unordered pairs ``(u, v)`` with ``u < v``
    carrying color ``c``. Construction normalizes pair orientation and
    validates everything else, so an instance that exists is valid.
    """

    n: int
    r: int
    edges: tuple[frozenset[Pair], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise VertexOutOfRange(f"negative vertex count {self.n}")
        if self.r < 1:
            raise ColorOutOfRange(f"need at least one color, got r={self.r}")
        if len(self.edges) > self.r:
            raise ColorOutOfRange(f"color {len(self.edges)} out of range 1..{self.r}")
        norm = []
        for c in range(self.r):
            cls = self.edges[c] if c < len(self.edges) else ()
            pairs = set()
            for u, v in cls:
                _check_pair(u, v, c + 1, self.n, self.r)
                pairs.add((u, v) if u < v else (v, u))
            norm.append(frozenset(pairs))
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, r: int, triples: Iterable[tuple[int, int, int]]) -> "ColoredMultigraph":
        """Build from ``(u, v, c)`` triples."""
        classes: list[set[Pair]] = [set() for _ in range(r)]
        for u, v, c in triples:
            _check_pair(u, v, c, n, r)
            classes[c - 1].add((u, v) if u < v else (v, u))
        return cls(n, r, tuple(frozenset(s) for s in classes))

    @classmethod
    def from_masks(cls, n: int, r: int, masks) -> "ColoredMultigraph":
        """Build from an ``n x n`` (symmetric) bitmask matrix or a ``{pair: mask}`` dict."""
        if isinstance(masks, dict):
            items = masks.items()
        else:
            items = (((u, v), masks[u][v]) for u in range(n) for v in range(u + 1, n))
        triples = [(u, v, c) for (u, v), m in items for c in mask_colors(m)]
        return cls.from_edges(n, r, triples)

    # -- derived data -------------------------------------------------------

    @cached_property
    def masks(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric ``n x n`` matrix of color bitmasks (zero diagonal)."""
        rows = [[0] * self.n for _ in range(self.n)]
        for c, cls in enumerate(self.edges):
            bit = 1 << c
            for u, v in cls:
                rows[u][v] |= bit
                rows[v][u] |= bit
        return tuple(tuple(row) for row in rows)

    @cached_property
    def color_degrees(self) -> tuple[tuple[int, ...], ...]:
        """``color_degrees[v][c - 1]`` is the number of color-``c`` edges at ``v``."""
        deg = [[0] * self.r for _ in range(self.n)]
        for c, cls in enumerate(self.edges):
            for u, v in cls:
                deg[u][c] += 1
                deg[v][c] += 1
        return tuple(tuple(d) for d in deg)

    def mask(self, u: int, v: int) -> int:
        return self.masks[u][v]

    def colors(self, u: int, v: int) -> frozenset[int]:
        return frozenset(mask_colors(self.masks[u][v]))

    def degree(self, v: int) -> int:
        """Total colored degree (a double edge counts twice)."""
        return sum(self.color_degrees[v])

    def edge_count(self, c: int) -> int:
        return len(self.edges[c - 1])

    def edge_counts(self) -> tuple[int, ...]:
        return tuple(len(cls) for cls in self.edges)

    @property
    def num_edges(self) -> int:
        return sum(len(cls) for cls in self.edges)

    def pairs(self) -> list[Pair]:
        """Vertex pairs carrying at least one color, in lex order."""
        m = self.masks
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if m[u][v]]

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((u, v, c + 1) for c, cls in enumerate(self.edges) for u, v in cls)

    def relabel(self, perm: Sequence[int]) -> "ColoredMultigraph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return ColoredMultigraph.from_edges(self.n, self.r, ((perm[u], perm[v], c) for u, v, c in self.triples()))

    def permute_colors(self, perm: Sequence[int]) -> "ColoredMultigraph":
        """Color ``c`` becomes ``perm[c - 1]``."""
        return ColoredMultigraph.from_edges(self.n, self.r, ((u, v, perm[c - 1]) for u, v, c in self.triples()))

    def induced(self, vertices: Sequence[int]) -> "ColoredMultigraph":
        """Induced sub-multigraph; ``vertices[i]`` becomes vertex ``i``."""
        m = self.masks
        k = len(vertices)
        sub = {
            (i, j): m[vertices[i]][vertices[j]]
            for i in range(k)
            for j in range(i + 1, k)
            if m[vertices[i]][vertices[j]]
        }
        return ColoredMultigraph.from_masks(k, self.r, sub)

    def __repr__(self) -> str:
        return f"ColoredMultigraph(n={self.n}, r={self.r}, edges={self.triples()})"


def _check_pair(u: int, v: int, c: int, n: int, r: int) -> None:
    if u == v:
        raise Loop(f"loop at pair ({u}, {v}) color {c}")
    if not (1 <= c <= r):
        raise ColorOutOfRange(f"pair ({u}, {v}) has color {c}, outside 1..{r}")
    if not (0 <= u < n and 0 <= v < n):
        raise VertexOutOfRange(f"pair ({u}, {v}) has a vertex outside 0..{n - 1}")


def validate(g: ColoredMultigraph) -> None:
    """Re-check every invariant of ``g``; raises the matching GraphError."""
    if len(g.edges) != g.r:
        raise ColorOutOfRange(f"expected {g.r} color classes, found {len(g.edges)}")
    for c, cls in enumerate(g.edges, start=1):
        for u, v in cls:
            _check_pair(u, v, c, g.n, g.r)
            if u > v:
                raise VertexOutOfRange(f"pair ({u}, {v}) is not normalized")


def underlying_simple(g: ColoredMultigraph) -> ColoredMultigraph:
    """Single-color graph whose pairs are those carrying any color in ``g``."""
    return ColoredMultigraph(g.n, 1, (frozenset(g.pairs()),))


def blow_up(g: ColoredMultigraph, s: int) -> ColoredMultigraph:
    """Replace each vertex ``v`` by the independent set ``v*s .. v*s+s-1``."""
    if s < 1:
        raise ValueError(f"blow-up size must be positive, got {s}")
    triples = [
        (u * s + i, v * s + j, c)
        for u, v, c in g.triples()
        for i in range(s)
        for j in range(s)
    ]
    return ColoredMultigraph.from_edges(g.n * s, g.r, triples)


# -- witnesses ---------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Injective map ``pattern vertex i -> mapping[i]`` into a host."""

    mapping: tuple[int, ...]

    def check(self, pattern: ColoredMultigraph, host: ColoredMultigraph) -> bool:
        if len(self.mapping) != pattern.n or len(set(self.mapping)) != pattern.n:
            return False
        if any(not 0 <= x < host.n for x in self.mapping):
            return False
        return _edges_preserved(self.mapping, pattern, host)


@dataclass(frozen=True)
class HomWitness:
    """Colored homomorphism ``pattern vertex i -> mapping[i]``."""

    mapping: tuple[int, ...]

    def check(self, pattern: ColoredMultigraph, target: ColoredMultigraph) -> bool:
        if len(self.mapping) != pattern.n or any(not 0 <= x < target.n for x in self.mapping):
            return False
        return _edges_preserved(self.mapping, pattern, target)


def _edges_preserved(phi, pattern, host) -> bool:
    pm, hm = pattern.masks, host.masks
    for u, v in pattern.pairs():
        a, b = phi[u], phi[v]
        if a == b or pm[u][v] & ~hm[a][b]:
            return False
    return True


# -- search ------------------------------------------------------------------


def _backtrack(order, pmasks, hmasks, hn, phi, used, candidates, injective) -> bool:
    """Extend the partial map ``phi`` (``-1`` = unmapped) along ``order``.

    ``candidates[a]`` lists allowed images of pattern vertex ``a`` in the order
    they are tried. ``used`` tracks host vertices taken (only consulted when
    ``injective``). On success ``phi`` holds the full map.
    """
    placed = {a for a, x in enumerate(phi) if x >= 0}
    checks = []
    for a in order:
        row = pmasks[a]
        checks.append([(b, row[b]) for b in placed if row[b]])
        placed.add(a)
    depth = len(order)

    def rec(i: int) -> bool:
        if i == depth:
            return True
        a = order[i]
        cons = checks[i]
        for x in candidates[a]:
            if injective and used[x]:
                continue
            hrow = hmasks[x]
            for b, pm in cons:
                if pm & ~hrow[phi[b]]:
                    break
            else:
                phi[a] = x
                if injective:
                    used[x] = True
                if rec(i + 1):
                    return True
                if injective:
                    used[x] = False
                phi[a] = -1
        return False

    return rec(0)


def degree_order(g: ColoredMultigraph) -> list[int]:
    """Vertices by descending total degree, ties by index."""
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def contains_colored(host: ColoredMultigraph, pattern: ColoredMultigraph) -> Embedding | None:
    """Find a copy of ``pattern`` in ``host``.

    A copy is an injective vertex map under which every color-``c`` edge of
    the pattern lands on a host pair carrying color ``c``. Isolated pattern
    vertices still consume distinct host vertices.
    """
    if host.r != pattern.r:
        raise ColorCountMismatch(f"host has r={host.r}, pattern has r={pattern.r}")
    if pattern.n > host.n:
        return None
    hdeg, pdeg = host.color_degrees, pattern.color_degrees
    candidates = [
        [x for x in range(host.n) if all(h >= p for h, p in zip(hdeg[x], pdeg[a]))]
        for a in range(pattern.n)
    ]
    phi = [-1] * pattern.n
    used = [False] * host.n
    if _backtrack(degree_order(pattern), pattern.masks, host.masks, host.n, phi, used, candidates, True):
        return Embedding(tuple(phi))
    return None


def hom_exists(pattern: ColoredMultigraph, target: ColoredMultigraph) -> HomWitness | None:
    """Find a colored homomorphism from ``pattern`` to ``target``.

    Adjacent pattern vertices must land on distinct target vertices joined by
    every color they use; non-adjacent vertices may share an image.
    """
    if pattern.r != target.r:
        raise ColorCountMismatch(f"pattern has r={pattern.r}, target has r={target.r}")
    if pattern.n == 0:
        return HomWitness(())
    if target.n == 0:
        return None
    candidates = [list(range(target.n))] * pattern.n
    phi = [-1] * pattern.n
    if _backtrack(degree_order(pattern), pattern.masks, target.masks, target.n, phi, None, candidates, False):
        return HomWitness(tuple(phi))
    return None
