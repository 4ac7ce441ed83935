"""Explicit graphs: Turán graphs, 1-factorizations, colored gadgets, the
high-chromatic pattern family and the extremal host family built against it,
and the small bicolored triangles and cycles."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import LengthMismatch, NotCompleteBipartite, OddR, SearchTooLarge
from .graphcore import ColoredMultigraph

RED, BLUE = 1, 2
_LETTERS = {"R": RED, "B": BLUE}


def turan_graph(n: int, parts: int) -> ColoredMultigraph:
    """Complete ``parts``-partite graph on ``n`` vertices with balanced parts.

    Vertex ``v`` lies in part ``v % parts``.
    """
    if not 1 <= parts <= n:
        raise ValueError(f"need 1 <= parts <= n, got parts={parts}, n={n}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if u % parts != v % parts]
    return ColoredMultigraph(n, 1, (frozenset(pairs),))


@dataclass(frozen=True)
class OneFactorization:
    r: int
    classes: tuple[tuple[tuple[int, int], ...], ...]  # classes[i - 1] is color i

    def color_of(self, y: int, y2: int) -> int:
        key = (min(y, y2), max(y, y2))
        for i, cls in enumerate(self.classes, start=1):
            if key in cls:
                return i
        raise KeyError(key)

    def is_valid(self) -> bool:
        seen = set()
        for cls in self.classes:
            covered = [v for e in cls for v in e]
            if sorted(covered) != list(range(self.r)):
                return False
            seen.update(cls)
        total = sum(len(c) for c in self.classes)
        return total == len(seen) == self.r * (self.r - 1) // 2


def one_factorization(r: int) -> OneFactorization:
    """Round-robin 1-factorization of ``K_r`` (``r`` even) into ``r - 1`` perfect matchings.

    Vertex ``r - 1`` is fixed; in round ``i`` it meets ``i`` and the others
    pair up as ``(i - d, i + d) mod (r - 1)``.
    """
    if r < 2 or r % 2:
        raise OddR(f"1-factorization needs an even r >= 2, got {r}")
    q = r - 1
    classes = []
    for i in range(q):
        cls = [(i, q)]
        for d in range(1, r // 2):
            a, b = (i - d) % q, (i + d) % q
            cls.append((min(a, b), max(a, b)))
        classes.append(tuple(sorted(cls)))
    return OneFactorization(r, tuple(classes))


# -- gadgets -------------------------------------------------------------------


@dataclass(frozen=True)
class GadgetSpec:
    t: int
    r: int
    s: int
    seed: int | str = 0

    def __post_init__(self):
        if not 1 <= self.s <= self.t:
            raise ValueError(f"need 1 <= s <= t, got s={self.s}, t={self.t}")


def bipartite_from_matrix(colors: Sequence[Sequence[int]], r: int) -> ColoredMultigraph:
    """``K_{t,t}`` with sides ``0..t-1`` and ``t..2t-1``; pair ``(i, t + j)`` gets ``colors[i][j]``."""
    t = len(colors)
    return ColoredMultigraph.from_edges(
        2 * t, r, [(i, t + j, colors[i][j]) for i in range(t) for j in range(t)]
    )


def gadget_coloring(spec: GadgetSpec) -> ColoredMultigraph:
    """``K_{t,t}`` with each cross pair colored uniformly at random (seeded)."""
    rng = random.Random(spec.seed)
    mat = [[rng.randint(1, spec.r) for _ in range(spec.t)] for _ in range(spec.t)]
    return bipartite_from_matrix(mat, spec.r)


def gadget_cyclic3() -> ColoredMultigraph:
    """The 3x3 two-color gadget: color 2 on ``(i, i+1 mod 3)``, color 1 elsewhere.

    Every 2x2 sub-grid sees both colors.
    """
    mat = [[BLUE if j == (i + 1) % 3 else RED for j in range(3)] for i in range(3)]
    return bipartite_from_matrix(mat, 2)


def gadget_monochromatic(t: int, r: int, color: int = RED) -> ColoredMultigraph:
    return bipartite_from_matrix([[color] * t for _ in range(t)], r)


def gadget_checkerboard(t: int) -> ColoredMultigraph:
    """Two colors by parity of ``i + j``."""
    return bipartite_from_matrix([[RED if (i + j) % 2 == 0 else BLUE for j in range(t)] for i in range(t)], 2)


def bipartite_sides(F: ColoredMultigraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Sides ``(X, Y)`` of a complete bipartite ``F`` with ``|X| = |Y|``; ``0 in X``."""
    if F.n == 0 or F.n % 2:
        raise NotCompleteBipartite(f"need an even positive vertex count, got {F.n}")
    m = F.masks
    Y = tuple(v for v in range(F.n) if m[0][v])
    X = tuple(v for v in range(F.n) if not m[0][v])
    if len(X) != len(Y):
        raise NotCompleteBipartite(f"sides have sizes {len(X)} and {len(Y)}")
    for side in (X, Y):
        for a, b in combinations(side, 2):
            if m[a][b]:
                raise NotCompleteBipartite(f"edge ({a}, {b}) inside a side")
    for x in X:
        for y in Y:
            if not m[x][y]:
                raise NotCompleteBipartite(f"cross pair ({x}, {y}) missing")
    return X, Y


@dataclass(frozen=True)
class GadgetCheck:
    passed: bool
    rows: tuple[int, ...] = ()  # positions within side X of a violating subset
    cols: tuple[int, ...] = ()  # positions within side Y
    missing: tuple[int, ...] = ()  # colors absent from that sub-grid
    checked: int = 0

    def __bool__(self) -> bool:
        return self.passed


EXACT_LIMIT = 10**7


def verify_gadget(
    F: ColoredMultigraph,
    s: int,
    mode: str = "exact",
    trials: int = 1000,
    seed: int = 0,
) -> GadgetCheck:
    """Check that every ``s x s`` side-subset pair of ``F`` spans all ``r`` colors.

    ``mode="exact"`` checks all ``C(t, s)**2`` pairs in lexicographic order
    (refused above ``EXACT_LIMIT``); ``mode="sampled"`` checks ``trials``
    uniformly random pairs. A failure reports the first violating pair found.
    """
    X, Y = bipartite_sides(F)
    t = len(X)
    if not 1 <= s <= t:
        raise ValueError(f"need 1 <= s <= t, got s={s}, t={t}")
    m = F.masks
    full = (1 << F.r) - 1
    grid = [[m[x][y] for y in Y] for x in X]

    def seen(rows, cols) -> int:
        acc = 0
        for i in rows:
            row = grid[i]
            for j in cols:
                acc |= row[j]
                if acc == full:
                    return acc
        return acc

    def fail(rows, cols, acc, k):
        missing = tuple(c for c in range(1, F.r + 1) if not acc >> (c - 1) & 1)
        return GadgetCheck(False, tuple(rows), tuple(cols), missing, k)

    if mode == "exact":
        total = math.comb(t, s) ** 2
        if total > EXACT_LIMIT:
            raise SearchTooLarge(f"exact check needs {total} sub-grids; use sampled mode")
        subsets = list(combinations(range(t), s))
        k = 0
        for rows in subsets:
            for cols in subsets:
                k += 1
                acc = seen(rows, cols)
                if acc != full:
                    return fail(rows, cols, acc, k)
        return GadgetCheck(True, checked=k)
    if mode == "sampled":
        rng = random.Random(seed)
        for k in range(1, trials + 1):
            rows = tuple(sorted(rng.sample(range(t), s)))
            cols = tuple(sorted(rng.sample(range(t), s)))
            acc = seen(rows, cols)
            if acc != full:
                return fail(rows, cols, acc, k)
        return GadgetCheck(True, checked=trials)
    raise ValueError(f"unknown mode {mode!r}")


def gadget_threshold(t: int, r: int, k: int, exponent: int | None = None) -> int:
    """Subset size ``ceil(t / (r*k)**exponent)``; ``exponent`` defaults to ``k``."""
    e = k if exponent is None else exponent
    return max(1, -(-t // (r * k) ** e))


def gadget_failure_bound(r: int, k: int, t: int) -> float:
    """Union bound on the expected number of bad subset pairs in a random gadget:
    ``r * C(t, s)**2 * ((r-1)/r)**((t/(r*k))**2)`` with ``s = ceil(t/(r*k)**k)``.

    Evaluated in log space; a value below 1 means some coloring of ``K_{t,t}``
    works.
    """
    s = gadget_threshold(t, r, k)
    log_val = math.log(r) + 2 * _log_comb(t, s)
    if r > 1:
        log_val += (t / (r * k)) ** 2 * math.log((r - 1) / r)
    else:
        return 0.0
    return math.exp(log_val) if log_val < 700 else math.inf


def gadget_failure_estimate(r: int, k: int, t: int) -> float:
    """The simplified form ``r * (e*r*k)**(2t/(r*k)**k) * exp(-t**2 / (r**3 * k**2))``."""
    log_val = math.log(r) + (2 * t / (r * k) ** k) * math.log(math.e * r * k) - t * t / (r**3 * k**2)
    return math.exp(log_val) if log_val < 700 else math.inf


def gadget_union_bound(r: int, t: int, s: int) -> float:
    """Expected number of ``s x s`` sub-grids missing a color in a uniformly
    random ``r``-coloring of ``K_{t,t}``, bounded by
    ``r * C(t, s)**2 * ((r-1)/r)**(s*s)``.

    Unlike :func:`gadget_failure_bound` the exponent matches the subset size,
    so a value below 1 really does certify that a good gadget exists.
    """
    if r == 1:
        return 0.0
    log_val = math.log(r) + 2 * _log_comb(t, s) + s * s * math.log((r - 1) / r)
    return math.exp(log_val) if log_val < 700 else math.inf


def _log_comb(n: int, k: int) -> float:
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def smallest_good_t(r: int, k: int, t_max: int = 10**6, consistent: bool = False) -> int | None:
    """Least ``t`` (scanning upward) whose failure bound drops below 1.

    ``consistent=False`` scans :func:`gadget_failure_bound`; ``True`` scans
    :func:`gadget_union_bound` at ``s = gadget_threshold(t, r, k)``.
    """
    for t in range(1, t_max + 1):
        if consistent:
            val = gadget_union_bound(r, t, gadget_threshold(t, r, k))
        else:
            val = gadget_failure_bound(r, k, t)
        if val < 1:
            return t
    return None


# -- the pattern H(r, k) and its padding H' ----------------------------------


def graph_H(
    r: int,
    k: int,
    t: int,
    gadget: ColoredMultigraph | None = None,
    seed: int = 0,
) -> ColoredMultigraph:
    """Complete ``k``-partite graph with parts of size ``t``, a gadget between each pair of parts.

    Vertex ``v_{i,j}`` (``i < t`` inside part ``j``) is ``j*t + i``. With
    ``gadget`` given it is copied onto every pair of parts; otherwise each pair
    gets its own random coloring seeded from ``(seed, j, j')``.
    """
    if k < 2 or t < 1:
        raise ValueError(f"need k >= 2 and t >= 1, got k={k}, t={t}")
    if gadget is not None:
        if gadget.r != r:
            raise ValueError(f"gadget has r={gadget.r}, expected {r}")
        X, Y = bipartite_sides(gadget)
        if len(X) != t:
            raise ValueError(f"gadget sides have size {len(X)}, expected t={t}")
    triples = []
    for j in range(k):
        for j2 in range(j + 1, k):
            if gadget is None:
                F = gadget_coloring(GadgetSpec(t, r, 1, seed=f"{seed}:{j}:{j2}"))
                X, Y = tuple(range(t)), tuple(range(t, 2 * t))
            else:
                F = gadget
            m = F.masks
            for i, x in enumerate(X):
                for i2, y in enumerate(Y):
                    for c in range(1, r + 1):
                        if m[x][y] >> (c - 1) & 1:
                            triples.append((j * t + i, j2 * t + i2, c))
    return ColoredMultigraph.from_edges(k * t, r, triples)


def graph_H_prime(H: ColoredMultigraph, m: int, red: int = RED) -> ColoredMultigraph:
    """``H`` plus a clique on ``2m`` new vertices, clique and all joins in color ``red``."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    n0 = H.n
    n = n0 + 2 * m
    extra = [(u, v, red) for u in range(n0, n) for v in range(u + 1, n)]
    extra += [(u, w, red) for u in range(n0) for w in range(n0, n)]
    return ColoredMultigraph.from_edges(n, H.r, H.triples() + extra)


# -- the host family G_1, ..., G_r ------------------------------------------


@dataclass(frozen=True)
class ConstructionFamily:
    """Vertices ``w_{x,y,z}`` (``x < k-1``, ``y < r``, ``z < m``) and the graphs
    ``G_1..G_r`` stored as the color classes of ``graph``."""

    r: int
    k: int
    m: int
    graph: ColoredMultigraph

    @property
    def n(self) -> int:
        return (self.k - 1) * self.r * self.m

    def index(self, x: int, y: int, z: int) -> int:
        return (x * self.r + y) * self.m + z

    def coords(self, v: int) -> tuple[int, int, int]:
        xy, z = divmod(v, self.m)
        x, y = divmod(xy, self.r)
        return x, y, z

    def complement_count(self, c: int) -> int:
        return math.comb(self.n, 2) - self.graph.edge_count(c)

    def closed_form_complement(self, c: int) -> int:
        if c == self.r:
            return (self.k - 1) * self.r * math.comb(self.m, 2)
        return (self.k - 1) * (self.r // 2) * self.m**2


def lower_bound_family(r: int, k: int, m: int) -> ConstructionFamily:
    """The ``r`` dense graphs whose colored union avoids ``H(r, k)``.

    Color ``r`` misses exactly the pairs inside one ``(x, y)`` group (so it is
    a Turán graph on ``(k-1)r`` parts). Color ``i < r`` misses the pairs
    ``w_{x,y,z} w_{x,y',z'}`` where ``y y'`` has color ``i`` in the round-robin
    1-factorization of ``K_r``.
    """
    if r < 2 or r % 2:
        raise OddR(f"the family needs an even r >= 2, got {r}")
    if k < 2 or m < 1:
        raise ValueError(f"need k >= 2 and m >= 1, got k={k}, m={m}")
    U = one_factorization(r)
    fam = ConstructionFamily(r, k, m, ColoredMultigraph(0, r))
    n = fam.n
    coords = [fam.coords(v) for v in range(n)]
    triples = []
    for u in range(n):
        xu, yu, _ = coords[u]
        for v in range(u + 1, n):
            xv, yv, _ = coords[v]
            missing = None
            if xu == xv:
                missing = r if yu == yv else U.color_of(yu, yv)
            for c in range(1, r + 1):
                if c != missing:
                    triples.append((u, v, c))
    return ConstructionFamily(r, k, m, ColoredMultigraph.from_edges(n, r, triples))


# -- small patterns ----------------------------------------------------------


def t1() -> ColoredMultigraph:
    """Double edge ``{0,1}``, red ``{0,2}`` and ``{1,2}``."""
    return ColoredMultigraph.from_edges(3, 2, [(0, 1, RED), (0, 1, BLUE), (0, 2, RED), (1, 2, RED)])


def t2() -> ColoredMultigraph:
    """Double edge ``{0,1}``, red ``{0,2}``, blue ``{1,2}``."""
    return ColoredMultigraph.from_edges(3, 2, [(0, 1, RED), (0, 1, BLUE), (0, 2, RED), (1, 2, BLUE)])


def path_pattern(colorword: str | Sequence[int]) -> ColoredMultigraph:
    """Path ``v0 v1 ... v_len`` whose ``i``-th edge gets ``colorword[i]``."""
    colors = _colors(colorword)
    return ColoredMultigraph.from_edges(len(colors) + 1, max(2, max(colors, default=1)),
                                        [(i, i + 1, c) for i, c in enumerate(colors)])


def cycle_pattern(length: int, colorword: str | Sequence[int]) -> ColoredMultigraph:
    """Cycle ``v0 .. v_{length-1}``; edge ``v_i v_{i+1 mod length}`` gets ``colorword[i]``."""
    if length < 3:
        raise ValueError(f"a cycle needs length >= 3, got {length}")
    colors = _colors(colorword)
    if len(colors) != length:
        raise LengthMismatch(f"color word has {len(colors)} letters for a cycle of length {length}")
    return ColoredMultigraph.from_edges(length, 2, [(i, (i + 1) % length, c) for i, c in enumerate(colors)])


def _colors(word) -> list[int]:
    if isinstance(word, str):
        try:
            return [_LETTERS[ch] for ch in word.upper()]
        except KeyError as exc:
            raise ValueError(f"color letters are R and B, got {exc.args[0]!r}") from None
    return [int(c) for c in word]
