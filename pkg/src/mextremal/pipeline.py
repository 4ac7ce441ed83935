"""Randomized hunt for the target structure ``P'`` inside a dense colored host.

``P'`` lives on ``k + 1`` vertices: a matching of ``m`` pairs each carrying a
single prescribed color, every other pair carrying all ``r`` colors. The hunt
mirrors the counting argument that forces ``P'`` in dense hosts:

1. take the core ``R`` of pairs that carry every color; a ``K_{k+1}`` there
   already gives ``P'``;
2. fix a ``k``-partition ``V_1..V_k`` and keep the cross edges ``R'`` of ``R``;
3. per round, draw a random permutation ``pi`` of the parts and, for each
   matching color ``c_j``, take the color-``c_j`` graph ``F_j`` inside part
   ``V_{pi(j)}`` and a maximum cut ``F_j'`` of it;
4. look for ``K_{k+1}`` in ``H' = R' + F_1' + ... + F_m'``. A clique meets
   each part in at most two vertices (the cuts are bipartite), so its
   in-part edges form a matching of the right colors and the clique spans
   a copy of ``P'``.

Failure after the round budget is not a proof that ``P'`` is absent.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coloring import Partition
from .errors import ColorCountMismatch, MatchingTooLarge, PartitionNotProperForCore
from .graphcore import ColoredMultigraph, Embedding

EXACT_PARTITION_MAX_N = 12
EXACT_CUT_MAX_N = 20


@dataclass(frozen=True)
class PPrimeSpec:
    k: int
    matching_colors: tuple[int, ...]
    r: int

    def __post_init__(self):
        object.__setattr__(self, "matching_colors", tuple(self.matching_colors))
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if self.m > (self.k + 1) // 2:
            raise MatchingTooLarge(f"{self.m} matching pairs do not fit on {self.k + 1} vertices")
        for c in self.matching_colors:
            if not 1 <= c <= self.r:
                raise ValueError(f"matching color {c} outside 1..{self.r}")

    @property
    def m(self) -> int:
        return len(self.matching_colors)


def build_pprime(spec: PPrimeSpec) -> ColoredMultigraph:
    """Pairs ``(2j, 2j+1)`` carry only ``matching_colors[j]``; all other pairs carry every color."""
    n = spec.k + 1
    single = {(2 * j, 2 * j + 1): c for j, c in enumerate(spec.matching_colors)}
    triples = []
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) in single:
                triples.append((u, v, single[(u, v)]))
            else:
                triples.extend((u, v, c) for c in range(1, spec.r + 1))
    return ColoredMultigraph.from_edges(n, spec.r, triples)


def multiplicity_r_core(h: ColoredMultigraph) -> ColoredMultigraph:
    """Single-color graph of the pairs carrying all ``r`` colors of ``h``."""
    full = (1 << h.r) - 1
    m = h.masks
    pairs = [(u, v) for u, v in h.pairs() if m[u][v] == full]
    return ColoredMultigraph(h.n, 1, (frozenset(pairs),))


# -- small exact subroutines -------------------------------------------------


def _bits(x: int) -> int:
    return bin(x).count("1")


def _adj_bits(n: int, pairs) -> list[int]:
    adj = [0] * n
    for u, v in pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def _greedy_k_partition(adj: list[int], n: int, k: int) -> list[int]:
    lab = [0] * n
    members = [0] * k
    for v in range(n):
        c = min(range(k), key=lambda c: (_bits(adj[v] & members[c]), c))
        lab[v] = c
        members[c] |= 1 << v
    improved = True
    while improved:
        improved = False
        for v in range(n):
            cur = lab[v]
            here = _bits(adj[v] & members[cur] & ~(1 << v))
            for c in range(k):
                if c != cur and _bits(adj[v] & members[c]) < here:
                    members[cur] &= ~(1 << v)
                    members[c] |= 1 << v
                    lab[v] = c
                    improved = True
                    break
    return lab


def max_k_partite(core: ColoredMultigraph, k: int) -> tuple[tuple[tuple[int, ...], ...], str]:
    """Vertex ``k``-partition keeping as many core edges across parts as possible.

    Exact branch and bound up to ``EXACT_PARTITION_MAX_N`` vertices, greedy
    plus single-vertex moves beyond. Returns ``(parts, source)``; parts may be
    empty.
    """
    n = core.n
    adj = _adj_bits(n, core.pairs())
    lab = _greedy_k_partition(adj, n, k)
    if n > EXACT_PARTITION_MAX_N:
        return _parts(lab, k), "greedy"

    members = [0] * k
    for v, c in enumerate(lab):
        members[c] |= 1 << v
    best_cost = sum(_bits(adj[v] & members[lab[v]]) for v in range(n)) // 2
    best = lab[:]
    cur = [0] * n
    members = [0] * k

    def rec(v: int, used: int, cost: int):
        nonlocal best_cost, best
        if cost >= best_cost:
            return
        if v == n:
            best_cost, best = cost, cur[:]
            return
        for c in range(min(used + 1, k)):
            cur[v] = c
            members[c] |= 1 << v
            rec(v + 1, max(used, c + 1), cost + _bits(adj[v] & members[c] & ~(1 << v)))
            members[c] &= ~(1 << v)

    rec(0, 0, 0)
    return _parts(best, k), "exact"


def _parts(lab, k) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(v for v, c in enumerate(lab) if c == p) for p in range(k))


def max_cut(vertices: Sequence[int], edges: Sequence[tuple[int, int]]) -> tuple[frozenset[int], list[tuple[int, int]], bool]:
    """A maximum cut of the graph ``(vertices, edges)``.

    Exact (Gray-code sweep over side assignments) up to ``EXACT_CUT_MAX_N``
    vertices, otherwise greedy placement plus first-improvement flips.
    Returns ``(one side, cut edges, exact?)``.
    """
    vs = list(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    t = len(vs)
    nbr = [[] for _ in range(t)]
    for a, b in edges:
        nbr[pos[a]].append(pos[b])
        nbr[pos[b]].append(pos[a])
    side = [0] * t
    exact = t <= EXACT_CUT_MAX_N
    if exact and t > 1:
        cut = 0
        best, best_side = 0, side[:]
        # vertex 0 stays on side 0; flip bit i of the Gray code at step s
        for step in range(1, 1 << (t - 1)):
            i = (step & -step).bit_length()
            same = sum(1 for j in nbr[i] if side[j] == side[i])
            cut += 2 * same - len(nbr[i])
            side[i] ^= 1
            if cut > best:
                best, best_side = cut, side[:]
        side = best_side
    elif not exact:
        for i in range(t):
            ones = sum(1 for j in nbr[i][:] if j < i and side[j] == 1)
            zeros = sum(1 for j in nbr[i] if j < i and side[j] == 0)
            side[i] = 1 if zeros > ones else 0
        improved = True
        while improved:
            improved = False
            for i in range(t):
                same = sum(1 for j in nbr[i] if side[j] == side[i])
                if 2 * same > len(nbr[i]):
                    side[i] ^= 1
                    improved = True
    one = frozenset(vs[i] for i in range(t) if side[i] == 1)
    cut_edges = [(a, b) for a, b in edges if (a in one) != (b in one)]
    return one, cut_edges, exact


def find_clique(adj: list[int], n: int, size: int) -> tuple[int, ...] | None:
    """Lexicographically first clique of ``size`` vertices in a bitset graph."""
    if size == 0:
        return ()

    def rec(clique, cand):
        if len(clique) == size:
            return tuple(clique)
        if len(clique) + _bits(cand) < size:
            return None
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            got = rec(clique + [v], cand & adj[v])
            if got is not None:
                return got
            if len(clique) + _bits(cand) < size:
                return None
        return None

    return rec([], (1 << n) - 1)


# -- the hunt ------------------------------------------------------------------


@dataclass
class RoundTrace:
    round: int
    permutation: tuple[int, ...]  # permutation[j] = part used for matching color j
    f_edges: tuple[int, ...]  # e(F_j)
    cut_edges: tuple[int, ...]  # e(F_j')
    cut_exact: tuple[bool, ...]
    h_prime_edges: int
    clique: tuple[int, ...] | None = None


@dataclass
class PipelineTrace:
    partition: tuple[tuple[int, ...], ...]
    partition_source: str  # "given" | "exact" | "greedy"
    core_edges: int
    r_prime_edges: int
    core_clique: tuple[int, ...] | None = None
    rounds: list[RoundTrace] = field(default_factory=list)
    success_round: int | None = None
    exact_mean_f: tuple[Fraction, ...] = ()  # E[e(F_j)] over a uniform permutation
    sampled_mean_f: tuple[float, ...] = ()  # mean e(F_j) over the rounds run

    def identity_holds(self) -> bool:
        return all(rt.h_prime_edges == self.r_prime_edges + sum(rt.cut_edges) for rt in self.rounds)

    def as_dict(self) -> dict:
        return {
            "partition": [list(p) for p in self.partition],
            "partition_source": self.partition_source,
            "core_edges": self.core_edges,
            "r_prime_edges": self.r_prime_edges,
            "core_clique": None if self.core_clique is None else list(self.core_clique),
            "rounds": [
                {
                    "round": rt.round,
                    "permutation": list(rt.permutation),
                    "f_edges": list(rt.f_edges),
                    "cut_edges": list(rt.cut_edges),
                    "cut_exact": list(rt.cut_exact),
                    "h_prime_edges": rt.h_prime_edges,
                    "clique": None if rt.clique is None else list(rt.clique),
                }
                for rt in self.rounds
            ],
            "success_round": self.success_round,
            "exact_mean_f": [str(x) for x in self.exact_mean_f],
            "sampled_mean_f": list(self.sampled_mean_f),
        }


@dataclass
class PipelineResult:
    embedding: Embedding | None
    trace: PipelineTrace

    @property
    def found(self) -> bool:
        return self.embedding is not None


def expected_f_lower(r: int, k: int, m: int, n: int) -> float:
    """``(1/k) * ((r-1)/(r k) - m/(9 r k^2)) * C(n, 2)``: the per-color
    in-part edge count the density argument guarantees on average."""
    return (1 / k) * ((r - 1) / (r * k) - m / (9 * r * k * k)) * math.comb(n, 2)


def _embedding_from_clique(clique, lab, pi, spec) -> Embedding:
    by_part: dict[int, list[int]] = {}
    for w in clique:
        by_part.setdefault(lab[w], []).append(w)
    phi = [-1] * (spec.k + 1)
    taken = set()
    for j in range(spec.m):
        inside = by_part.get(pi[j], [])
        if len(inside) == 2:
            phi[2 * j], phi[2 * j + 1] = inside
            taken.update(inside)
    rest = iter(sorted(set(clique) - taken))
    for a in range(spec.k + 1):
        if phi[a] < 0:
            phi[a] = next(rest)
    return Embedding(tuple(phi))


def find_pprime(
    h: ColoredMultigraph,
    spec: PPrimeSpec,
    partition: Partition | Sequence[Sequence[int]] | None = None,
    rounds: int = 10,
    seed: int = 0,
) -> PipelineResult:
    """Run the randomized hunt for ``build_pprime(spec)`` in ``h``.

    Round ``i`` draws its permutation from ``random.Random(f"{seed}:{i}")``,
    so traces are reproducible. The first round whose ``H'`` has a
    ``K_{k+1}`` ends the hunt.
    """
    if h.r != spec.r:
        raise ColorCountMismatch(f"host has r={h.r}, spec has r={spec.r}")
    k, n = spec.k, h.n
    target = build_pprime(spec)
    core = multiplicity_r_core(h)
    core_adj = _adj_bits(n, core.pairs())

    if partition is None:
        parts, source = max_k_partite(core, k)
    else:
        classes = partition.classes if isinstance(partition, Partition) else tuple(tuple(c) for c in partition)
        flat = sorted(v for c in classes for v in c)
        if len(classes) > k or flat != list(range(n)):
            raise PartitionNotProperForCore(
                f"need a partition of 0..{n - 1} into at most {k} parts, got {len(classes)} classes"
            )
        parts = tuple(tuple(sorted(c)) for c in classes) + ((),) * (k - len(classes))
        source = "given"
    lab = [0] * n
    for p, cls in enumerate(parts):
        for v in cls:
            lab[v] = p

    r_prime = [(u, v) for u, v in core.pairs() if lab[u] != lab[v]]
    trace = PipelineTrace(parts, source, core.num_edges, len(r_prime))

    # in-part color-c_j edge counts give the exact expectation of e(F_j)
    m_h = h.masks
    in_part = {}
    for c in set(spec.matching_colors):
        bit = 1 << (c - 1)
        in_part[c] = [
            [(u, v) for i, u in enumerate(cls) for v in cls[i + 1:] if m_h[u][v] & bit]
            for cls in parts
        ]
    trace.exact_mean_f = tuple(
        Fraction(sum(len(e) for e in in_part[c]), k) for c in spec.matching_colors
    )

    clique = find_clique(core_adj, n, k + 1)
    if clique is not None:
        trace.core_clique = clique
        emb = Embedding(clique)
        return PipelineResult(emb if emb.check(target, h) else None, trace)

    f_totals = [0] * spec.m
    for i in range(rounds):
        rng = random.Random(f"{seed}:{i}")
        pi = tuple(rng.sample(range(k), k))
        hp = list(r_prime)
        f_sizes, cut_sizes, exact_flags = [], [], []
        for j, c in enumerate(spec.matching_colors):
            part = pi[j]
            f_edges = in_part[c][part]
            _, cut, exact = max_cut(parts[part], f_edges)
            f_sizes.append(len(f_edges))
            cut_sizes.append(len(cut))
            exact_flags.append(exact)
            f_totals[j] += len(f_edges)
            hp.extend(cut)
        adj = _adj_bits(n, hp)
        rt = RoundTrace(i, pi, tuple(f_sizes), tuple(cut_sizes), tuple(exact_flags),
                        sum(_bits(a) for a in adj) // 2)
        trace.rounds.append(rt)
        found = find_clique(adj, n, k + 1)
        if found is not None:
            rt.clique = found
            emb = _embedding_from_clique(found, lab, pi, spec)
            if not emb.check(target, h):
                raise AssertionError(f"clique {found} did not translate to a copy of P'")
            trace.success_round = i
            trace.sampled_mean_f = tuple(t / len(trace.rounds) for t in f_totals)
            return PipelineResult(emb, trace)
    if trace.rounds:
        trace.sampled_mean_f = tuple(t / len(trace.rounds) for t in f_totals)
    return PipelineResult(None, trace)
