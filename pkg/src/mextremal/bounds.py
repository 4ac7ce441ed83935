"""Closed-form density bounds, in exact rational arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coloring import chromatic_number
from .errors import ChiTooSmall, ColorCountMismatch, MOutOfRange, OddR, RegimeViolation
from .graphcore import ColoredMultigraph
from .reduced import reduced_max_matching


def trivial_bound(r: int, chi: int) -> Fraction:
    """``1 - 1/(r(chi - 1))``: every color denser than this forces a full-multiplicity copy."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if chi < 2:
        raise ChiTooSmall(f"bounds need chi >= 2, got {chi}")
    return 1 - Fraction(1, r * (chi - 1))


def theorem_bound(r: int, chi: int, M: int) -> Fraction:
    """``1 - 1/(r(chi - 1)) - M/(9 r chi^2)``."""
    base = trivial_bound(r, chi)
    if not 0 <= M <= chi // 2:
        raise MOutOfRange(f"M={M} outside 0..{chi // 2} for chi={chi}")
    return base - Fraction(M, 9 * r * chi * chi)


def construction_lower(r: int, k: int, m: int) -> Fraction:
    """Density ``1 - 1/(r(k - 2m - 1))`` reached by the padded construction with ``chi = k``."""
    d = k - 2 * m - 1
    if d < 1:
        raise ValueError(f"need k - 2m - 1 >= 1, got k={k}, m={m}")
    return 1 - Fraction(1, r * d)


@dataclass(frozen=True)
class BoundReport:
    r: int
    chi: int
    M: int
    trivial_upper: Fraction
    theorem_upper: Fraction
    construction_lower: Fraction | None = None

    def as_dict(self) -> dict:
        def q(x):
            return None if x is None else str(x)

        return {
            "r": self.r,
            "chi": self.chi,
            "M": self.M,
            "trivial_upper": q(self.trivial_upper),
            "theorem_upper": q(self.theorem_upper),
            "construction_lower": q(self.construction_lower),
        }


def report(g: ColoredMultigraph, r: int | None = None) -> BoundReport:
    """Chromatic number, reduced maximum matching and both upper bounds for ``g``."""
    if r is not None and r != g.r:
        raise ColorCountMismatch(f"graph has r={g.r}, report asked for r={r}")
    if g.num_edges == 0:
        raise ChiTooSmall("graph has no edges")
    chi = chromatic_number(g)
    M, _ = reduced_max_matching(g)
    return BoundReport(g.r, chi, M, trivial_bound(g.r, chi), theorem_bound(g.r, chi, M))


@dataclass(frozen=True)
class TightnessReport:
    r: int
    k: int
    m: int
    lower: Fraction
    trivial_upper: Fraction
    upper_at_m: Fraction  # theorem bound with M = m
    upper_at_2m: Fraction  # theorem bound with M = 2m, the padded pattern's actual M
    deficit: Fraction  # trivial_upper - lower
    gap_ratio: Fraction  # deficit / (m / (9 r k^2))

    @property
    def consistent(self) -> bool:
        return self.lower <= self.upper_at_2m <= self.upper_at_m

    def as_dict(self) -> dict:
        d = {k: (str(v) if isinstance(v, Fraction) else v) for k, v in self.__dict__.items()}
        d["consistent"] = self.consistent
        return d


def tightness_check(r: int, k: int, m: int) -> TightnessReport:
    """Compare the construction's lower bound with the upper bound at ``chi = k``.

    Valid in the regime ``10 m <= k`` with ``r`` even. The padded pattern has
    ``2m`` red-joined clique vertices, each matchable to its own part, so its
    matching number is ``2m``; the report checks the lower bound against the
    upper bound at both ``M = m`` and ``M = 2m``.
    """
    if r < 2 or r % 2:
        raise OddR(f"the construction needs an even r, got {r}")
    if m < 1 or 10 * m > k:
        raise RegimeViolation(f"need 1 <= m and 10m <= k, got m={m}, k={k}")
    lower = construction_lower(r, k, m)
    triv = trivial_bound(r, k)
    deficit = triv - lower
    return TightnessReport(
        r, k, m,
        lower=lower,
        trivial_upper=triv,
        upper_at_m=theorem_bound(r, k, m),
        upper_at_2m=theorem_bound(r, k, 2 * m),
        deficit=deficit,
        gap_ratio=deficit / Fraction(m, 9 * r * k * k),
    )
