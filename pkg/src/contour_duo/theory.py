"""Closed-form regime predictions and the velocity-spectrum grid.

For ring size n, node offset d and cluster lengths l1, l2 the predicted
long-run behavior is one of exactly three regimes:

  free movement    when l1 + l2 <= n          (v = 1)
  collapse         when min(l1, l2) > n - d   (v = 0)
  cluster motion   otherwise                  (period l1 + l2, v = n/(l1+l2))

Predictions are symmetric in (l1, l2); they depend only on {min, max} even
though the raw dynamics are not label-symmetric (cluster 1 wins ties).  The
predictor never consults simulation; measuring how well these formulas hold
is the verify module's job.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .model import State, SystemParams


class PredictedRegime(str, Enum):
    FREE = "free"
    CLUSTER = "cluster-motion"
    COLLAPSE = "collapse"


@dataclass(frozen=True)
class ModePrediction:
    """Predicted regime with period (cluster motion only) and exact velocity."""

    regime: PredictedRegime
    period: int | None
    v: Fraction


@dataclass(frozen=True)
class SpectrumGrid:
    """Cellwise prediction over all (l1, l2) in [1, n-1]^2 for fixed (n, d)."""

    n: int
    d: int
    cells: dict[tuple[int, int], ModePrediction]

    def __getitem__(self, key: tuple[int, int]) -> ModePrediction:
        return self.cells[key]


def free_movement_possible(params: SystemParams) -> bool:
    """Free movement requires l1 + l2 <= n: a free cycle has period n and
    pushes l1 + l2 particles through each node, one per tick at most."""
    return params.l1 + params.l2 <= params.n


def collapse_possible(params: SystemParams) -> bool:
    """Closed-form collapse criterion: min(l1, l2) > n - d.

    This is the predicted predicate; the verifier checks it against the
    actual fixed-point census, which is nonempty on a strictly larger region.
    """
    return min(params.l1, params.l2) > params.n - params.d


def predict(params: SystemParams) -> ModePrediction:
    """Predicted regime for the given parameters (exactly one branch fires).

    Disjointness: min > n-d together with 2d <= n forces l1 + l2 > n, so the
    collapse and free regions never overlap.
    """
    n, total = params.n, params.l1 + params.l2
    if total <= n:
        return ModePrediction(PredictedRegime.FREE, None, Fraction(1))
    if min(params.l1, params.l2) > n - params.d:
        return ModePrediction(PredictedRegime.COLLAPSE, None, Fraction(0))
    return ModePrediction(PredictedRegime.CLUSTER, total, Fraction(n, total))


def lemma2_states(params: SystemParams) -> list[State]:
    """The four delay-release states: a cluster that has just been let
    through a node stands immediately past it with the other cluster's front
    on the node (all arithmetic mod n)."""
    n, d, l1, l2 = params.n, params.d, params.l1, params.l2
    return [
        State(l1 % n, 0),
        State(0, l2 % n),
        State((d + l1) % n, d),
        State(d, (d + l2) % n),
    ]


def spectrum_grid(n: int, d: int) -> SpectrumGrid:
    """Predictions for every cluster-length pair at the given ring geometry."""
    SystemParams(n, d, 1, 1)  # validate geometry before building the grid
    cells = {
        (l1, l2): predict(SystemParams(n, d, l1, l2))
        for l1 in range(1, n)
        for l2 in range(1, n)
    }
    return SpectrumGrid(n=n, d=d, cells=cells)
