"""Windowed trust model: median-based running trust plus downside risk.

Outcomes land in a growing experience window.  The window's capacity starts
at 1 and grows by one each time it fills, up to a cap n, so early contacts
update often and acquainted peers update slowly.  When the window fills (an
interaction period ends) three things happen:

- the window median becomes the period experience value (median, not mean,
  so single outliers do not drag the estimate),
- the running trust degree moves toward that median:
  ``td_gen' = (td_gen + k * median) / (k + 1)``.  The weight k > 0 sets how
  fast old behaviour is forgotten; a higher k forgives (and forgets) faster,
- the risk value becomes the window's semi-deviation: the RMS of deviations
  below the window mean, counting only below-mean samples.  Stable or
  upward-moving behaviour carries zero risk; all-equal windows define
  risk 0 (no negative fluctuations, nothing to fear).

Between period closes the last computed values stand.  A peer never seen
before bootstraps from the median of other agents' recommendations, or from
the trust threshold itself when nobody has an opinion; its risk starts at
the risk threshold.  Classification is two independent threshold tests:
trustworthy iff td_gen >= td_th, risky iff rv >= rv_th (boundary equality
therefore reads trustworthy AND risky).

Internals work on integer tenths as long as possible: the below-mean test
compares ``value * size < sum`` exactly, and medians divide once at the
end, so results are reproducible to the last bit across runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import NoReputationError
from .scales import TrustTenths


@dataclass(frozen=True)
class ModelParams:
    """Model knobs: forgetting weight, window cap and the two thresholds."""

    k: float
    n: int
    td_th: float
    rv_th: float

    def __post_init__(self) -> None:
        if not self.k > 0:
            raise ValueError(f"k must be positive, got {self.k}")
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError(f"n must be an integer >= 1, got {self.n}")
        if not 0.0 <= self.td_th <= 1.0:
            raise ValueError(f"td_th must be within [0, 1], got {self.td_th}")
        if not self.rv_th >= 0.0:
            raise ValueError(f"rv_th must be non-negative, got {self.rv_th}")


@dataclass(frozen=True)
class Characteristics:
    """The two verdicts the model produces about a peer."""

    trustworthy: bool
    risky: bool


@dataclass
class ExperienceWindow:
    """The growing outcome buffer, with period bookkeeping.

    ``period_index`` counts completed periods; capacity is always
    ``min(period_index + 1, n)`` for the governing params.
    """

    values: list[TrustTenths] = field(default_factory=list)
    capacity: int = 1
    period_index: int = 0

    def append(self, value: TrustTenths) -> None:
        self.values.append(value)

    def is_full(self) -> bool:
        return len(self.values) >= self.capacity

    def roll_over(self, n: int) -> None:
        """Reset after a period close and grow capacity toward the cap."""
        self.values.clear()
        self.period_index += 1
        self.capacity = min(self.period_index + 1, n)


def median_of_window(values: Sequence[TrustTenths]) -> float:
    """Median of the values: middle element, or mean of the two middles."""
    if not values:
        raise ValueError("median of an empty window is undefined")
    tenths = sorted(v.tenths for v in values)
    size = len(tenths)
    mid = size // 2
    if size % 2:
        return tenths[mid] / 10.0
    return (tenths[mid - 1] + tenths[mid]) / 20.0


def update_general_trust(prev: float, ex_med: float, k: float) -> float:
    """Convex step from the previous trust degree toward the period median.

    Weights 1/(k+1) and k/(k+1) sum to 1, so the result stays in [0, 1]
    whenever the inputs do.
    """
    return (prev + k * ex_med) / (k + 1.0)


def risk_value(values: Sequence[TrustTenths]) -> float:
    """Semi-deviation of the window: downside-only dispersion.

    Only values strictly below the window mean contribute; with none below
    (an all-equal window) the risk is 0.  The below-mean test and the
    squared deviations are computed in exact integer arithmetic; one float
    division and square root happen at the end.
    """
    if not values:
        raise ValueError("risk value of an empty window is undefined")
    tenths = [v.tenths for v in values]
    size = len(tenths)
    total = sum(tenths)
    # v < mean  <=>  v * size < total, exactly, in integers.
    below = [t for t in tenths if t * size < total]
    if not below:
        return 0.0
    # (v - mean)^2 = (v*size - total)^2 / (100 * size^2) in value units.
    numerator = sum((t * size - total) ** 2 for t in below)
    return math.sqrt(numerator / (100.0 * size * size * len(below)))


def general_reputation(recommendations: Sequence[TrustTenths]) -> float:
    """Median of the recommendation values, same rule as the window median."""
    if not recommendations:
        raise NoReputationError("no recommendations to aggregate")
    return median_of_window(recommendations)


def classify(td_gen: float, rv: float, params: ModelParams) -> Characteristics:
    """Threshold the two parameters independently; both tests use >=."""
    return Characteristics(trustworthy=td_gen >= params.td_th, risky=rv >= params.rv_th)


@dataclass
class TrustState:
    """Everything one agent tracks about one peer."""

    window: ExperienceWindow
    td_gen: float
    rv: float
    has_completed_period: bool = False

    def push(self, outcome: TrustTenths, params: ModelParams) -> bool:
        """Record one interaction outcome.

        Returns True when this outcome filled the window: the period then
        closes, which refreshes td_gen (convex step toward the window
        median) and rv (window semi-deviation), clears the window and grows
        its capacity.  Mid-period pushes leave td_gen and rv untouched.
        """
        self.window.append(outcome)
        if not self.window.is_full():
            return False
        ex_med = median_of_window(self.window.values)
        self.td_gen = update_general_trust(self.td_gen, ex_med, params.k)
        self.rv = risk_value(self.window.values)
        self.window.roll_over(params.n)
        self.has_completed_period = True
        return True

    def as_dict(self) -> dict:
        """JSON-shaped view with the stable key set used by the CLI."""
        return {
            "td_gen": self.td_gen,
            "rv": self.rv,
            "window": [str(v) for v in self.window.values],
            "period_index": self.window.period_index,
            "capacity": self.window.capacity,
        }


def bootstrap(
    recommendations: Sequence[TrustTenths] | None, params: ModelParams
) -> TrustState:
    """Initial state for a peer we never interacted with.

    Trust starts at the median of the gathered recommendations; with no
    recommendations at all it starts at the trust threshold.  Risk always
    starts at the risk threshold on first contact.
    """
    if recommendations:
        td_gen = general_reputation(recommendations)
    else:
        td_gen = params.td_th
    return TrustState(window=ExperienceWindow(), td_gen=td_gen, rv=params.rv_th)


def evaluate(state: TrustState, params: ModelParams) -> Characteristics:
    """Classify a peer from its latest computed (or bootstrap) values."""
    return classify(state.td_gen, state.rv, params)


def push_experience(
    state: TrustState, outcome: TrustTenths, params: ModelParams
) -> bool:
    """Function-style alias for :meth:`TrustState.push`."""
    return state.push(outcome, params)
