"""Agent behaviour and recommendation profiles for the simulator.

Behaviour profiles generate interaction outcomes on the tenths grid:

- consistent: a fixed center with symmetric integer jitter,
- erratic: consistent, except with some probability the outcome spikes
  down into [spike_floor, center - 0.1] (the kind of peer the downside
  risk value exists to flag),
- shifting: one consistent phase before a switch round, another from the
  switch round on (the behaviour-changer that forgiveness is about).

Recommendation profiles distort what an agent reports about its own
opinion: honest repeats it, a liar inverts both scales, and an offset
recommender shifts every report by a constant (an honest dissenter with a
different calibration, indistinguishable from a liar to the receiver).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from .scales import MAX_SHIFT, OrdinalDegree, SemanticShift, TrustTenths, degree_shift


def _clamp_tenths(tenths: int) -> TrustTenths:
    return TrustTenths(min(10, max(0, tenths)))


def _jittered(rng: random.Random, center: TrustTenths, jitter: int) -> TrustTenths:
    return _clamp_tenths(center.tenths + rng.randint(-jitter, jitter))


def _check_jitter(jitter: int) -> None:
    if not (isinstance(jitter, int) and 0 <= jitter <= 10):
        raise ValueError(f"jitter must be an integer in [0, 10], got {jitter!r}")


@dataclass(frozen=True)
class ConsistentBehavior:
    """Always near one center value."""

    center: TrustTenths
    jitter: int = 0

    def __post_init__(self) -> None:
        _check_jitter(self.jitter)

    def sample(self, round_no: int, rng: random.Random) -> TrustTenths:
        return _jittered(rng, self.center, self.jitter)


@dataclass(frozen=True)
class ErraticBehavior:
    """Mostly consistent, with occasional downward spikes."""

    center: TrustTenths
    spike_probability: float
    spike_floor: TrustTenths
    jitter: int = 0

    def __post_init__(self) -> None:
        _check_jitter(self.jitter)
        if not 0.0 <= self.spike_probability <= 1.0:
            raise ValueError(
                f"spike_probability must be within [0, 1], got {self.spike_probability}"
            )
        if self.spike_probability > 0 and self.spike_floor.tenths >= self.center.tenths:
            raise ValueError("spike_floor must lie below center for spikes to exist")

    def sample(self, round_no: int, rng: random.Random) -> TrustTenths:
        if rng.random() < self.spike_probability:
            return TrustTenths(rng.randint(self.spike_floor.tenths, self.center.tenths - 1))
        return _jittered(rng, self.center, self.jitter)


@dataclass(frozen=True)
class ShiftingBehavior:
    """One center before the switch round, another from the switch round on."""

    before: TrustTenths
    after: TrustTenths
    switch_round: int
    jitter: int = 0

    def __post_init__(self) -> None:
        _check_jitter(self.jitter)
        if self.switch_round < 1:
            raise ValueError(f"switch_round must be >= 1, got {self.switch_round}")

    def sample(self, round_no: int, rng: random.Random) -> TrustTenths:
        center = self.before if round_no < self.switch_round else self.after
        return _jittered(rng, center, self.jitter)


BehaviorProfile = Union[ConsistentBehavior, ErraticBehavior, ShiftingBehavior]


def stationary(profile: BehaviorProfile) -> BehaviorProfile:
    """The long-run behaviour: for shifting profiles, the after-switch phase."""
    if isinstance(profile, ShiftingBehavior):
        return ConsistentBehavior(center=profile.after, jitter=profile.jitter)
    return profile


@dataclass(frozen=True)
class HonestRecommender:
    """Reports opinions unchanged."""

    def report_tenths(self, opinion: TrustTenths) -> TrustTenths:
        return opinion

    def report_degree(self, opinion: OrdinalDegree) -> OrdinalDegree:
        return opinion


@dataclass(frozen=True)
class LiarRecommender:
    """Inverts every report on both scales."""

    def report_tenths(self, opinion: TrustTenths) -> TrustTenths:
        return TrustTenths(10 - opinion.tenths)

    def report_degree(self, opinion: OrdinalDegree) -> OrdinalDegree:
        return OrdinalDegree(3 - opinion.rank)


@dataclass(frozen=True)
class OffsetRecommender:
    """Shifts every report by a constant: a dissenter, not a liar."""

    shift: SemanticShift

    def __post_init__(self) -> None:
        if not -MAX_SHIFT <= self.shift <= MAX_SHIFT:
            raise ValueError(f"shift must be within [-3, 3], got {self.shift}")

    def report_tenths(self, opinion: TrustTenths) -> TrustTenths:
        return _clamp_tenths(opinion.tenths + self.shift)

    def report_degree(self, opinion: OrdinalDegree) -> OrdinalDegree:
        return degree_shift(opinion, self.shift)


RecommenderProfile = Union[HonestRecommender, LiarRecommender, OffsetRecommender]
