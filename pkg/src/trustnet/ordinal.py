"""Ordinal recommendation-based trust model.

An agent keeps two per-(context, peer) stores:

- experience counters: one tally per outcome grade; the grade with the
  highest tally is the peer's direct trust degree.
- adjustment history: for each grade a recommender has ever reported, the
  multiset of signed corrections between that report and the opinion the
  agent later formed itself.  The mode of a grade's multiset is the
  semantic distance applied to future reports of that grade, and the mode
  of all absolute corrections grades the recommender itself (0 = reliable,
  3 = useless), which maps onto combination weights 9/5/3/1 (unknown
  recommenders weigh 0).

Tie handling is deterministic and pessimistic throughout: tied tally
argmaxes resolve to the lowest grade, tied recommender grades to the
largest correction, tied semantic distances to the smallest magnitude
(negative first).  Contexts are opaque labels compared by equality.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .errors import (
    NoExperienceError,
    NoUsableRecommendationsError,
    UnknownRecommenderError,
)
from .scales import OrdinalDegree, SemanticShift, degree_distance, degree_shift, validate_shift

Context = str
AgentId = str

#: Combination weight per recommender trust degree 0..3.
RTD_WEIGHTS = (9, 5, 3, 1)


def _mode_prefer_largest(values: Iterable[int]) -> int:
    counts = Counter(values)
    best = max(counts.values())
    return max(v for v, c in counts.items() if c == best)


def _mode_least_correction(values: Iterable[int]) -> int:
    # Smallest magnitude among the tied modes, negative before positive.
    counts = Counter(values)
    best = max(counts.values())
    return min((v for v, c in counts.items() if c == best), key=lambda v: (abs(v), v > 0))


class ExperienceCounters:
    """Per-grade interaction tallies for one (context, peer) pair."""

    __slots__ = ("_counts",)

    def __init__(self) -> None:
        self._counts: dict[OrdinalDegree, int] = {d: 0 for d in OrdinalDegree}

    @classmethod
    def of(cls, vg: int = 0, g: int = 0, b: int = 0, vb: int = 0) -> "ExperienceCounters":
        """Convenience constructor, mainly for tests."""
        counters = cls()
        for degree, n in (
            (OrdinalDegree.VERY_GOOD, vg),
            (OrdinalDegree.GOOD, g),
            (OrdinalDegree.BAD, b),
            (OrdinalDegree.VERY_BAD, vb),
        ):
            if n < 0:
                raise ValueError("counters cannot be negative")
            counters._counts[degree] = n
        return counters

    def record(self, outcome: OrdinalDegree) -> None:
        """Tally one experience with the given outcome grade."""
        self._counts[OrdinalDegree(outcome)] += 1

    def count(self, degree: OrdinalDegree) -> int:
        return self._counts[degree]

    def total(self) -> int:
        return sum(self._counts.values())

    def trust_degree(self) -> OrdinalDegree:
        """The grade with the highest tally; ties resolve to the lowest grade.

        Raises NoExperienceError when nothing was recorded yet, signalling
        the caller to fall back to recommendations.
        """
        best = max(self._counts.values())
        if best == 0:
            raise NoExperienceError("no experience recorded")
        return min(d for d, c in self._counts.items() if c == best)

    def payload(self) -> str:
        return " ".join(f"{d.token}={self._counts[d]}" for d in OrdinalDegree)

    def __repr__(self) -> str:
        return f"ExperienceCounters({self.payload()})"


class AdjustmentSets:
    """Per-grade multisets of recorded report corrections for one recommender."""

    __slots__ = ("_shifts",)

    def __init__(self) -> None:
        self._shifts: dict[OrdinalDegree, list[SemanticShift]] = {d: [] for d in OrdinalDegree}

    @classmethod
    def of(cls, **per_token: Iterable[int]) -> "AdjustmentSets":
        """Build from keyword multisets, e.g. ``AdjustmentSets.of(b=[1])``."""
        sets = cls()
        for token, shifts in per_token.items():
            degree = OrdinalDegree.from_token(token)
            for shift in shifts:
                sets.add(degree, shift)
        return sets

    def add(self, recommended: OrdinalDegree, shift: SemanticShift) -> None:
        self._shifts[OrdinalDegree(recommended)].append(validate_shift(shift))

    def shifts_for(self, degree: OrdinalDegree) -> tuple[SemanticShift, ...]:
        return tuple(self._shifts[degree])

    def is_empty(self) -> bool:
        return all(not shifts for shifts in self._shifts.values())

    def recommender_trust_degree(self) -> int:
        """Mode of all absolute corrections, over every grade's multiset.

        0 means the recommender historically matched our own conclusions;
        3 means it was maximally off.  Ties resolve to the largest tied
        value (more distance, less weight).  Raises UnknownRecommenderError
        when no correction was ever recorded.
        """
        pooled = [abs(s) for shifts in self._shifts.values() for s in shifts]
        if not pooled:
            raise UnknownRecommenderError("no adjustment history")
        return _mode_prefer_largest(pooled)

    def semantic_distance(self, degree: OrdinalDegree) -> SemanticShift:
        """Mode of the corrections recorded against reports of *degree*.

        An empty multiset yields 0: the report is taken at face value.
        """
        shifts = self._shifts[degree]
        if not shifts:
            return 0
        return _mode_least_correction(shifts)

    def payload(self) -> str:
        parts = []
        for degree in OrdinalDegree:
            inner = ",".join(str(s) for s in sorted(self._shifts[degree]))
            parts.append(f"{degree.token}=[{inner}]")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"AdjustmentSets({self.payload()})"


def adjust_recommendation(recommended: OrdinalDegree, distance: SemanticShift) -> OrdinalDegree:
    """Apply a semantic distance to a reported grade (clamped at the ends)."""
    return degree_shift(recommended, distance)


def weight_of(rtd: int | None) -> int:
    """Combination weight for a recommender trust degree; unknown weighs 0."""
    if rtd is None:
        return 0
    if not 0 <= rtd <= 3:
        raise ValueError(f"recommender trust degree must be in 0..3, got {rtd}")
    return RTD_WEIGHTS[rtd]


def combine_recommendations(
    items: Iterable[tuple[OrdinalDegree, int]],
) -> OrdinalDegree:
    """Combine (adjusted grade, weight) pairs into one trust degree.

    Each grade accumulates the weights of the recommendations that landed
    on it; the heaviest grade wins, ties resolving to the lowest grade.
    Raises NoUsableRecommendationsError when the total weight is zero.
    """
    sums: dict[OrdinalDegree, int] = {d: 0 for d in OrdinalDegree}
    for degree, weight in items:
        if weight < 0:
            raise ValueError(f"weights cannot be negative, got {weight}")
        sums[OrdinalDegree(degree)] += weight
    best = max(sums.values())
    if best == 0:
        raise NoUsableRecommendationsError("every recommendation has weight 0")
    return min(d for d, s in sums.items() if s == best)


class DirectTrustStore:
    """Experience counters keyed by (context, peer)."""

    def __init__(self) -> None:
        self._entries: dict[tuple[Context, AgentId], ExperienceCounters] = {}

    def counters(self, context: Context, agent: AgentId) -> ExperienceCounters | None:
        return self._entries.get((context, agent))

    def record_experience(
        self, context: Context, agent: AgentId, outcome: OrdinalDegree
    ) -> ExperienceCounters:
        """Tally one experience, creating the entry on first use."""
        counters = self._entries.get((context, agent))
        if counters is None:
            counters = ExperienceCounters()
            self._entries[(context, agent)] = counters
        counters.record(outcome)
        return counters

    def trust_degree(self, context: Context, agent: AgentId) -> OrdinalDegree:
        counters = self._entries.get((context, agent))
        if counters is None:
            raise NoExperienceError(f"no experience with {agent!r} in context {context!r}")
        return counters.trust_degree()

    def __len__(self) -> int:
        return len(self._entries)

    def dump(self) -> str:
        """Line-oriented text dump, one entry per line, sorted by key."""
        lines = []
        for (context, agent), counters in sorted(self._entries.items()):
            lines.append(f"{context}\t{agent}\t{counters.payload()}")
        return "\n".join(lines)


class RecommenderStore:
    """Adjustment histories keyed by (context, recommender)."""

    def __init__(self) -> None:
        self._entries: dict[tuple[Context, AgentId], AdjustmentSets] = {}

    def adjustments(self, context: Context, agent: AgentId) -> AdjustmentSets | None:
        return self._entries.get((context, agent))

    def record_adjustment(
        self,
        context: Context,
        recommender: AgentId,
        recommended: OrdinalDegree,
        own: OrdinalDegree,
    ) -> AdjustmentSets:
        """Record the correction between a report and our own later opinion."""
        sets = self._entries.get((context, recommender))
        if sets is None:
            sets = AdjustmentSets()
            self._entries[(context, recommender)] = sets
        sets.add(recommended, degree_distance(own, recommended))
        return sets

    def seed_newcomer(
        self, seeds: Iterable[tuple[Context, AgentId, AdjustmentSets]]
    ) -> None:
        """Install pre-supplied adjustment histories for a newcomer.

        A newcomer joining a community carries some recommender knowledge
        with it.  Every seeded key must be fresh; duplicates (among the
        seeds or against existing entries) are rejected.
        """
        staged: dict[tuple[Context, AgentId], AdjustmentSets] = {}
        for context, agent, sets in seeds:
            key = (context, agent)
            if key in staged or key in self._entries:
                raise ValueError(f"duplicate seed for context {context!r}, agent {agent!r}")
            staged[key] = sets
        self._entries.update(staged)

    def __len__(self) -> int:
        return len(self._entries)

    def dump(self) -> str:
        """Line-oriented text dump, one entry per line, sorted by key."""
        lines = []
        for (context, agent), sets in sorted(self._entries.items()):
            lines.append(f"{context}\t{agent}\t{sets.payload()}")
        return "\n".join(lines)
