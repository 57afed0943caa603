"""Deterministic multi-agent community simulator.

Every agent runs both trust models against every peer it interacts with.
Interactions are pure function calls, scheduled either all-pairs (every
ordered pair, every round) or round-robin (one partner per agent per
round).  Rows are emitted in (round, observer, subject) order and all
randomness comes from named substreams of the scenario seed, so a scenario
always reproduces byte-identical reports.

On first contact with a subject the observer polls every other agent for
its current opinion, filtered through that agent's recommendation profile:
the tenths channel feeds the windowed model's reputation bootstrap, the
ordinal channel is semantically adjusted, weighted and combined.  Each
gathered ordinal report is then scored against the observer's own first
impression, which is what eventually neutralizes liars and calibrates
dissenters.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable

from .errors import ConfigError, NoUsableRecommendationsError
from .median_risk import (
    Characteristics,
    ModelParams,
    TrustState,
    bootstrap,
    classify,
    median_of_window,
    risk_value,
)
from .ordinal import (
    DirectTrustStore,
    RecommenderStore,
    adjust_recommendation,
    combine_recommendations,
    weight_of,
)
from .profiles import BehaviorProfile, RecommenderProfile, stationary
from .report import fmt_bool, fmt_real, render_csv, render_json
from .rng import MAX_SEED, substream
from .scales import Banding, DEFAULT_BANDING, OrdinalDegree, TrustTenths

PAIRING_ALL = "all-pairs"
PAIRING_ROUND_ROBIN = "round-robin"

#: Single interaction context used for the ordinal model's stores.
CONTEXT = "default"

#: Draws used by the ground-truth oracle.
GROUND_TRUTH_SAMPLES = 100_000


@dataclass(frozen=True)
class AgentSpec:
    agent_id: str
    behavior: BehaviorProfile
    recommender: RecommenderProfile


@dataclass(frozen=True)
class Scenario:
    agents: tuple[AgentSpec, ...]
    rounds: int
    seed: int
    params: ModelParams
    banding: Banding = DEFAULT_BANDING
    pairing: str = PAIRING_ALL

    def validate(self) -> None:
        """Raise ConfigError before any simulation work happens."""
        if len(self.agents) < 2:
            raise ConfigError("agents: need at least two agents to interact")
        seen: set[str] = set()
        for spec in self.agents:
            if not spec.agent_id:
                raise ConfigError("agents: agent id must be a non-empty string")
            if spec.agent_id in seen:
                raise ConfigError(f"agents: duplicate agent id '{spec.agent_id}'")
            seen.add(spec.agent_id)
        if not (isinstance(self.rounds, int) and self.rounds >= 1):
            raise ConfigError(f"rounds: must be an integer >= 1, got {self.rounds}")
        if not (isinstance(self.seed, int) and 0 <= self.seed <= MAX_SEED):
            raise ConfigError(f"seed: must be an unsigned 64-bit integer, got {self.seed}")
        if self.pairing not in (PAIRING_ALL, PAIRING_ROUND_ROBIN):
            raise ConfigError(f"pairing: unknown policy '{self.pairing}'")


@dataclass(frozen=True)
class InteractionRow:
    """One evaluated (observer, subject) interaction."""

    round_no: int
    observer: str
    subject: str
    outcome: TrustTenths
    td_gen: float
    rv: float
    trustworthy: bool
    risky: bool
    direct_degree: OrdinalDegree
    combined_degree: OrdinalDegree | None  # set only when recommendations were gathered


@dataclass(frozen=True)
class RecommendationEvent:
    """One gathered ordinal recommendation, with how it was interpreted.

    Kept in memory only (not serialized); ``own_degree`` is the direct
    degree the observer formed right after, against which the adjustment
    was recorded.
    """

    round_no: int
    observer: str
    subject: str
    recommender: str
    reported: OrdinalDegree
    distance: int
    adjusted: OrdinalDegree
    weight: int
    own_degree: OrdinalDegree


@dataclass
class SimulationReport:
    rows: list[InteractionRow]
    summary: dict
    recommendation_events: list[RecommendationEvent] = field(default_factory=list)

    def to_csv(self) -> str:
        cells = []
        for row in self.rows:
            cells.append(
                (
                    str(row.round_no),
                    row.observer,
                    row.subject,
                    str(row.outcome),
                    fmt_real(row.td_gen),
                    fmt_real(row.rv),
                    fmt_bool(row.trustworthy),
                    fmt_bool(row.risky),
                    row.direct_degree.token,
                    "" if row.combined_degree is None else row.combined_degree.token,
                )
            )
        return render_csv(cells)

    def summary_json(self) -> str:
        return render_json(self.summary) + "\n"


def opinion_tenths(td_gen: float) -> TrustTenths:
    """Round a running trust degree to the grid, half-up, for reporting."""
    return TrustTenths(min(10, max(0, math.floor(td_gen * 10.0 + 0.5))))


def ground_truth_characteristics(
    profile: BehaviorProfile,
    params: ModelParams,
    samples: int = GROUND_TRUTH_SAMPLES,
    seed: int = 0,
) -> Characteristics:
    """Monte Carlo oracle for what a profile deserves to be classified as.

    Draws from the stationary (post-switch) distribution, then thresholds
    the population median and semi-deviation exactly like the model would.
    """
    long_run = stationary(profile)
    rng = substream(seed, "ground-truth", repr(long_run))
    draws = [long_run.sample(1, rng) for _ in range(samples)]
    return classify(median_of_window(draws), risk_value(draws), params)


class _ObserverState:
    """Everything one agent accumulates while observing others."""

    __slots__ = ("risk", "direct", "recommenders")

    def __init__(self) -> None:
        self.risk: dict[str, TrustState] = {}
        self.direct = DirectTrustStore()
        self.recommenders = RecommenderStore()


def _pairs(count: int, round_no: int, pairing: str) -> Iterable[tuple[int, int]]:
    if pairing == PAIRING_ALL:
        for observer in range(count):
            for subject in range(count):
                if subject != observer:
                    yield observer, subject
    else:
        offset = 1 + (round_no - 1) % (count - 1)
        for observer in range(count):
            yield observer, (observer + offset) % count


def run_scenario(scenario: Scenario) -> SimulationReport:
    scenario.validate()
    agents = sorted(scenario.agents, key=lambda a: a.agent_id)
    params = scenario.params
    states = {spec.agent_id: _ObserverState() for spec in agents}
    outcome_rngs: dict[tuple[str, str], random.Random] = {}

    rows: list[InteractionRow] = []
    events: list[RecommendationEvent] = []
    # Per (observer, subject): (round, td_gen after close) for each period close.
    closes: dict[tuple[str, str], list[tuple[int, float]]] = {}

    for round_no in range(1, scenario.rounds + 1):
        for obs_idx, subj_idx in _pairs(len(agents), round_no, scenario.pairing):
            observer, subject = agents[obs_idx], agents[subj_idx]
            ostate = states[observer.agent_id]
            state = ostate.risk.get(subject.agent_id)

            combined: OrdinalDegree | None = None
            pending: list[tuple[str, OrdinalDegree, int, OrdinalDegree, int]] = []
            if state is None:
                # First contact: poll everyone else for an opinion.
                tenths_reports: list[TrustTenths] = []
                ordinal_items: list[tuple[OrdinalDegree, int]] = []
                for rec in agents:
                    if rec.agent_id in (observer.agent_id, subject.agent_id):
                        continue
                    rstate = states[rec.agent_id]
                    known = rstate.risk.get(subject.agent_id)
                    if known is not None:
                        tenths_reports.append(
                            rec.recommender.report_tenths(opinion_tenths(known.td_gen))
                        )
                    counters = rstate.direct.counters(CONTEXT, subject.agent_id)
                    if counters is not None and counters.total() > 0:
                        reported = rec.recommender.report_degree(counters.trust_degree())
                        history = ostate.recommenders.adjustments(CONTEXT, rec.agent_id)
                        distance = 0
                        rtd = None
                        if history is not None:
                            distance = history.semantic_distance(reported)
                            if not history.is_empty():
                                rtd = history.recommender_trust_degree()
                        adjusted = adjust_recommendation(reported, distance)
                        weight = weight_of(rtd)
                        ordinal_items.append((adjusted, weight))
                        pending.append((rec.agent_id, reported, distance, adjusted, weight))
                state = bootstrap(tenths_reports or None, params)
                ostate.risk[subject.agent_id] = state
                if ordinal_items:
                    try:
                        combined = combine_recommendations(ordinal_items)
                    except NoUsableRecommendationsError:
                        combined = None

            rng_key = (subject.agent_id, observer.agent_id)
            rng = outcome_rngs.get(rng_key)
            if rng is None:
                rng = substream(scenario.seed, subject.agent_id, "behavior", observer.agent_id)
                outcome_rngs[rng_key] = rng
            outcome = subject.behavior.sample(round_no, rng)

            period_closed = state.push(outcome, params)
            ostate.direct.record_experience(
                CONTEXT, subject.agent_id, scenario.banding.degree_for(outcome)
            )
            own = ostate.direct.trust_degree(CONTEXT, subject.agent_id)
            for rec_id, reported, distance, adjusted, weight in pending:
                ostate.recommenders.record_adjustment(CONTEXT, rec_id, reported, own)
                events.append(
                    RecommendationEvent(
                        round_no=round_no,
                        observer=observer.agent_id,
                        subject=subject.agent_id,
                        recommender=rec_id,
                        reported=reported,
                        distance=distance,
                        adjusted=adjusted,
                        weight=weight,
                        own_degree=own,
                    )
                )

            verdict = classify(state.td_gen, state.rv, params)
            rows.append(
                InteractionRow(
                    round_no=round_no,
                    observer=observer.agent_id,
                    subject=subject.agent_id,
                    outcome=outcome,
                    td_gen=state.td_gen,
                    rv=state.rv,
                    trustworthy=verdict.trustworthy,
                    risky=verdict.risky,
                    direct_degree=own,
                    combined_degree=combined,
                )
            )
            if period_closed:
                closes.setdefault((observer.agent_id, subject.agent_id), []).append(
                    (round_no, state.td_gen)
                )

    summary = _build_summary(scenario, agents, rows, closes)
    return SimulationReport(rows=rows, summary=summary, recommendation_events=events)


def _mean(values: list[float]) -> float | None:
    if not values:
        return None
    return sum(values) / len(values)


def _build_summary(
    scenario: Scenario,
    agents: list[AgentSpec],
    rows: list[InteractionRow],
    closes: dict[tuple[str, str], list[tuple[int, float]]],
) -> dict:
    params = scenario.params
    truth_cache: dict[BehaviorProfile, Characteristics] = {}
    per_agent: dict[str, dict] = {}

    rows_by_subject: dict[str, list[InteractionRow]] = {}
    for row in rows:
        rows_by_subject.setdefault(row.subject, []).append(row)

    for spec in agents:
        profile = stationary(spec.behavior)
        truth = truth_cache.get(profile)
        if truth is None:
            truth = ground_truth_characteristics(spec.behavior, params, seed=scenario.seed)
            truth_cache[profile] = truth

        subject_rows = rows_by_subject.get(spec.agent_id, [])
        risk_hits = [row.trustworthy == truth.trustworthy for row in subject_rows]
        riskiness_hits = [row.risky == truth.risky for row in subject_rows]
        ordinal_hits = [
            (row.direct_degree >= OrdinalDegree.GOOD) == truth.trustworthy
            for row in subject_rows
        ]

        switch = None
        if hasattr(spec.behavior, "switch_round"):
            switch = spec.behavior.switch_round

        rounds_risk: list[float] = []
        rounds_ordinal: list[float] = []
        periods_risk: list[float] = []
        if switch is not None:
            by_observer: dict[str, list[InteractionRow]] = {}
            for row in subject_rows:
                by_observer.setdefault(row.observer, []).append(row)
            for observer_id, observed in by_observer.items():
                post = [row for row in observed if row.round_no >= switch]
                for row in post:
                    if row.trustworthy == truth.trustworthy:
                        rounds_risk.append(row.round_no - switch + 1)
                        break
                for row in post:
                    if (row.direct_degree >= OrdinalDegree.GOOD) == truth.trustworthy:
                        rounds_ordinal.append(row.round_no - switch + 1)
                        break
                n_periods = 0
                for close_round, td_after in closes.get((observer_id, spec.agent_id), []):
                    if close_round < switch:
                        continue
                    n_periods += 1
                    if (td_after >= params.td_th) == truth.trustworthy:
                        periods_risk.append(float(n_periods))
                        break

        per_agent[spec.agent_id] = {
            "ground_truth": {"trustworthy": truth.trustworthy, "risky": truth.risky},
            "median_risk": {
                "trust_accuracy": _mean([1.0 if hit else 0.0 for hit in risk_hits]),
                "risk_accuracy": _mean([1.0 if hit else 0.0 for hit in riskiness_hits]),
                "rounds_to_reclassify": _mean(rounds_risk) if switch is not None else None,
                "periods_to_reclassify": _mean(periods_risk) if switch is not None else None,
            },
            "ordinal": {
                "trust_accuracy": _mean([1.0 if hit else 0.0 for hit in ordinal_hits]),
                "rounds_to_reclassify": _mean(rounds_ordinal) if switch is not None else None,
            },
        }

    return {
        "agents": per_agent,
        "interactions": len(rows),
        "rounds": scenario.rounds,
        "seed": scenario.seed,
    }
