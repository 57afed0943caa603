"""Scenario and trace file loading.

Scenario documents are JSON with a closed schema: unknown keys anywhere are
a validation error, because a misspelled threshold name would otherwise
silently change model behaviour.  Every error message names the offending
field (or trace line) so the CLI can print it as-is.

Trace files are UTF-8 text, one grid value per line.  ``#`` starts a
comment; a comment of the form ``# subject: NAME`` names the peer the
trace describes.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import ConfigError
from .median_risk import ModelParams
from .profiles import (
    BehaviorProfile,
    ConsistentBehavior,
    ErraticBehavior,
    HonestRecommender,
    LiarRecommender,
    OffsetRecommender,
    RecommenderProfile,
    ShiftingBehavior,
)
from .rng import MAX_SEED
from .scales import Banding, TrustTenths
from .simulate import PAIRING_ALL, PAIRING_ROUND_ROBIN, AgentSpec, Scenario

_SCENARIO_KEYS = {"agents", "rounds", "seed", "params", "banding", "pairing"}
_PARAMS_KEYS = {"k", "n", "td_th", "rv_th"}
_AGENT_KEYS = {"id", "behavior", "recommender"}
_BEHAVIOR_KEYS = {
    "consistent": {"kind", "center", "jitter"},
    "erratic": {"kind", "center", "jitter", "spike_probability", "spike_floor"},
    "shifting": {"kind", "before", "after", "switch_round", "jitter"},
}
_RECOMMENDER_KEYS = {
    "honest": {"kind"},
    "liar": {"kind"},
    "offset": {"kind", "shift"},
}


def _require_keys(doc: dict, allowed: set[str], required: set[str], where: str) -> None:
    for key in doc:
        if key not in allowed:
            raise ConfigError(f"{where}: unknown key '{key}'")
    for key in required:
        if key not in doc:
            raise ConfigError(f"{where}: missing key '{key}'")


def _tenths(value: Any, where: str) -> TrustTenths:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}: expected a 0.1-step value in [0, 1], got {value!r}")
    try:
        return TrustTenths.from_float(float(value))
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def _int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{where}: expected an integer, got {value!r}")
    return value


def _real(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}: expected a number, got {value!r}")
    return float(value)


def _parse_behavior(doc: Any, where: str) -> BehaviorProfile:
    if not isinstance(doc, dict):
        raise ConfigError(f"{where}: expected an object")
    kind = doc.get("kind")
    if kind not in _BEHAVIOR_KEYS:
        raise ConfigError(f"{where}.kind: unknown behavior kind {kind!r}")
    _require_keys(doc, _BEHAVIOR_KEYS[kind], {"kind"}, where)
    jitter = _int(doc["jitter"], f"{where}.jitter") if "jitter" in doc else 0
    try:
        if kind == "consistent":
            if "center" not in doc:
                raise ConfigError(f"{where}: missing key 'center'")
            return ConsistentBehavior(center=_tenths(doc["center"], f"{where}.center"), jitter=jitter)
        if kind == "erratic":
            for key in ("center", "spike_probability", "spike_floor"):
                if key not in doc:
                    raise ConfigError(f"{where}: missing key '{key}'")
            return ErraticBehavior(
                center=_tenths(doc["center"], f"{where}.center"),
                spike_probability=_real(doc["spike_probability"], f"{where}.spike_probability"),
                spike_floor=_tenths(doc["spike_floor"], f"{where}.spike_floor"),
                jitter=jitter,
            )
        for key in ("before", "after", "switch_round"):
            if key not in doc:
                raise ConfigError(f"{where}: missing key '{key}'")
        return ShiftingBehavior(
            before=_tenths(doc["before"], f"{where}.before"),
            after=_tenths(doc["after"], f"{where}.after"),
            switch_round=_int(doc["switch_round"], f"{where}.switch_round"),
            jitter=jitter,
        )
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def _parse_recommender(doc: Any, where: str) -> RecommenderProfile:
    if not isinstance(doc, dict):
        raise ConfigError(f"{where}: expected an object")
    kind = doc.get("kind")
    if kind not in _RECOMMENDER_KEYS:
        raise ConfigError(f"{where}.kind: unknown recommender kind {kind!r}")
    _require_keys(doc, _RECOMMENDER_KEYS[kind], {"kind"}, where)
    if kind == "honest":
        return HonestRecommender()
    if kind == "liar":
        return LiarRecommender()
    if "shift" not in doc:
        raise ConfigError(f"{where}: missing key 'shift'")
    try:
        return OffsetRecommender(shift=_int(doc["shift"], f"{where}.shift"))
    except ValueError as exc:
        raise ConfigError(f"{where}.shift: {exc}") from None


def parse_params(doc: Any, where: str = "params") -> ModelParams:
    if not isinstance(doc, dict):
        raise ConfigError(f"{where}: expected an object")
    _require_keys(doc, _PARAMS_KEYS, _PARAMS_KEYS, where)
    try:
        return ModelParams(
            k=_real(doc["k"], f"{where}.k"),
            n=_int(doc["n"], f"{where}.n"),
            td_th=_real(doc["td_th"], f"{where}.td_th"),
            rv_th=_real(doc["rv_th"], f"{where}.rv_th"),
        )
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def parse_banding(doc: Any, where: str = "banding") -> Banding:
    if not isinstance(doc, list) or len(doc) != 3:
        raise ConfigError(f"{where}: expected a list of three ascending grid values")
    cuts = tuple(_tenths(item, f"{where}[{i}]").tenths for i, item in enumerate(doc))
    try:
        return Banding(cuts=cuts)
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def parse_scenario(doc: Any) -> Scenario:
    """Validate a decoded scenario document and build the Scenario."""
    if not isinstance(doc, dict):
        raise ConfigError("scenario: expected a JSON object at the top level")
    _require_keys(doc, _SCENARIO_KEYS, {"agents", "rounds", "seed", "params"}, "scenario")

    if not isinstance(doc["agents"], list) or not doc["agents"]:
        raise ConfigError("agents: expected a non-empty list")
    agents = []
    seen: set[str] = set()
    for i, item in enumerate(doc["agents"]):
        where = f"agents[{i}]"
        if not isinstance(item, dict):
            raise ConfigError(f"{where}: expected an object")
        _require_keys(item, _AGENT_KEYS, _AGENT_KEYS, where)
        agent_id = item["id"]
        if not isinstance(agent_id, str) or not agent_id:
            raise ConfigError(f"{where}.id: expected a non-empty string")
        if agent_id in seen:
            raise ConfigError(f"{where}.id: duplicate agent id '{agent_id}'")
        seen.add(agent_id)
        agents.append(
            AgentSpec(
                agent_id=agent_id,
                behavior=_parse_behavior(item["behavior"], f"{where}.behavior"),
                recommender=_parse_recommender(item["recommender"], f"{where}.recommender"),
            )
        )

    rounds = _int(doc["rounds"], "rounds")
    if rounds < 1:
        raise ConfigError(f"rounds: must be >= 1, got {rounds}")
    seed = _int(doc["seed"], "seed")
    if not 0 <= seed <= MAX_SEED:
        raise ConfigError(f"seed: must be an unsigned 64-bit integer, got {seed}")

    scenario = Scenario(
        agents=tuple(agents),
        rounds=rounds,
        seed=seed,
        params=parse_params(doc["params"]),
        banding=parse_banding(doc["banding"]) if "banding" in doc else Banding(),
        pairing=doc.get("pairing", PAIRING_ALL),
    )
    if scenario.pairing not in (PAIRING_ALL, PAIRING_ROUND_ROBIN):
        raise ConfigError(f"pairing: unknown policy {scenario.pairing!r}")
    scenario.validate()
    return scenario


def load_scenario(path: str | Path) -> Scenario:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"scenario file {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"scenario file {path}: invalid JSON ({exc})") from None
    return parse_scenario(doc)


def parse_trace(text: str) -> tuple[list[TrustTenths], str | None]:
    """Parse trace text into (values, optional subject name)."""
    values: list[TrustTenths] = []
    subject: str | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.lower().startswith("subject:"):
                subject = body[len("subject:"):].strip() or None
            continue
        try:
            values.append(TrustTenths.parse(line))
        except ValueError as exc:
            raise ConfigError(f"trace line {lineno}: {exc}") from None
    return values, subject


def load_trace(path: str | Path) -> tuple[list[TrustTenths], str | None]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"trace file {path}: {exc}") from None
    return parse_trace(text)


def format_trace(values: list[TrustTenths], subject: str | None = None) -> str:
    """Render a trace that parse_trace reads back identically."""
    lines = []
    if subject is not None:
        lines.append(f"# subject: {subject}")
    lines.extend(str(v) for v in values)
    return "\n".join(lines) + "\n"
