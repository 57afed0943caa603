"""Trust and reputation engine with a deterministic community simulator.

Two complementary models of computational trust:

- an ordinal recommendation model (four trust grades, per-context direct
  experience tallies, semantic-distance correction of recommendations and
  weighted combination), see :mod:`trustnet.ordinal`;
- a windowed median/risk model (discrete [0, 1] metric, growing experience
  windows, forgiveness-weighted running trust and downside semi-deviation),
  see :mod:`trustnet.median_risk`.

:mod:`trustnet.simulate` drives both through seeded multi-agent scenarios;
:mod:`trustnet.cli` is the command-line front end.
"""

from .errors import (
    ConfigError,
    NoExperienceError,
    NoReputationError,
    NoUsableRecommendationsError,
    TrustnetError,
    UnknownRecommenderError,
)
from .median_risk import (
    Characteristics,
    ExperienceWindow,
    ModelParams,
    TrustState,
    bootstrap,
    classify,
    evaluate,
    general_reputation,
    median_of_window,
    push_experience,
    risk_value,
    update_general_trust,
)
from .ordinal import (
    AdjustmentSets,
    DirectTrustStore,
    ExperienceCounters,
    RecommenderStore,
    adjust_recommendation,
    combine_recommendations,
    weight_of,
)
from .profiles import (
    ConsistentBehavior,
    ErraticBehavior,
    HonestRecommender,
    LiarRecommender,
    OffsetRecommender,
    ShiftingBehavior,
)
from .scales import (
    Banding,
    DEFAULT_BANDING,
    OrdinalDegree,
    SemanticShift,
    TrustTenths,
    degree_distance,
    degree_shift,
    tenths_to_degree,
)
from .simulate import (
    AgentSpec,
    Scenario,
    SimulationReport,
    ground_truth_characteristics,
    run_scenario,
)

__version__ = "0.1.0"

__all__ = [
    "AdjustmentSets",
    "AgentSpec",
    "Banding",
    "Characteristics",
    "ConfigError",
    "ConsistentBehavior",
    "DEFAULT_BANDING",
    "DirectTrustStore",
    "ErraticBehavior",
    "ExperienceCounters",
    "ExperienceWindow",
    "HonestRecommender",
    "LiarRecommender",
    "ModelParams",
    "NoExperienceError",
    "NoReputationError",
    "NoUsableRecommendationsError",
    "OffsetRecommender",
    "OrdinalDegree",
    "RecommenderStore",
    "Scenario",
    "SemanticShift",
    "ShiftingBehavior",
    "SimulationReport",
    "TrustState",
    "TrustTenths",
    "TrustnetError",
    "UnknownRecommenderError",
    "adjust_recommendation",
    "bootstrap",
    "classify",
    "combine_recommendations",
    "degree_distance",
    "degree_shift",
    "evaluate",
    "general_reputation",
    "ground_truth_characteristics",
    "median_of_window",
    "push_experience",
    "risk_value",
    "run_scenario",
    "tenths_to_degree",
    "update_general_trust",
    "weight_of",
]
