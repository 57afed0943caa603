"""Exception types shared across the package."""


class TrustnetError(Exception):
    """Base class for all domain errors raised by this package."""


class NoExperienceError(TrustnetError):
    """Raised when a trust degree is requested but no experience was recorded.

    Callers typically fall back to recommendations when they see this.
    """


class UnknownRecommenderError(TrustnetError):
    """Raised when a recommender has no adjustment history at all.

    Callers map this condition to recommendation weight 0.
    """


class NoUsableRecommendationsError(TrustnetError):
    """Raised when every gathered recommendation carries weight 0."""


class NoReputationError(TrustnetError):
    """Raised when a reputation value is requested from an empty sample."""


class ConfigError(TrustnetError):
    """Raised for invalid scenario, trace, or parameter input.

    The message names the offending field or line so the CLI can surface
    it verbatim.
    """
