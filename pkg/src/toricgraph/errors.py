"""Exceptions and the shared enumeration cap."""

import os

# Single knob for every potentially-exponential enumeration (simple cycles,
# connected-subgraph sweep, support subsets, completion insertions).
ENUM_CAP_ENV = "TORICGRAPH_ENUM_CAP"
DEFAULT_ENUM_CAP = 10**6


class ToricGraphError(ValueError):
    """Domain error: invalid input or violated precondition."""


class EnumerationCapError(ToricGraphError):
    """An enumeration exceeded its safety cap; the result would be incomplete."""


class ZeroBinomialError(ToricGraphError):
    """A walk cancelled completely; the zero binomial is never emitted."""


def enumeration_cap(explicit: int | None = None, default: int = DEFAULT_ENUM_CAP) -> int:
    """Resolve the effective cap: explicit argument, else env var, else default."""
    if explicit is not None:
        if explicit <= 0:
            raise ToricGraphError("enumeration cap must be positive")
        return explicit
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ToricGraphError(f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ToricGraphError(f"{ENUM_CAP_ENV} must be positive, got {value}")
    return value
