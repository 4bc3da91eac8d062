"""Size caps for the exhaustive searches.

Every cap can be overridden through an environment variable
``WELLCOVER_<NAME>_CAP`` (for example ``WELLCOVER_FACETS_CAP=24``).
"""

from __future__ import annotations

import os

from .errors import CapExceeded

DEFAULTS = {
    # facet subsets are enumerated exhaustively (forest test, covers)
    "facets": 20,
    # vertex-cover search
    "vertices": 24,
    # Lyubeznik complex construction
    "generators": 16,
    # Taylor-complex homology oracle
    "oracle": 12,
    # faces materialized by one strict-lower Taylor complex
    "faces": 1 << 16,
}

# covers with at most this many facets are ordered by plain permutation
# enumeration; larger ones go through the pruned search
PERMUTATION_THRESHOLD = 8


_overrides: dict[str, int] = {}


def override(name: str, value: int | None) -> None:
    """Pin a cap for this process (takes precedence over the environment)."""
    if name not in DEFAULTS:
        raise KeyError(name)
    if value is None:
        _overrides.pop(name, None)
    else:
        _overrides[name] = value


def env_name(name: str) -> str:
    return f"WELLCOVER_{name.upper()}_CAP"


def get(name: str) -> int:
    if name in _overrides:
        return _overrides[name]
    raw = os.environ.get(env_name(name))
    if raw is None:
        return DEFAULTS[name]
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{env_name(name)} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{env_name(name)} must be positive")
    return value


def check(name: str, size: int, cap: int | None = None, what: str | None = None) -> None:
    """Raise :class:`CapExceeded` when ``size`` is above the cap called ``name``."""
    limit = get(name) if cap is None else cap
    if size > limit:
        raise CapExceeded(what or f"number of {name}", size, limit, env_name(name))
