"""Flat key-value configuration files.

Format: one ``key = value`` pair per line, ``#`` starts a comment, blank
lines are ignored. Recognised keys (all optional):

    profile            = all | PG | SG | F | PF | C
    scenario           = equal | correlation_boosted
    alpha              = <number in [0, 100]>
    beta               = <number in [0, 100]>
    function_kind      = usual | u_shape | v_shape | level | v_shape_indifference | gaussian
    scenario2_residual = <number>  (weight of each unboosted criterion, default 0.05)
    direction.<crit>   = max | min
    weight.<crit>      = <number>  (any weight.* key switches to explicit weights)

Command-line flags override config values.
"""

from __future__ import annotations

from pathlib import Path

from .exceptions import ConfigurationError

_SCALAR_KEYS = ("profile", "scenario", "alpha", "beta", "function_kind",
                "scenario2_residual")


def load_config(path: str | Path) -> dict[str, str]:
    """Read a flat key-value file into a string-to-string mapping."""
    result: dict[str, str] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigurationError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if not key:
            raise ConfigurationError(f"{path}:{lineno}: empty key")
        known = key in _SCALAR_KEYS or key.startswith(("direction.", "weight."))
        if not known:
            raise ConfigurationError(f"{path}:{lineno}: unknown key {key!r}")
        result[key] = value
    return result


def config_directions(config: dict[str, str]) -> dict[str, str]:
    """Per-criterion direction overrides from ``direction.<crit>`` keys."""
    directions = {}
    for key, value in config.items():
        if key.startswith("direction."):
            if value not in ("max", "min"):
                raise ConfigurationError(f"{key} must be 'max' or 'min', got {value!r}")
            directions[key[len("direction."):]] = value
    return directions


def config_weights(config: dict[str, str]) -> dict[str, float] | None:
    """Explicit weight map from ``weight.<crit>`` keys, or None when absent."""
    weights = {}
    for key, value in config.items():
        if key.startswith("weight."):
            try:
                weights[key[len("weight."):]] = float(value)
            except ValueError:
                raise ConfigurationError(f"{key} must be a number, got {value!r}") from None
    return weights or None
