"""Relay efficiency area model for relay-aided cellular planning.

Configurations are plain dicts using the keys of the JSON cell files
(for example ``{"relay_distance_m": 600, "rate_bps_hz": 5}``); missing keys
take their defaults. Scenario tables are dicts or paths to JSON files.
Results are lists of row dicts with the same columns as the command line tool.
"""

import json
import os

from . import _core
from ._core import ConfigError, NumericalError

__all__ = [
    "ConfigError",
    "NumericalError",
    "default_config",
    "default_scenario_table",
    "normalize_config",
    "rea",
    "metrics",
    "simulate",
    "sweep",
    "link_gains",
    "p_rtx",
]

_RELAY_SCHEMES = ("fulldf", "eopdf")


def _dump(obj):
    return "" if obj is None else json.dumps(obj)


def _table(table):
    if table is None:
        return ""
    if isinstance(table, (str, os.PathLike)):
        with open(table, encoding="utf-8") as f:
            return f.read()
    return json.dumps(table)


def _schemes(schemes):
    return [schemes] if isinstance(schemes, str) else list(schemes)


def default_config():
    """Default cell configuration."""
    return json.loads(_core.default_config())


def default_scenario_table():
    """Built-in WINNER II scenario table."""
    return json.loads(_core.default_scenario_table())


def normalize_config(config):
    """Validate a configuration and return it with all defaults filled in."""
    return json.loads(_core.normalize_config(_dump(config)))


def rea(config=None, schemes=_RELAY_SCHEMES, direction="uplink", scenario_table=None):
    """Characteristic distances and acceptance per relaying scheme."""
    return _core.rea(_dump(config), _schemes(schemes), direction, _table(scenario_table))


def metrics(config=None, schemes=_RELAY_SCHEMES, direction="uplink", beta=1.0, seed=1, scenario_table=None):
    """Relaying probability and average energies; beta scales the coverage extension."""
    return _core.metrics(_dump(config), _schemes(schemes), direction, beta, seed, _table(scenario_table))


def simulate(config=None, schemes=("fulldf",), direction="uplink", samples=100000, seed=1, threads=0,
             scenario_table=None):
    """Monte-Carlo user drops compared with the model, one row per scheme ("dtx" allowed)."""
    return _core.simulate(_dump(config), _schemes(schemes), direction, samples, seed, threads,
                          _table(scenario_table))


def sweep(spec, base_dir=".", scenario_table=None):
    """Run a parameter sweep described by a sweep-spec dict or a path to one."""
    if isinstance(spec, (str, os.PathLike)):
        base_dir = os.path.dirname(os.fspath(spec)) or "."
        with open(spec, encoding="utf-8") as f:
            spec = json.load(f)
    return _core.sweep(json.dumps(spec), os.fspath(base_dir), _table(scenario_table))


def link_gains(r, theta, config=None, scenario_table=None):
    """Linear gains of the direct, user-relay and relay-BS links at a user position."""
    return _core.link_gains(_dump(config), r, theta, _table(scenario_table))


def p_rtx(d_min, r_dtx, r_cov):
    """Probability that a uniformly placed user is served through the relay."""
    return _core.p_rtx(d_min, r_dtx, r_cov)
