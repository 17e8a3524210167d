"""Run configuration with dotted keys (``closure.cap_e=4`` and friends)."""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .ringcore import GBBudget


@dataclass(frozen=True)
class Config:
    gb_max_pairs: int = 200_000
    gb_max_terms: int = 500_000
    closure_cap_e: int = 6
    closure_cap_n: int = 8
    closure_window: int = 2
    closure_min_e: int = 1
    mult_lech_max_n: int = 8
    mult_mode: str = "auto"
    probe_samples: int = 6
    probe_degree_range: tuple = (1, 2)
    probe_seed: int = 0
    probe_terms: int = 2
    corgor_candidate_degrees: tuple = (1, 2)
    corgor_E: int = 3

    KEYS = {
        "gb.max_pairs": "gb_max_pairs",
        "gb.max_terms": "gb_max_terms",
        "closure.cap_e": "closure_cap_e",
        "closure.cap_n": "closure_cap_n",
        "closure.window": "closure_window",
        "closure.min_e": "closure_min_e",
        "mult.lech_max_n": "mult_lech_max_n",
        "mult.mode": "mult_mode",
        "probe.samples": "probe_samples",
        "probe.degree_range": "probe_degree_range",
        "probe.seed": "probe_seed",
        "probe.terms": "probe_terms",
        "corgor.candidate_degrees": "corgor_candidate_degrees",
        "corgor.E": "corgor_E",
    }

    @property
    def budget(self) -> GBBudget:
        return GBBudget(self.gb_max_pairs, self.gb_max_terms)

    def with_overrides(self, overrides) -> "Config":
        """Apply ``{"closure.cap_e": "4", ...}`` or an iterable of ``KEY=VAL`` strings."""
        if not isinstance(overrides, dict):
            pairs = {}
            for item in overrides:
                key, sep, val = item.partition("=")
                if not sep:
                    raise ValueError(f"config override {item!r} is not KEY=VAL")
                pairs[key.strip()] = val.strip()
            overrides = pairs
        changes = {}
        for key, val in overrides.items():
            attr = self.KEYS.get(key)
            if attr is None:
                raise ValueError(f"unknown config key {key!r}")
            changes[attr] = _coerce(getattr(self, attr), val)
        cfg = dataclasses.replace(self, **changes)
        cfg.validate()
        return cfg

    def validate(self):
        if self.closure_cap_e < 1 or self.closure_cap_n < 1:
            raise ValueError("closure caps must be >= 1")
        if self.closure_window < 1:
            raise ValueError("closure.window must be >= 1")
        if self.mult_mode not in ("auto", "cm_exact", "lech"):
            raise ValueError("mult.mode must be auto, cm_exact or lech")
        if self.mult_lech_max_n < 2:
            raise ValueError("mult.lech_max_n must be >= 2")

    def as_dict(self) -> dict:
        out = {}
        for key, attr in self.KEYS.items():
            v = getattr(self, attr)
            out[key] = list(v) if isinstance(v, tuple) else v
        return out


def _coerce(current, val):
    if not isinstance(val, str):
        return tuple(val) if isinstance(current, tuple) else val
    if isinstance(current, tuple):
        return tuple(int(v) for v in val.replace(":", ",").split(",") if v.strip())
    if isinstance(current, int):
        return int(val)
    return val


DEFAULT = Config()
