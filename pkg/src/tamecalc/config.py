"""JSON configuration: which algebra, which metric, which options."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebras import Cuntz, Formal, FreeGroup, NCTorus
from .errors import ConfigError
from .forms import Metric
from .parsing import parse_expression

__all__ = ["Config", "DEFAULT_CONFIG", "load_config", "build_presentation", "build_metric"]

DEFAULT_CONFIG = {
    "algebra": {"type": "nc-torus", "n": 2, "theta": [["0", "1/4"], ["-1/4", "0"]]},
    "metric": {"type": "g0"},
    "options": {"float_mode": False, "seed": 0},
}

_KINDS = {"nc-torus": NCTorus, "free-group": FreeGroup, "cuntz": Cuntz, "formal": Formal}


@dataclass
class Config:
    algebra: dict
    metric: dict = field(default_factory=lambda: {"type": "g0"})
    options: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(data) - {"algebra", "metric", "options"}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "algebra" not in data:
            raise ConfigError("config needs an 'algebra' section")
        return cls(dict(data["algebra"]), dict(data.get("metric") or {"type": "g0"}),
                   dict(data.get("options") or {}))

    @property
    def float_mode(self) -> bool:
        return bool(self.options.get("float_mode", False))

    @property
    def seed(self) -> int:
        return int(self.options.get("seed", 0))


def load_config(path=None) -> Config:
    if path is None:
        return Config.from_dict(json.loads(json.dumps(DEFAULT_CONFIG)))
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from None
    return Config.from_dict(data)


def _number(x, float_mode):
    try:
        value = Fraction(str(x).strip())
    except (ValueError, ZeroDivisionError):
        if float_mode:
            try:
                return float(x)
            except ValueError:
                pass
        raise ConfigError(f"bad number {x!r} in theta") from None
    return float(value) if float_mode else value


def build_presentation(cfg: Config):
    a = cfg.algebra
    kind = a.get("type")
    if kind not in _KINDS:
        raise ConfigError(f"algebra type must be one of {sorted(_KINDS)}, got {kind!r}")
    n = a.get("n", 2)
    if not isinstance(n, int) or n < 2:
        raise ConfigError(f"n must be an integer >= 2, got {n!r}")
    fm = cfg.float_mode
    if kind == "nc-torus":
        theta = a.get("theta")
        if theta is None:
            raise ConfigError("nc-torus needs theta")
        try:
            if isinstance(theta, (str, int, float)):
                return NCTorus.with_angle(_number(theta, fm), n, fm)
            rows = [[_number(x, fm) for x in row] for row in theta]
            return NCTorus(n, rows, fm)
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(str(exc)) from None
    if "theta" in a:
        raise ConfigError(f"theta is only allowed for nc-torus, not {kind}")
    return _KINDS[kind](n, fm)


def build_metric(cfg: Config, P) -> Metric:
    """Metric errors propagate; malformed sections raise ConfigError."""
    m = cfg.metric
    kind = m.get("type", "g0")
    expr = lambda src: parse_expression(str(src), P)
    if kind == "g0":
        return Metric.g0(P)
    if kind in ("conformal", "badmetric"):
        if "k" not in m:
            raise ConfigError(f"{kind} metric needs k")
        k = expr(m["k"])
        k_inv = expr(m["k_inv"]) if m.get("k_inv") is not None else None
        return Metric.conformal(k, k_inv) if kind == "conformal" else Metric.badmetric(k, k_inv)
    if kind == "diagonal":
        entries = [expr(x) for x in m.get("entries", [])]
        if len(entries) != P.n:
            raise ConfigError(f"diagonal metric needs {P.n} entries")
        invs = m.get("entry_invs")
        invs = [expr(x) for x in invs] if invs is not None else None
        return Metric.diagonal(entries, invs)
    if kind == "matrix":
        rows = m.get("entries")
        if not isinstance(rows, list) or len(rows) != P.n:
            raise ConfigError(f"matrix metric needs {P.n} rows")
        G = [[expr(x) for x in row] for row in rows]
        certified = {expr(a): expr(b) for a, b in (m.get("certified_inverses") or {}).items()}
        return Metric(G, certified or None)
    raise ConfigError(f"unknown metric type {kind!r}")
