"""Run configuration for wildcount CLI invocations"""

import logging
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional

import yaml

from ...algebra.finite_field import FieldParams, field_from_order, field_new
from ...algebra.lie import LieAlgebraSpec, parse_algebra
from ...config import WildcountConfig
from ...errors import DatumError
from ...ramification.datum import parse_rational

logger = logging.getLogger(__name__)

__all__ = ["RunConfig", "WildcountConfig", "load_yaml_config"]


@dataclass
class RunConfig:
    """One CLI invocation: command-line flags merged over an optional YAML file"""

    command: str = ""
    algebra: Optional[str] = None
    heisenberg: Optional[str] = None
    p: int = WildcountConfig.RUN_DEFAULTS["p"]
    d: int = WildcountConfig.RUN_DEFAULTS["d"]
    q: Optional[int] = None
    v_max: str = str(WildcountConfig.RUN_DEFAULTS["v_max"])
    n_max: str = str(WildcountConfig.RUN_DEFAULTS["n_max"])
    format: str = WildcountConfig.RUN_DEFAULTS["format"]
    jobs: int = WildcountConfig.RUN_DEFAULTS["jobs"]
    k: int = 1
    m: int = 2
    method: Optional[str] = None

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        """Flags given on the command line win over YAML values, which win over defaults"""
        values = {}
        config_path = getattr(args, "config", None)
        if config_path:
            values.update(load_yaml_config(config_path))
        for f in fields(cls):
            flag = getattr(args, f.name, None)
            if flag is not None:
                values[f.name] = flag
        if "jobs" not in values:
            values["jobs"] = WildcountConfig.default_jobs()
        config = cls(**values)
        config.validate()
        return config

    def validate(self) -> None:
        if self.format not in ("csv", "json"):
            raise ValueError(f"Output format must be csv or json, got {self.format!r}")
        if self.jobs < 1:
            raise ValueError(f"--jobs must be positive, got {self.jobs}")
        if self.algebra and self.heisenberg:
            raise ValueError("Give exactly one algebra source: --algebra or --heisenberg")
        for name in ("v_max", "n_max"):
            if parse_rational(getattr(self, name)) <= 0:
                raise ValueError(f"--{name.replace('_', '')} must be positive, got {getattr(self, name)}")
        if self.k < 1 or self.m < 0:
            raise ValueError(f"Need k >= 1 and m >= 0, got k={self.k}, m={self.m}")

    @property
    def field(self) -> FieldParams:
        """The residue field; --q takes precedence over --p/--d"""
        if self.q is not None:
            return field_from_order(self.q)
        return field_new(self.p, self.d)

    @property
    def characteristic(self) -> int:
        return field_from_order(self.q).p if self.q is not None else self.p

    def algebra_spec(self) -> LieAlgebraSpec:
        if not self.algebra:
            raise ValueError("This command needs --algebra")
        return parse_algebra(self.algebra, self.characteristic)

    @property
    def v_bound(self):
        return parse_rational(self.v_max)

    @property
    def n_bound(self):
        return parse_rational(self.n_max)

    def dump(self) -> str:
        return yaml.dump(asdict(self), default_flow_style=False, sort_keys=True)


def load_yaml_config(path) -> dict:
    """Read a YAML run configuration; unknown keys are a user error"""
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text())
    except OSError as e:
        raise DatumError(f"Cannot read config file {path}: {e.strerror}")
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise DatumError(f"Invalid YAML in {path}: {e}", mark.line + 1 if mark else None)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise DatumError(f"Config file {path} must hold a mapping")
    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise DatumError(f"Unknown config keys in {path}: {', '.join(unknown)}")
    logger.debug("loaded run config %s from %s", data, path)
    return data
