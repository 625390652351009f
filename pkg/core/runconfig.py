"""
Run configuration loading.
A YAML file with solver, dataset, metrics and harness sections drives every command.
"""

import copy
import logging
from dataclasses import asdict, dataclass, field

import yaml

from apps.harness.endpoint import ModelEndpoint
from apps.harness.exceptions import UnknownEndpoint
from apps.harness.runner import RunSpec
from apps.metrics.config import ForcePathConfig, MetricConfig
from apps.solver.config import SolverConfig

from .errors import BenchmarkError, ConfigError
from .exceptions import normalize_errors
from .serializers import (
    DatasetSectionSerializer,
    HarnessSectionSerializer,
    MetricsSectionSerializer,
    SolverSectionSerializer,
)

logger = logging.getLogger(__name__)

SECTION_SERIALIZERS = {
    "solver": SolverSectionSerializer,
    "dataset": DatasetSectionSerializer,
    "metrics": MetricsSectionSerializer,
    "harness": HarnessSectionSerializer,
}


@dataclass(frozen=True)
class DatasetConfig:
    rows: int = 10
    cols: int = 10
    widths: tuple = (3, 4, 5, 6)
    stride: int = 3
    seed: int = 0
    workers: int = 1


@dataclass(frozen=True)
class RunConfig:
    solver: SolverConfig = field(default_factory=SolverConfig)
    dataset: DatasetConfig = field(default_factory=DatasetConfig)
    metrics: MetricConfig = field(default_factory=MetricConfig)
    harness: RunSpec = field(default_factory=RunSpec)
    endpoints: dict = field(default_factory=dict)

    def endpoint(self, name=None):
        name = name or self.harness.endpoint
        try:
            return self.endpoints[name]
        except KeyError as e:
            declared = ", ".join(sorted(self.endpoints)) or "none"
            raise UnknownEndpoint(
                f"Endpoint '{name}' is not declared under harness.endpoints (declared: {declared})"
            ) from e

    def to_dict(self):
        return {
            "solver": self.solver.to_dict(),
            "dataset": {**asdict(self.dataset), "widths": list(self.dataset.widths)},
            "metrics": self.metrics.to_dict(),
            "harness": {
                **self.harness.to_dict(),
                "endpoints": {name: ep.to_dict() for name, ep in self.endpoints.items()},
            },
        }


def merge(base, overrides):
    """Recursive dict merge; override values win, None overrides are ignored."""
    merged = copy.deepcopy(base)
    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def read_config_file(path):
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as handle:
            data = yaml.safe_load(handle) or {}
    except OSError as e:
        raise ConfigError(f"Cannot read config file {path}: {e.strerror}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"Config file {path} is not valid YAML: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Config file {path} must contain a mapping at the top level")
    return data


def validate_section(name, data):
    serializer = SECTION_SERIALIZERS[name](data=data if data is not None else {})
    if not serializer.is_valid():
        raise ConfigError(f"{name}.{normalize_errors(serializer.errors)}")
    return serializer.validated_data


def build_run_config(data):
    """
    Validate a raw config mapping into a RunConfig.

    Raises:
        ConfigError: unknown section or key, or a value outside its range.
    """
    unknown = sorted(set(data) - set(SECTION_SERIALIZERS))
    if unknown:
        raise ConfigError(f"Unknown config section '{unknown[0]}'")
    sections = {name: validate_section(name, data.get(name)) for name in SECTION_SERIALIZERS}

    metrics = dict(sections["metrics"])
    force_path = metrics.pop("force_path", None)
    dataset = dict(sections["dataset"])
    dataset["widths"] = tuple(dataset["widths"])
    harness = dict(sections["harness"])
    endpoints = harness.pop("endpoints", {}) or {}

    try:
        return RunConfig(
            solver=SolverConfig(**sections["solver"]),
            dataset=DatasetConfig(**dataset),
            metrics=MetricConfig(
                **metrics,
                force_path=ForcePathConfig(
                    **{k: tuple(v) if isinstance(v, list) else v for k, v in force_path.items()}
                )
                if force_path
                else ForcePathConfig(),
            ),
            harness=RunSpec(**harness),
            endpoints={
                name: ModelEndpoint(name=name, **dict(values)) for name, values in endpoints.items()
            },
        )
    except BenchmarkError as e:
        raise ConfigError(str(e)) from e


def load_run_config(path=None, overrides=None):
    data = merge(read_config_file(path), overrides)
    config = build_run_config(data)
    logger.debug("Loaded run config from %s", path or "defaults")
    return config
