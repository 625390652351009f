from core.errors import BenchmarkError


class ScenarioError(BenchmarkError):
    """Base error for scenario enumeration and dataset building."""


class EmptyEnumeration(ScenarioError):
    pass


class DatasetBuildError(ScenarioError):
    """A scenario failed to optimize; carries the scenario id."""

    @property
    def scenario_id(self):
        return self.context.get("scenario_id")


class InstanceNotFound(ScenarioError):
    status_code = 404


class DatasetUnavailable(ScenarioError):
    status_code = 503
