from core.errors import BenchmarkError


class HarnessError(BenchmarkError):
    """Base error for benchmark runs."""


class InsufficientInstances(HarnessError):
    pass


class EmptyGroup(HarnessError):
    pass


class UnknownEndpoint(HarnessError):
    status_code = 404


class ModelAPIError(HarnessError):
    """Base error for model API calls."""

    status_code = 502


class AuthError(ModelAPIError):
    pass


class MalformedResponse(ModelAPIError):
    pass


class TransientAPIError(ModelAPIError):
    """Retried with backoff before surfacing."""


class RateLimited(TransientAPIError):
    pass


class ServerError(TransientAPIError):
    pass


class EndpointTimeout(TransientAPIError):
    pass
