"""
Model endpoint definitions.
"""

from dataclasses import asdict, dataclass

from decouple import config

from .exceptions import AuthError, HarnessError


@dataclass(frozen=True)
class ModelEndpoint:
    base_url: str
    model_name: str
    name: str = "default"
    auth_token_env: str = "LOADPATH_MODEL_API_KEY"
    request_timeout: float = 60.0
    max_retries: int = 3
    temperature: float = 0.0
    backoff_factor: float = 1.0
    requests_per_minute: float | None = None

    def __post_init__(self):
        if not self.base_url or not self.model_name:
            raise HarnessError(f"Endpoint '{self.name}' needs base_url and model_name")
        if self.request_timeout <= 0:
            raise HarnessError("request_timeout must be positive")
        if self.max_retries < 0:
            raise HarnessError("max_retries must be >= 0")
        if self.requests_per_minute is not None and self.requests_per_minute <= 0:
            raise HarnessError("requests_per_minute must be positive")

    @property
    def chat_url(self):
        return f"{self.base_url.rstrip('/')}/chat/completions"

    def resolve_token(self):
        token = config(self.auth_token_env, default="")
        if not token:
            raise AuthError(f"Environment variable {self.auth_token_env} is not set")
        return token

    def identifiers(self):
        return {
            "endpoint": self.name,
            "base_url": self.base_url,
            "model": self.model_name,
            "temperature": self.temperature,
        }

    def to_dict(self):
        return asdict(self)
