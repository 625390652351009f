"""
Chat-completions client for model endpoints.
One user message per request; transient failures retry with exponential backoff.
"""

import logging
import threading
import time

import backoff
import requests

from .endpoint import ModelEndpoint
from .exceptions import (
    AuthError,
    EndpointTimeout,
    MalformedResponse,
    ModelAPIError,
    RateLimited,
    ServerError,
    TransientAPIError,
)

logger = logging.getLogger(__name__)

MAX_BACKOFF_SECONDS = 30


class RateLimiter:
    """Spaces request starts at least 60 / requests_per_minute seconds apart."""

    def __init__(self, requests_per_minute=None, clock=time.monotonic, sleep=time.sleep):
        self.interval = 60.0 / requests_per_minute if requests_per_minute else 0.0
        self._clock = clock
        self._sleep = sleep
        self._lock = threading.Lock()
        self._next_start = 0.0

    def wait(self):
        if not self.interval:
            return
        with self._lock:
            now = self._clock()
            delay = self._next_start - now
            self._next_start = max(now, self._next_start) + self.interval
        if delay > 0:
            self._sleep(delay)


def _log_backoff(details):
    logger.warning(
        "Model request failed (%s); retry %d in %.1fs",
        details["exception"].__class__.__name__,
        details["tries"],
        details["wait"],
    )


class ChatCompletionsClient:
    """Client for one OpenAI-compatible chat-completions endpoint."""

    def __init__(self, endpoint: ModelEndpoint, session=None):
        self.endpoint = endpoint
        self.session = session or requests
        self.limiter = RateLimiter(endpoint.requests_per_minute)
        self._post_with_retry = backoff.on_exception(
            backoff.expo,
            TransientAPIError,
            max_tries=endpoint.max_retries + 1,
            on_backoff=_log_backoff,
            factor=endpoint.backoff_factor,
            max_value=MAX_BACKOFF_SECONDS,
        )(self._post_once)

    def complete(self, prompt):
        """
        Send a prompt and return the completion text verbatim.

        Args:
            prompt: Full prompt, sent as the only user message.

        Returns:
            str: choices[0].message.content

        Raises:
            AuthError: Missing token or 401/403.
            RateLimited, ServerError, EndpointTimeout: Transient failure after all retries.
            MalformedResponse: Body without completion text.
        """
        return self._post_with_retry(prompt)

    def _post_once(self, prompt):
        endpoint = self.endpoint
        headers = {
            "Authorization": f"Bearer {endpoint.resolve_token()}",
            "Content-Type": "application/json",
            "Accept": "application/json",
        }
        payload = {
            "model": endpoint.model_name,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": endpoint.temperature,
        }

        self.limiter.wait()
        try:
            response = self.session.post(
                endpoint.chat_url, json=payload, headers=headers, timeout=endpoint.request_timeout
            )
        except (requests.exceptions.Timeout, requests.exceptions.ConnectionError) as e:
            raise EndpointTimeout(f"{endpoint.name} unreachable: {str(e)}") from e
        except requests.exceptions.RequestException as e:
            raise ModelAPIError(f"{endpoint.name} request failed: {str(e)}") from e

        status = response.status_code
        if status in (401, 403):
            raise AuthError(f"{endpoint.name} rejected credentials (HTTP {status})")
        if status == 429:
            raise RateLimited(f"{endpoint.name} rate limited the request")
        if status >= 500:
            raise ServerError(f"{endpoint.name} returned HTTP {status}")
        if status >= 400:
            raise ModelAPIError(f"{endpoint.name} returned HTTP {status}")

        try:
            content = response.json()["choices"][0]["message"]["content"]
        except (ValueError, KeyError, IndexError, TypeError) as e:
            raise MalformedResponse(f"{endpoint.name} response has no completion text") from e
        if not isinstance(content, str):
            raise MalformedResponse(f"{endpoint.name} completion is not text")
        return content


def call_model(endpoint: ModelEndpoint, prompt, client=None):
    return (client or ChatCompletionsClient(endpoint)).complete(prompt)
