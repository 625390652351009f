"""
Completion cache on top of Django's cache framework.
"""

import hashlib
import logging
import threading

from django.core.cache import caches

logger = logging.getLogger(__name__)


def completion_key(endpoint, prompt):
    material = f"{endpoint.base_url}|{endpoint.model_name}|{endpoint.temperature}|{prompt}"
    return hashlib.sha256(material.encode("utf-8")).hexdigest()


class CompletionCache:
    def __init__(self, alias="completions"):
        self.backend = caches[alias]
        self._lock = threading.Lock()

    def get(self, endpoint, prompt):
        key = completion_key(endpoint, prompt)
        value = self.backend.get(key)
        logger.debug("Completion cache %s for %s", "hit" if value is not None else "miss", key[:12])
        return value

    def set(self, endpoint, prompt, completion):
        with self._lock:
            self.backend.set(completion_key(endpoint, prompt), completion, timeout=None)

    def clear(self):
        with self._lock:
            self.backend.clear()
