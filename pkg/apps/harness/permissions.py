"""
API key permission for mutating harness endpoints.
"""

import hmac

from django.conf import settings
from rest_framework.permissions import BasePermission


class HasApiKey(BasePermission):
    """
    Require the X-Api-Key header to match LOADPATH_API_TOKEN.
    An empty token leaves the endpoint open.
    """

    message = "A valid X-Api-Key header is required."

    def has_permission(self, request, view):
        expected = getattr(settings, "LOADPATH_API_TOKEN", "")
        if not expected:
            return True
        provided = request.headers.get("X-Api-Key", "")
        return hmac.compare_digest(provided.encode(), expected.encode())
