"""
Custom exception handling for REST API.
Provides consistent error response format across the application.
"""

import logging

from rest_framework import status
from rest_framework.views import exception_handler as drf_exception_handler

from .api.responses import error_response
from .errors import BenchmarkError

logger = logging.getLogger(__name__)


def normalize_errors(detail, parent_field=None):
    """
    Normalize error details into a single error message string.
    Returns only the first error encountered, prefixed with its field path.
    """
    if isinstance(detail, dict):
        first_field = next(iter(detail.keys()))
        first_msgs = detail[first_field]
        full_field = f"{parent_field}.{first_field}" if parent_field else first_field

        if isinstance(first_msgs, list):
            if not first_msgs:
                msg = "Invalid value"
            elif isinstance(first_msgs[0], dict):
                return normalize_errors(first_msgs[0], full_field)
            else:
                msg = str(first_msgs[0])
        elif isinstance(first_msgs, dict):
            return normalize_errors(first_msgs, full_field)
        else:
            msg = str(first_msgs)

        if first_field in ("non_field_errors", "detail"):
            return msg
        msg = msg.lower() if msg and msg[0].isupper() else msg
        return f"{full_field} {msg}"

    if isinstance(detail, list):
        if not detail:
            return "Invalid value"
        if isinstance(detail[0], dict):
            return normalize_errors(detail[0], parent_field)
        return str(detail[0])

    return str(detail)


def custom_exception_handler(exc, context):
    """
    Exception handler for all API views:
    {"success": false, "error": "field_name error message"}
    """
    response = drf_exception_handler(exc, context)

    if response is not None:
        if isinstance(response.data, dict):
            error = normalize_errors(response.data)
        elif isinstance(response.data, list):
            error = str(response.data[0])
        else:
            error = str(response.data)
        response.data = {"success": False, "error": error}
        return response

    if isinstance(exc, BenchmarkError):
        logger.info("Benchmark error in API: %s", exc)
        return error_response(str(exc), status_code=exc.status_code)

    logger.exception("Unhandled exception in API: %s", exc)
    return error_response(
        "Internal server error.", status_code=status.HTTP_500_INTERNAL_SERVER_ERROR
    )
