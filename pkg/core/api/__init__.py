from .responses import accepted_response, error_response, success_response

__all__ = ["success_response", "accepted_response", "error_response"]
