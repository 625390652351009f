"""
Root URL configuration for loadpath-bench.

Routing structure:
- /api/v1/instances/       - Instance browsing and prompt rendering
- /api/v1/instances/<id>/score/ - Score a completion
- /api/v1/runs/            - Queue evaluation runs
- /api/docs/               - Swagger UI documentation
- /api/redoc/              - ReDoc documentation
- /api/schema/             - OpenAPI schema
"""

from django.urls import include, path
from drf_spectacular.views import SpectacularAPIView, SpectacularRedocView, SpectacularSwaggerView

urlpatterns = [
    # API v1 - Scoring endpoints
    path("api/v1/instances/", include("apps.metrics.urls")),
    # API v1 - Instance endpoints
    path("api/v1/instances/", include("apps.scenarios.urls")),
    # API v1 - Run endpoints
    path("api/v1/runs/", include("apps.harness.urls")),
    # API Documentation
    path("api/schema/", SpectacularAPIView.as_view(), name="schema"),
    path("api/docs/", SpectacularSwaggerView.as_view(url_name="schema"), name="swagger-ui"),
    path("api/redoc/", SpectacularRedocView.as_view(url_name="schema"), name="redoc"),
]
