"""
Run views for loadpath-bench.
Queues benchmark runs on the Celery worker.
"""

from drf_spectacular.utils import OpenApiResponse, extend_schema
from rest_framework.views import APIView

from core.api import accepted_response
from core.serializers import HarnessSectionSerializer

from .permissions import HasApiKey
from .tasks import execute_run_task, resolve_run


class RunCreateView(APIView):
    permission_classes = [HasApiKey]

    @extend_schema(
        tags=["Runs"],
        summary="Queue a benchmark run",
        description="Body is a harness config section. Returns the Celery task id.",
        request=HarnessSectionSerializer,
        responses={202: OpenApiResponse(description="Run queued")},
    )
    def post(self, request):
        serializer = HarnessSectionSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        resolve_run(request.data)
        task = execute_run_task.delay(request.data)
        return accepted_response({"task_id": task.id})
