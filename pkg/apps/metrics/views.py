"""
Scoring view: evaluate one completion against a dataset instance.
"""

from django.conf import settings
from drf_spectacular.utils import extend_schema
from rest_framework.permissions import AllowAny
from rest_framework.views import APIView

from apps.scenarios.records import get_instance, load_dataset
from core.api import success_response
from core.runconfig import load_run_config
from core.serializers import ScoreRequestSerializer

from .report import evaluate


class InstanceScoreView(APIView):
    permission_classes = [AllowAny]

    @extend_schema(
        tags=["Scoring"],
        summary="Score a completion",
        description="Parses the completion and returns the flat metric report.",
        request=ScoreRequestSerializer,
    )
    def post(self, request, instance_id):
        serializer = ScoreRequestSerializer(data=request.data)
        serializer.is_valid(raise_exception=True)
        instance = get_instance(load_dataset(settings.LOADPATH_DATASET_PATH), instance_id)
        metrics = load_run_config(settings.LOADPATH_RUN_CONFIG or None).metrics
        report = evaluate(instance, serializer.validated_data["completion"], metrics)
        return success_response(report.to_record())
