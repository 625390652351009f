"""
Instance views for loadpath-bench.
Read-only access to the generated dataset and rendered prompts.
"""

from django.conf import settings
from drf_spectacular.types import OpenApiTypes
from drf_spectacular.utils import OpenApiParameter, extend_schema
from rest_framework.permissions import AllowAny
from rest_framework.views import APIView

from apps.forge.instance import PromptStyle, rotate_instance
from apps.forge.prompts import fewshot_pool, render_prompt
from core.api import success_response
from core.pagination import paginate

from .records import get_instance, instance_to_record, load_dataset
from .serializers import (
    InstanceDetailSerializer,
    InstanceFilterSerializer,
    InstanceRecordSerializer,
    PromptOptionsSerializer,
)


def current_dataset():
    return load_dataset(settings.LOADPATH_DATASET_PATH)


class InstanceListView(APIView):
    permission_classes = [AllowAny]

    @extend_schema(
        tags=["Instances"],
        summary="List task instances",
        parameters=[
            OpenApiParameter("subject", OpenApiTypes.STR, description="Subject slug, e.g. rows3"),
            OpenApiParameter("difficulty", OpenApiTypes.STR, description="easy or hard"),
        ],
        responses={200: InstanceRecordSerializer(many=True)},
    )
    def get(self, request):
        filters = InstanceFilterSerializer(data=request.query_params)
        filters.is_valid(raise_exception=True)
        subject = filters.validated_data.get("subject")
        difficulty = filters.validated_data.get("difficulty")

        instances = [
            instance
            for instance in current_dataset()
            if (subject is None or instance.subject.slug == subject)
            and (difficulty is None or instance.difficulty.value == difficulty)
        ]
        return paginate(self, request, instances, instance_to_record)


class InstanceDetailView(APIView):
    permission_classes = [AllowAny]

    @extend_schema(
        tags=["Instances"],
        summary="Get one instance with its rendered prompt",
        parameters=[
            OpenApiParameter(
                "style", OpenApiTypes.STR, description="base, physics_enhanced or physics_neutral"
            ),
            OpenApiParameter("shots", OpenApiTypes.INT, description="0, 1 or 3 few-shot examples"),
            OpenApiParameter("rotate", OpenApiTypes.INT, description="Clockwise quarter-turns"),
            OpenApiParameter("seed", OpenApiTypes.INT, description="Few-shot draw seed"),
        ],
        responses={200: InstanceDetailSerializer},
    )
    def get(self, request, instance_id):
        options = PromptOptionsSerializer(data=request.query_params)
        options.is_valid(raise_exception=True)
        opts = options.validated_data

        dataset = current_dataset()
        instance = get_instance(dataset, instance_id)
        style = PromptStyle.build(opts["style"], opts["shots"])
        pool = [rotate_instance(c, opts["rotate"]) for c in fewshot_pool(dataset, instance)]
        query = rotate_instance(instance, opts["rotate"])

        data = instance_to_record(query)
        data["prompt"] = render_prompt(query, style, pool if style.shots else (), seed=opts["seed"])
        return success_response(data)
