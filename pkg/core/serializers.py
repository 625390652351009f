"""
Run configuration serializers for loadpath-bench.
One serializer per config file section; unknown keys are rejected.
"""

from collections.abc import Mapping

from rest_framework import serializers

from apps.forge.instance import ALLOWED_SHOTS, Style
from apps.grids.cells import Difficulty
from apps.metrics.difficulty import STRATEGIES
from apps.scenarios.enumeration import MAX_WIDTH, MIN_WIDTH
from apps.scenarios.subjects import SUBJECT_SLUGS


class StrictSerializer(serializers.Serializer):
    """Serializer that refuses keys it does not declare."""

    def to_internal_value(self, data):
        if isinstance(data, Mapping):
            unknown = sorted(set(data) - set(self.fields))
            if unknown:
                raise serializers.ValidationError({unknown[0]: ["Unknown key."]})
        return super().to_internal_value(data)


class SolverSectionSerializer(StrictSerializer):
    target_density = serializers.FloatField(default=0.1)
    penalization = serializers.FloatField(default=3.0)
    iterations = serializers.IntegerField(default=10, min_value=1)
    smoothing = serializers.FloatField(default=0.1, min_value=0.0)
    min_density = serializers.FloatField(default=0.001)
    delete_threshold = serializers.FloatField(default=0.5)
    self_weight = serializers.FloatField(default=0.0, min_value=0.0)
    move_limit = serializers.FloatField(default=0.2)
    youngs_modulus = serializers.FloatField(default=1.0)
    poisson_ratio = serializers.FloatField(default=0.3)
    repair_load_paths = serializers.BooleanField(default=True)
    remove_floating = serializers.BooleanField(default=True)


class DatasetSectionSerializer(StrictSerializer):
    rows = serializers.IntegerField(default=10, min_value=3)
    cols = serializers.IntegerField(default=10, min_value=MIN_WIDTH)
    widths = serializers.ListField(
        child=serializers.IntegerField(min_value=MIN_WIDTH, max_value=MAX_WIDTH),
        default=[3, 4, 5, 6],
        allow_empty=False,
    )
    stride = serializers.IntegerField(default=3, min_value=1)
    seed = serializers.IntegerField(default=0, min_value=0)
    workers = serializers.IntegerField(default=1, min_value=1)


class ForcePathSerializer(StrictSerializer):
    angle_thresholds = serializers.ListField(
        child=serializers.FloatField(), default=[15.0, 45.0, 100.0]
    )
    angle_costs = serializers.ListField(
        child=serializers.FloatField(), default=[1.0, 1.2, 1.5, 3.0]
    )
    upward_dot_cutoff = serializers.FloatField(default=-0.5)
    depth_coeff = serializers.FloatField(default=0.05, min_value=0.0)


class MetricsSectionSerializer(StrictSerializer):
    penalty_weight = serializers.FloatField(default=3.0, min_value=1.0)
    cmax = serializers.FloatField(default=1e6)
    clip_fpceff = serializers.BooleanField(default=True)
    connectivity_solid_threshold = serializers.FloatField(default=0.0, min_value=0.0)
    difficulty_strategy = serializers.ChoiceField(
        choices=list(STRATEGIES), default="category_diversity"
    )
    force_path = ForcePathSerializer(required=False)


class EndpointSerializer(StrictSerializer):
    base_url = serializers.URLField()
    model_name = serializers.CharField()
    auth_token_env = serializers.CharField(default="LOADPATH_MODEL_API_KEY")
    request_timeout = serializers.FloatField(default=60.0)
    max_retries = serializers.IntegerField(default=3, min_value=0)
    temperature = serializers.FloatField(default=0.0, min_value=0.0)
    backoff_factor = serializers.FloatField(default=1.0, min_value=0.0)
    requests_per_minute = serializers.FloatField(default=None, allow_null=True)


class HarnessSectionSerializer(StrictSerializer):
    dataset_path = serializers.CharField(default="", allow_blank=True)
    subjects = serializers.ListField(
        child=serializers.ChoiceField(choices=SUBJECT_SLUGS),
        default=list(SUBJECT_SLUGS),
        allow_empty=False,
    )
    difficulties = serializers.ListField(
        child=serializers.ChoiceField(choices=[d.value for d in Difficulty]),
        default=[d.value for d in Difficulty],
        allow_empty=False,
    )
    sample_count = serializers.IntegerField(default=100, min_value=1)
    seed = serializers.IntegerField(default=0, min_value=0)
    style = serializers.ChoiceField(choices=[s.value for s in Style], default=Style.BASE.value)
    shots = serializers.ChoiceField(choices=list(ALLOWED_SHOTS), default=0)
    rotation_k = serializers.ChoiceField(choices=[0, 1, 2, 3], default=0)
    endpoint = serializers.CharField(default="default")
    concurrency = serializers.IntegerField(default=4, min_value=1)
    endpoints = serializers.DictField(child=EndpointSerializer(), default=dict)


class ScoreRequestSerializer(StrictSerializer):
    completion = serializers.CharField(allow_blank=True, trim_whitespace=False)
