"""
Dataset record serializers for the instance API.
"""

from rest_framework import serializers

from apps.forge.instance import ALLOWED_SHOTS, Style
from apps.grids.cells import Difficulty

from .subjects import SUBJECT_SLUGS


class InstanceRecordSerializer(serializers.Serializer):
    id = serializers.CharField()
    subject = serializers.ChoiceField(choices=SUBJECT_SLUGS)
    difficulty = serializers.ChoiceField(choices=[d.value for d in Difficulty])
    rotation = serializers.IntegerField()
    gravity = serializers.ListField(child=serializers.IntegerField())
    input_grid = serializers.CharField()
    gt_grid = serializers.CharField()
    mask_cells = serializers.ListField(
        child=serializers.ListField(child=serializers.IntegerField())
    )
    scenario = serializers.DictField(required=False)


class InstanceDetailSerializer(InstanceRecordSerializer):
    prompt = serializers.CharField()


class InstanceFilterSerializer(serializers.Serializer):
    subject = serializers.ChoiceField(choices=SUBJECT_SLUGS, required=False)
    difficulty = serializers.ChoiceField(choices=[d.value for d in Difficulty], required=False)


class PromptOptionsSerializer(serializers.Serializer):
    style = serializers.ChoiceField(choices=[s.value for s in Style], default=Style.BASE.value)
    shots = serializers.ChoiceField(choices=list(ALLOWED_SHOTS), default=0)
    rotate = serializers.ChoiceField(choices=[0, 1, 2, 3], default=0)
    seed = serializers.IntegerField(default=0, min_value=0)
