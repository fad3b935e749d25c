"""
Geometry app serializers for NCK documents.
"""
from rest_framework import serializers

from apps.core.serializers import PassFieldMixin

from .types import Ball, PointSet

# Wider documents parse; chebyshev_ball applies the solver cap
MAX_DOCUMENT_DIM = 1024


class PointSetSerializer(serializers.Serializer):
    """`{"dim": N, "points": [[...], ...]}`"""

    dim = serializers.IntegerField(min_value=1, max_value=MAX_DOCUMENT_DIM)
    points = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField()),
        allow_empty=False,
    )

    def validate(self, attrs):
        dim = attrs['dim']
        bad = [i for i, row in enumerate(attrs['points']) if len(row) != dim]
        if bad:
            raise serializers.ValidationError(
                {'points': f'rows {bad[:5]} do not have {dim} coordinates'}
            )
        return attrs

    def create(self, validated_data):
        return PointSet(dim=validated_data['dim'], points=validated_data['points'])


class BallSerializer(serializers.Serializer):
    """Chebyshev ball output."""

    center = serializers.ListField(child=serializers.FloatField())
    radius = serializers.FloatField(min_value=0)

    def create(self, validated_data):
        return Ball(validated_data['center'], validated_data['radius'])


class JungReportSerializer(PassFieldMixin, serializers.Serializer):
    """Jung report output; read-only."""

    dim = serializers.IntegerField()
    diameter = serializers.FloatField()
    radius = serializers.FloatField()
    lower = serializers.FloatField()
    upper = serializers.FloatField()
    margin = serializers.FloatField()
    passed = serializers.BooleanField()
