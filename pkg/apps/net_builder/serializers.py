"""
Net builder app serializers for NCK documents.
"""
from rest_framework import serializers

from apps.core.serializers import PassFieldMixin
from apps.function_space.serializers import FamilySerializer

from .types import Partition


class PartitionSerializer(serializers.Serializer):
    """`{"points": [...]}`"""

    points = serializers.ListField(child=serializers.FloatField(), min_length=4)

    def create(self, validated_data):
        return Partition(validated_data['points'])


class CertificateSerializer(PassFieldMixin, serializers.Serializer):
    member_id = serializers.CharField()
    net_index = serializers.IntegerField()
    plateau_err = serializers.FloatField()
    quant_err = serializers.FloatField()
    total = serializers.FloatField()
    bound = serializers.FloatField()
    passed = serializers.BooleanField()


class NetSerializer(PassFieldMixin, serializers.Serializer):
    """
    A net result as a Family document (so it loads back as a family) plus
    the construction parameters and one certificate per member.
    """

    delta = serializers.FloatField()
    alpha = serializers.FloatField()
    epsilon = serializers.FloatField()
    partition = PartitionSerializer()
    certificates = CertificateSerializer(many=True)
    passed = serializers.BooleanField()

    def to_representation(self, instance):
        data = FamilySerializer(instance.net).data
        data.update(super().to_representation(instance))
        return data
