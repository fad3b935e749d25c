"""
Moduli app serializers for NCK documents.
"""
from rest_framework import serializers

from apps.core.formats import csv_text, format_number
from apps.core.serializers import PassFieldMixin


class ModulusProfileSerializer(serializers.Serializer):
    """Profile as JSON; the CSV form is written by ``render_profile_csv``."""

    deltas = serializers.ListField(child=serializers.FloatField())
    omegas = serializers.ListField(child=serializers.FloatField())


class TransferReportSerializer(PassFieldMixin, serializers.Serializer):
    delta = serializers.FloatField()
    omega_family = serializers.FloatField()
    net_radius = serializers.FloatField()
    omega_net = serializers.FloatField()
    bound = serializers.FloatField()
    passed = serializers.BooleanField()


class BracketSerializer(PassFieldMixin, serializers.Serializer):
    """`{"omega_hat", "lower", "upper", "achieved", "epsilon", "pass", ...}`"""

    omega_hat = serializers.FloatField()
    lower = serializers.FloatField()
    upper = serializers.FloatField()
    achieved = serializers.FloatField()
    epsilon = serializers.FloatField()
    passed = serializers.BooleanField()
    delta = serializers.FloatField()
    net_size = serializers.IntegerField()
    transfer = TransferReportSerializer()


def render_profile_csv(profile) -> str:
    rows = [[format_number(delta), format_number(omega)] for delta, omega in profile.rows()]
    return csv_text(rows, header=['delta', 'omega'])
