"""
Function space app serializers for NCK documents.
"""
from rest_framework import serializers

from .types import Family, Grid


class MemberSerializer(serializers.Serializer):
    """One family member: an identifier and one value row per knot."""

    id = serializers.CharField(max_length=200)
    values = serializers.ListField(
        child=serializers.ListField(child=serializers.FloatField(), allow_empty=False),
        allow_empty=False,
    )


class FamilySerializer(serializers.Serializer):
    """`{"a", "b", "dim", "knots", "members": [{"id", "values"}, ...]}`"""

    a = serializers.FloatField(source='grid.a')
    b = serializers.FloatField(source='grid.b')
    dim = serializers.IntegerField(min_value=1)
    knots = serializers.ListField(
        child=serializers.FloatField(), min_length=2, source='grid.knots'
    )
    members = MemberSerializer(many=True, allow_empty=False, source='member_records')

    def validate(self, attrs):
        grid = attrs['grid']
        knots = grid['knots']
        if knots[0] != grid['a'] or knots[-1] != grid['b']:
            raise serializers.ValidationError(
                {'knots': f'first and last knot must equal a={grid["a"]!r} and b={grid["b"]!r}'}
            )
        dim = attrs['dim']
        for record in attrs['member_records']:
            values = record['values']
            if len(values) != len(knots):
                raise serializers.ValidationError(
                    {'members': f'member {record["id"]!r} has {len(values)} values for {len(knots)} knots'}
                )
            if any(len(row) != dim for row in values):
                raise serializers.ValidationError(
                    {'members': f'member {record["id"]!r} has rows without {dim} coordinates'}
                )
        return attrs

    def create(self, validated_data):
        grid = Grid(validated_data['grid']['knots'])
        records = validated_data['member_records']
        return Family.from_values(
            grid,
            [record['values'] for record in records],
            [record['id'] for record in records],
        )
