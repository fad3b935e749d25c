"""
Point-set files: CSV (one row per point, no header) and JSON.
"""
from rest_framework import serializers

from apps.core.exceptions import DomainError
from apps.core.formats import (
    csv_rows,
    csv_text,
    dumps_json,
    format_number,
    loads_json,
    read_text,
    write_text,
)

from .serializers import PointSetSerializer
from .types import PointSet


def parse_point_set(text: str, fmt='json', source='input') -> PointSet:
    if fmt == 'csv':
        rows = csv_rows(text)
        try:
            values = [[float(cell) for cell in row] for row in rows]
        except ValueError as e:
            raise DomainError(f'{source}: {e}')
        return PointSet.from_rows(values)

    serializer = PointSetSerializer(data=loads_json(text, source))
    try:
        serializer.is_valid(raise_exception=True)
    except serializers.ValidationError as e:
        raise DomainError(f'{source}: invalid point set {e.detail}')
    return serializer.save()


def read_point_set(path, fmt='json') -> PointSet:
    return parse_point_set(read_text(path), fmt=fmt, source=str(path))


def render_point_set(ps: PointSet, fmt='json') -> str:
    if fmt == 'csv':
        return csv_text([[format_number(v) for v in row] for row in ps.points])
    return dumps_json(PointSetSerializer(ps).data)


def write_point_set(ps: PointSet, path, fmt='json'):
    write_text(path, render_point_set(ps, fmt))
