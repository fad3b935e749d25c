"""
Family files: the JSON document and the CSV long form
(`member_id, x, v1..vN`, one row per member and knot).
"""
from collections import OrderedDict

import numpy as np
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

from .paths import refine_family
from .serializers import FamilySerializer
from .types import Family, Grid, SampledPath


def parse_family(text: str, fmt='json', source='input') -> Family:
    if fmt == 'csv':
        return _parse_family_csv(text, source)

    serializer = FamilySerializer(data=loads_json(text, source))
    try:
        serializer.is_valid(raise_exception=True)
    except serializers.ValidationError as e:
        raise DomainError(f'{source}: invalid family {e.detail}')
    return serializer.save()


def _parse_family_csv(text: str, source: str) -> Family:
    rows = csv_rows(text)
    if rows and rows[0][0] == 'member_id':
        rows = rows[1:]
    if not rows:
        raise DomainError(f'{source}: family must have at least one member')

    samples = OrderedDict()
    for line, row in enumerate(rows, start=1):
        if len(row) < 3:
            raise DomainError(f'{source}: row {line} needs member_id, x and at least one value')
        try:
            numbers = [float(cell) for cell in row[1:]]
        except ValueError as e:
            raise DomainError(f'{source}: row {line}: {e}')
        samples.setdefault(row[0], []).append(numbers)

    widths = {len(numbers) for member in samples.values() for numbers in member}
    if len(widths) != 1:
        raise DomainError(f'{source}: rows have differing value counts {sorted(widths)}')

    paths = []
    for member_id, member in samples.items():
        data = np.array(sorted(member, key=lambda numbers: numbers[0]))
        paths.append(SampledPath(Grid(data[:, 0]), data[:, 1:]))
    # Members sampled on different knots share the common refinement
    return refine_family(paths, list(samples))


def read_family(path, fmt='json') -> Family:
    return parse_family(read_text(path), fmt=fmt, source=str(path))


def render_family(fam: Family, fmt='json') -> str:
    if fmt == 'csv':
        header = ['member_id', 'x'] + [f'v{j + 1}' for j in range(fam.dim)]
        rows = []
        for label, member in zip(fam.labels, fam.members):
            for x, value in zip(member.knots, member.values):
                rows.append([label, format_number(x)] + [format_number(v) for v in value])
        return csv_text(rows, header=header)
    return dumps_json(FamilySerializer(fam).data)


def write_family(fam: Family, path, fmt='json'):
    write_text(path, render_family(fam, fmt))
