"""
Number formatting and small file helpers shared by the readers and writers.
"""
import csv
import io
import json
import math
from pathlib import Path

from .exceptions import DomainError


def format_number(value) -> str:
    """Shortest round-trip decimal form of a float (at most 17 significant digits)."""
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f'cannot format non-finite number {value!r}')
    return repr(value)


def dumps_json(document) -> str:
    """Stable JSON text: fixed key order from the serializer, round-trip floats."""
    return json.dumps(document, indent=2, allow_nan=False) + '\n'


def loads_json(text: str, source='input'):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise DomainError(f'{source}: invalid JSON ({e})')


def read_text(path) -> str:
    path = Path(path)
    try:
        return path.read_text()
    except OSError as e:
        raise DomainError(f'cannot read {path}: {e.strerror}')


def write_text(path, text: str):
    path = Path(path)
    try:
        path.write_text(text)
    except OSError as e:
        raise DomainError(f'cannot write {path}: {e.strerror}')


def csv_rows(text: str) -> list:
    """Non-empty rows of a CSV document, cells stripped."""
    rows = []
    for row in csv.reader(io.StringIO(text)):
        cells = [cell.strip() for cell in row]
        if any(cells):
            rows.append(cells)
    return rows


def csv_text(rows, header=None) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    if header:
        writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def parse_real(text, name='value') -> float:
    """Parse a decimal literal or power notation such as ``2^-12``."""
    raw = str(text).strip()
    try:
        if '^' in raw:
            base, exponent = raw.split('^', 1)
            value = float(base) ** float(exponent)
        else:
            value = float(raw)
    except (ValueError, OverflowError):
        raise DomainError(f'{name}: cannot parse {raw!r} as a real number')
    if not math.isfinite(value):
        raise DomainError(f'{name}: {raw!r} is not finite')
    return value


def guess_format(path, explicit=None) -> str:
    """Pick ``json`` or ``csv`` from an explicit choice, else the file suffix."""
    if explicit:
        return explicit
    if path and Path(path).suffix.lower() == '.csv':
        return 'csv'
    return 'json'
