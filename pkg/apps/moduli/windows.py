"""
Range extremes over many index ranges of a 1-D array via a sparse table.
"""
import numpy as np


def range_extremes(values, starts, stops):
    """
    Max and min of ``values[starts[i]:stops[i]]`` for every i.

    Every range must be nonempty (``starts[i] < stops[i] <= len(values)``).
    The power-of-two tables are built once in O(n log n); each range is then
    answered with two overlapping lookups.
    """
    values = np.asarray(values, dtype=float)
    starts = np.asarray(starts, dtype=int)
    stops = np.asarray(stops, dtype=int)
    n = values.size
    maxima = [values]
    minima = [values]
    length = 1
    while 2 * length <= n:
        maxima.append(np.maximum(maxima[-1][:-length], maxima[-1][length:]))
        minima.append(np.minimum(minima[-1][:-length], minima[-1][length:]))
        length *= 2

    levels = np.frexp((stops - starts).astype(float))[1] - 1
    range_max = np.empty(starts.size)
    range_min = np.empty(starts.size)
    for level in np.unique(levels):
        rows = np.flatnonzero(levels == level)
        head = starts[rows]
        tail = stops[rows] - (1 << int(level))
        range_max[rows] = np.maximum(maxima[level][head], maxima[level][tail])
        range_min[rows] = np.minimum(minima[level][head], minima[level][tail])
    return range_max, range_min
