"""Evaluation grids and ``start:stop:step`` range parsing."""

import math
from decimal import Decimal, InvalidOperation

INTERIOR_POINTS = 1000
ENDPOINT_POINTS = 20
ENDPOINT_NEAREST = 1e-8
ENDPOINT_FARTHEST = 1e-1


def geometric(start, stop, n):
    """n points from start to stop (inclusive), equally spaced in log."""
    if n == 1:
        return [float(start)]
    a, b = math.log(start), math.log(stop)
    return [math.exp(a + (b - a) * i / (n - 1)) for i in range(n)]


def uniform_interior(n=INTERIOR_POINTS):
    """n equally spaced points strictly inside (0, 1): k/(n + 1)."""
    return [k / (n + 1) for k in range(1, n + 1)]


def endpoint_points(n=ENDPOINT_POINTS):
    """n points at distances 1e-1 .. 1e-8 from each endpoint of (0, 1)."""
    d = geometric(ENDPOINT_FARTHEST, ENDPOINT_NEAREST, n)
    return d + [1.0 - x for x in d]


def unit_grid(interior=INTERIOR_POINTS, endpoint=ENDPOINT_POINTS):
    """The standard sorted test grid on (0, 1).

    ``interior`` uniform points plus ``endpoint`` geometrically clustered
    points near each end (1040 points by default).
    """
    return sorted(uniform_interior(interior) + (endpoint_points(endpoint) if endpoint else []))


def open_geometric(lo, hi, n):
    """n log-spaced points strictly inside (lo, hi)."""
    return geometric(lo, hi, n + 2)[1:-1]


def parse_range(spec):
    """Parse ``start:stop:step`` into an inclusive list of floats.

    Points are generated as start + k * step in decimal arithmetic so that
    e.g. ``0.01:0.99:0.01`` yields exactly 99 values.
    """
    parts = str(spec).split(":")
    if len(parts) != 3:
        raise ValueError(f"range must look like start:stop:step, got {spec!r}")
    try:
        start, stop, step = (Decimal(x.strip()) for x in parts)
    except InvalidOperation:
        raise ValueError(f"range must look like start:stop:step, got {spec!r}") from None
    if not all(x.is_finite() for x in (start, stop, step)):
        raise ValueError(f"range bounds must be finite, got {spec!r}")
    if not start < stop:
        raise ValueError(f"range start must be below stop, got {spec!r}")
    if not step > 0:
        raise ValueError(f"range step must be positive, got {spec!r}")
    count = int((stop - start) / step) + 1
    return [float(start + k * step) for k in range(count)]


def parse_int_range(spec):
    """Parse ``a:b`` (inclusive) or a single integer."""
    parts = str(spec).split(":")
    try:
        if len(parts) == 1:
            return [int(parts[0])]
        if len(parts) == 2:
            lo, hi = int(parts[0]), int(parts[1])
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
    except ValueError:
        pass
    raise ValueError(f"integer range must look like a:b, got {spec!r}")
