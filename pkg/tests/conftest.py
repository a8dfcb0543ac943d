"""Shared hypothesis strategies for states, axes and phases."""

from __future__ import annotations

import math

from hypothesis import assume
from hypothesis import strategies as st

_COMPONENT = st.floats(-1.0, 1.0, allow_nan=False, allow_infinity=False)


@st.composite
def ball_points(draw, max_norm: float = 1.0):
    """Points of the closed Bloch ball, as raw (sx, sy, sz) tuples."""
    x, y, z = draw(_COMPONENT), draw(_COMPONENT), draw(_COMPONENT)
    assume(x * x + y * y + z * z <= max_norm * max_norm)
    return (x, y, z)


@st.composite
def sphere_points(draw):
    """Unit vectors: ball points pushed out to the sphere."""
    x, y, z = draw(ball_points())
    n = math.sqrt(x * x + y * y + z * z)
    assume(n > 1e-3)
    return (x / n, y / n, z / n)


phases = st.floats(-10.0, 10.0, allow_nan=False, allow_infinity=False)
