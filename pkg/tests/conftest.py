"""Shared fixtures: canonical triangles, random shape sampling, strategies."""

import math
import random

import pytest
from hypothesis import assume, settings, strategies as st

from fagnano.geometry import Point, Triangle

settings.register_profile("numeric", deadline=None)
settings.load_profile("numeric")

# Shape-space sampling keeps every angle this far from 0 and pi/2: residual
# bounds in the 1e-9 range assume the orthic triangle does not collapse.
ACUTE_MARGIN = 0.01


def sample_acute_angles(rng: random.Random, margin: float = ACUTE_MARGIN):
    while True:
        alpha = rng.uniform(margin, math.pi / 2 - margin)
        beta = rng.uniform(margin, math.pi / 2 - margin)
        gamma = math.pi - alpha - beta
        if margin <= gamma <= math.pi / 2 - margin:
            return alpha, beta


def random_acute_triangle(
    rng: random.Random, margin: float = ACUTE_MARGIN, circumradius: float = 1.0
) -> Triangle:
    alpha, beta = sample_acute_angles(rng, margin)
    return Triangle.from_angles(alpha, beta, circumradius)


@st.composite
def acute_angle_pairs(draw, margin: float = 0.05):
    alpha = draw(st.floats(min_value=margin, max_value=math.pi / 2 - margin))
    beta = draw(st.floats(min_value=margin, max_value=math.pi / 2 - margin))
    gamma = math.pi - alpha - beta
    assume(margin <= gamma <= math.pi / 2 - margin)
    return alpha, beta


@st.composite
def acute_triangles(draw, margin: float = 0.05):
    alpha, beta = draw(acute_angle_pairs(margin=margin))
    return Triangle.from_angles(alpha, beta)


def similarity(t: Triangle, scale: float, angle: float, dx: float, dy: float) -> Triangle:
    """Rotate, scale and translate (direct isometry times a dilation)."""
    cos_a, sin_a = math.cos(angle), math.sin(angle)

    def move(p: Point) -> Point:
        return Point(
            scale * (p.x * cos_a - p.y * sin_a) + dx,
            scale * (p.x * sin_a + p.y * cos_a) + dy,
        )

    return Triangle(move(t.a), move(t.b), move(t.c))


@pytest.fixture
def equilateral() -> Triangle:
    return Triangle(Point(0.0, 0.0), Point(1.0, 0.0), Point(0.5, math.sqrt(3.0) / 2.0))


@pytest.fixture
def golden_bfc() -> Triangle:
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    return Triangle(Point(1.0, 0.0), Point(0.0, 1.0), Point(1.0, phi))
