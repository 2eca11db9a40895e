"""Numeric verification of the right-orthic characterization.

For an acute triangle the minimal inscribed triangle is the orthic triangle,
and it is right-angled exactly when the parent has a single pi/4 angle; the
right angle then sits at the foot of the altitude dropped from that vertex.
This module evaluates both directions of that biconditional on individual
triangles, re-derives every intermediate angle identity of the underlying
argument from explicit coordinates, and sweeps triangle shape space for
counterexamples.

Tolerance coupling: the orthic-angle test at pi/2 uses ``tol_angle`` while the
parent-angle test at pi/4 uses ``tol_angle / 2``, because the exact relation
orthic angle = pi - 2 * parent angle doubles perturbations.  Scan samples
within ``boundary_band`` of either threshold are skipped, not adjudicated: a
floating-point iff cannot be decided on its knife edge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .geometry import (
    ANGLE_TOL,
    AngleTriple,
    Triangle,
    angle_at,
    angles,
    dist,
    foot_of_altitude,
    incenter,
    orthic_triangle,
    orthocenter,
    require_acute,
)

QUARTER_PI = math.pi / 4.0
HALF_PI = math.pi / 2.0

DEFAULT_BOUNDARY_BAND = 1e-6


@dataclass(frozen=True)
class TheoremVerdict:
    """Both directions of the characterization, evaluated on one triangle.

    ``pairing_holds`` is None when either side of the biconditional is false
    (the opposite-angle claim is only meaningful when both hold).
    """

    orthic_is_right: bool
    right_vertex: int | None
    has_quarter_pi: bool
    quarter_pi_vertex: int | None
    quarter_pi_unique: bool
    pairing_holds: bool | None
    biconditional_holds: bool

    def to_document(self) -> dict:
        return {
            "orthic_is_right": self.orthic_is_right,
            "right_vertex": self.right_vertex,
            "has_quarter_pi": self.has_quarter_pi,
            "quarter_pi_vertex": self.quarter_pi_vertex,
            "quarter_pi_unique": self.quarter_pi_unique,
            "pairing_holds": self.pairing_holds,
            "biconditional_holds": self.biconditional_holds,
        }


def _verdict_core(
    parent: AngleTriple, orthic_angles: AngleTriple, tol_angle: float
) -> TheoremVerdict:
    o = orthic_angles.as_tuple()
    p = parent.as_tuple()

    right_candidates = [i for i in range(3) if abs(o[i] - HALF_PI) <= tol_angle]
    orthic_is_right = bool(right_candidates)
    right_vertex = (
        min(right_candidates, key=lambda i: abs(o[i] - HALF_PI))
        if right_candidates
        else None
    )

    quarter_candidates = [
        i for i in range(3) if abs(p[i] - QUARTER_PI) <= tol_angle / 2.0
    ]
    has_quarter_pi = bool(quarter_candidates)
    quarter_pi_unique = len(quarter_candidates) == 1
    quarter_pi_vertex = quarter_candidates[0] if quarter_candidates else None

    biconditional_holds = orthic_is_right == (has_quarter_pi and quarter_pi_unique)
    if orthic_is_right and has_quarter_pi and quarter_pi_unique:
        pairing_holds = right_vertex == quarter_pi_vertex
    else:
        pairing_holds = None
    return TheoremVerdict(
        orthic_is_right=orthic_is_right,
        right_vertex=right_vertex,
        has_quarter_pi=has_quarter_pi,
        quarter_pi_vertex=quarter_pi_vertex,
        quarter_pi_unique=quarter_pi_unique,
        pairing_holds=pairing_holds,
        biconditional_holds=biconditional_holds,
    )


def verdict(t: Triangle, tol_angle: float = ANGLE_TOL) -> TheoremVerdict:
    """Evaluate the biconditional and the opposite-angle pairing on ``t``.

    The orthic angle at foot_from_x is compared against pi/2 at ``tol_angle``;
    the parent angle at x against pi/4 at ``tol_angle / 2``.  The pairing check
    is the index correspondence between those two hits.
    """
    require_acute(t, tol_angle)
    return _verdict_core(angles(t), orthic_triangle(t, tol_angle).angles, tol_angle)


@dataclass(frozen=True)
class ProofStepReport:
    """Residuals of the intermediate identities, from explicit coordinates.

    With d, e, f the feet of the altitudes from a, b, c:

    * ``angle_sum_residual``: the three orthic angles against pi.
    * ``bisection_residuals``: each altitude bisects the orthic angle at its
      foot (at f split by fc, at d split by da, at e split by eb).
    * ``quarter_relation_residual``: angle(cfe) + angle(ade) against pi/4;
      only meaningful when the orthic angle at e is right, see
      ``quarter_relation_active``.
    * ``quad_sum_residual``: interior angles of quadrilateral b, d, e, f
      against 2*pi.
    * ``decomposition_residuals``: angle(bfe) against pi/2 + angle(cfe), and
      angle(bde) against pi/2 + angle(ade).
    """

    angle_sum_residual: float
    bisection_residuals: tuple[float, float, float]
    quarter_relation_residual: float
    quarter_relation_active: bool
    quad_sum_residual: float
    decomposition_residuals: tuple[float, float]

    def all_unconditional(self) -> tuple[float, ...]:
        """Every residual that must vanish for any acute triangle."""
        return (
            self.angle_sum_residual,
            *self.bisection_residuals,
            self.quad_sum_residual,
            *self.decomposition_residuals,
        )


def proof_steps(t: Triangle, tol_angle: float = ANGLE_TOL) -> ProofStepReport:
    require_acute(t, tol_angle)
    a, b, c = t.a, t.b, t.c
    d = foot_of_altitude(t, 0)
    e = foot_of_altitude(t, 1)
    f = foot_of_altitude(t, 2)

    angle_d = angle_at(e, d, f)
    angle_e = angle_at(d, e, f)
    angle_f = angle_at(d, f, e)
    angle_sum_residual = abs(angle_d + angle_e + angle_f - math.pi)

    dfc = angle_at(d, f, c)
    cfe = angle_at(c, f, e)
    fda = angle_at(f, d, a)
    ade = angle_at(a, d, e)
    feb = angle_at(f, e, b)
    bed = angle_at(b, e, d)
    bisection_residuals = (abs(dfc - cfe), abs(fda - ade), abs(feb - bed))

    quarter_relation_residual = abs(cfe + ade - QUARTER_PI)
    quarter_relation_active = abs(angle_e - HALF_PI) <= tol_angle

    angle_b = angle_at(a, b, c)
    bfe = angle_at(b, f, e)
    bde = angle_at(b, d, e)
    quad_sum_residual = abs(angle_b + angle_e + bfe + bde - 2.0 * math.pi)
    decomposition_residuals = (
        abs(bfe - HALF_PI - cfe),
        abs(bde - HALF_PI - ade),
    )
    return ProofStepReport(
        angle_sum_residual=angle_sum_residual,
        bisection_residuals=bisection_residuals,
        quarter_relation_residual=quarter_relation_residual,
        quarter_relation_active=quarter_relation_active,
        quad_sum_residual=quad_sum_residual,
        decomposition_residuals=decomposition_residuals,
    )


def incenter_orthocenter_check(t: Triangle) -> float:
    """Distance between incenter(orthic) and orthocenter, over the diameter."""
    require_acute(t)
    orth = orthic_triangle(t)
    inner = Triangle(*orth.feet)
    return dist(incenter(inner), orthocenter(t)) / t.diameter()


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a shape-space sweep.  Empty counterexamples is a pass."""

    grid_resolution: int
    samples_tested: int
    samples_skipped: int
    counterexamples: tuple[tuple[AngleTriple, TheoremVerdict], ...]
    boundary_band: float
    tol_angle: float

    def to_document(self) -> dict:
        return {
            "grid_resolution": self.grid_resolution,
            "samples_tested": self.samples_tested,
            "samples_skipped": self.samples_skipped,
            "counterexamples": [
                {"angles": list(tri.as_tuple()), "verdict": v.to_document()}
                for tri, v in self.counterexamples
            ],
            "boundary_band": self.boundary_band,
            "tol_angle": self.tol_angle,
        }


def acute_grid_nodes(grid_resolution: int) -> Iterator[tuple[float, float]]:
    """Angle pairs (alpha, beta) = (i, j) * (pi/2)/n over the open acute simplex.

    Admissible nodes have all three angles strictly inside (0, pi/2), which
    for this grid is exactly i + j > n.
    """
    h = HALF_PI / grid_resolution
    for i in range(1, grid_resolution):
        for j in range(1, grid_resolution):
            if i + j > grid_resolution:
                yield (i * h, j * h)


def quarter_pi_locus_nodes(grid_resolution: int) -> Iterator[tuple[float, float]]:
    """Angle pairs with beta = pi/4 exactly and alpha strictly in (pi/4, pi/2)."""
    h = QUARTER_PI / grid_resolution
    for k in range(1, grid_resolution):
        yield (QUARTER_PI + k * h, QUARTER_PI)


def scan_angle_space(
    grid_resolution: int,
    tol_angle: float = ANGLE_TOL,
    boundary_band: float = DEFAULT_BOUNDARY_BAND,
) -> ScanReport:
    """Sweep acute shape space for violations of either direction.

    Phase one walks the open-simplex grid, instantiates each admissible node
    on the unit circumradius, skips knife-edge samples (any parent angle
    within ``boundary_band`` of pi/4, or any orthic angle within it of pi/2)
    and requires the biconditional and, where applicable, the pairing on the
    rest.  Phase two walks the beta = pi/4 locus with no exclusion band, where
    a right orthic angle paired with vertex b is mandatory.  Both phases count
    toward ``samples_tested``.
    """
    if grid_resolution < 8:
        raise ValueError(f"grid_resolution must be >= 8, got {grid_resolution}")
    if boundary_band <= tol_angle:
        raise ValueError(
            f"boundary_band ({boundary_band}) must exceed tol_angle ({tol_angle})"
        )
    tested = 0
    skipped = 0
    counterexamples: list[tuple[AngleTriple, TheoremVerdict]] = []

    for alpha, beta in acute_grid_nodes(grid_resolution):
        tri = Triangle.from_angles(alpha, beta)
        parent = angles(tri)
        orth = orthic_triangle(tri, tol_angle)
        near_quarter = min(abs(x - QUARTER_PI) for x in parent.as_tuple())
        near_right = min(abs(x - HALF_PI) for x in orth.angles.as_tuple())
        if near_quarter < boundary_band or near_right < boundary_band:
            skipped += 1
            continue
        tested += 1
        v = _verdict_core(parent, orth.angles, tol_angle)
        if not v.biconditional_holds or v.pairing_holds is False:
            counterexamples.append((parent, v))

    for alpha, beta in quarter_pi_locus_nodes(grid_resolution):
        tri = Triangle.from_angles(alpha, beta)
        parent = angles(tri)
        orth = orthic_triangle(tri, tol_angle)
        tested += 1
        v = _verdict_core(parent, orth.angles, tol_angle)
        # Forward direction: a pi/4 parent must produce a right orthic angle
        # at the matching foot.
        ok = (
            v.orthic_is_right
            and v.right_vertex == 1
            and v.biconditional_holds
            and v.pairing_holds is True
        )
        if not ok:
            counterexamples.append((parent, v))

    return ScanReport(
        grid_resolution=grid_resolution,
        samples_tested=tested,
        samples_skipped=skipped,
        counterexamples=tuple(counterexamples),
        boundary_band=boundary_band,
        tol_angle=tol_angle,
    )
