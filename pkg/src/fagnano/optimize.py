"""Numerical solvers for the minimal-perimeter inscribed triangle.

Two independent search routes over the open parameter cube (0,1)^3, where each
parameter picks an affine point on one side of an acute triangle:

* a coarse grid sweep followed by Nelder-Mead simplex refinement, and
* exact coordinate descent: with two inscribed vertices held fixed, the best
  point on the remaining side is found by reflecting one fixed vertex across
  that side's line and cutting the straight segment with it (the shortest-path
  unfolding argument).

Both exist to be checked against the closed-form answer, the orthic triangle's
perimeter, so neither route is allowed to peek at altitude feet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import (
    ANGLE_TOL,
    GeometryError,
    Point,
    Triangle,
    classify,
    lerp,
    orthic_triangle,
    perimeter,
    require_acute,
)

# Parameters are confined to [CLAMP_MARGIN, 1 - CLAMP_MARGIN] by the descent
# steps; for acute parents the optimum is interior, so hitting the clamp is a
# warning sign, not business as usual.
CLAMP_MARGIN = 1e-9
# Parents closer than this to right-angled get a warning on their results: the
# minimal inscribed triangle collapses toward a doubled altitude segment and
# the minimum becomes ill-conditioned.
NEAR_RIGHT_MARGIN = 1e-3

DEFAULT_GRID_N = 16
DEFAULT_MAX_ITER = 10_000
DEFAULT_SIMPLEX_TOL = 1e-10
DEFAULT_DESCENT_TOL = 1e-15


class InvalidConfigError(GeometryError):
    """A side parameter left the open interval (0, 1)."""


@dataclass(frozen=True)
class InscribedConfig:
    """Side parameters selecting one interior point per side.

    ``t_on_bc`` picks b + t*(c-b), ``t_on_ca`` picks c + t*(a-c) and
    ``t_on_ab`` picks a + t*(b-a).  All three live strictly inside (0, 1):
    a vertex sitting on a corner degenerates the inscribed triangle.
    """

    t_on_bc: float
    t_on_ca: float
    t_on_ab: float

    def __post_init__(self):
        for name, value in (
            ("t_on_bc", self.t_on_bc),
            ("t_on_ca", self.t_on_ca),
            ("t_on_ab", self.t_on_ab),
        ):
            if not (0.0 < value < 1.0):
                raise InvalidConfigError(f"{name}={value} outside the open interval (0, 1)")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.t_on_bc, self.t_on_ca, self.t_on_ab)

    def points(self, t: Triangle) -> tuple[Point, Point, Point]:
        """The selected points (on bc, on ca, on ab)."""
        return (
            lerp(t.b, t.c, self.t_on_bc),
            lerp(t.c, t.a, self.t_on_ca),
            lerp(t.a, t.b, self.t_on_ab),
        )


@dataclass(frozen=True)
class MinimizeResult:
    """Outcome of one minimization run.

    ``history`` holds (iteration, perimeter) pairs, starting with the initial
    evaluation; for the reflection-descent method it is non-increasing.
    ``clamped`` reports that some descent step had to be pulled back into the
    open cube; ``warning`` flags ill-conditioned near-right parents.
    """

    config: InscribedConfig
    perimeter: float
    iterations: int
    converged: bool
    history: tuple[tuple[int, float], ...]
    clamped: bool = False
    warning: str | None = None


def objective(t: Triangle, c: InscribedConfig, tol: float = ANGLE_TOL) -> float:
    """Perimeter of the inscribed triangle selected by ``c``."""
    require_acute(t, tol)
    p, q, r = c.points(t)
    return perimeter(p, q, r)


def _raw_objective(t: Triangle):
    """Unchecked objective over bare parameter triples; +inf outside (0,1)^3.

    Used by the searches, which probe outside the feasible cube.
    """
    bx, by = t.b.x, t.b.y
    ubc_x, ubc_y = t.c.x - t.b.x, t.c.y - t.b.y
    cx, cy = t.c.x, t.c.y
    uca_x, uca_y = t.a.x - t.c.x, t.a.y - t.c.y
    ax, ay = t.a.x, t.a.y
    uab_x, uab_y = t.b.x - t.a.x, t.b.y - t.a.y

    def f(params: tuple[float, float, float]) -> float:
        t1, t2, t3 = params
        if not (0.0 < t1 < 1.0 and 0.0 < t2 < 1.0 and 0.0 < t3 < 1.0):
            return math.inf
        px, py = bx + t1 * ubc_x, by + t1 * ubc_y
        qx, qy = cx + t2 * uca_x, cy + t2 * uca_y
        rx, ry = ax + t3 * uab_x, ay + t3 * uab_y
        return (
            math.hypot(px - qx, py - qy)
            + math.hypot(qx - rx, qy - ry)
            + math.hypot(rx - px, ry - py)
        )

    return f


def _near_right_warning(t: Triangle) -> str | None:
    margin = classify(t).margin
    if margin < NEAR_RIGHT_MARGIN:
        return (
            f"parent is within {margin!r} rad of right-angled; the minimum is "
            "ill-conditioned"
        )
    return None


def _grid_best(t: Triangle, grid_n: int) -> tuple[tuple[float, float, float], float]:
    """Best node of the interior grid ((i+0.5)/n per axis) and its value."""
    ts = (np.arange(grid_n) + 0.5) / grid_n
    t1, t2, t3 = np.meshgrid(ts, ts, ts, indexing="ij")
    p = np.stack(
        [t.b.x + t1 * (t.c.x - t.b.x), t.b.y + t1 * (t.c.y - t.b.y)], axis=-1
    )
    q = np.stack(
        [t.c.x + t2 * (t.a.x - t.c.x), t.c.y + t2 * (t.a.y - t.c.y)], axis=-1
    )
    r = np.stack(
        [t.a.x + t3 * (t.b.x - t.a.x), t.a.y + t3 * (t.b.y - t.a.y)], axis=-1
    )
    values = (
        np.linalg.norm(p - q, axis=-1)
        + np.linalg.norm(q - r, axis=-1)
        + np.linalg.norm(r - p, axis=-1)
    )
    flat = int(np.argmin(values))
    i, j, k = np.unravel_index(flat, values.shape)
    best = (float(ts[i]), float(ts[j]), float(ts[k]))
    return best, float(values[i, j, k])


def _simplex_diameter(simplex: list[tuple[float, float, float]]) -> float:
    return max(
        math.dist(simplex[i], simplex[j])
        for i in range(len(simplex))
        for j in range(i + 1, len(simplex))
    )


def minimize_grid_then_simplex(
    t: Triangle,
    grid_n: int = DEFAULT_GRID_N,
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_SIMPLEX_TOL,
) -> MinimizeResult:
    """Coarse grid sweep followed by Nelder-Mead refinement.

    Converged means the final simplex diameter in parameter space fell below
    ``tol``.  The returned perimeter never exceeds any evaluated grid value.
    """
    require_acute(t)
    if grid_n < 4:
        raise ValueError(f"grid_n must be >= 4, got {grid_n}")
    if tol <= 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")
    f = _raw_objective(t)

    x0, f0 = _grid_best(t, grid_n)
    history: list[tuple[int, float]] = [(0, f0)]

    # Initial simplex around the best grid node, kept inside the open cube.
    step = 0.5 / grid_n
    simplex = [x0]
    for axis in range(3):
        x = list(x0)
        x[axis] += step if x[axis] <= 0.5 else -step
        simplex.append(tuple(x))
    values = [f(x) for x in simplex]

    alpha, gamma, rho, sigma = 1.0, 2.0, 0.5, 0.5
    iterations = 0
    converged = False
    while iterations < max_iter:
        order = sorted(range(4), key=lambda i: values[i])
        simplex = [simplex[i] for i in order]
        values = [values[i] for i in order]
        if _simplex_diameter(simplex) < tol:
            converged = True
            break
        iterations += 1

        centroid = tuple(
            sum(simplex[i][k] for i in range(3)) / 3.0 for k in range(3)
        )
        worst = simplex[3]
        reflected = tuple(centroid[k] + alpha * (centroid[k] - worst[k]) for k in range(3))
        fr = f(reflected)
        if values[0] <= fr < values[2]:
            simplex[3], values[3] = reflected, fr
        elif fr < values[0]:
            expanded = tuple(centroid[k] + gamma * (centroid[k] - worst[k]) for k in range(3))
            fe = f(expanded)
            if fe < fr:
                simplex[3], values[3] = expanded, fe
            else:
                simplex[3], values[3] = reflected, fr
        else:
            if fr < values[3]:
                contracted = tuple(
                    centroid[k] + rho * (reflected[k] - centroid[k]) for k in range(3)
                )
            else:
                contracted = tuple(
                    centroid[k] + rho * (worst[k] - centroid[k]) for k in range(3)
                )
            fc = f(contracted)
            if fc < min(fr, values[3]):
                simplex[3], values[3] = contracted, fc
            else:
                best = simplex[0]
                simplex = [best] + [
                    tuple(best[k] + sigma * (x[k] - best[k]) for k in range(3))
                    for x in simplex[1:]
                ]
                values = [values[0]] + [f(x) for x in simplex[1:]]
        best_now = min(values)
        if best_now < history[-1][1]:
            history.append((iterations, best_now))

    order = sorted(range(4), key=lambda i: values[i])
    config = InscribedConfig(*simplex[order[0]])
    return MinimizeResult(
        config=config,
        perimeter=objective(t, config),
        iterations=iterations,
        converged=converged,
        history=tuple(history),
        warning=_near_right_warning(t),
    )


def _reflect_across(p: Point, q: Point, r: Point) -> Point:
    """Mirror image of p across the line through q and r."""
    d = r - q
    s = (p - q).dot(d) / d.dot(d)
    foot = lerp(q, r, s)
    return Point(2.0 * foot.x - p.x, 2.0 * foot.y - p.y)


def _step_on_side(side_start: Point, side_end: Point, fixed1: Point, fixed2: Point) -> float:
    """Parameter on [side_start, side_end] minimizing the broken path
    |fixed1 - X| + |X - fixed2| over the side line.

    Reflects fixed1 across the side and intersects the straightened segment
    with it; the result is exactly optimal for this one-dimensional subproblem.
    """
    mirrored = _reflect_across(fixed1, side_start, side_end)
    u = side_end - side_start
    w = fixed2 - mirrored
    denom = u.cross(w)
    if denom == 0.0:
        # Straightened chord parallel to the side: every point ties; keep
        # the projection of the chord midpoint.
        mid = Point((mirrored.x + fixed2.x) / 2.0, (mirrored.y + fixed2.y) / 2.0)
        return (mid - side_start).dot(u) / u.dot(u)
    return (mirrored - side_start).cross(w) / denom


def minimize_reflection_descent(
    t: Triangle,
    start: InscribedConfig,
    max_iter: int = DEFAULT_MAX_ITER,
    tol: float = DEFAULT_DESCENT_TOL,
) -> MinimizeResult:
    """Exact coordinate descent over the three side parameters.

    Each sweep solves the three one-point subproblems in turn by the
    reflection construction, so the perimeter history is non-increasing.
    Converged means some sweep improved the perimeter by less than
    ``tol * perimeter`` without clamping; the descent then keeps polishing
    while measurable strict progress remains (the error contracts
    geometrically per sweep), so the reported parameters sit at the rounding
    floor, not merely at the tolerance.  Only sweeps with an improvement of
    at least ``tol * perimeter`` are recorded in the history.
    """
    require_acute(t)
    if tol <= 0.0:
        raise ValueError(f"tol must be > 0, got {tol}")
    f = _raw_objective(t)
    params = list(start.as_tuple())
    current = f(tuple(params))
    history: list[tuple[int, float]] = [(0, current)]
    sides = (
        (t.b, t.c),  # parameter 0 lives on bc
        (t.c, t.a),  # parameter 1 on ca
        (t.a, t.b),  # parameter 2 on ab
    )
    ever_clamped = False
    converged = False
    decided = False
    iterations = 0
    for sweep in range(1, max_iter + 1):
        iterations = sweep
        old_params = list(params)
        sweep_clamped = False
        for axis in range(3):
            s0, s1 = sides[axis]
            fixed1 = lerp(*sides[(axis + 1) % 3], params[(axis + 1) % 3])
            fixed2 = lerp(*sides[(axis + 2) % 3], params[(axis + 2) % 3])
            t_new = _step_on_side(s0, s1, fixed1, fixed2)
            if not (CLAMP_MARGIN <= t_new <= 1.0 - CLAMP_MARGIN):
                t_new = min(max(t_new, CLAMP_MARGIN), 1.0 - CLAMP_MARGIN)
                sweep_clamped = True
                ever_clamped = True
            params[axis] = t_new
        new = f(tuple(params))
        if new > current:
            # Rounding noise at the attractor; drop the sweep so the history
            # and the reported config stay monotone.
            params = old_params
            if not decided:
                converged, decided = not sweep_clamped, True
            break
        improved = current - new
        current = new
        moved = max(abs(params[k] - old_params[k]) for k in range(3))
        if improved >= tol * current:
            history.append((sweep, new))
        elif not decided:
            # Sub-tolerance sweep without clamping: stationary.  Clamped and
            # stuck instead: pinned to the boundary, not a minimum.
            converged, decided = not sweep_clamped, True
        if improved == 0.0 or moved == 0.0:
            if not decided:
                converged, decided = not sweep_clamped, True
            break
    config = InscribedConfig(*params)
    return MinimizeResult(
        config=config,
        perimeter=objective(t, config),
        iterations=iterations,
        converged=converged,
        history=tuple(history),
        clamped=ever_clamped,
        warning=_near_right_warning(t),
    )


def min_perimeter_closed_form(t: Triangle) -> float:
    """The known answer: the orthic triangle's perimeter, via coordinates."""
    return orthic_triangle(t).perimeter


def orthic_config(t: Triangle) -> InscribedConfig:
    """Side parameters of the altitude feet (the closed-form optimizer seat)."""
    orth = orthic_triangle(t)
    return InscribedConfig(
        t_on_bc=_param_on(t.b, t.c, orth.foot_from_a),
        t_on_ca=_param_on(t.c, t.a, orth.foot_from_b),
        t_on_ab=_param_on(t.a, t.b, orth.foot_from_c),
    )


def _param_on(start: Point, end: Point, p: Point) -> float:
    d = end - start
    return (p - start).dot(d) / d.dot(d)
