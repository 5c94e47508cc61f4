"""Brute-force search for the minimal circumscribed ratio over inscribed
origin-symmetric parallelograms of a centrally symmetric polygon.

The search space is the pair of boundary parameters (t1, t2) of the two
generators, reduced to t1 in [0, 2m) and t2 = t1 + s with s in (0, m) so
that the generators are counterclockwise.  The objective, the maximal
parallelogram gauge over the polygon's vertices, is evaluated on a full
grid and then polished by a derivative-free local descent: alternating
golden-section line searches along two orthogonal coordinates on a
bracket that shrinks whenever a sweep stops improving.

The objective is a maximum of smooth per-vertex sheets, so its valleys
are creases where two sheets tie; fixed axis-aligned coordinates stall on
a diagonal crease, because each 1-d slice then has its minimum exactly at
the current point.  The descent therefore re-aligns its coordinate frame
each sweep with the locally tie-preserving direction of the two leading
sheets, estimated by central differences of their gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .geom import CentralPolygon, Vec2, apply_linear, boundary_point, polygon_symmetries
from .pgram import Parallelogram, circum_ratio, gauge, vertex_hausdorff

__all__ = [
    "SearchSettings",
    "BMResult",
    "ClaimReport",
    "grid_scan",
    "bm_distance",
    "argmin_orbit",
    "verify_claim",
]

CONTACT_TOL = 1e-9

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SearchSettings:
    """Tunables of the refinement stage."""

    starts: int = 5            # grid cells used as descent starts
    shrink: float = 0.5        # bracket factor applied when a sweep stalls
    step_tol: float = 1e-9     # stop when the bracket radius drops below this
    objective_tol: float = 1e-12  # sweep improvement counted as progress
    margin: float = 1e-6       # keeps s = t2 - t1 inside (margin, m - margin)
    max_sweeps: int = 3000


DEFAULT_SETTINGS = SearchSettings()


@dataclass(frozen=True)
class BMResult:
    """Minimal ratio found, its witness parallelogram and boundary
    parameters, and the polygon vertices realizing the ratio."""

    lam: float
    parallelogram: Parallelogram
    t_u: float
    t_v: float
    contacts: tuple[Vec2, ...]
    grid_resolution: int
    refined: bool


def _vertex_arrays(c: CentralPolygon) -> tuple[list[tuple[float, float]], np.ndarray]:
    pts = [(v.x, v.y) for v in c.vertices]
    return pts, np.asarray(pts, dtype=float)


def _boundary_array(verts: np.ndarray, t: np.ndarray) -> np.ndarray:
    n = len(verts)
    t = np.asarray(t, dtype=float) % n
    t = np.where(t >= n, 0.0, t)  # float mod can round up to the period
    i = np.minimum(t.astype(int), n - 1)
    f = t - i
    a = verts[i]
    b = verts[(i + 1) % n]
    return a + f[..., None] * (b - a)


def grid_scan(
    c: CentralPolygon, grid: int, margin: float = DEFAULT_SETTINGS.margin
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Objective on the grid x grid mesh of the reduced domain.

    Returns (t1 values, s values, F) where F[i, k] is the maximal vertex
    gauge of the parallelogram with generators at boundary parameters
    t1[i] and t1[i] + s[k]; infeasible cells hold +inf.
    """
    if grid < 8:
        raise ValueError(f"grid must be at least 8, got {grid}")
    pts, verts = _vertex_arrays(c)
    n = len(pts)
    m = n // 2
    t1 = np.arange(grid) * (2.0 * m / grid)
    s = margin + np.arange(grid) * ((m - 2.0 * margin) / (grid - 1))
    gen_u = _boundary_array(verts, t1)
    gen_v = _boundary_array(verts, t1[:, None] + s[None, :])
    ux = gen_u[:, 0][:, None]
    uy = gen_u[:, 1][:, None]
    vx = gen_v[..., 0]
    vy = gen_v[..., 1]
    den = ux * vy - uy * vx
    best = None
    for wx, wy in pts[:m]:  # antipodal vertices have equal gauge
        g = np.abs(wx * vy - wy * vx) + np.abs(ux * wy - uy * wx)
        best = g if best is None else np.maximum(best, g)
    with np.errstate(divide="ignore", invalid="ignore"):
        f = best / den
    f = np.where(np.isfinite(f) & (den > 0.0), f, np.inf)
    return t1, s, f


def _make_objective(
    c: CentralPolygon, margin: float
) -> tuple[Callable[[float, float], float], Callable[[float, float], list[float]], int]:
    """Scalar objective and per-vertex sheet values on raw floats."""
    pts, _ = _vertex_arrays(c)
    n = len(pts)
    m = n // 2
    lo, hi = margin, m - margin

    def at(t: float) -> tuple[float, float]:
        t = t % n
        if t >= n:
            t = 0.0
        i = int(t)
        f = t - i
        ax, ay = pts[i]
        bx, by = pts[(i + 1) % n]
        return ax + f * (bx - ax), ay + f * (by - ay)

    def sheets(t1: float, s: float) -> list[float]:
        s = lo if s < lo else hi if s > hi else s
        ux, uy = at(t1)
        vx, vy = at(t1 + s)
        den = ux * vy - uy * vx
        if not den > 1e-300:
            return [math.inf] * m
        return [
            (abs(wx * vy - wy * vx) + abs(ux * wy - uy * wx)) / den for wx, wy in pts[:m]
        ]

    def objective(t1: float, s: float) -> float:
        return max(sheets(t1, s))

    return objective, sheets, m


def _golden_min(f: Callable[[float], float], lo: float, hi: float, tol: float) -> float:
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > tol:
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _GOLDEN * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _GOLDEN * (hi - lo)
            f2 = f(x2)
    return x1 if f1 <= f2 else x2


def _descend(
    objective: Callable[[float, float], float],
    sheets: Callable[[float, float], list[float]],
    t1: float,
    s: float,
    radius: float,
    m: int,
    settings: SearchSettings,
) -> tuple[float, float, float]:
    lo, hi = settings.margin, m - settings.margin
    f0 = objective(t1, s)
    r = radius
    for _ in range(settings.max_sweeps):
        # coordinate frame aligned with the tie direction of the two
        # leading gauge sheets; falls back to the axes when flat
        values = sheets(t1, s)
        order = sorted(range(len(values)), key=lambda i: -values[i])
        e1 = (1.0, 0.0)
        if len(order) >= 2:
            i1, i2 = order[0], order[1]
            d = max(r * 1e-3, 1e-9)

            def sheet_gap(a: float, b: float) -> float:
                vals = sheets(a, b)
                return vals[i1] - vals[i2]

            gx = (sheet_gap(t1 + d, s) - sheet_gap(t1 - d, s)) / (2.0 * d)
            gy = (sheet_gap(t1, s + d) - sheet_gap(t1, s - d)) / (2.0 * d)
            norm = math.hypot(gx, gy)
            if norm > 1e-12:
                e1 = (-gy / norm, gx / norm)
        for ex, ey in (e1, (-e1[1], e1[0])):
            tol = max(r * 1e-3, 1e-12)
            tau = _golden_min(lambda t: objective(t1 + t * ex, s + t * ey), -r, r, tol)
            if objective(t1 + tau * ex, s + tau * ey) <= objective(t1, s):
                t1 = t1 + tau * ex
                s = min(max(s + tau * ey, lo), hi)
        f1 = objective(t1, s)
        if f0 - f1 < settings.objective_tol:
            r *= settings.shrink
            if r < settings.step_tol:
                break
        f0 = f1
    return t1, s, objective(t1, s)


def bm_distance(
    c: CentralPolygon,
    grid: int = 360,
    refine: bool = True,
    settings: SearchSettings = DEFAULT_SETTINGS,
) -> BMResult:
    """Minimal circumscribed ratio over inscribed parallelograms of the
    polygon, by grid search plus optional local refinement.

    The result is deterministic for fixed arguments.  The returned ratio
    is recomputed from the witness, so ``circum_ratio(parallelogram, c)``
    reproduces ``lam`` exactly.
    """
    t1s, ss, f = grid_scan(c, grid, settings.margin)
    flat = f.ravel()
    if not np.isfinite(flat).any():
        raise RuntimeError("no feasible parallelogram cell on the grid")
    objective, sheets, m = _make_objective(c, settings.margin)
    count = min(settings.starts, flat.size)
    idx = np.argpartition(flat, count - 1)[:count]
    idx = idx[np.argsort(flat[idx], kind="stable")]
    best: tuple[float, float, float] | None = None
    for flat_index in idx:
        i, k = divmod(int(flat_index), f.shape[1])
        t1, s, val = float(t1s[i]), float(ss[k]), float(f[i, k])
        if refine:
            t1, s, val = _descend(objective, sheets, t1, s, 2.0 * m / grid, m, settings)
        if best is None or val < best[2]:
            best = (t1, s, val)
    t1, s, _ = best
    t1 %= 2 * m
    u = boundary_point(c, t1)
    v = boundary_point(c, t1 + s)
    witness = Parallelogram(u, v)
    lam = circum_ratio(witness, c)
    contacts = tuple(w for w in c.vertices if abs(gauge(witness, w) - lam) <= CONTACT_TOL)
    return BMResult(
        lam=lam,
        parallelogram=witness,
        t_u=t1,
        t_v=t1 + s,
        contacts=contacts,
        grid_resolution=grid,
        refined=refine,
    )


def _local_minima_mask(f: np.ndarray) -> np.ndarray:
    """Cells not exceeded by any of their 8 neighbors; the t1 axis wraps,
    the s axis is padded."""
    fp = np.where(np.isfinite(f), f, np.inf)
    rows = fp.shape[0]
    neighbors = np.full_like(fp, np.inf)
    for di in (-1, 0, 1):
        for dk in (-1, 0, 1):
            if di == 0 and dk == 0:
                continue
            shifted = np.roll(fp, di, axis=0)
            if dk == -1:
                shifted = np.concatenate(
                    [shifted[:, 1:], np.full((rows, 1), np.inf)], axis=1
                )
            elif dk == 1:
                shifted = np.concatenate(
                    [np.full((rows, 1), np.inf), shifted[:, :-1]], axis=1
                )
            neighbors = np.minimum(neighbors, shifted)
    return fp <= neighbors


def _canonical_key(p: Parallelogram) -> tuple:
    return tuple(sorted((round(v.x, 9) + 0.0, round(v.y, 9) + 0.0) for v in p.vertices()))


def argmin_orbit(
    c: CentralPolygon,
    result: BMResult,
    tol: float = 1e-4,
    settings: SearchSettings = DEFAULT_SETTINGS,
) -> list[Parallelogram]:
    """Representatives, one per symmetry class of the polygon, of all
    near-optimal parallelogram positions.

    Rescans the grid at the result's resolution, refines every local
    minimum cell near the optimum, keeps refined positions with objective
    at most ``result.lam + tol``, clusters equal positions, and reduces
    the clusters modulo the linear symmetries of the polygon.
    """
    t1s, ss, f = grid_scan(c, result.grid_resolution, settings.margin)
    objective, sheets, m = _make_objective(c, settings.margin)
    mask = _local_minima_mask(f)
    # coarse cells sit above the refined optimum by up to a few cell
    # widths times the local slope, so keep a generous value slack
    slack = max(10.0 * tol, 6.0 * m / result.grid_resolution)
    mask &= np.where(np.isfinite(f), f, np.inf) <= result.lam + slack
    scale = max(v.norm() for v in c.vertices)
    cluster_tol = 1e-5 * scale

    candidates: list[tuple[float, Parallelogram]] = []
    for i, k in np.argwhere(mask):
        t1, s, val = _descend(
            objective, sheets, float(t1s[i]), float(ss[k]), 2.0 * m / result.grid_resolution, m, settings
        )
        if val <= result.lam + tol:
            u = boundary_point(c, t1)
            v = boundary_point(c, t1 + s)
            candidates.append((val, Parallelogram(u, v)))

    clusters: list[Parallelogram] = []
    for _, p in sorted(candidates, key=lambda item: (item[0], _canonical_key(item[1]))):
        if all(vertex_hausdorff(p, q) >= cluster_tol for q in clusters):
            clusters.append(p)

    maps = polygon_symmetries(c)
    representatives: list[Parallelogram] = []
    for p in clusters:
        images = [
            Parallelogram.from_unordered(apply_linear(mat, p.u), apply_linear(mat, p.v))
            for mat in maps
        ]
        if all(
            min(vertex_hausdorff(img, rep) for img in images) >= cluster_tol
            for rep in representatives
        ):
            representatives.append(p)
    representatives.sort(key=_canonical_key)
    return representatives


@dataclass(frozen=True)
class ClaimReport:
    """Outcome of checking a claimed value against the search result.
    ``gap`` is claimed minus computed; upper-bound checks of conjectured
    values are labeled "conjecture support" rather than proof."""

    claimed: float
    computed: float
    mode: str
    tol: float
    gap: float
    passed: bool
    note: str
    result: BMResult = field(repr=False)


def verify_claim(
    c: CentralPolygon,
    claimed: float,
    mode: str,
    tol: float,
    grid: int = 360,
    refine: bool = True,
    settings: SearchSettings = DEFAULT_SETTINGS,
) -> ClaimReport:
    """Checks a claimed distance value: mode "exact" requires agreement
    within tol, mode "upper_bound" requires the search not to beat the
    claim by more than tol."""
    if mode not in ("exact", "upper_bound"):
        raise ValueError(f"mode must be 'exact' or 'upper_bound', got {mode!r}")
    if not claimed > 1.0:
        raise ValueError("claimed value must exceed 1")
    result = bm_distance(c, grid=grid, refine=refine, settings=settings)
    gap = claimed - result.lam
    if mode == "exact":
        passed = abs(gap) <= tol
        note = ""
    else:
        passed = result.lam <= claimed + tol
        note = "conjecture support"
    return ClaimReport(
        claimed=claimed,
        computed=result.lam,
        mode=mode,
        tol=tol,
        gap=gap,
        passed=passed,
        note=note,
        result=result,
    )
