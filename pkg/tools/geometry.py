"""Polyline-to-diagram builder for fixture generation.

Components are closed polylines with integer coordinates in general position.
Crossings are the transversal interior intersections of segments; which strand
passes over is decided by per-segment levels.  Signs come from the directed
tangents via the right-hand rule, so any over/under assignment yields an
honest oriented link diagram (every assignment of crossings to a generic
planar projection is realizable).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import sys
import pathlib

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from knotfiber.diagram import OVER, UNDER, LinkDiagram, build_diagram


class GeometryError(ValueError):
    pass


def _segments(points: Sequence[tuple[int, int]]):
    n = len(points)
    for i in range(n):
        yield i, points[i], points[(i + 1) % n]


def _intersect(p1, p2, q1, q2):
    """Interior transversal intersection parameter pair, or None."""
    (x1, y1), (x2, y2) = p1, p2
    (x3, y3), (x4, y4) = q1, q2
    dx1, dy1 = x2 - x1, y2 - y1
    dx2, dy2 = x4 - x3, y4 - y3
    denom = dx1 * dy2 - dy1 * dx2
    if denom == 0:
        return None
    s = Fraction((x3 - x1) * dy2 - (y3 - y1) * dx2, denom)
    u = Fraction((x3 - x1) * dy1 - (y3 - y1) * dx1, denom)
    if not (0 < s < 1 and 0 < u < 1):
        return None
    return s, u


def diagram_from_polylines(
    polylines: dict[str, Sequence[tuple[int, int]]],
    levels: dict[str, Sequence[int]],
) -> LinkDiagram:
    """Build a LinkDiagram from closed polylines and per-segment height levels.

    levels[label][i] is the height of segment i of that component; at each
    crossing the higher segment passes over.  Equal heights at a crossing,
    parallel overlaps, endpoint contacts and triple points are rejected.
    """
    for label, pts in polylines.items():
        if len(pts) < 3:
            raise GeometryError(f"component {label!r} needs at least 3 points")
        if len(levels[label]) != len(pts):
            raise GeometryError(f"component {label!r}: one level per segment required")

    entries = []  # (label, seg_index, param, crossing_id, role)
    signs: dict[int, int] = {}
    crossing_id = 0
    items = list(polylines.items())
    all_segments = []
    for label, pts in items:
        for idx, a, b in _segments(pts):
            all_segments.append((label, idx, a, b))
    for i in range(len(all_segments)):
        for j in range(i + 1, len(all_segments)):
            la, ia, a1, a2 = all_segments[i]
            lb, ib, b1, b2 = all_segments[j]
            if la == lb and (ia == ib or (ia - ib) % len(polylines[la]) in (1, len(polylines[la]) - 1)):
                continue  # adjacent segments share an endpoint
            hit = _intersect(a1, a2, b1, b2)
            if hit is None:
                continue
            s, u = hit
            ha = levels[la][ia]
            hb = levels[lb][ib]
            if ha == hb:
                raise GeometryError(
                    f"segments {la}[{ia}] and {lb}[{ib}] cross at equal level {ha}")
            da = (a2[0] - a1[0], a2[1] - a1[1])
            db = (b2[0] - b1[0], b2[1] - b1[1])
            if ha > hb:
                over_dir, under_dir = da, db
                over_seg, under_seg = (la, ia, s), (lb, ib, u)
            else:
                over_dir, under_dir = db, da
                over_seg, under_seg = (lb, ib, u), (la, ia, s)
            cross_z = under_dir[0] * over_dir[1] - under_dir[1] * over_dir[0]
            if cross_z == 0:
                raise GeometryError("degenerate tangents at crossing")
            signs[crossing_id] = 1 if cross_z > 0 else -1
            entries.append((over_seg[0], over_seg[1], over_seg[2], crossing_id, OVER))
            entries.append((under_seg[0], under_seg[1], under_seg[2], crossing_id, UNDER))
            crossing_id += 1

    component_visits: dict[str, list[tuple[int, str]]] = {}
    for label, pts in items:
        mine = [(idx, param, cid, role)
                for (lbl, idx, param, cid, role) in entries if lbl == label]
        mine.sort(key=lambda e: (e[0], e[1]))
        component_visits[label] = [(cid, role) for (_, _, cid, role) in mine]
    return build_diagram(signs, component_visits)


def twist_region(x_left: int, x_right: int, y_top: int, count: int,
                 start_left: bool = True) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Zigzag point runs realizing a vertical twist region with `count` crossings.

    Returns the point sequences for the strand entering top-left and the
    strand entering top-right, from y_top down to y_top - 2*count.  The
    strands swap sides at every crossing.
    """
    left_run = [(x_left, y_top)]
    right_run = [(x_right, y_top)]
    xl, xr = x_left, x_right
    y = y_top
    for _ in range(count):
        y -= 2
        xl, xr = xr, xl
        left_run.append((xl, y))
        right_run.append((xr, y))
    return left_run, right_run
