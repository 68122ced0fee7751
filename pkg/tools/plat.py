"""Plat closures of braid words via the polyline builder.

Plats need genuine per-crossing orientation data (strands run in both
directions), so the diagram is assembled geometrically: rails subdivided at
every letter band, one zigzag per letter, caps joining rail pairs top and
bottom.  Used to generate two-bridge fixture diagrams from Conway-style
words.
"""

from __future__ import annotations

import sys
import pathlib

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from geometry import diagram_from_polylines
from knotfiber.diagram import LinkDiagram


def plat_diagram(strands: int, letters: list[int]) -> LinkDiagram:
    """Plat closure of a braid word on an even number of strands.

    Rails sit at x = 0, 2, ..., 2(strands-1); letter k occupies the height
    band [-2(k+1), -2k]; caps pair rails (1,2), (3,4), ... top and bottom.
    Positive letters put the falling-left-to-right strand on top.
    """
    if strands % 2 != 0:
        raise ValueError("plat closure needs an even strand count")
    L = len(letters)
    y_top, y_bot = 0, -2 * L
    rail_x = [2 * j for j in range(strands)]

    # passage points: one passage per starting rail, subdivided at every band
    at = list(range(strands))            # at[pos] = passage currently on rail pos
    points: list[list[tuple[int, int]]] = [[(rail_x[j], y_top)] for j in range(strands)]
    hand: dict[int, int] = {}            # band index -> letter sign
    for k, letter in enumerate(letters):
        i = abs(letter) - 1
        hand[k] = 1 if letter > 0 else -1
        y = y_top - 2 * (k + 1)
        for pos in range(strands):
            passage = at[pos]
            if pos == i:
                points[passage].append((rail_x[i + 1], y))
            elif pos == i + 1:
                points[passage].append((rail_x[i], y))
            else:
                points[passage].append((rail_x[pos], y))
        at[i], at[i + 1] = at[i + 1], at[i]
    ends = {at[pos]: pos for pos in range(strands)}  # passage -> final rail

    def partner(pos: int) -> int:
        return pos + 1 if pos % 2 == 0 else pos - 1

    start_of = {j: j for j in range(strands)}        # passage j starts at rail j
    component_points: list[list[tuple[int, int]]] = []
    used: set[int] = set()
    for seed in range(strands):
        if seed in used:
            continue
        pts: list[tuple[int, int]] = []
        passage = seed
        direction = "down"
        while True:
            used.add(passage)
            seq = points[passage] if direction == "down" else list(reversed(points[passage]))
            pts.extend(seq)
            if direction == "down":
                pos = ends[passage]
                nxt_pos = partner(pos)
                pts.append((rail_x[pos], y_bot - 2))
                pts.append((rail_x[nxt_pos], y_bot - 2))
                # find passage ending at nxt_pos
                passage = next(p for p, e in ends.items() if e == nxt_pos)
                direction = "up"
            else:
                pos = start_of[passage]
                nxt_pos = partner(pos)
                pts.append((rail_x[pos], y_top + 2))
                pts.append((rail_x[nxt_pos], y_top + 2))
                passage = nxt_pos
                direction = "down"
                if passage == seed:
                    break
        component_points.append(pts)

    polylines = {}
    levels = {}
    for idx, pts in enumerate(component_points, start=1):
        # drop consecutive duplicates (cap meets passage endpoint)
        clean = [pts[0]]
        for p in pts[1:]:
            if p != clean[-1]:
                clean.append(p)
        if clean[0] == clean[-1]:
            clean.pop()
        label = f"c{idx}"
        polylines[label] = clean
        lv = []
        n = len(clean)
        for i in range(n):
            (x1, y1), (x2, y2) = clean[i], clean[(i + 1) % n]
            level = 0
            if x1 != x2 and y1 != y2 and y_bot <= min(y1, y2) and max(y1, y2) <= y_top:
                band = (y_top - max(y1, y2)) // 2
                sign = hand.get(band, 1)
                slope_product = (x2 - x1) * (y2 - y1)
                over = (slope_product < 0) if sign > 0 else (slope_product > 0)
                level = 2 if over else 1
            lv.append(level)
        levels[label] = lv
    return diagram_from_polylines(polylines, levels)
