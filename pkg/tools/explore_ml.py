"""Search for the ML_n fixture family among two-twist-region chain links.

Candidate: two components interacting in a winding twist region (2n-ish
crossings, carries the linking number) and a fixed clasp region.  The skein
triple at a winding crossing should relate member n to member n-1 and a
trefoil; this script reports, for each parameter choice, the linking numbers,
MFW bounds (both orientations), and which skein identities actually hold.
"""

from __future__ import annotations

import sys
import pathlib

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from geometry import diagram_from_polylines, twist_region
from knotfiber.braid import BraidWord
from knotfiber.diagram import (
    LinkDiagram, braid_closure_diagram, linking_number, reverse_component,
    smooth_crossing, switch_crossing,
)
from knotfiber.invariants import homfly, mfw_bound
from knotfiber.laurent import LaurentPoly


def chain_link(a: int, b: int, hand_a: int, hand_b: int, flip_m: bool) -> LinkDiagram:
    """Two vertical twist regions (a and b crossings) closed pretzel-style.

    Component k runs through the left side of region A and the right side of
    region B; component m through the other two strands.  a, b must have equal
    parity (else the closure is a knot).  hand_a/hand_b pick the crossing
    handedness per region; flip_m reverses the m component.
    """
    if (a + b) % 2 != 0:
        raise ValueError("a and b must have equal parity for a 2-component chain")
    top = 0
    a_left, a_right = twist_region(0, 2, top, a)
    b_left, b_right = twist_region(6, 8, top, b)
    ya = top - 2 * a
    yb = top - 2 * b
    lo = min(ya, yb)

# bottom-arc heights: the component exiting on the inner x-positions takes
    # the shallow arc, the other takes the deep one (they never cross that way)
    k_inner = a_left[-1][0] == 2
    k_bot = lo - 2 if k_inner else lo - 4
    m_bot = lo - 4 if k_inner else lo - 2

    # component k: A strand entering top-left, outer top arc, B strand entering top-right
    k_pts = list(a_left)
    k_pts += [(a_left[-1][0], k_bot), (b_right[-1][0], k_bot)]
    k_pts += list(reversed(b_right))
    k_pts += [(8, top + 4), (0, top + 4)]
    # closes back to a_left[0] = (0, top)

    # component m: A strand entering top-right, inner top arc, B strand entering top-left
    m_pts = list(a_right)
    m_pts += [(a_right[-1][0], m_bot), (b_left[-1][0], m_bot)]
    m_pts += list(reversed(b_left))
    m_pts += [(6, top + 2), (2, top + 2)]
    # closes back to a_right[0] = (2, top)

    if flip_m:
        m_pts = list(reversed(m_pts))

    def region_levels(pts, x_ranges_hands):
        levels = []
        n = len(pts)
        for i in range(n):
            (x1, y1), (x2, y2) = pts[i], pts[(i + 1) % n]
            level = 0
            for (xlo, xhi, hand) in x_ranges_hands:
                if xlo <= min(x1, x2) and max(x1, x2) <= xhi and y1 != y2 and x1 != x2 \
                        and min(y1, y2) >= lo and max(y1, y2) <= top:
                    slope_product = (x2 - x1) * (y2 - y1)
                    over = (slope_product < 0) if hand > 0 else (slope_product > 0)
                    level = 2 if over else 1
            levels.append(level)
        return levels

    ranges = [(0, 2, hand_a), (6, 8, hand_b)]
    return diagram_from_polylines(
        {"k": k_pts, "m": m_pts},
        {"k": region_levels(k_pts, ranges), "m": region_levels(m_pts, ranges)},
    )


TREFOIL_R = homfly(braid_closure_diagram(BraidWord(2, (1, 1, 1))))
TREFOIL_L = homfly(braid_closure_diagram(BraidWord(2, (-1, -1, -1))))
UNKNOT = homfly(braid_closure_diagram(BraidWord(1, ())))


def analyze(tag, diagrams):
    print(f"=== {tag}")
    values = {}
    for n, d in diagrams.items():
        lk = linking_number(d, "k", "m")
        h = homfly(d)
        values[n] = h
        rev = reverse_component(d, "m")
        print(f"  n={n}: crossings={d.crossing_count()} lk={lk} "
              f"mfw={mfw_bound(d)} mfw_rev={mfw_bound(rev)}")
    ns = sorted(diagrams)
    for n in ns[1:]:
        d = diagrams[n]
        hits = []
        for cid, c in enumerate(d.crossings):
            over_c = d.arc_component(c.over_in)
            under_c = d.arc_component(c.under_in)
            if over_c == under_c:
                continue
            sw = homfly(switch_crossing(d, cid))
            sm = homfly(smooth_crossing(d, cid))
            sw_match = "prev" if sw == values[n - 1] else None
            sm_match = ("3_1L" if sm == TREFOIL_L else
                        "3_1R" if sm == TREFOIL_R else
                        "unknot" if sm == UNKNOT else None)
            if sw_match and sm_match:
                hits.append((cid, c.sign, sm_match))
        print(f"  n={n}: skein triples (switch=prev): {hits}")


if __name__ == "__main__":
    # both-even chains: region A carries 2n twists, region B is a 4-crossing clasp
    for hand_a, hand_b, flip in [(1, 1, False), (1, 1, True), (1, -1, False), (1, -1, True),
                                 (-1, 1, False), (-1, 1, True), (-1, -1, False), (-1, -1, True)]:
        try:
            diagrams = {n: chain_link(2 * n, 4, hand_a, hand_b, flip) for n in range(1, 4)}
            analyze(f"even chain a=2n b=4 hands=({hand_a},{hand_b}) flip={flip}", diagrams)
        except Exception as exc:
            print(f"even chain hands=({hand_a},{hand_b}) flip={flip}: {exc}")
