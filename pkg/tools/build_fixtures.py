"""Regenerate the bundled fixtures.

Produces, under src/knotfiber/fixtures/:
  7_6.pd           two-bridge plat diagram with determinant 19 (the only
                   knot of at most 7 crossings with that determinant)
  ml_1.pd..ml_4.pd the winding-n clasped family: the coherent closure of
                   s1^(-2n) s2 s1^-1 s2 s1^-2 with the single-strand
                   component reversed
  convention.txt   the HOMFLY convention pinned by the recursion gate
  expected/*.txt   frozen derived polynomial values

Every fixture is validated before it is written; generation fails loudly if
any pinning check does not hold.
"""

from __future__ import annotations

import pathlib
import sys

TOOLS = pathlib.Path(__file__).resolve().parent
sys.path.insert(0, str(TOOLS))
sys.path.insert(0, str(TOOLS.parent / "src"))

from plat import plat_diagram

from knotfiber.braid import BraidWord, family_braid
from knotfiber.diagram import (
    braid_closure_diagram, encircle, linking_number, remove_component,
    render_pd, reverse_component,
)
from knotfiber.fibering import link_alexander
from knotfiber.invariants import CONVENTIONS, homfly, mfw_bound
from knotfiber.laurent import LaurentPoly, parse_poly

FIXTURES = TOOLS.parent / "src" / "knotfiber" / "fixtures"

SEVEN_SIX_PLAT = [2, -1, 2, -1, -1, 2, 2]   # continued fraction 19/12 = [1,1,1,2,2]
ML_TAIL = (2, -1, 2, -1, -1)

ALEX_7_6 = "1 - 5*t + 7*t^2 - 5*t^3 + t^4"


def make_ml(n: int):
    word = BraidWord(3, (-1,) * (2 * n) + ML_TAIL)
    diagram = braid_closure_diagram(word).relabeled({"c1": "k", "c2": "m"})
    return reverse_component(diagram, "m")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    (FIXTURES / "expected").mkdir(exist_ok=True)

    # --- 7_6 two-bridge fixture ------------------------------------------
    seven_six = plat_diagram(4, SEVEN_SIX_PLAT)
    assert seven_six.crossing_count() == 7
    assert seven_six.component_count() == 1
    alex = link_alexander(seven_six)
    assert alex == parse_poly(ALEX_7_6, 1), alex.render()
    det = sum(c * (-1) ** e[0] for e, c in alex.terms.items())
    assert abs(det) == 19
    (FIXTURES / "7_6.pd").write_text(render_pd(seven_six))
    write_expected("alexander_7_6", alex)

    # --- ML family ---------------------------------------------------------
    trefoil_left = braid_closure_diagram(BraidWord(2, (-1, -1, -1)))
    ml = {n: make_ml(n) for n in range(1, 5)}
    for n, d in ml.items():
        assert linking_number(d, "k", "m") == n
        for label, other in (("k", "m"), ("m", "k")):
            assert homfly(remove_component(d, other)) == LaurentPoly.one(2)
        (FIXTURES / f"ml_{n}.pd").write_text(render_pd(d))

    # --- convention pin ------------------------------------------------------
    xm2 = LaurentPoly.monomial(2, (-2, 0), -1)
    xm1y = LaurentPoly.monomial(2, (-1, 1), -1)
    winners = []
    for conv in CONVENTIONS:
        values = {n: homfly(d, conv) for n, d in ml.items()}
        jt = homfly(trefoil_left, conv)
        if all(values[n] == xm2 * values[n - 1] + xm1y * jt for n in (2, 3, 4)):
            winners.append(conv)
    assert winners == ["fw"], winners
    (FIXTURES / "convention.txt").write_text("fw\n")

    for n, d in ml.items():
        assert mfw_bound(d, "fw") == n + 3
        write_expected(f"ml_{n}_homfly_fw", homfly(d, "fw"))
    rev_bounds = {mfw_bound(reverse_component(d, "m"), "fw") for d in ml.values()}
    assert rev_bounds == {3}

    # --- derived Alexander fixtures ----------------------------------------
    for n in (0, 1):
        el = encircle(family_braid("beta", n), ["+", "-"])
        a = link_alexander(el)
        assert a.is_monic_up_to_units()
        lo, hi = a.span(0)
        assert hi - lo == 12
        write_expected(f"el_{n}_alexander", a)

    for n in (0, 1):
        ax = encircle(family_braid("beta", n), ["+"])
        write_expected(f"beta_{n}_axis_alexander", link_alexander(ax))

    for i in (0, 1, 2):
        ax = encircle(family_braid("morton", i), ["+"])
        write_expected(f"morton_{i}_axis_alexander", link_alexander(ax))

    sigma14 = braid_closure_diagram(BraidWord(2, (1, 1, 1, 1)))
    a_plain = link_alexander(sigma14)
    a_rev = link_alexander(reverse_component(sigma14, "c2"))
    assert a_plain.is_monic_up_to_units()
    assert a_plain != a_rev
    write_expected("sigma14_alexander", a_plain)
    write_expected("sigma14_reversed_alexander", a_rev)

    print("fixtures written to", FIXTURES)


def write_expected(name: str, poly: LaurentPoly) -> None:
    (FIXTURES / "expected" / f"{name}.txt").write_text(poly.render() + "\n")


if __name__ == "__main__":
    main()
