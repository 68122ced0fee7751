"""Search 3-braid tails g so that ml_n = reverse(closure(s1^{2n} g)) behaves
like the winding-n clasped family: unknotted components, |lk| = n,
mfw = n + 3, reversed mfw constant, and the skein triple at a twist crossing
relating member n to member n-1 and a fixed trefoil."""

from __future__ import annotations

import sys
import pathlib
from itertools import product

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from knotfiber.braid import BraidWord, braid_permutation, permutation_cycles
from knotfiber.diagram import (
    braid_closure_diagram, linking_number, remove_component, reverse_component,
    smooth_crossing, switch_crossing,
)
from knotfiber.invariants import homfly, mfw_bound
from knotfiber.laurent import LaurentPoly

TREFOIL_R = homfly(braid_closure_diagram(BraidWord(2, (1, 1, 1))))
TREFOIL_L = homfly(braid_closure_diagram(BraidWord(2, (-1, -1, -1))))
ONE = LaurentPoly.one(2)


def family_member(g: tuple[int, ...], n: int, rev_label: str):
    word = BraidWord(3, (1,) * (2 * n) + g)
    d = braid_closure_diagram(word)
    return reverse_component(d, rev_label)


def check_tail(g: tuple[int, ...]) -> None:
    word1 = BraidWord(3, (1, 1) + g)
    perm = braid_permutation(word1)
    cycles = permutation_cycles(perm)
    if len(cycles) != 2:
        return
    # strands 1 and 2 must lie in different components
    cyc_of = {}
    for cyc in cycles:
        for p in cyc:
            cyc_of[p] = cyc
    if cyc_of[1] is cyc_of[2]:
        return
    base = braid_closure_diagram(word1)
    # unknotted components
    for label in base.labels:
        solo = remove_component(base, [l for l in base.labels if l != label][0])
        if homfly(solo) != ONE:
            return
    if abs(linking_number(base, "c1", "c2")) != 1:
        return
    for rev_label in ("c1", "c2"):
        try:
            diags = {n: family_member(g, n, rev_label) for n in (1, 2, 3)}
        except Exception:
            continue
        lks = [abs(linking_number(diags[n], "c1", "c2")) for n in (1, 2, 3)]
        if lks != [1, 2, 3]:
            continue
        mfws = [mfw_bound(diags[n]) for n in (1, 2, 3)]
        if mfws != [4, 5, 6]:
            continue
        revs = {mfw_bound(braid_closure_diagram(BraidWord(3, (1,) * (2 * n) + g)))
                for n in (1, 2, 3)}
        values = {n: homfly(diags[n]) for n in (1, 2, 3)}
        trefoil_hits = []
        for n in (2, 3):
            d = diags[n]
            for cid, c in enumerate(d.crossings):
                if d.arc_component(c.over_in) == d.arc_component(c.under_in):
                    continue
                if homfly(switch_crossing(d, cid)) != values[n - 1]:
                    continue
                sm = homfly(smooth_crossing(d, cid))
                kind = ("3_1L" if sm == TREFOIL_L else
                        "3_1R" if sm == TREFOIL_R else
                        "unknot" if sm == ONE else "other")
                trefoil_hits.append((n, cid, c.sign, kind))
        kinds = {k for (_, _, _, k) in trefoil_hits}
        print(f"g={g} rev={rev_label} lk={lks} mfw={mfws} mfw_rev={sorted(revs)} "
              f"triples={kinds} hits={trefoil_hits[:6]}")


if __name__ == "__main__":
    gens = (1, -1, 2, -2)
    seen = set()
    for length in range(2, 7):
        for g in product(gens, repeat=length):
            # skip words with leading s1^± (absorbed into the twist block)
            if abs(g[0]) == 1:
                continue
            check_tail(g)
