"""Named verification checks over the bundled fixtures.

Each check certifies one acceptance property of the engine (family
identifications, the recursion gate that pins the HOMFLY convention, bound
growth, orientation sensitivity, monicity facts, and the randomized property
suites).  The same registry backs the command-line `verify` subcommand and
the acceptance test module; all arithmetic is exact and every check carries
a wall-clock budget.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from .braid import (
    BraidWord, closure_components, conjugate_search, exponent_sum, family_braid,
    is_homogeneous, parse_braid,
)
from .diagram import (
    LinkDiagram, braid_closure_diagram, encircle, linking_number, load_pd,
    reverse_component, winding_number,
)
from .fibering import Pattern, conjugacy_separator, link_alexander, unknot_pattern_from_braid
from .invariants import CONVENTIONS, burau_alexander, homfly, mfw_bound
from .laurent import LaurentPoly, parse_poly
from .presentation import all_ones_weights, alexander_poly, assign_weights, wirtinger

FIXTURES_ENV = "KNOTFIBER_FIXTURES"
RANDOM_SEED = 20250809


class CheckError(RuntimeError):
    pass


def fixtures_dir(override: Optional[str] = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get(FIXTURES_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("knotfiber") / "fixtures"))


def pinned_convention(fixtures: Path) -> str:
    path = fixtures / "convention.txt"
    if not path.exists():
        raise CheckError(
            "HOMFLY convention is not pinned; run `knotfiber verify --calibrate` first")
    value = path.read_text().strip()
    if value not in CONVENTIONS:
        raise CheckError(f"pinned convention {value!r} is not one of {CONVENTIONS}")
    return value


def load_expected(fixtures: Path, name: str, num_vars: int) -> LaurentPoly:
    path = fixtures / "expected" / f"{name}.txt"
    if not path.exists():
        raise CheckError(f"missing expected-value fixture {path}")
    return parse_poly(path.read_text().strip(), num_vars)


def load_fixture_pd(fixtures: Path, name: str) -> LinkDiagram:
    path = fixtures / name
    if not path.exists():
        raise CheckError(f"missing fixture {path}")
    return load_pd(str(path))


@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: str
    computed: str
    elapsed: float
    budget: float


@dataclass(frozen=True)
class CheckSpec:
    name: str
    budget: float
    run: Callable[[Path], tuple[bool, str, str]]


def run_check(spec: CheckSpec, fixtures: Path) -> CheckResult:
    start = time.monotonic()
    ok, expected, computed = spec.run(fixtures)
    elapsed = time.monotonic() - start
    return CheckResult(spec.name, ok and elapsed <= spec.budget,
                       expected, computed, elapsed, spec.budget)


# -- individual checks --------------------------------------------------------


def _check_beta_family(fixtures: Path) -> tuple[bool, str, str]:
    reference = load_fixture_pd(fixtures, "7_6.pd")
    if reference.crossing_count() != 7 or reference.component_count() != 1:
        return False, "7-crossing 1-component fixture", (
            f"{reference.crossing_count()} crossings, {reference.component_count()} components")
    ref_poly = link_alexander(reference)
    frozen = load_expected(fixtures, "alexander_7_6", 1)
    values = []
    ok = ref_poly == frozen
    for n in range(4):
        beta = family_braid("beta", n)
        ok &= closure_components(beta) == 1
        ok &= exponent_sum(beta) == -3
        fox = link_alexander(braid_closure_diagram(beta))
        burau = burau_alexander(beta)
        ok &= fox == burau == ref_poly
        values.append(fox.render())
    return ok, frozen.render(), "; ".join(dict.fromkeys(values)) or "(none)"


def _check_homogeneity(fixtures: Path) -> tuple[bool, str, str]:
    flags = [is_homogeneous(family_braid("beta", n)) for n in range(4)]
    return flags == [True, False, False, False], \
        "[True, False, False, False]", repr(flags)


def _check_conjugacy_separation(fixtures: Path) -> tuple[bool, str, str]:
    sep = conjugacy_separator(family_braid("beta", 0), family_braid("beta", 1))
    ok = sep.separated and sep.witness == "axis-link Alexander polynomial"
    polys = {}
    for n in (2, 3, 4):
        polys[n] = link_alexander(encircle(family_braid("beta", n), ["+"]))
    distinct = len({p.render() for p in polys.values()}) == 3
    ok &= distinct
    return ok, "Separated by axis-link Alexander polynomial; n=2,3,4 pairwise distinct", \
        f"witness={sep.witness!r}; distinct={distinct}"


def _check_jones_recursion(fixtures: Path) -> tuple[bool, str, str]:
    conv = pinned_convention(fixtures)
    ml = {n: load_fixture_pd(fixtures, f"ml_{n}.pd") for n in range(1, 5)}
    values = {n: homfly(d, conv) for n, d in ml.items()}
    trefoil_left = homfly(braid_closure_diagram(BraidWord(2, (-1, -1, -1))), conv)
    xm2 = LaurentPoly.monomial(2, (-2, 0), -1)
    xm1y = LaurentPoly.monomial(2, (-1, 1), -1)
    ok = True
    for n in (2, 3, 4):
        ok &= values[n] == xm2 * values[n - 1] + xm1y * trefoil_left
    if conv == "fw":
        for n in range(1, 5):
            ok &= values[n] == load_expected(fixtures, f"ml_{n}_homfly_fw", 2)
    return ok, "j[n] == -x^-2*j[n-1] - x^-1*y*j(left trefoil) for n=2..4", \
        f"convention={conv}; holds={ok}"


def _check_mfw_growth(fixtures: Path) -> tuple[bool, str, str]:
    conv = pinned_convention(fixtures)
    bounds = [mfw_bound(load_fixture_pd(fixtures, f"ml_{n}.pd"), conv)
              for n in range(1, 5)]
    return bounds == [4, 5, 6, 7], "[4, 5, 6, 7]", repr(bounds)


def _check_orientation_sensitivity(fixtures: Path) -> tuple[bool, str, str]:
    conv = pinned_convention(fixtures)
    bounds = [mfw_bound(reverse_component(load_fixture_pd(fixtures, f"ml_{n}.pd"), "m"), conv)
              for n in range(1, 5)]
    ok = len(set(bounds)) == 1 and bounds[0] <= 3
    return ok, "constant value <= 3", repr(bounds)


def _check_fibered_monicity(fixtures: Path) -> tuple[bool, str, str]:
    ok = True
    spans = []
    for n in (0, 1):
        poly = link_alexander(encircle(family_braid("beta", n), ["+", "-"]))
        frozen = load_expected(fixtures, f"el_{n}_alexander", 1)
        lo, hi = poly.span(0)
        spans.append(hi - lo)
        ok &= poly.is_monic_up_to_units() and poly == frozen and hi - lo == 12
    return ok, "monic, canonical degree 12 (= first Betti number of the genus-5 fiber)", \
        f"monic with spans {spans}" if ok else f"spans {spans}"


def _check_sigma14(fixtures: Path) -> tuple[bool, str, str]:
    closure = braid_closure_diagram(BraidWord(2, (1, 1, 1, 1)))
    plain = link_alexander(closure)
    reversed_poly = link_alexander(reverse_component(closure, "c2"))
    ok = (plain.is_monic_up_to_units()
          and plain == load_expected(fixtures, "sigma14_alexander", 1)
          and reversed_poly == load_expected(fixtures, "sigma14_reversed_alexander", 1)
          and plain != reversed_poly)
    return ok, "monic before reversal; polynomial changes after", \
        f"{plain.render()} vs {reversed_poly.render()}"


def _check_unknot_patterns(fixtures: Path) -> tuple[bool, str, str]:
    notes = []
    pattern = unknot_pattern_from_braid(BraidWord(1, ()))
    hopf = pattern.axis_link()
    ok = hopf.crossing_count() == 2 and abs(linking_number(hopf, "k", "m")) == 1
    notes.append(f"hopf lk {linking_number(hopf, 'k', 'm')}")
    samples = [BraidWord(2, (1,)), BraidWord(3, (1, 2)), family_braid("morton", 0)]
    for word in samples:
        p = unknot_pattern_from_braid(word)
        ok &= p.winding == word.strands
        ok &= winding_number(p.axis_link(), "k", "m") == word.strands
    notes.append("winding == strands on B2, B3, B4 samples")
    reps = [parse_braid("s1 s2", 3), parse_braid("s1^-1 s2", 3), parse_braid("s1^-1 s2^-1", 3)]
    pairwise = all(conjugacy_separator(a, b).separated
                   for i, a in enumerate(reps) for b in reps[i + 1:])
    ok &= pairwise
    notes.append(f"three n=3 classes pairwise separated: {pairwise}")
    a, b = parse_braid("s1 s2^-1", 3), parse_braid("s1^-1 s2", 3)
    conjugator = conjugate_search(a, b, max_len=4)
    ok &= conjugator is not None
    ok &= not conjugacy_separator(a, b).separated
    notes.append(f"conjugator: {conjugator.render() if conjugator else 'absent'}")
    return ok, "Hopf base case; winding = strand count; class separations and one conjugator", \
        "; ".join(notes)


def _random_words(rng: random.Random, count: int, need_knot: bool):
    out = []
    while len(out) < count:
        n = rng.randint(2, 4)
        length = rng.randint(2, 8)
        letters = tuple(rng.choice([i for i in range(1, n)] + [-i for i in range(1, n)])
                        for _ in range(length))
        word = BraidWord(n, letters)
        if {abs(x) for x in letters} != set(range(1, n)):
            continue
        if need_knot and closure_components(word) != 1:
            continue
        out.append(word)
    return out


def _check_property_suites(fixtures: Path) -> tuple[bool, str, str]:
    rng = random.Random(RANDOM_SEED)
    notes = []
    ok = True

    knot_words = _random_words(rng, 20, need_knot=True)
    for word in knot_words:
        fox = link_alexander(braid_closure_diagram(word))
        if fox != burau_alexander(word):
            ok = False
            notes.append(f"dual-oracle mismatch at {word.render()}")
    notes.append("dual-oracle Alexander on 20 knot closures")

    homfly_values = []
    for word in _random_words(rng, 20, need_knot=False):
        n = word.strands
        g = BraidWord(n, tuple(rng.choice([i for i in range(1, n)] + [-i for i in range(1, n)])
                               for _ in range(rng.randint(1, 3))))
        base = homfly(braid_closure_diagram(word))
        conj = homfly(braid_closure_diagram(word.conjugated_by(g)))
        stab = homfly(braid_closure_diagram(BraidWord(n + 1, word.letters + (n,))))
        homfly_values.append(base)
        if not (base == conj == stab):
            ok = False
            notes.append(f"Markov failure at {word.render()}")
    notes.append("HOMFLY Markov invariance on 20 braids")

    for word in knot_words[:10]:
        data = assign_weights(wirtinger(braid_closure_diagram(word)),
                              all_ones_weights(braid_closure_diagram(word)))
        polys = {alexander_poly(data, deleted_column=c).render()
                 for c in range(1, data.generator_count + 1)}
        if len(polys) != 1:
            ok = False
            notes.append(f"column dependence at {word.render()}")
    notes.append("column-deletion independence on 10 diagrams")

    for n in range(1, 5):
        homfly_values.append(homfly(load_fixture_pd(fixtures, f"ml_{n}.pd")))
    for value in homfly_values:
        lo, hi = value.span(0)
        if (hi - lo) % 2 != 0:
            ok = False
            notes.append("odd x-span")
    notes.append("x-span parity on all computed HOMFLY values")

    return ok, "all property suites hold", "; ".join(notes)


REGISTRY: tuple[CheckSpec, ...] = (
    CheckSpec("beta-family-is-7_6", 10.0, _check_beta_family),
    CheckSpec("homogeneity", 5.0, _check_homogeneity),
    CheckSpec("conjugacy-separation", 60.0, _check_conjugacy_separation),
    CheckSpec("jones-recursion", 60.0, _check_jones_recursion),
    CheckSpec("mfw-growth", 60.0, _check_mfw_growth),
    CheckSpec("orientation-sensitivity", 60.0, _check_orientation_sensitivity),
    CheckSpec("fibered-monicity", 60.0, _check_fibered_monicity),
    CheckSpec("sigma14-orientation-demo", 5.0, _check_sigma14),
    CheckSpec("unknot-pattern-plumbing", 30.0, _check_unknot_patterns),
    CheckSpec("property-suites", 120.0, _check_property_suites),
)


def check_names() -> list[str]:
    return [spec.name for spec in REGISTRY]


def get_check(name: str) -> CheckSpec:
    for spec in REGISTRY:
        if spec.name == name:
            return spec
    raise CheckError(f"unknown check {name!r}; known: {', '.join(check_names())}")


def calibrate_convention(fixtures: Path) -> str:
    """Pin the HOMFLY convention from the recursion gate and record it.

    The winner is the convention under which the ml fixtures satisfy
    j[n] = -x^-2 j[n-1] - x^-1 y j(left trefoil) exactly for n = 2..4.
    """
    ml = {n: load_fixture_pd(fixtures, f"ml_{n}.pd") for n in range(1, 5)}
    trefoil_left = braid_closure_diagram(BraidWord(2, (-1, -1, -1)))
    xm2 = LaurentPoly.monomial(2, (-2, 0), -1)
    xm1y = LaurentPoly.monomial(2, (-1, 1), -1)
    winners = []
    for conv in CONVENTIONS:
        values = {n: homfly(d, conv) for n, d in ml.items()}
        jt = homfly(trefoil_left, conv)
        if all(values[n] == xm2 * values[n - 1] + xm1y * jt for n in (2, 3, 4)):
            winners.append(conv)
    if len(winners) != 1:
        raise CheckError(f"calibration did not pin a unique convention: {winners}")
    (fixtures / "convention.txt").write_text(winners[0] + "\n")
    return winners[0]
