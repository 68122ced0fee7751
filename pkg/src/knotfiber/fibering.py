"""Fibering verdicts for satellite patterns, and conjugacy separation of braids.

The engine is deliberately asymmetric: NotFibered requires a theorem-backed
violation (zero winding number, or a non-monic Alexander polynomial of the
associated three-component link), while Fibered requires a positive witness
(membership in the unknot-pattern classification, or a homogeneous braiding).
Polynomial evidence alone never yields Fibered; everything else is Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .braid import (
    BraidWord,
    braid_permutation,
    closure_components,
    cycle_type,
    exponent_sum,
    is_homogeneous,
)
from .diagram import LinkDiagram, build_diagram, diagram_visits, encircle, linking_number, winding_number
from .invariants import homfly
from .laurent import LaurentPoly
from .presentation import all_ones_weights, alexander_poly, assign_weights, wirtinger


class FiberingError(ValueError):
    pass


class Verdict(Enum):
    FIBERED = "Fibered"
    NOT_FIBERED = "NotFibered"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class FiberingVerdict:
    status: Verdict
    evidence: tuple[str, ...]

    def render(self) -> str:
        lines = [f"status {self.status.value}"]
        for item in self.evidence:
            lines.append(f"evidence {item}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Pattern:
    """A knot in a solid torus, in one of two representations.

    Braid representation: the closed braid sits inside the solid torus that is
    the complement of its axis; the winding number is the strand count.  When
    assume_unknotted_closure is set (see unknot_pattern_from_braid) the
    pattern carries the classification pedigree for braids closing to an
    unknot; the unknottedness itself is a recorded assumption, never verified.

    Diagram representation: an explicit 2-component diagram with the pattern
    knot labeled "k" and a meridian of the solid torus labeled "m".
    """

    braid: Optional[BraidWord] = None
    diagram: Optional[LinkDiagram] = None
    assume_unknotted_closure: bool = False

    def __post_init__(self):
        if (self.braid is None) == (self.diagram is None):
            raise FiberingError("pattern needs exactly one of braid or diagram")
        if self.diagram is not None:
            labels = set(self.diagram.labels)
            if labels != {"k", "m"}:
                raise FiberingError(
                    f"diagram pattern needs components labeled k and m, got {sorted(labels)}")

    @property
    def winding(self) -> int:
        if self.braid is not None:
            return self.braid.strands
        return winding_number(self.diagram, "k", "m")

    def axis_link(self) -> LinkDiagram:
        """The 2-component link of the pattern knot and one meridian."""
        if self.braid is not None:
            if closure_components(self.braid) != 1:
                raise FiberingError("braid closure is not a knot")
            return encircle(self.braid, ["+"]).relabeled({"c1": "k"})
        return self.diagram


def unknot_pattern_from_braid(word: BraidWord) -> Pattern:
    """Pattern produced by closing a braid to (an assumed) unknot in a solid torus.

    The closure must be connected; that it is the trivial knot is recorded as
    an assumption, not verified.  Patterns built this way carry the fibered
    pedigree of the unknot-pattern classification, contingent on that
    assumption.
    """
    if closure_components(word) != 1:
        raise FiberingError("closure has more than one component; cannot close to a knot")
    return Pattern(braid=word, assume_unknotted_closure=True)


def pattern_link(pattern: Pattern) -> LinkDiagram:
    """The 3-component link: pattern knot plus two oppositely oriented meridians."""
    if pattern.winding == 0:
        raise FiberingError("pattern has winding number zero; no meridian link exists")
    if pattern.braid is not None:
        if closure_components(pattern.braid) != 1:
            raise FiberingError("braid closure is not a knot")
        return encircle(pattern.braid, ["+", "-"]).relabeled({"c1": "k"})
    return _double_meridian(pattern.diagram)


def _double_meridian(diagram: LinkDiagram) -> LinkDiagram:
    """Add a parallel, reversed copy of component m (push-off, zero framing).

    Supported for meridian components drawn without self-crossings, which is
    every diagram this package constructs; the blackboard parallel of such a
    circle has zero framing automatically.
    """
    signs, visits = diagram_visits(diagram)
    m_crossings = set()
    for idx, c in enumerate(diagram.crossings):
        over_m = diagram.arc_component(c.over_in) == "m"
        under_m = diagram.arc_component(c.under_in) == "m"
        if over_m and under_m:
            raise FiberingError(
                "meridian component has self-crossings; parallel push-off not supported")
        if over_m or under_m:
            m_crossings.add(idx)
    base = len(diagram.crossings)
    clone = {cid: base + i for i, cid in enumerate(sorted(m_crossings))}
    new_signs = dict(signs)
    for cid, cid2 in clone.items():
        new_signs[cid2] = -signs[cid]
    new_visits: dict[str, list[tuple[int, str]]] = {}
    for label, seq in visits.items():
        if label == "m":
            new_visits[label] = seq
            mirrored = [(clone[cid], role) for cid, role in seq]
            new_visits["m_prime"] = list(reversed(mirrored))
        else:
            expanded: list[tuple[int, str]] = []
            for cid, role in seq:
                expanded.append((cid, role))
                if cid in clone:
                    expanded.append((clone[cid], role))
            new_visits[label] = expanded
    return build_diagram(new_signs, new_visits)


def link_alexander(diagram: LinkDiagram) -> LaurentPoly:
    """All-ones Alexander polynomial of a diagram, canonical form."""
    data = assign_weights(wirtinger(diagram), all_ones_weights(diagram))
    return alexander_poly(data)


def pattern_fibered_check(pattern: Pattern,
                          homogeneous_witness: Optional[BraidWord] = None) -> FiberingVerdict:
    """Evidence-based fibering verdict for a pattern.

    Checks, in order: zero winding (NotFibered); the monic-Alexander necessary
    condition on the associated 3-component link (violation: NotFibered);
    positive witnesses (classification pedigree, homogeneous braiding:
    Fibered).  Otherwise Unknown, listing every inconclusive finding.
    """
    evidence: list[str] = []
    if pattern.winding == 0:
        return FiberingVerdict(Verdict.NOT_FIBERED, ("winding number zero",))
    evidence.append(f"winding number {pattern.winding}")

    pedigree = pattern.braid is not None and pattern.assume_unknotted_closure
    link = pattern_link(pattern)
    delta = link_alexander(link)
    monic = delta.is_monic_up_to_units()
    if not monic:
        reason = ("zero Alexander polynomial of the meridian link"
                  if delta.is_zero() else
                  f"non-monic Alexander polynomial of the meridian link: {delta.render()}")
        if pedigree:
            # The classification witness outranks the meridian-link heuristic,
            # which tests a different pattern geometry for braid representations.
            return FiberingVerdict(Verdict.FIBERED, (
                "member of the unknot-pattern classification via the recorded braid "
                "(closure assumed unknotted)",
                f"note: {reason}",
            ))
        return FiberingVerdict(Verdict.NOT_FIBERED, (reason,))
    evidence.append(f"monic Alexander polynomial of the meridian link: {delta.render()}"
                    " (consistent with fibering, not sufficient)")

    positive: list[str] = []
    if pedigree:
        positive.append(
            "member of the unknot-pattern classification via the recorded braid "
            "(closure assumed unknotted)")
    witness = homogeneous_witness
    if witness is None and pattern.braid is not None:
        witness = pattern.braid
    if witness is not None and witness.letters and is_homogeneous(witness):
        positive.append(
            f"homogeneous braid closure witness: {witness.render()}")
    if positive:
        return FiberingVerdict(Verdict.FIBERED, tuple(positive) + tuple(evidence))
    evidence.append("no fibering witness (classification membership or homogeneous braiding)")
    return FiberingVerdict(Verdict.UNKNOWN, tuple(evidence))


def satellite_verdict(companion: Verdict, pattern: Verdict) -> Verdict:
    """Three-valued conjunction: a satellite fibers iff companion and pattern do."""
    if companion is Verdict.NOT_FIBERED or pattern is Verdict.NOT_FIBERED:
        return Verdict.NOT_FIBERED
    if companion is Verdict.FIBERED and pattern is Verdict.FIBERED:
        return Verdict.FIBERED
    return Verdict.UNKNOWN


@dataclass(frozen=True)
class SeparationResult:
    separated: bool
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.separated


def conjugacy_separator(a: BraidWord, b: BraidWord) -> SeparationResult:
    """Try to certify non-conjugacy through conjugation-invariant comparisons.

    Compares, in order: exponent sum, permutation cycle type, the all-ones
    Alexander polynomial of the encircled closure, and its HOMFLY polynomial.
    NotSeparated is not a conjugacy proof.
    """
    if a.strands != b.strands:
        raise FiberingError("strand mismatch in conjugacy separation")
    if exponent_sum(a) != exponent_sum(b):
        return SeparationResult(True, "exponent sum")
    if cycle_type(a) != cycle_type(b):
        return SeparationResult(True, "permutation cycle type")
    link_a = encircle(a, ["+"])
    link_b = encircle(b, ["+"])
    if link_alexander(link_a) != link_alexander(link_b):
        return SeparationResult(True, "axis-link Alexander polynomial")
    if homfly(link_a) != homfly(link_b):
        return SeparationResult(True, "axis-link HOMFLY polynomial")
    return SeparationResult(False)
