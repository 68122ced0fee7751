"""Oriented planar link diagrams and the constructions that produce them.

Arcs are split at every crossing passage, so a crossing owns four distinct
arc ends (over_in, over_out, under_in, under_out); over-strand continuity is
recorded by the (over_in, over_out) pairing and exploited only by the
Wirtinger machinery.  Components are labeled cyclic arc sequences in
orientation order.  Crossing signs are data, produced by the constructions
under the right-hand rule; combinatorial validation cannot re-derive them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .braid import BraidWord, braid_permutation, permutation_cycles


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    sign: int
    over_in: int
    over_out: int
    under_in: int
    under_out: int

    def arcs(self) -> tuple[int, int, int, int]:
        return (self.over_in, self.over_out, self.under_in, self.under_out)


class LinkDiagram:
    """Oriented diagram: crossing records plus labeled oriented arc circles."""

    def __init__(self, crossings: Sequence[Crossing], components: dict[str, list[int]],
                 validate: bool = True):
        self.crossings: tuple[Crossing, ...] = tuple(crossings)
        self.components: dict[str, tuple[int, ...]] = {
            label: tuple(arcs) for label, arcs in components.items()
        }
        self._arc_component: dict[int, str] = {}
        for label, arcs in self.components.items():
            for arc in arcs:
                if arc in self._arc_component:
                    raise DiagramError(f"arc {arc} appears in more than one component")
                self._arc_component[arc] = label
        if validate:
            self.validate()

    # -- queries -------------------------------------------------------------

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.components)

    def arc_component(self, arc: int) -> str:
        try:
            return self._arc_component[arc]
        except KeyError:
            raise DiagramError(f"unknown arc {arc}") from None

    def crossing_count(self) -> int:
        return len(self.crossings)

    def component_count(self) -> int:
        return len(self.components)

    def crossingless_circles(self) -> tuple[str, ...]:
        used = set()
        for c in self.crossings:
            used.update(c.arcs())
        return tuple(label for label, arcs in self.components.items()
                     if not any(a in used for a in arcs))

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    # -- validation ------------------------------------------------------------

    def validate(self) -> None:
        if not self.components:
            raise DiagramError("diagram has no components")
        starts: dict[int, tuple[int, str]] = {}
        ends: dict[int, tuple[int, str]] = {}
        for idx, c in enumerate(self.crossings):
            if c.sign not in (1, -1):
                raise DiagramError(f"crossing {idx} has sign {c.sign}, expected +1 or -1")
            for arc in c.arcs():
                if arc not in self._arc_component:
                    raise DiagramError(f"crossing {idx} references unknown arc {arc}")
            for arc, kind in ((c.over_in, "in"), (c.under_in, "in")):
                table = ends
                if arc in table:
                    raise DiagramError(f"arc {arc} is used more than twice (crossing {idx})")
                table[arc] = (idx, kind)
            for arc in (c.over_out, c.under_out):
                if arc in starts:
                    raise DiagramError(f"arc {arc} is used more than twice (crossing {idx})")
                starts[arc] = (idx, "out")
        succ: dict[int, int] = {}
        for c in self.crossings:
            succ[c.over_in] = c.over_out
            succ[c.under_in] = c.under_out
        for label, arcs in self.components.items():
            if not arcs:
                raise DiagramError(f"component {label!r} has no arcs")
            touched = [a for a in arcs if a in starts or a in ends]
            if not touched:
                if len(arcs) != 1:
                    raise DiagramError(
                        f"crossingless component {label!r} must consist of a single arc")
                continue
            for arc in arcs:
                if arc not in starts or arc not in ends:
                    raise DiagramError(
                        f"arc {arc} of component {label!r} must appear exactly twice "
                        "across crossings (once entering, once leaving)")
            for pos, arc in enumerate(arcs):
                nxt = arcs[(pos + 1) % len(arcs)]
                if succ.get(arc) != nxt:
                    raise DiagramError(
                        f"component {label!r} is inconsistent with crossing adjacency "
                        f"at arc {arc}")

    # -- structural edits ------------------------------------------------------

    def relabeled(self, mapping: dict[str, str]) -> "LinkDiagram":
        components = {mapping.get(label, label): list(arcs)
                      for label, arcs in self.components.items()}
        if len(components) != len(self.components):
            raise DiagramError("relabeling collapsed two component labels")
        return LinkDiagram(self.crossings, components, validate=False)


# -- visit-sequence builder --------------------------------------------------
#
# A "visit" is one passage of a component through a crossing: (crossing id,
# "over" | "under").  Every construction and rewiring operation works on visit
# sequences; arcs are then allocated between consecutive visits.

OVER = "over"
UNDER = "under"


def build_diagram(signs: dict[int, int],
                  component_visits: dict[str, list[tuple[int, str]]]) -> LinkDiagram:
    seen: dict[tuple[int, str], str] = {}
    for label, visits in component_visits.items():
        for visit in visits:
            cid, role = visit
            if cid not in signs:
                raise DiagramError(f"visit references unknown crossing {cid}")
            if role not in (OVER, UNDER):
                raise DiagramError(f"bad visit role {role!r}")
            if visit in seen:
                raise DiagramError(f"crossing {cid} visited twice as {role}")
            seen[visit] = label
    for cid in signs:
        if (cid, OVER) not in seen or (cid, UNDER) not in seen:
            raise DiagramError(f"crossing {cid} must be visited once over and once under")

    next_arc = 1
    components: dict[str, list[int]] = {}
    in_arc: dict[tuple[int, str], int] = {}
    out_arc: dict[tuple[int, str], int] = {}
    for label, visits in component_visits.items():
        m = len(visits)
        if m == 0:
            components[label] = [next_arc]
            next_arc += 1
            continue
        arcs = list(range(next_arc, next_arc + m))
        next_arc += m
        components[label] = arcs
        # arc[j] runs from visit j to visit j+1 (cyclically)
        for j, visit in enumerate(visits):
            in_arc[visit] = arcs[(j - 1) % m]
            out_arc[visit] = arcs[j]
    crossings = []
    for cid in sorted(signs):
        crossings.append(Crossing(
            sign=signs[cid],
            over_in=in_arc[(cid, OVER)],
            over_out=out_arc[(cid, OVER)],
            under_in=in_arc[(cid, UNDER)],
            under_out=out_arc[(cid, UNDER)],
        ))
    return LinkDiagram(crossings, components)


def diagram_visits(diagram: LinkDiagram) -> tuple[dict[int, int], dict[str, list[tuple[int, str]]]]:
    """Inverse of build_diagram: recover signs and per-component visit cycles."""
    enters: dict[int, tuple[int, str]] = {}
    for idx, c in enumerate(diagram.crossings):
        enters[c.over_in] = (idx, OVER)
        enters[c.under_in] = (idx, UNDER)
    signs = {idx: c.sign for idx, c in enumerate(diagram.crossings)}
    visits: dict[str, list[tuple[int, str]]] = {}
    for label, arcs in diagram.components.items():
        seq = []
        for j in range(len(arcs)):
            prev_arc = arcs[j - 1]
            if prev_arc in enters:
                seq.append(enters[prev_arc])
        visits[label] = seq
    return signs, visits


# -- constructions -------------------------------------------------------------


def braid_closure_diagram(word: BraidWord) -> LinkDiagram:
    """Standard closed-braid diagram: one crossing per letter, sign = letter sign.

    Components are labeled c1, c2, ... by closure cycles, ordered by their
    smallest starting strand position.
    """
    n = word.strands
    at = list(range(n + 1))  # at[q] = starting position of strand currently at q
    path_visits: dict[int, list[tuple[int, str]]] = {p: [] for p in range(1, n + 1)}
    signs: dict[int, int] = {}
    for cid, letter in enumerate(word.letters):
        i = abs(letter)
        signs[cid] = 1 if letter > 0 else -1
        upper, lower = at[i], at[i + 1]
        if letter > 0:
            path_visits[upper].append((cid, OVER))
            path_visits[lower].append((cid, UNDER))
        else:
            path_visits[upper].append((cid, UNDER))
            path_visits[lower].append((cid, OVER))
        at[i], at[i + 1] = at[i + 1], at[i]
    perm = braid_permutation(word)
    component_visits: dict[str, list[tuple[int, str]]] = {}
    cycles = sorted(permutation_cycles(perm), key=min)
    for k, cycle in enumerate(cycles, start=1):
        visits: list[tuple[int, str]] = []
        for p in cycle:
            visits.extend(path_visits[p])
        component_visits[f"c{k}"] = visits
    return build_diagram(signs, component_visits)


def encircle(word: BraidWord, axes: Sequence[str],
             axis_over_first: bool = True) -> LinkDiagram:
    """Closed braid plus one or two unknotted circles transverse to all strands.

    Each axis crosses every strand twice (once passing over, once under), so
    it adds 2p crossings.  Orientation "+" makes lk(closure, axis) = +p, "-"
    makes it -p.  Axis labels are "m" and (for a second axis) "m_prime".

    axis_over_first selects which half of each axis circle passes over the
    strands; the two choices give isotopic links (regression-tested), and the
    default is fixed so serialized constructions are reproducible.
    """
    axes = list(axes)
    if not 1 <= len(axes) <= 2:
        raise DiagramError("encircle takes one or two axes")
    for orient in axes:
        if orient not in ("+", "-"):
            raise DiagramError(f"axis orientation must be '+' or '-', got {orient!r}")
    n = word.strands
    p = n
    L = len(word.letters)
    at = list(range(n + 1))
    path_visits: dict[int, list[tuple[int, str]]] = {q: [] for q in range(1, n + 1)}
    signs: dict[int, int] = {}
    # axis crossings come first along each strand (the bands sit above the braid)
    for k, orient in enumerate(axes):
        base = L + k * 2 * p
        sign = 1 if orient == "+" else -1
        for j in range(1, p + 1):
            upper, lower = base + (j - 1), base + p + (j - 1)
            signs[upper] = sign
            signs[lower] = sign
            if axis_over_first:
                path_visits[j].append((upper, UNDER))
                path_visits[j].append((lower, OVER))
            else:
                path_visits[j].append((upper, OVER))
                path_visits[j].append((lower, UNDER))
    for cid, letter in enumerate(word.letters):
        i = abs(letter)
        signs[cid] = 1 if letter > 0 else -1
        upper, lower = at[i], at[i + 1]
        if letter > 0:
            path_visits[upper].append((cid, OVER))
            path_visits[lower].append((cid, UNDER))
        else:
            path_visits[upper].append((cid, UNDER))
            path_visits[lower].append((cid, OVER))
        at[i], at[i + 1] = at[i + 1], at[i]
    component_visits: dict[str, list[tuple[int, str]]] = {}
    cycles = sorted(permutation_cycles(braid_permutation(word)), key=min)
    for idx, cycle in enumerate(cycles, start=1):
        visits: list[tuple[int, str]] = []
        for q in cycle:
            visits.extend(path_visits[q])
        component_visits[f"c{idx}"] = visits
    axis_labels = ["m", "m_prime"]
    upper_role, lower_role = (OVER, UNDER) if axis_over_first else (UNDER, OVER)
    for k, orient in enumerate(axes):
        base = L + k * 2 * p
        upper_visits = [(base + (j - 1), upper_role) for j in range(1, p + 1)]
        lower_visits = [(base + p + (j - 1), lower_role) for j in range(p, 0, -1)]
        circle = upper_visits + lower_visits
        # flipping which half passes over also flips the circle's apparent
        # planar orientation; reversing keeps "+" meaning lk = +p in both modes
        if (orient == "-") != (not axis_over_first):
            circle = list(reversed(circle))
        component_visits[axis_labels[k]] = circle
    return build_diagram(signs, component_visits)


def reverse_component(diagram: LinkDiagram, label: str) -> LinkDiagram:
    """Reverse the orientation of one component, recomputing affected signs."""
    if label not in diagram.components:
        raise DiagramError(f"unknown component label {label!r}")
    target_arcs = set(diagram.components[label])
    new_crossings = []
    for c in diagram.crossings:
        over_in_target = c.over_in in target_arcs
        under_in_target = c.under_in in target_arcs
        over_in, over_out = c.over_in, c.over_out
        under_in, under_out = c.under_in, c.under_out
        sign = c.sign
        if over_in_target:
            over_in, over_out = over_out, over_in
        if under_in_target:
            under_in, under_out = under_out, under_in
        if over_in_target != under_in_target:
            sign = -sign
        new_crossings.append(Crossing(sign, over_in, over_out, under_in, under_out))
    new_components = {
        lbl: (list(reversed(arcs)) if lbl == label else list(arcs))
        for lbl, arcs in diagram.components.items()
    }
    return LinkDiagram(new_crossings, new_components)


def linking_number(diagram: LinkDiagram, label_a: str, label_b: str) -> int:
    """Half the signed count of crossings between the two named components."""
    if label_a == label_b:
        raise DiagramError("linking number needs two distinct components")
    for label in (label_a, label_b):
        if label not in diagram.components:
            raise DiagramError(f"unknown component label {label!r}")
    pair = {label_a, label_b}
    total = 0
    for c in diagram.crossings:
        comps = {diagram.arc_component(c.over_in), diagram.arc_component(c.under_in)}
        if comps == pair:
            total += c.sign
    if total % 2 != 0:
        raise DiagramError("odd signed crossing count between components; invalid diagram")
    return total // 2


def winding_number(diagram: LinkDiagram, knot_label: str, axis_label: str) -> int:
    """|lk| of the two components.

    Equals the geometric winding number for every diagram this package
    constructs (closed braids in a solid torus); for arbitrary diagrams it is
    only the homological winding number.
    """
    return abs(linking_number(diagram, knot_label, axis_label))


def remove_component(diagram: LinkDiagram, label: str) -> LinkDiagram:
    """Delete a component and every crossing involving it, rewiring the rest."""
    if label not in diagram.components:
        raise DiagramError(f"unknown component label {label!r}")
    signs, visits = diagram_visits(diagram)
    dead = {cid for cid, c in enumerate(diagram.crossings)
            if diagram.arc_component(c.over_in) == label
            or diagram.arc_component(c.under_in) == label}
    new_visits = {}
    for lbl, seq in visits.items():
        if lbl == label:
            continue
        new_visits[lbl] = [v for v in seq if v[0] not in dead]
    new_signs = {cid: s for cid, s in signs.items() if cid not in dead}
    return build_diagram(new_signs, new_visits)


def switch_crossing(diagram: LinkDiagram, index: int) -> LinkDiagram:
    """Swap over/under roles at one crossing (sign negates)."""
    if not 0 <= index < len(diagram.crossings):
        raise DiagramError(f"no crossing {index}")
    new_crossings = list(diagram.crossings)
    c = new_crossings[index]
    new_crossings[index] = Crossing(-c.sign, c.under_in, c.under_out, c.over_in, c.over_out)
    return LinkDiagram(new_crossings, {l: list(a) for l, a in diagram.components.items()},
                       validate=False)


def smooth_crossing(diagram: LinkDiagram, index: int) -> LinkDiagram:
    """Oriented smoothing: under_in joins to over_out, over_in to under_out."""
    if not 0 <= index < len(diagram.crossings):
        raise DiagramError(f"no crossing {index}")
    signs, visits = diagram_visits(diagram)
    target = diagram.crossings[index]
    over_label = diagram.arc_component(target.over_in)
    under_label = diagram.arc_component(target.under_in)
    del signs[index]
    sequences: list[list[tuple[int, str]]] = []
    if over_label != under_label:
        u_seq = visits[under_label]
        o_seq = visits[over_label]
        ju = u_seq.index((index, UNDER))
        jo = o_seq.index((index, OVER))
        merged = u_seq[ju + 1:] + u_seq[:ju] + o_seq[jo + 1:] + o_seq[:jo]
        sequences.append(merged)
        for lbl, seq in visits.items():
            if lbl not in (over_label, under_label):
                sequences.append(seq)
    else:
        seq = visits[over_label]
        ju = seq.index((index, UNDER))
        jo = seq.index((index, OVER))
        a, b = min(ju, jo), max(ju, jo)
        sequences.append(seq[a + 1:b])
        sequences.append(seq[b + 1:] + seq[:a])
        for lbl, other in visits.items():
            if lbl != over_label:
                sequences.append(other)

    def sort_key(seq: list[tuple[int, str]]):
        return (1, 0) if not seq else (0, min(v[0] for v in seq))

    sequences.sort(key=sort_key)
    component_visits = {f"c{k}": seq for k, seq in enumerate(sequences, start=1)}
    return build_diagram(signs, component_visits)


def canonical_form(diagram: LinkDiagram) -> tuple:
    """Deterministic relabeled encoding, used as a memo key for skein results.

    Arcs are renumbered along each component starting from its smallest arc
    id, components in order of smallest arc id.  Equal encodings imply
    structurally identical diagrams; unequal encodings for isotopic diagrams
    only cost memo misses.
    """
    order = sorted(diagram.components.values(), key=min)
    relabel: dict[int, int] = {}
    lengths = []
    nxt = 1
    for arcs in order:
        k = arcs.index(min(arcs))
        rotated = arcs[k:] + arcs[:k]
        lengths.append(len(rotated))
        for arc in rotated:
            relabel[arc] = nxt
            nxt += 1
    crossings = tuple(sorted(
        (c.sign, relabel[c.over_in], relabel[c.over_out],
         relabel[c.under_in], relabel[c.under_out])
        for c in diagram.crossings))
    return (tuple(lengths), crossings)


# -- PD file serialization --------------------------------------------------


def save_pd(diagram: LinkDiagram, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(render_pd(diagram))


def render_pd(diagram: LinkDiagram) -> str:
    lines = ["pd v1"]
    for label, arcs in diagram.components.items():
        lines.append(f"component {label} {','.join(str(a) for a in arcs)}")
    for c in diagram.crossings:
        sign = "+1" if c.sign > 0 else "-1"
        lines.append(f"crossing {sign} {c.over_in} {c.over_out} {c.under_in} {c.under_out}")
    return "\n".join(lines) + "\n"


def load_pd(path: str) -> LinkDiagram:
    with open(path, "r", encoding="ascii") as fh:
        return parse_pd(fh.read())


def parse_pd(text: str) -> LinkDiagram:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != "pd v1":
        raise DiagramError("missing 'pd v1' header")
    components: dict[str, list[int]] = {}
    crossings: list[Crossing] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if parts[0] == "component":
            if len(parts) != 3:
                raise DiagramError(f"line {lineno}: malformed component line")
            label = parts[1]
            if label in components:
                raise DiagramError(f"line {lineno}: duplicate component label {label!r}")
            try:
                arcs = [int(tok) for tok in parts[2].split(",")]
            except ValueError:
                raise DiagramError(f"line {lineno}: bad arc list") from None
            if any(a <= 0 for a in arcs):
                raise DiagramError(f"line {lineno}: arc ids must be positive")
            components[label] = arcs
        elif parts[0] == "crossing":
            if len(parts) != 6:
                raise DiagramError(f"line {lineno}: malformed crossing line")
            try:
                sign = int(parts[1])
                arcs = [int(tok) for tok in parts[2:]]
            except ValueError:
                raise DiagramError(f"line {lineno}: bad crossing fields") from None
            crossings.append(Crossing(sign, *arcs))
        else:
            raise DiagramError(f"line {lineno}: unknown record {parts[0]!r}")
    return LinkDiagram(crossings, components)
