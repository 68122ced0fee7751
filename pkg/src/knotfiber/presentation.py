"""Wirtinger presentations, weight assignments, Fox calculus, Alexander polynomials.

Generators are the over-arc classes of a diagram (arcs merged through the
(over_in, over_out) pairing); each crossing contributes one conjugation
relator.  A weighting maps every component label to an integer; composing
generator -> t^weight with the Fox derivative matrix yields the Alexander
matrix, and the polynomial is the gcd of its maximal minors after one column
deletion.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Optional, Sequence

from .diagram import LinkDiagram
from .laurent import LaurentPoly, poly_gcd
from .linalg import PolynomialMatrixMinors, laurent_bareiss_det


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class WirtingerData:
    """Presentation data: generators, conjugation relators, optional weights.

    Relators are words in the generators, stored as tuples of signed 1-based
    generator indices.  gen_component[i] names the diagram component that
    generator i+1 belongs to; weights, once assigned, map component labels to
    the exponent their meridians receive under the homomorphism to Z.
    """

    gen_component: tuple[str, ...]
    relators: tuple[tuple[int, ...], ...]
    weights: Optional[dict[str, int]] = None

    @property
    def generator_count(self) -> int:
        return len(self.gen_component)

    @property
    def relator_count(self) -> int:
        return len(self.relators)

    def generator_weight(self, index: int) -> int:
        if self.weights is None:
            raise PresentationError("weights have not been assigned")
        return self.weights[self.gen_component[index - 1]]

    def relator_weight_sum(self, relator: tuple[int, ...]) -> int:
        if self.weights is None:
            raise PresentationError("weights have not been assigned")
        total = 0
        for letter in relator:
            w = self.generator_weight(abs(letter))
            total += w if letter > 0 else -w
        return total


def wirtinger(diagram: LinkDiagram) -> WirtingerData:
    """Wirtinger presentation of the diagram's link group (weights unset).

    At a positive crossing with over-generator u, incoming under-generator a
    and outgoing under-generator b, the relator is b = u a u^-1, stored as
    the word u a u^-1 b^-1; negative crossings conjugate by u^-1 instead.
    """
    if diagram.crossingless_circles():
        raise PresentationError(
            f"crossingless component {diagram.crossingless_circles()[0]!r}: "
            "every component needs at least one crossing")
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        root = a
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(a, a) != a:
            parent[a], a = root, parent[a]
        return root

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for c in diagram.crossings:
        union(c.over_in, c.over_out)
    roots = sorted({find(a) for arcs in diagram.components.values() for a in arcs})
    gen_index = {root: i + 1 for i, root in enumerate(roots)}
    gen_component = tuple(diagram.arc_component(root) for root in roots)

    def gen_of(arc: int) -> int:
        return gen_index[find(arc)]

    relators = []
    for c in diagram.crossings:
        u = gen_of(c.over_in)
        a = gen_of(c.under_in)
        b = gen_of(c.under_out)
        if c.sign > 0:
            relators.append((u, a, -u, -b))
        else:
            relators.append((-u, a, u, -b))
    return WirtingerData(gen_component, tuple(relators))


def assign_weights(data: WirtingerData, weights: dict[str, int]) -> WirtingerData:
    """Attach a component-label -> integer weighting to the presentation."""
    labels = set(data.gen_component)
    missing = labels - set(weights)
    if missing:
        raise PresentationError(f"missing weight for component {sorted(missing)[0]!r}")
    unknown = set(weights) - labels
    if unknown:
        raise PresentationError(f"weight given for unknown component {sorted(unknown)[0]!r}")
    return replace(data, weights=dict(weights))


def all_ones_weights(diagram: LinkDiagram) -> dict[str, int]:
    return {label: 1 for label in diagram.components}


def fox_matrix(data: WirtingerData) -> list[list[LaurentPoly]]:
    """Abelianized Fox derivative matrix: rows = relators, columns = generators."""
    if data.weights is None:
        raise PresentationError("weights have not been assigned")
    rows = []
    for relator in data.relators:
        row = [LaurentPoly.zero(1) for _ in range(data.generator_count)]
        prefix = 0  # weight of the abelianized prefix
        for letter in relator:
            g = abs(letter)
            w = data.generator_weight(g)
            if letter > 0:
                row[g - 1] = row[g - 1] + LaurentPoly.monomial(1, (prefix,), 1)
                prefix += w
            else:
                prefix -= w
                row[g - 1] = row[g - 1] - LaurentPoly.monomial(1, (prefix,), 1)
        rows.append(row)
    return rows


def alexander_poly(data: WirtingerData, deleted_column: Optional[int] = None) -> LaurentPoly:
    """One-variable Alexander polynomial: gcd of maximal minors, canonical form.

    One generator column is deleted first (by default the first generator of
    nonzero weight; deleting a zero-weight column provably yields 0, since
    the Fox identity makes the nonzero-weight columns dependent).  The zero
    polynomial is a legal output and is reported as such.
    """
    if data.weights is None:
        raise PresentationError("weights have not been assigned")
    if data.generator_count == 0:
        raise PresentationError("empty presentation")
    if all(w == 0 for w in data.weights.values()):
        raise PresentationError("all-zero weighting")
    if deleted_column is None:
        deleted_column = next(
            i + 1 for i in range(data.generator_count)
            if data.generator_weight(i + 1) != 0)
    if not 1 <= deleted_column <= data.generator_count:
        raise PresentationError(f"no generator column {deleted_column}")
    g = data.generator_count
    if g == 1:
        return LaurentPoly.one(1)
    full = fox_matrix(data)
    rows = [[row[j] for j in range(g) if j != deleted_column - 1] for row in full]
    r, m = len(rows), g - 1
    if r < m:
        return LaurentPoly.zero(1)
    engine = PolynomialMatrixMinors(rows)
    acc = LaurentPoly.zero(1)
    for dropped in combinations(range(r), r - m):
        minor = engine.minor(dropped)
        acc = poly_gcd(acc, minor)
        if acc.is_one():
            break
    return acc.normalize_units()[0] if not acc.is_zero() else acc


def alexander_poly_small(data: WirtingerData, deleted_column: Optional[int] = None) -> LaurentPoly:
    """Same contract as alexander_poly, via direct Laurent Bareiss minors.

    Only sensible for small presentations; used as an internal cross-check of
    the evaluation-interpolation engine.
    """
    if data.weights is None:
        raise PresentationError("weights have not been assigned")
    if deleted_column is None:
        deleted_column = next(
            i + 1 for i in range(data.generator_count)
            if data.generator_weight(i + 1) != 0)
    g = data.generator_count
    if g == 1:
        return LaurentPoly.one(1)
    full = fox_matrix(data)
    rows = [[row[j] for j in range(g) if j != deleted_column - 1] for row in full]
    r, m = len(rows), g - 1
    if r < m:
        return LaurentPoly.zero(1)
    acc = LaurentPoly.zero(1)
    for kept in combinations(range(r), m):
        sub = [rows[i] for i in kept]
        minor = laurent_bareiss_det(sub)
        acc = poly_gcd(acc, minor)
        if acc.is_one():
            break
    return acc.normalize_units()[0] if not acc.is_zero() else acc


def presentation_dump(data: WirtingerData) -> str:
    """Readable dump: generators with components, relators, weights."""
    lines = []
    for i, label in enumerate(data.gen_component, start=1):
        lines.append(f"generator g{i} component {label}")
    for relator in data.relators:
        word = " ".join(f"g{abs(x)}" if x > 0 else f"g{abs(x)}^-1" for x in relator)
        lines.append(f"relator {word}")
    if data.weights is not None:
        for label in sorted(data.weights):
            lines.append(f"weight {label} {data.weights[label]}")
    return "\n".join(lines) + "\n"
