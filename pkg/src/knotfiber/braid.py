"""Braid words, permutations, closures, homogeneity, and bounded conjugacy search.

Letters are nonzero signed integers: letter ``+i`` is the Artin generator
s_i (strand at position i crosses over strand i+1), ``-i`` its inverse.
Words are stored exactly as given; free reduction is always an explicit
operation so that rendered word lengths are stable.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"strand count must be >= 1, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) >= self.strands:
                raise BraidError(
                    f"letter {letter} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise BraidError("strand mismatch in concatenation")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def conjugated_by(self, g: "BraidWord") -> "BraidWord":
        """g * self * g^-1."""
        return g * self * g.inverse()

    def render(self) -> str:
        """Emit `si^k` tokens with runs of equal letters collapsed."""
        if not self.letters:
            return ""
        out: list[str] = []
        run_letter, run_len = self.letters[0], 1
        for letter in self.letters[1:]:
            if letter == run_letter:
                run_len += 1
                continue
            out.append(_render_run(run_letter, run_len))
            run_letter, run_len = letter, 1
        out.append(_render_run(run_letter, run_len))
        return " ".join(out)


def _render_run(letter: int, count: int) -> str:
    idx = abs(letter)
    exp = count if letter > 0 else -count
    return f"s{idx}" if exp == 1 else f"s{idx}^{exp}"


_TOKEN = re.compile(r"^s(?P<index>\d+)(?:\^(?P<exp>-?\d+))?$")


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated tokens `si`, `si^k`, or signed integers."""
    letters: list[int] = []
    for token in text.split():
        m = _TOKEN.match(token)
        if m:
            index = int(m.group("index"))
            exp = int(m.group("exp") or 1)
            if index < 1 or index >= strands:
                raise BraidError(f"token {token!r} out of range for {strands} strands")
            if exp == 0:
                continue
            letters.extend([index if exp > 0 else -index] * abs(exp))
            continue
        try:
            value = int(token)
        except ValueError:
            raise BraidError(f"malformed braid token {token!r}") from None
        if value == 0 or abs(value) >= strands:
            raise BraidError(f"token {token!r} out of range for {strands} strands")
        letters.append(value)
    return BraidWord(strands, tuple(letters))


def family_braid(name: str, param: int) -> BraidWord:
    """The two explicit 4-braid families: beta(n) and morton(i).

    beta(n)  = s2 s1^-1 s2^-2n s3^-1 s2 s3^-1 s2^2n s1^-2
    morton(i) = s1 s2^(2i+1) s3 s2^-2i
    """
    if param < 0:
        raise BraidError(f"family parameter must be >= 0, got {param}")
    if name == "beta":
        n = param
        letters = [2, -1] + [-2] * (2 * n) + [-3, 2, -3] + [2] * (2 * n) + [-1, -1]
        return BraidWord(4, tuple(letters))
    if name == "morton":
        i = param
        letters = [1] + [2] * (2 * i + 1) + [3] + [-2] * (2 * i)
        return BraidWord(4, tuple(letters))
    raise BraidError(f"unknown braid family {name!r}")


def braid_permutation(word: BraidWord) -> tuple[int, ...]:
    """Image of each starting position 1..n, applying transpositions left to right.

    Entry p-1 of the result is the final position of the strand that starts
    at position p; letter signs are irrelevant.
    """
    n = word.strands
    at = list(range(n + 1))  # at[q] = starting position of the strand now at q
    for letter in word.letters:
        i = abs(letter)
        at[i], at[i + 1] = at[i + 1], at[i]
    perm = [0] * n
    for q in range(1, n + 1):
        perm[at[q] - 1] = q
    return tuple(perm)


def permutation_cycles(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Cycles of a permutation given as a tuple of images of 1..n."""
    n = len(perm)
    seen = [False] * (n + 1)
    cycles: list[tuple[int, ...]] = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cycle = []
        p = start
        while not seen[p]:
            seen[p] = True
            cycle.append(p)
            p = perm[p - 1]
        cycles.append(tuple(cycle))
    return cycles


def cycle_type(word: BraidWord) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in permutation_cycles(braid_permutation(word))))


def closure_components(word: BraidWord) -> int:
    return len(permutation_cycles(braid_permutation(word)))


def exponent_sum(word: BraidWord) -> int:
    return sum(1 if letter > 0 else -1 for letter in word.letters)


def is_homogeneous(word: BraidWord) -> bool:
    """True iff every generator index that occurs, occurs with only one sign."""
    signs: dict[int, int] = {}
    for letter in word.letters:
        idx = abs(letter)
        sign = 1 if letter > 0 else -1
        if signs.setdefault(idx, sign) != sign:
            return False
    return True


def free_reduce(word: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for letter in word.letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return BraidWord(word.strands, tuple(out))


class Equality(Enum):
    EQUAL = "equal"
    NOT_EQUAL = "not-equal-by-invariant"
    UNKNOWN = "budget-exhausted"


def _rewrite_window(a: int, b: int, c: int) -> Optional[tuple[int, int, int]]:
    """Apply a braid-relation identity to a 3-letter window, if one matches."""
    i, j = abs(a), abs(b)
    if abs(i - j) != 1 or abs(c) != i:
        return None
    sa, sb, sc = a > 0, b > 0, c > 0
    if sa and sb and sc:        # s_i s_j s_i = s_j s_i s_j
        return (j, i, j)
    if not sa and not sb and not sc:
        return (-j, -i, -j)
    if sa and sb and not sc:    # s_i s_j s_i^-1 = s_j^-1 s_i s_j
        return (-j, i, j)
    if not sa and sb and sc:    # s_i^-1 s_j s_i = s_j s_i s_j^-1
        return (j, i, -j)
    if not sa and not sb and sc:  # s_i^-1 s_j^-1 s_i = s_j s_i^-1 s_j^-1
        return (j, -i, -j)
    if sa and not sb and not sc:  # s_i s_j^-1 s_i^-1 = s_j^-1 s_i^-1 s_j
        return (-j, -i, j)
    return None


def words_equal(a: BraidWord, b: BraidWord, budget: int = 20000) -> Equality:
    """Sound three-valued equality of braid words.

    NOT_EQUAL is certified by an invariant mismatch (exponent sum or
    permutation).  EQUAL is certified by rewriting a * b^-1 to the empty word
    using free reduction, far commutation, and braid-relation identities,
    within the given budget of explored words.  Anything else is UNKNOWN.
    """
    if a.strands != b.strands:
        raise BraidError("strand mismatch in equality test")
    if exponent_sum(a) != exponent_sum(b):
        return Equality.NOT_EQUAL
    if braid_permutation(a) != braid_permutation(b):
        return Equality.NOT_EQUAL
    start = free_reduce(a * b.inverse()).letters
    if not start:
        return Equality.EQUAL
    seen = {start}
    queue = deque([start])
    explored = 0
    while queue and explored < budget:
        word = queue.popleft()
        explored += 1
        for pos in range(len(word) - 1):
            x, y = word[pos], word[pos + 1]
            if abs(abs(x) - abs(y)) >= 2:
                neighbor = word[:pos] + (y, x) + word[pos + 2:]
                reduced = _reduce_tuple(neighbor)
                if not reduced:
                    return Equality.EQUAL
                if reduced not in seen:
                    seen.add(reduced)
                    queue.append(reduced)
        for pos in range(len(word) - 2):
            replacement = _rewrite_window(word[pos], word[pos + 1], word[pos + 2])
            if replacement is None:
                continue
            neighbor = word[:pos] + replacement + word[pos + 3:]
            reduced = _reduce_tuple(neighbor)
            if not reduced:
                return Equality.EQUAL
            if reduced not in seen:
                seen.add(reduced)
                queue.append(reduced)
    return Equality.UNKNOWN


def _reduce_tuple(letters: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for letter in letters:
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _conjugator_candidates(strands: int, max_len: int) -> Iterator[BraidWord]:
    """Freely-reduced candidate words in length then lexicographic order."""
    gens = [i for i in range(1, strands)] + [-i for i in range(1, strands)]
    gens.sort()
    yield BraidWord(strands)
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        new_frontier = []
        for word in frontier:
            for g in gens:
                if word and word[-1] == -g:
                    continue
                candidate = word + (g,)
                new_frontier.append(candidate)
                yield BraidWord(strands, candidate)
        frontier = new_frontier


def conjugate_search(a: BraidWord, b: BraidWord, max_len: int,
                     budget: int = 20000) -> Optional[BraidWord]:
    """Search for g with |g| <= max_len and g a g^-1 = b.

    Soundness: a returned conjugator has been certified by the word-problem
    rewriting test.  Absence of a result is NOT a proof of non-conjugacy.
    """
    if a.strands != b.strands:
        raise BraidError("strand mismatch in conjugacy search")
    if max_len < 0:
        raise BraidError("max_len must be >= 0")
    if exponent_sum(a) != exponent_sum(b):
        return None
    if cycle_type(a) != cycle_type(b):
        return None
    for g in _conjugator_candidates(a.strands, max_len):
        if words_equal(a.conjugated_by(g), b, budget=budget) is Equality.EQUAL:
            return g
    return None
