"""Exact sparse Laurent polynomials over the integers, in one or two variables.

The one-variable ring Z[t, t^-1] carries Alexander polynomials; the
two-variable ring Z[x, x^-1, y, y^-1] carries HOMFLY-PT polynomials.
Coefficients are arbitrary-precision Python ints, so arithmetic is exact by
construction.  Values are immutable once built and safe to share.
"""

from __future__ import annotations

import re
from typing import Callable, Iterable, Iterator

VAR_NAMES = {1: ("t",), 2: ("x", "y")}


class LaurentError(ValueError):
    pass


class LaurentPoly:
    """Sparse Laurent polynomial: a map from exponent vectors to nonzero ints."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: dict[tuple[int, ...], int], _checked: bool = False):
        if num_vars not in (1, 2):
            raise LaurentError(f"num_vars must be 1 or 2, got {num_vars}")
        if not _checked:
            clean: dict[tuple[int, ...], int] = {}
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != num_vars:
                    raise LaurentError(f"exponent vector {exps} has wrong length for {num_vars} variable(s)")
                if coeff:
                    clean[exps] = clean.get(exps, 0) + coeff
            terms = {e: c for e, c in clean.items() if c}
        self.num_vars = num_vars
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int) -> "LaurentPoly":
        return cls(num_vars, {}, _checked=True)

    @classmethod
    def one(cls, num_vars: int) -> "LaurentPoly":
        return cls(num_vars, {(0,) * num_vars: 1}, _checked=True)

    @classmethod
    def const(cls, num_vars: int, value: int) -> "LaurentPoly":
        if value == 0:
            return cls.zero(num_vars)
        return cls(num_vars, {(0,) * num_vars: value}, _checked=True)

    @classmethod
    def monomial(cls, num_vars: int, exps: tuple[int, ...], coeff: int = 1) -> "LaurentPoly":
        exps = tuple(exps)
        if len(exps) != num_vars:
            raise LaurentError(f"exponent vector {exps} has wrong length for {num_vars} variable(s)")
        if coeff == 0:
            return cls.zero(num_vars)
        return cls(num_vars, {exps: coeff}, _checked=True)

    @classmethod
    def var(cls, num_vars: int, index: int = 0, power: int = 1) -> "LaurentPoly":
        exps = [0] * num_vars
        exps[index] = power
        return cls.monomial(num_vars, tuple(exps))

    @classmethod
    def from_terms(cls, num_vars: int, items: Iterable[tuple[tuple[int, ...], int]]) -> "LaurentPoly":
        acc: dict[tuple[int, ...], int] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise LaurentError(f"exponent vector {exps} has wrong length for {num_vars} variable(s)")
            val = acc.get(exps, 0) + coeff
            if val:
                acc[exps] = val
            else:
                acc.pop(exps, None)
        return cls(num_vars, acc, _checked=True)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.num_vars: 1}

    def coeff(self, exps: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exps), 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.num_vars, frozenset(self.terms.items())))

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return iter(sorted(self.terms.items()))

    # -- ring operations ---------------------------------------------------

    def _require_same_ring(self, other: "LaurentPoly") -> None:
        if self.num_vars != other.num_vars:
            raise LaurentError(
                f"variable-count mismatch: {self.num_vars} vs {other.num_vars}")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._require_same_ring(other)
        acc = dict(self.terms)
        for exps, coeff in other.terms.items():
            val = acc.get(exps, 0) + coeff
            if val:
                acc[exps] = val
            else:
                acc.pop(exps, None)
        return LaurentPoly(self.num_vars, acc, _checked=True)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.num_vars, {e: -c for e, c in self.terms.items()}, _checked=True)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._require_same_ring(other)
        if not self.terms or not other.terms:
            return LaurentPoly.zero(self.num_vars)
        acc: dict[tuple[int, ...], int] = {}
        n = self.num_vars
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(e1[k] + e2[k] for k in range(n))
                val = acc.get(exps, 0) + c1 * c2
                if val:
                    acc[exps] = val
                else:
                    acc.pop(exps, None)
        return LaurentPoly(self.num_vars, acc, _checked=True)

    def scale(self, k: int) -> "LaurentPoly":
        if k == 0:
            return LaurentPoly.zero(self.num_vars)
        return LaurentPoly(self.num_vars, {e: k * c for e, c in self.terms.items()}, _checked=True)

    def shift(self, exps: tuple[int, ...]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        exps = tuple(exps)
        n = self.num_vars
        return LaurentPoly(
            self.num_vars,
            {tuple(e[k] + exps[k] for k in range(n)): c for e, c in self.terms.items()},
            _checked=True,
        )

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise LaurentError("negative powers of non-monomials are not defined; use shift()")
        result = LaurentPoly.one(self.num_vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def map_terms(self, fn: Callable[[tuple[int, ...], int], tuple[tuple[int, ...], int]]) -> "LaurentPoly":
        """Rebuild the polynomial by applying fn to every (exps, coeff) pair."""
        return LaurentPoly.from_terms(self.num_vars, (fn(e, c) for e, c in self.terms.items()))

    # -- spans and normal forms --------------------------------------------

    def span(self, var_index: int = 0) -> tuple[int, int]:
        """Smallest and largest exponent of the chosen variable over all terms."""
        if not self.terms:
            raise LaurentError("span of the zero polynomial is undefined")
        if not 0 <= var_index < self.num_vars:
            raise LaurentError(f"variable index {var_index} out of range")
        exps = [e[var_index] for e in self.terms]
        return min(exps), max(exps)

    def normalize_units(self) -> tuple["LaurentPoly", "LaurentPoly"]:
        """Factor a one-variable polynomial as unit * canonical.

        The canonical form has lowest exponent 0 and positive leading
        (highest-degree) coefficient; the unit is a signed monomial.  Two
        Alexander polynomials agree up to units exactly when their canonical
        forms are equal.  The zero polynomial canonicalizes to itself with
        unit +1.
        """
        if self.num_vars != 1:
            raise LaurentError("unit normalization is defined for one-variable polynomials")
        if not self.terms:
            return self, LaurentPoly.one(1)
        lo, hi = self.span(0)
        lead = self.terms[(hi,)]
        sign = 1 if lead > 0 else -1
        canonical = LaurentPoly(
            1, {(e[0] - lo,): sign * c for e, c in self.terms.items()}, _checked=True)
        unit = LaurentPoly.monomial(1, (lo,), sign)
        return canonical, unit

    def is_monic_up_to_units(self) -> bool:
        """True when both extreme coefficients of the canonical form are +-1."""
        if self.num_vars != 1:
            raise LaurentError("monicity is defined for one-variable polynomials")
        if not self.terms:
            return False
        lo, hi = self.span(0)
        return abs(self.terms[(lo,)]) == 1 and abs(self.terms[(hi,)]) == 1

    # -- rendering and parsing ---------------------------------------------

    def render(self) -> str:
        """Human-readable form, terms in ascending lexicographic exponent order."""
        if not self.terms:
            return "0"
        names = VAR_NAMES[self.num_vars]
        pieces: list[str] = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e != 0
            )
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.num_vars}, {self.render()!r})"


_TERM_PART = re.compile(r"^(?P<name>[A-Za-z]+)(?:\^(?P<exp>-?\d+))?$")


def parse_poly(text: str, num_vars: int) -> LaurentPoly:
    """Parse the render() grammar back into a polynomial."""
    names = VAR_NAMES[num_vars]
    compact = text.replace(" ", "")
    if not compact:
        raise LaurentError("empty polynomial text")
    if compact == "0":
        return LaurentPoly.zero(num_vars)
    # Split into signed chunks at +/- signs that do not follow '^'.
    chunks: list[str] = []
    start = 0
    for i, ch in enumerate(compact):
        if ch in "+-" and i > 0 and compact[i - 1] != "^":
            chunks.append(compact[start:i])
            start = i
    chunks.append(compact[start:])
    terms: list[tuple[tuple[int, ...], int]] = []
    for chunk in chunks:
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        if not chunk:
            raise LaurentError(f"malformed term in {text!r}")
        coeff = sign
        exps = [0] * num_vars
        for part in chunk.split("*"):
            if not part:
                raise LaurentError(f"malformed term {chunk!r}")
            if part.isdigit():
                coeff *= int(part)
                continue
            m = _TERM_PART.match(part)
            if not m or m.group("name") not in names:
                raise LaurentError(f"unknown token {part!r} in {text!r}")
            idx = names.index(m.group("name"))
            exps[idx] += int(m.group("exp") or 1)
        terms.append((tuple(exps), coeff))
    return LaurentPoly.from_terms(num_vars, terms)


# -- dense one-variable helpers (used by gcd and exact division) ------------


def _to_dense(p: LaurentPoly) -> tuple[list[int], int]:
    """One-variable Laurent -> (coefficient list low-to-high, lowest exponent)."""
    if p.num_vars != 1:
        raise LaurentError("dense form is one-variable only")
    if not p.terms:
        return [], 0
    lo, hi = p.span(0)
    coeffs = [0] * (hi - lo + 1)
    for (e,), c in p.terms.items():
        coeffs[e - lo] = c
    return coeffs, lo


def _from_dense(coeffs: list[int], shift: int = 0) -> LaurentPoly:
    return LaurentPoly.from_terms(1, (((i + shift,), c) for i, c in enumerate(coeffs) if c))


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _content(coeffs: list[int]) -> int:
    from math import gcd
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    return g


def _primitive(coeffs: list[int]) -> list[int]:
    g = _content(coeffs)
    if g in (0, 1):
        return list(coeffs)
    return [c // g for c in coeffs]


def _dense_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return _trim(out)


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder prem(a, b) over Z; b nonzero."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        da = len(a) - 1
        # scale by lb so the leading term cancels over Z
        a = [c * lb for c in a]
        q = a[-1] // lb
        for k in range(db + 1):
            a[da - db + k] -= q * b[k]
        a = _trim(a)
    return a


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """GCD in Z[t, t^-1], returned in canonical unit-normalized form.

    Uses the primitive polynomial remainder sequence; the content (integer)
    gcd is carried separately so coefficient growth stays bounded.
    """
    if p.num_vars != 1 or q.num_vars != 1:
        raise LaurentError("poly_gcd is one-variable only")
    if p.is_zero():
        return q.normalize_units()[0]
    if q.is_zero():
        return p.normalize_units()[0]
    a, _ = _to_dense(p)
    b, _ = _to_dense(q)
    from math import gcd as igcd
    content = igcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    result = [c * content for c in a]
    return _from_dense(result).normalize_units()[0]


def poly_div_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact division in Z[t, t^-1]; raises if q does not divide p."""
    if p.num_vars != 1 or q.num_vars != 1:
        raise LaurentError("poly_div_exact is one-variable only")
    if q.is_zero():
        raise LaurentError("division by zero polynomial")
    if p.is_zero():
        return p
    a, alo = _to_dense(p)
    b, blo = _to_dense(q)
    quot = [0] * (len(a) - len(b) + 1)
    if len(a) < len(b):
        raise LaurentError("inexact Laurent division")
    lb = b[-1]
    rem = list(a)
    for i in range(len(a) - len(b), -1, -1):
        lead = rem[i + len(b) - 1]
        if lead % lb != 0:
            raise LaurentError("inexact Laurent division")
        qi = lead // lb
        quot[i] = qi
        if qi:
            for k in range(len(b)):
                rem[i + k] -= qi * b[k]
    if any(rem):
        raise LaurentError("inexact Laurent division")
    return _from_dense(quot, alo - blo)
