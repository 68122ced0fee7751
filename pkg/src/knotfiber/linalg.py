"""Exact determinant machinery for integer and Laurent-polynomial matrices.

Two routes are provided.  Small matrices go through fraction-free Bareiss
elimination directly over Z or Z[t].  Large Alexander-matrix minors are
computed by evaluating the polynomial matrix at integer points, taking exact
integer determinants (CRT over word-sized primes, with a Hadamard bound
guaranteeing reconstruction), and interpolating the minor polynomial back.
Everything is deterministic and exact; no floating point is involved.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import numpy as np

from .laurent import LaurentPoly


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_pool() -> list[int]:
    pool = []
    candidate = (1 << 25) - 1
    while len(pool) < 64:
        if _is_prime(candidate):
            pool.append(candidate)
        candidate -= 2
    return pool


_PRIMES = _prime_pool()


def det_int_bareiss(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix, fraction-free."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _det_mod_p(matrix: np.ndarray, p: int) -> int:
    m = np.mod(matrix, p).astype(np.int64)
    n = m.shape[0]
    det = 1
    sign = 1
    for k in range(n):
        col = m[k:, k]
        nonzero = np.nonzero(col)[0]
        if nonzero.size == 0:
            return 0
        pivot_row = k + int(nonzero[0])
        if pivot_row != k:
            m[[k, pivot_row]] = m[[pivot_row, k]]
            sign = -sign
        pivot = int(m[k, k])
        det = det * pivot % p
        if k + 1 < n:
            inv = pow(pivot, p - 2, p)
            factors = (m[k + 1:, k] * inv) % p
            m[k + 1:, k:] = (m[k + 1:, k:] - factors[:, None] * m[k, k:]) % p
    return det * sign % p


def _hadamard_bound(rows: list[list[int]]) -> int:
    bound = 1
    for row in rows:
        norm_sq = sum(v * v for v in row)
        bound *= isqrt(norm_sq) + 1
    return bound


def det_int(rows: list[list[int]]) -> int:
    """Exact integer determinant; CRT-modular for large matrices."""
    n = len(rows)
    if n <= 16:
        return det_int_bareiss(rows)
    bound = 2 * _hadamard_bound(rows) + 1
    matrix = np.array(rows, dtype=object)
    residues = []
    primes = []
    prod = 1
    for p in _PRIMES:
        residues.append(_det_mod_p(matrix, p))
        primes.append(p)
        prod *= p
        if prod > bound:
            break
    else:
        raise ArithmeticError("prime pool exhausted; matrix too large")
    # CRT combine, symmetric range
    x = 0
    m = 1
    for r, p in zip(residues, primes):
        # solve x' = x mod m, x' = r mod p
        t = (r - x) * pow(m % p, p - 2, p) % p
        x = x + m * t
        m *= p
    x %= m
    if x > m // 2:
        x -= m
    return x


def interpolate_integer_poly(points: list[int], values: list[int]) -> list[int]:
    """Coefficients (low to high) of the unique interpolating polynomial.

    Newton divided differences over exact rationals; the result must have
    integer coefficients or the inputs were inconsistent.
    """
    n = len(points)
    coeffs = [Fraction(v) for v in values]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (points[i] - points[i - level])
    # expand Newton form
    poly = [Fraction(0)] * n
    acc = [Fraction(1)] + [Fraction(0)] * (n - 1)  # running product basis
    degree = 0
    for level in range(n):
        c = coeffs[level]
        for k in range(degree + 1):
            poly[k] += c * acc[k]
        if level < n - 1:
            # acc *= (x - points[level])
            new_acc = [Fraction(0)] * n
            for k in range(degree + 1):
                new_acc[k + 1] += acc[k]
                new_acc[k] -= acc[k] * points[level]
            acc = new_acc
            degree += 1
    out = []
    for c in poly:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced non-integer coefficients")
        out.append(int(c))
    while out and out[-1] == 0:
        out.pop()
    return out


def laurent_bareiss_det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant over Z[t, t^-1] by fraction-free elimination.

    Intended for small matrices (reduced Burau, cross-checks).  Rows are
    first shifted into Z[t]; the result is therefore only defined up to a
    unit, which is all the callers need.
    """
    from .laurent import poly_div_exact

    n = len(rows)
    if n == 0:
        return LaurentPoly.one(1)
    work: list[list[LaurentPoly]] = []
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
        lo = min((p.span(0)[0] for p in row if not p.is_zero()), default=0)
        work.append([p.shift((-lo,)) for p in row])
    sign = 1
    prev = LaurentPoly.one(1)
    for k in range(n - 1):
        if work[k][k].is_zero():
            for i in range(k + 1, n):
                if not work[i][k].is_zero():
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(1)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                numer = work[k][k] * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = poly_div_exact(numer, prev)
        prev = work[k][k]
    result = work[n - 1][n - 1]
    return result if sign > 0 else -result


class PolynomialMatrixMinors:
    """All maximal minors of a one-variable polynomial matrix, exactly.

    The matrix has r rows and m columns with r >= m; the maximal minors are
    indexed by the set of m rows kept.  Entries are shifted row-wise into
    Z[t] first (each minor therefore absorbs a harmless unit).
    """

    def __init__(self, rows: list[list[LaurentPoly]]):
        self.r = len(rows)
        self.m = len(rows[0]) if rows else 0
        dense_rows: list[list[list[int]]] = []
        row_degrees: list[int] = []
        for row in rows:
            lo = min((p.span(0)[0] for p in row if not p.is_zero()), default=0)
            dense = []
            maxdeg = 0
            for p in row:
                shifted = p.shift((-lo,))
                coeffs: list[int] = []
                if not shifted.is_zero():
                    _, hi = shifted.span(0)
                    coeffs = [0] * (hi + 1)
                    for (e,), c in shifted.terms.items():
                        coeffs[e] = c
                    maxdeg = max(maxdeg, hi)
                dense.append(coeffs)
            dense_rows.append(dense)
            row_degrees.append(maxdeg)
        self.dense_rows = dense_rows
        self.degree_bound = sum(row_degrees)
        self.points = self._sample_points(self.degree_bound + 1)
        # evaluate the full matrix once per sample point
        self.evaluated: list[list[list[int]]] = []
        for t in self.points:
            powers = [1]
            for _ in range(max((len(c) for row in dense_rows for c in row), default=1)):
                powers.append(powers[-1] * t)
            mat = [[sum(c * powers[k] for k, c in enumerate(entry)) for entry in row]
                   for row in dense_rows]
            self.evaluated.append(mat)

    @staticmethod
    def _sample_points(count: int) -> list[int]:
        points = [0]
        v = 1
        while len(points) < count:
            points.append(v)
            if len(points) < count:
                points.append(-v)
            v += 1
        return points[:count]

    def minor(self, dropped_rows: tuple[int, ...]) -> LaurentPoly:
        """Determinant of the matrix with the given rows removed."""
        keep = [i for i in range(self.r) if i not in dropped_rows]
        if len(keep) != self.m:
            raise ValueError("minor selection is not square")
        values = []
        for mat in self.evaluated:
            sub = [mat[i] for i in keep]
            values.append(det_int(sub))
        coeffs = interpolate_integer_poly(self.points, values)
        return LaurentPoly.from_terms(1, (((k,), c) for k, c in enumerate(coeffs) if c))
