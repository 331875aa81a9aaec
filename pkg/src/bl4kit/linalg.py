"""Exact rational vectors and matrices.

Vectors are tuples of :class:`fractions.Fraction`; matrices are tuples of
row tuples. Everything is immutable and every routine is exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Vec = Tuple[Fraction, ...]
Mat = Tuple[Vec, ...]
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def Q(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strict ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(entries: Iterable[RationalLike]) -> Vec:
    return tuple(Q(e) for e in entries)


def mat(rows: Iterable[Iterable[RationalLike]]) -> Mat:
    out = tuple(vec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def zero_vec(n: int) -> Vec:
    return (Fraction(0),) * n


def basis_vec(n: int, i: int) -> Vec:
    return tuple(Fraction(int(k == i)) for k in range(n))


def identity(n: int) -> Mat:
    return tuple(basis_vec(n, i) for i in range(n))


def diag(*entries: RationalLike) -> Mat:
    n = len(entries)
    return tuple(tuple(Q(entries[i]) if i == j else Fraction(0) for j in range(n)) for i in range(n))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def scale(s: RationalLike, v: Sequence[Fraction]) -> Vec:
    s = Q(s)
    return tuple(s * a for a in v)


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def transpose(m: Mat) -> Mat:
    return tuple(zip(*m))


def column(m: Mat, j: int) -> Vec:
    return tuple(row[j] for row in m)


def from_columns(cols: Sequence[Sequence[Fraction]]) -> Mat:
    return tuple(tuple(c[i] for c in cols) for i in range(len(cols[0])))


def mat_vec(m: Mat, v: Sequence[Fraction]) -> Vec:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt) for row in a)


def mat_prod(*ms: Mat) -> Mat:
    out = ms[0]
    for m in ms[1:]:
        out = mat_mul(out, m)
    return out


def det(m: Mat) -> Fraction:
    n = len(m)
    if n == 1:
        return Fraction(m[0][0])
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    rows = [list(r) for r in m]
    sign = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        p = rows[col][col]
        for r in range(col + 1, n):
            f = rows[r][col] / p
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    out = sign
    for i in range(n):
        out *= rows[i][i]
    return out


def inverse(m: Mat) -> Mat:
    n = len(m)
    aug = [list(m[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def rref(rows: Sequence[Sequence[Fraction]]) -> Tuple[Mat, Tuple[int, ...]]:
    """Reduced row echelon form (zero rows dropped) and the pivot columns."""
    work = [list(r) for r in rows if not is_zero(r)]
    if not work:
        return (), ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        p = work[r][col]
        work[r] = [x / p for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


def kernel(m: Mat) -> Mat:
    """Echelon basis of the right null space {v : m v = 0}."""
    ncols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return rref(basis)[0]


def solve(cols: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> Vec | None:
    """Coefficients c with sum c_i cols[i] == target, or None if inconsistent.

    ``cols`` must be linearly independent.
    """
    n = len(cols)
    aug = [tuple(c[i] for c in cols) + (target[i],) for i in range(len(target))]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    out = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        out[p] = row[n]
    return tuple(out)


def rational_sqrt(q: Fraction) -> Fraction | None:
    from math import isqrt

    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def format_matrix(m: Mat) -> list:
    return [[format_rational(x) for x in row] for row in m]


def parse_matrix(rows: Sequence[Sequence[str]], n: int | None = None) -> Mat:
    if not isinstance(rows, (list, tuple)) or not rows:
        raise ValueError("matrix must be a non-empty list of rows")
    out = []
    for r in rows:
        if not isinstance(r, (list, tuple)):
            raise ValueError("matrix rows must be lists")
        out.append(tuple(_parse_entry(x) for x in r))
    if any(len(r) != len(out) for r in out):
        raise ValueError("matrix must be square")
    if n is not None and len(out) != n:
        raise ValueError(f"expected a {n}x{n} matrix")
    return tuple(out)


def _parse_entry(x) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise ValueError(f"matrix entries must be 'p/q' strings, got {x!r}")
