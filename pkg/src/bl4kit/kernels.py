"""Grid evaluation of the binary-Lie and Malcev defects.

Both identities are homogeneous of degree three in the structure constants,
so the constants are scaled to integers first. Two interchangeable backends
scan the grid in the same lexicographic order and report the first grid
index with a nonzero defect (or -1):

* ``numba``: an ``@njit`` int64 loop, used when an a-priori bound shows
  int64 cannot overflow;
* ``numpy``: a vectorised pass over the whole grid, int64 under the same
  bound and Python-int object arrays otherwise.

Set ``BL4KIT_DISABLE_NUMBA=1`` to force the numpy path.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

import numpy as np

BINARY_LIE_GRID = ((0, 1, 2),) * 8
MALCEV_GRID = ((0, 1, 2),) * 4 + ((0, 1),) * 8

# int64 is safe while (bound factor) * S**3 stays below this.
_INT64_LIMIT = 2**62

try:  # pragma: no cover - exercised implicitly when numba is present
    if os.environ.get("BL4KIT_DISABLE_NUMBA", "") not in ("", "0"):
        raise ImportError("numba disabled by BL4KIT_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if len(args) == 1 and callable(args[0]):
            return args[0]
        return wrap


def integer_constants(c: Sequence) -> list:
    """Scale a (4,4,4) Fraction tensor by the lcm of its denominators."""
    flat = [Fraction(x) for plane in c for row in plane for x in row]
    den = 1
    for x in flat:
        den = lcm(den, x.denominator)
    n = len(c)
    return [[[int(Fraction(c[i][j][k]) * den) for k in range(n)] for j in range(n)] for i in range(n)]


def _row_mass(ci: list) -> int:
    n = len(ci)
    return max(sum(abs(ci[i][j][k]) for i in range(n) for j in range(n)) for k in range(n))


def fits_int64(ci: list, kind: str) -> bool:
    s = _row_mass(ci)
    factor = 48 if kind == "binary_lie" else 16
    return factor * s**3 < _INT64_LIMIT


# --------------------------------------------------------------------------
# numba kernels


@njit(cache=True)
def _prod_nb(c, u, v, out):
    for k in range(4):
        acc = 0
        for i in range(4):
            if u[i] == 0:
                continue
            for j in range(4):
                if v[j] != 0 and c[i, j, k] != 0:
                    acc += u[i] * v[j] * c[i, j, k]
        out[k] = acc


@njit(cache=True)
def _binary_lie_scan_nb(c):
    x = np.zeros(4, np.int64)
    y = np.zeros(4, np.int64)
    xy = np.zeros(4, np.int64)
    t1 = np.zeros(4, np.int64)
    t2 = np.zeros(4, np.int64)
    d1 = np.zeros(4, np.int64)
    d2 = np.zeros(4, np.int64)
    for n in range(6561):
        rem = n
        for p in range(7, -1, -1):
            digit = rem % 3
            rem //= 3
            if p < 4:
                x[p] = digit
            else:
                y[p - 4] = digit
        _prod_nb(c, x, y, xy)
        # (xy . x) y + (y . xy) x
        _prod_nb(c, xy, x, t1)
        _prod_nb(c, t1, y, d1)
        _prod_nb(c, y, xy, t2)
        _prod_nb(c, t2, x, d2)
        for k in range(4):
            if d1[k] + d2[k] != 0:
                return n
    return -1


@njit(cache=True)
def _malcev_scan_nb(c):
    x = np.zeros(4, np.int64)
    y = np.zeros(4, np.int64)
    z = np.zeros(4, np.int64)
    xy = np.zeros(4, np.int64)
    xz = np.zeros(4, np.int64)
    yz = np.zeros(4, np.int64)
    zx = np.zeros(4, np.int64)
    t = np.zeros(4, np.int64)
    lhs = np.zeros(4, np.int64)
    r1 = np.zeros(4, np.int64)
    r2 = np.zeros(4, np.int64)
    r3 = np.zeros(4, np.int64)
    for n in range(81 * 256):
        rem = n
        for p in range(11, -1, -1):
            if p < 4:
                digit = rem % 3
                rem //= 3
                x[p] = digit
            else:
                digit = rem % 2
                rem //= 2
                if p < 8:
                    y[p - 4] = digit
                else:
                    z[p - 8] = digit
        _prod_nb(c, x, y, xy)
        _prod_nb(c, x, z, xz)
        _prod_nb(c, y, z, yz)
        _prod_nb(c, z, x, zx)
        _prod_nb(c, xy, xz, lhs)
        _prod_nb(c, xy, z, t)
        _prod_nb(c, t, x, r1)
        _prod_nb(c, yz, x, t)
        _prod_nb(c, t, x, r2)
        _prod_nb(c, zx, x, t)
        _prod_nb(c, t, y, r3)
        for k in range(4):
            if lhs[k] - r1[k] - r2[k] - r3[k] != 0:
                return n
    return -1


# --------------------------------------------------------------------------
# numpy kernels


@lru_cache(maxsize=None)
def _grid(levels: tuple) -> np.ndarray:
    return np.array(list(itertools.product(*levels)), dtype=np.int64)


def _prod_np(pairs, u, v):
    out = np.zeros_like(u)
    for i, j, ck in pairs:
        uv = u[:, i] * v[:, j]
        for k, coef in ck:
            out[:, k] += uv * coef
    return out


def _pairs(ci: list):
    pairs = []
    for i in range(4):
        for j in range(4):
            ck = [(k, ci[i][j][k]) for k in range(4) if ci[i][j][k] != 0]
            if ck:
                pairs.append((i, j, ck))
    return pairs


def _first_nonzero(defect: np.ndarray) -> int:
    hits = np.flatnonzero((defect != 0).any(axis=1))
    return int(hits[0]) if hits.size else -1


def _binary_lie_scan_np(ci: list, dtype) -> int:
    g = _grid(BINARY_LIE_GRID).astype(dtype)
    x, y = g[:, :4], g[:, 4:]
    pairs = _pairs(ci)
    xy = _prod_np(pairs, x, y)
    d = _prod_np(pairs, _prod_np(pairs, xy, x), y) + _prod_np(pairs, _prod_np(pairs, y, xy), x)
    return _first_nonzero(d)


def _malcev_scan_np(ci: list, dtype) -> int:
    g = _grid(MALCEV_GRID).astype(dtype)
    x, y, z = g[:, :4], g[:, 4:8], g[:, 8:]
    pairs = _pairs(ci)
    xy = _prod_np(pairs, x, y)
    lhs = _prod_np(pairs, xy, _prod_np(pairs, x, z))
    r1 = _prod_np(pairs, _prod_np(pairs, xy, z), x)
    r2 = _prod_np(pairs, _prod_np(pairs, _prod_np(pairs, y, z), x), x)
    r3 = _prod_np(pairs, _prod_np(pairs, _prod_np(pairs, z, x), x), y)
    return _first_nonzero(lhs - r1 - r2 - r3)


# --------------------------------------------------------------------------
# dispatch


def scan(kind: str, c: Sequence, backend: str | None = None) -> int:
    """First failing grid index for ``kind`` in {"binary_lie", "malcev"}, or -1.

    ``backend`` may be ``"numba"``, ``"numpy"`` or None (automatic).
    """
    if kind not in ("binary_lie", "malcev"):
        raise ValueError(f"unknown identity {kind!r}")
    ci = integer_constants(c)
    safe = fits_int64(ci, kind)
    if backend is None:
        backend = "numba" if (HAVE_NUMBA and safe) else "numpy"
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable")
        if not safe:
            raise OverflowError("constants too large for the int64 kernel")
        arr = np.array(ci, dtype=np.int64)
        return int(_binary_lie_scan_nb(arr) if kind == "binary_lie" else _malcev_scan_nb(arr))
    if backend == "numpy":
        dtype = np.int64 if safe else object
        if dtype is object:
            ci = [[[int(v) for v in row] for row in plane] for plane in ci]
        return _binary_lie_scan_np(ci, dtype) if kind == "binary_lie" else _malcev_scan_np(ci, dtype)
    raise ValueError(f"unknown backend {backend!r}")


def grid_point(kind: str, index: int) -> tuple:
    """Decode a grid index into its vectors ((x, y) or (x, y, z))."""
    levels = BINARY_LIE_GRID if kind == "binary_lie" else MALCEV_GRID
    coords = _grid(levels)[index]
    vs = tuple(Fraction(int(v)) for v in coords)
    return tuple(vs[i : i + 4] for i in range(0, len(vs), 4))
