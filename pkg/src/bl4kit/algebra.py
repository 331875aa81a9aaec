"""Anti-commutative algebras given by structure constants.

The structure constants ``c[i][j][k]`` encode ``e_i e_j = sum_k c[i][j][k] e_k``.
Matrices act on coordinate columns; a matrix ``M`` is read as the basis whose
vectors are the columns of ``M``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Tuple

from . import kernels
from .linalg import (
    Mat,
    Vec,
    basis_vec,
    column,
    det,
    inverse,
    is_zero,
    mat_vec,
    rref,
    vec,
    zero_vec,
)


@dataclass(frozen=True)
class StructureConstants:
    """Dense antisymmetric structure constants of an anti-commutative algebra."""

    dim: int
    c: Tuple[Tuple[Tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise ValueError("dimension must be positive")
        if len(self.c) != n or any(len(p) != n or any(len(r) != n for r in p) for p in self.c):
            raise ValueError("structure constants must have shape (dim, dim, dim)")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.c[i][j][k] != -self.c[j][i][k]:
                        raise ValueError(f"constants are not antisymmetric at ({i},{j},{k})")

    @classmethod
    def from_products(cls, products: Mapping[Tuple[int, int], Iterable], dim: int = 4) -> "StructureConstants":
        """Build from ``{(i, j): coefficient vector of e_i e_j}`` for i < j."""
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in products.items():
            if not 0 <= i < j < dim:
                raise ValueError(f"product index ({i},{j}) must satisfy 0 <= i < j < {dim}")
            v = vec(v)
            if len(v) != dim:
                raise ValueError("product vector has wrong length")
            for k in range(dim):
                c[i][j][k] = v[k]
                c[j][i][k] = -v[k]
        return cls(dim, _freeze(c))

    @classmethod
    def zero(cls, dim: int = 4) -> "StructureConstants":
        return cls.from_products({}, dim)

    @cached_property
    def nonzero(self) -> Tuple[Tuple[int, int, int, Fraction], ...]:
        n = self.dim
        return tuple(
            (i, j, k, self.c[i][j][k])
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if self.c[i][j][k] != 0
        )

    def product(self, i: int, j: int) -> Vec:
        return tuple(self.c[i][j])

    def products(self) -> dict:
        """Nonzero basis products ``{(i, j): vector}`` with i < j."""
        return {
            (i, j): self.product(i, j)
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
            if not is_zero(self.product(i, j))
        }


def _freeze(c) -> tuple:
    return tuple(tuple(tuple(r) for r in plane) for plane in c)


@dataclass(frozen=True)
class Subspace:
    """A subspace stored by its reduced row echelon basis."""

    ambient: int
    basis: Tuple[Vec, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Fraction]], ambient: int = 4) -> "Subspace":
        rows = [vec(v) for v in vectors]
        return cls(ambient, rref(rows)[0] if rows else ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        v = vec(v)
        return len(rref(self.basis + (v,))[0]) == self.dim

    def contains_space(self, other: "Subspace") -> bool:
        return all(v in self for v in other.basis)


def _check_dim(sc: StructureConstants, *vs) -> None:
    for v in vs:
        if len(v) != sc.dim:
            raise ValueError(f"vector of length {len(v)} does not match algebra dimension {sc.dim}")


def multiply(sc: StructureConstants, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vec:
    _check_dim(sc, x, y)
    out = [Fraction(0)] * sc.dim
    for i, j, k, c in sc.nonzero:
        xi = x[i]
        if xi:
            yj = y[j]
            if yj:
                out[k] += xi * yj * c
    return tuple(out)


def jacobian(sc: StructureConstants, x, y, z) -> Vec:
    """``xy.z + zx.y + yz.x``."""
    _check_dim(sc, x, y, z)
    a = multiply(sc, multiply(sc, x, y), z)
    b = multiply(sc, multiply(sc, z, x), y)
    c = multiply(sc, multiply(sc, y, z), x)
    return tuple(p + q + r for p, q, r in zip(a, b, c))


def binary_lie_defect(sc: StructureConstants, x, y) -> Vec:
    """``J(x, y, xy)``; vanishes identically exactly on binary Lie algebras."""
    return jacobian(sc, x, y, multiply(sc, x, y))


def malcev_defect(sc: StructureConstants, x, y, z) -> Vec:
    """``xy.xz - (xy.z)x - (yz.x)x - (zx.x)y``."""
    _check_dim(sc, x, y, z)
    m = lambda u, v: multiply(sc, u, v)  # noqa: E731
    xy = m(x, y)
    lhs = m(xy, m(x, z))
    r1 = m(m(xy, z), x)
    r2 = m(m(m(y, z), x), x)
    r3 = m(m(m(z, x), x), y)
    return tuple(a - b - c - d for a, b, c, d in zip(lhs, r1, r2, r3))


def is_lie(sc: StructureConstants) -> bool:
    n = sc.dim
    e = [basis_vec(n, i) for i in range(n)]
    return all(
        is_zero(jacobian(sc, e[i], e[j], e[k]))
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )


def _require_dim4(sc: StructureConstants) -> None:
    if sc.dim != 4:
        raise ValueError(f"identity tests are implemented for dimension 4, got {sc.dim}")


def binary_lie_witness(sc: StructureConstants, backend: str | None = None) -> Tuple[Vec, Vec] | None:
    """A grid pair (x, y) with ``J(x, y, xy) != 0``, or None if the identity holds.

    The defect has degree at most 2 in every coordinate of x and y, so
    vanishing on {0,1,2}^8 implies vanishing everywhere in characteristic 0.
    """
    _require_dim4(sc)
    idx = kernels.scan("binary_lie", sc.c, backend)
    if idx < 0:
        return None
    return kernels.grid_point("binary_lie", idx)


def is_binary_lie(sc: StructureConstants, backend: str | None = None) -> bool:
    return binary_lie_witness(sc, backend) is None


def malcev_witness(sc: StructureConstants, backend: str | None = None):
    """A grid triple violating the Malcev identity, or None.

    Grid: x in {0,1,2}^4 (degree 2 in x), y and z in {0,1}^4 (degree 1).
    """
    _require_dim4(sc)
    idx = kernels.scan("malcev", sc.c, backend)
    if idx < 0:
        return None
    return kernels.grid_point("malcev", idx)


def is_malcev(sc: StructureConstants, backend: str | None = None) -> bool:
    return malcev_witness(sc, backend) is None


def derived_subalgebra(sc: StructureConstants) -> Subspace:
    n = sc.dim
    return Subspace.span((sc.product(i, j) for i in range(n) for j in range(i + 1, n)), n)


def product_space(sc: StructureConstants, u: Subspace, v: Subspace) -> Subspace:
    """Span of all products of basis vectors of u and v."""
    return Subspace.span((multiply(sc, a, b) for a in u.basis for b in v.basis), sc.dim)


def apply_basis_change(sc: StructureConstants, m: Mat) -> StructureConstants:
    """Constants of ``(x, y) -> M^-1 (Mx . My)``: the algebra read in the basis of M's columns."""
    n = sc.dim
    if len(m) != n or any(len(r) != n for r in m):
        raise ValueError("basis change matrix has wrong shape")
    if det(m) == 0:
        raise ValueError("basis change matrix is singular")
    minv = inverse(m)
    cols = [column(m, i) for i in range(n)]
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = mat_vec(minv, multiply(sc, cols[i], cols[j]))
            for k in range(n):
                c[i][j][k] = v[k]
                c[j][i][k] = -v[k]
    return StructureConstants(n, _freeze(c))


def is_isomorphism(sc_a: StructureConstants, sc_b: StructureConstants, m: Mat) -> bool:
    """True iff ``M (e_i *_B e_j) == (M e_i) *_A (M e_j)`` for all basis pairs.

    Equivalently ``apply_basis_change(sc_a, M) == sc_b``. This is the oracle
    every witness in the package is checked against.
    """
    n = sc_a.dim
    if sc_b.dim != n:
        raise ValueError("algebras have different dimensions")
    if len(m) != n or any(len(r) != n for r in m):
        raise ValueError("matrix has wrong shape")
    if det(m) == 0:
        raise ValueError("matrix is singular")
    cols = [column(m, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if mat_vec(m, sc_b.product(i, j)) != multiply(sc_a, cols[i], cols[j]):
                return False
    return True


__all__ = [
    "StructureConstants",
    "Subspace",
    "multiply",
    "jacobian",
    "binary_lie_defect",
    "malcev_defect",
    "is_lie",
    "is_binary_lie",
    "binary_lie_witness",
    "is_malcev",
    "malcev_witness",
    "derived_subalgebra",
    "product_space",
    "apply_basis_change",
    "is_isomorphism",
    "zero_vec",
]
