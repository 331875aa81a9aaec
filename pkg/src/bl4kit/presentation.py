"""Presentations c(x11, xi3, X), weak isomorphisms and distinguished bases.

A presentation fixes the multiplication on a distinguished basis
``e0, e1, e2, e3``::

    e1 e2 = xi3 e3,  e0 e1 = x11 e1,
    e0 e2 = X[0][0] e2 + X[1][0] e3,  e0 e3 = X[0][1] e2 + X[1][1] e3,

so ``X`` is the matrix of ``L_{e0}`` on span(e2, e3) acting on columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import (
    StructureConstants,
    Subspace,
    apply_basis_change,
    derived_subalgebra,
    is_isomorphism,
    multiply,
    product_space,
)
from .linalg import (
    Mat,
    Q,
    Vec,
    add,
    basis_vec,
    det,
    from_columns,
    inverse,
    kernel,
    mat,
    mat_mul,
    rational_sqrt,
    scale,
    solve,
    sub,
)


class NotBl4(ValueError):
    """Raised when an algebra or presentation is outside the BL4 class."""

    REASONS = (
        "wrong-derived-dimension",
        "p-not-nilpotent-3dim",
        "no-rational-splitting",
        "decomposable",
        "first-row-vanishing",
        "first-row-nonvanishing",
    )

    def __init__(self, reason: str, detail: str = ""):
        if reason not in self.REASONS:
            raise ValueError(f"unknown NotBl4 reason {reason!r}")
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}" if detail else reason)


@dataclass(frozen=True)
class Bl4Presentation:
    x11: Fraction
    xi3: Fraction
    X: Mat

    def __post_init__(self):
        object.__setattr__(self, "x11", Q(self.x11))
        object.__setattr__(self, "xi3", Q(self.xi3))
        object.__setattr__(self, "X", mat(self.X))
        if len(self.X) != 2 or any(len(r) != 2 for r in self.X):
            raise ValueError("X must be 2x2")
        if self.xi3 == 0:
            raise ValueError("xi3 must be nonzero")

    @property
    def x22(self) -> Fraction:
        return self.X[0][0]

    @property
    def x32(self) -> Fraction:
        # coefficient of e2 in e0 e3
        return self.X[0][1]

    @property
    def x23(self) -> Fraction:
        # coefficient of e3 in e0 e2
        return self.X[1][0]

    @property
    def x33(self) -> Fraction:
        return self.X[1][1]


def to_structure_constants(p: Bl4Presentation) -> StructureConstants:
    z = Fraction(0)
    return StructureConstants.from_products(
        {
            (1, 2): (z, z, z, p.xi3),
            (0, 1): (z, p.x11, z, z),
            (0, 2): (z, z, p.x22, p.x23),
            (0, 3): (z, z, p.x32, p.x33),
        }
    )


def is_bl4(p: Bl4Presentation) -> Tuple[bool, Optional[str]]:
    """Membership in the BL4 class, with the failure reason when not.

    The x11 = 0 branch also demands x33 != 0: with x33 = 0 the element
    ``e0 - x23 e1`` spans a complemented ideal annihilating span(e1, e2, e3).
    """
    first_row = p.x22 != 0 or p.x32 != 0
    if p.x11 != 0:
        return (True, None) if first_row else (False, "first-row-vanishing")
    if first_row:
        return False, "first-row-nonvanishing"
    if p.x33 == 0:
        return False, "decomposable"
    return True, None


@dataclass(frozen=True)
class WeakIso:
    """Parameters of a flag-preserving matrix::

        [[u0, 0,  0,  0 ],
         [u1, p1, q1, 0 ],
         [u2, p2, q2, 0 ],
         [u3, p3, q3, r3]]
    """

    u0: Fraction
    u: Tuple[Fraction, Fraction, Fraction]
    P: Mat
    pq3: Tuple[Fraction, Fraction]
    r3: Fraction

    def __post_init__(self):
        object.__setattr__(self, "u0", Q(self.u0))
        object.__setattr__(self, "u", tuple(Q(x) for x in self.u))
        object.__setattr__(self, "P", mat(self.P))
        object.__setattr__(self, "pq3", tuple(Q(x) for x in self.pq3))
        object.__setattr__(self, "r3", Q(self.r3))
        if len(self.u) != 3 or len(self.pq3) != 2 or len(self.P) != 2:
            raise ValueError("malformed weak isomorphism parameters")
        if self.u0 == 0 or self.r3 == 0 or det(self.P) == 0:
            raise ValueError("weak isomorphism must have u0, r3 and det(P) nonzero")

    @classmethod
    def identity(cls) -> "WeakIso":
        return cls(1, (0, 0, 0), ((1, 0), (0, 1)), (0, 0), 1)

    @classmethod
    def xi3_preserving(cls, u0, u, P, pq3) -> "WeakIso":
        return cls(u0, u, P, pq3, det(mat(P)))

    @property
    def preserves_xi3(self) -> bool:
        return self.r3 == det(self.P)

    @classmethod
    def from_matrix(cls, m: Mat) -> "WeakIso":
        m = mat(m)
        if len(m) != 4 or any(len(r) != 4 for r in m):
            raise ValueError("weak isomorphism matrix must be 4x4")
        if any(m[0][j] != 0 for j in (1, 2, 3)) or m[1][3] != 0 or m[2][3] != 0:
            raise ValueError("matrix does not have the flag-preserving shape")
        return cls(
            m[0][0],
            (m[1][0], m[2][0], m[3][0]),
            ((m[1][1], m[1][2]), (m[2][1], m[2][2])),
            (m[3][1], m[3][2]),
            m[3][3],
        )


def is_weak_iso_shape(m: Mat) -> bool:
    try:
        WeakIso.from_matrix(m)
    except ValueError:
        return False
    return True


def weak_iso_matrix(w: WeakIso) -> Mat:
    (p1, q1), (p2, q2) = w.P
    p3, q3 = w.pq3
    u1, u2, u3 = w.u
    z = Fraction(0)
    return (
        (w.u0, z, z, z),
        (u1, p1, q1, z),
        (u2, p2, q2, z),
        (u3, p3, q3, w.r3),
    )


def compose(w1: WeakIso, w2: WeakIso) -> WeakIso:
    return WeakIso.from_matrix(mat_mul(weak_iso_matrix(w1), weak_iso_matrix(w2)))


def invert(w: WeakIso) -> WeakIso:
    return WeakIso.from_matrix(inverse(weak_iso_matrix(w)))


def normalize_xi3(p: Bl4Presentation) -> Tuple[Bl4Presentation, WeakIso]:
    """Rescale to xi3 = 1 keeping x11 and X.

    The witness is diag(1, 1/xi3, 1, 1): e1 -> e1/xi3 fixes e1 e2 = e3 and
    leaves every e0-product untouched.
    """
    target = Bl4Presentation(p.x11, 1, p.X)
    if p.xi3 == 1:
        return target, WeakIso.identity()
    w = WeakIso(1, (0, 0, 0), ((1 / p.xi3, 0), (0, 1)), (0, 0), 1)
    return target, w


def iso_condition_holds(pa: Bl4Presentation, pb: Bl4Presentation, w: WeakIso) -> bool:
    """Entrywise 3x3 matrix criterion for ``w`` to be an isomorphism c(pb) -> c(pa).

    ``pa`` carries the plain coefficients, ``pb`` the hatted ones; both need
    xi3 = 1 and ``w`` must satisfy r3 = det P.
    """
    if pa.xi3 != 1 or pb.xi3 != 1:
        raise ValueError("iso_condition_holds needs xi3 = 1 on both presentations")
    if not w.preserves_xi3:
        raise ValueError("weak isomorphism must satisfy r3 = det P")
    (p1, q1), (p2, q2) = w.P
    p3, q3 = w.pq3
    u0 = w.u0
    u1, u2, _ = w.u
    d = p1 * q2 - p2 * q1
    h11, h22, h32, h23, h33 = pb.x11, pb.x22, pb.x32, pb.x23, pb.x33
    x11, x22, x32, x23, x33 = pa.x11, pa.x22, pa.x32, pa.x23, pa.x33

    lhs = (
        (p1 * h11, q1 * h22, q1 * h32),
        (p2 * h11, q2 * h22, q2 * h32),
        (p3 * h11, q3 * h22 + d * h23, q3 * h32 + d * h33),
    )
    rhs = (
        (u0 * p1 * x11, u0 * q1 * x11, Fraction(0)),
        (u0 * (x22 * p2 + x32 * p3), u0 * (x22 * q2 + x32 * q3), u0 * x32 * d),
        (
            u0 * (x23 * p2 + x33 * p3) + u1 * p2 - u2 * p1,
            u0 * (x23 * q2 + x33 * q3) + u1 * q2 - u2 * q1,
            u0 * x33 * d,
        ),
    )
    return lhs == rhs


# --------------------------------------------------------------------------
# extraction of a distinguished basis


def _echelon_key(v: Vec) -> tuple:
    pivot = next(i for i, a in enumerate(v) if a != 0)
    return (pivot, tuple(v))


def _normalized(v: Vec) -> Vec:
    pivot = next(a for a in v if a != 0)
    return tuple(a / pivot for a in v)


def _eigenlines_2x2(m: Mat) -> Optional[List[Vec]]:
    """Rational invariant lines of a 2x2 matrix; None when it is scalar."""
    (a, b), (c, d) = m
    if b == 0 and c == 0 and a == d:
        return None
    tr, dt = a + d, a * d - b * c
    disc = tr * tr - 4 * dt
    root = rational_sqrt(disc)
    if root is None:
        return []
    lines = []
    for ev in sorted({(tr - root) / 2, (tr + root) / 2}):
        k = kernel(((a - ev, b), (c, d - ev)))
        lines.extend(_normalized(v) for v in k)
    return sorted(set(lines), key=_echelon_key)


def _coords(basis: List[Vec], v: Vec) -> Vec:
    out = solve(basis, v)
    if out is None:
        raise ArithmeticError("vector outside the expected span")
    return out


def extract_presentation(sc: StructureConstants) -> Tuple[Bl4Presentation, Mat]:
    """Find a distinguished basis and read off the presentation.

    Returns ``(p, B)`` with ``apply_basis_change(sc, B) == to_structure_constants(p)``
    and ``p.xi3 == 1``. Raises :class:`NotBl4` with a structured reason.
    """
    if sc.dim != 4:
        raise ValueError("extraction is defined for 4-dimensional algebras")
    n = 4
    derived = derived_subalgebra(sc)

    # (1) the ideal p
    if derived.dim == 3:
        p_space = derived
    elif derived.dim == 1:
        (dvec,) = derived.basis
        ann = kernel(tuple(tuple(col) for col in zip(*(multiply(sc, basis_vec(n, i), dvec) for i in range(n)))))
        p_space = Subspace(n, ann)
        if p_space.dim == 4:
            raise NotBl4("decomposable", "the derived algebra is central")
        if p_space.dim != 3:
            raise NotBl4("p-not-nilpotent-3dim", f"annihilator of the derived algebra has dim {p_space.dim}")
    else:
        raise NotBl4("wrong-derived-dimension", f"derived algebra has dimension {derived.dim}")

    # (2) p must be an ideal isomorphic to the Heisenberg algebra
    whole = Subspace.span(basis_vec(n, i) for i in range(n))
    if not p_space.contains_space(product_space(sc, whole, p_space)):
        raise NotBl4("p-not-nilpotent-3dim", "p is not an ideal")
    p_prime = product_space(sc, p_space, p_space)
    if p_prime.dim != 1:
        raise NotBl4("p-not-nilpotent-3dim", f"p.p has dimension {p_prime.dim}")
    if product_space(sc, p_prime, p_space).dim != 0:
        raise NotBl4("p-not-nilpotent-3dim", "p is not 2-step nilpotent")
    (d,) = p_prime.basis

    # (3) a representative e0 outside p and the frame (w1, w2, d) of p
    e0 = next(basis_vec(n, i) for i in range(n) if basis_vec(n, i) not in p_space)
    ws: List[Vec] = []
    for v in p_space.basis:
        if Subspace.span(ws + [v, d]).dim == len(ws) + 2:
            ws.append(v)
    w1, w2 = ws
    frame = [w1, w2, d]

    def left(v: Vec) -> Vec:
        return multiply(sc, e0, v)

    # columns of L_{e0} on p in the frame
    lmat = from_columns([_coords(frame, left(v)) for v in frame])

    ld = _coords(frame, left(d))
    candidates: List[Subspace] = []
    if ld[0] != 0 or ld[1] != 0:
        candidates.append(Subspace.span([d, left(d)]))
    else:
        lbar = ((lmat[0][0], lmat[0][1]), (lmat[1][0], lmat[1][1]))
        lines = _eigenlines_2x2(lbar)
        if lines is None:
            # scalar action: every line is invariant, use the coordinate lines
            lines = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
        for line in _complement_order(lines):
            candidates.append(Subspace.span([add(scale(line[0], w1), scale(line[1], w2)), d]))

    for b_space in candidates:
        found = _try_plane(sc, e0, frame, left, b_space, d)
        if found is not None:
            basis = found
            pres = _read_presentation(sc, basis)
            ok, reason = is_bl4(pres)
            if not ok:
                raise NotBl4(reason, "the distinguished basis violates the BL4 criterion")
            return pres, basis
    raise NotBl4("no-rational-splitting", "no invariant splitting of p over Q")


def _complement_order(lines: List[Vec]) -> List[Vec]:
    # e1 takes the first line in echelon order, so the plane b uses the others
    if len(lines) <= 1:
        return list(lines)
    return list(lines[1:]) + [lines[0]]


def _try_plane(sc, e0, frame, left, b_space: Subspace, d: Vec) -> Optional[Mat]:
    if b_space.dim != 2 or d not in b_space:
        return None
    if not all(left(v) in b_space for v in b_space.basis):
        return None
    w = next(v for v in frame if v not in b_space)
    b_basis = list(b_space.basis)
    lw = _coords([w] + b_basis, left(w))
    x11 = lw[0]

    # e1 in p \ b with (L - x11) e1 in span(d)
    p_frame = list(frame)
    cols = []
    for v in p_frame:
        img = sub(left(v), scale(x11, v))
        c = _coords(p_frame, img)
        cols.append(c[:2])
    ker = kernel(tuple(tuple(col[r] for col in cols) for r in range(2)))
    e1 = None
    for kv in ker:
        cand = add(add(scale(kv[0], p_frame[0]), scale(kv[1], p_frame[1])), scale(kv[2], p_frame[2]))
        if cand not in b_space:
            e1 = cand
            break
    if e1 is None:
        return None
    e2 = next(v for v in b_basis if v not in Subspace.span([d]))
    e3 = multiply(sc, e1, e2)
    # kill the e3-component of e0 e1 by e0 -> e0 + t e2 (e2 e1 = -e3)
    residual = sub(left(e1), scale(x11, e1))
    t = _coords([e3], residual)[0]
    e0c = add(e0, scale(t, e2))
    return from_columns([e0c, e1, e2, e3])


def _read_presentation(sc: StructureConstants, basis: Mat) -> Bl4Presentation:
    c = apply_basis_change(sc, basis)
    pres = Bl4Presentation(c.c[0][1][1], c.c[1][2][3], ((c.c[0][2][2], c.c[0][3][2]), (c.c[0][2][3], c.c[0][3][3])))
    if to_structure_constants(pres) != c:
        raise ArithmeticError("basis is not distinguished")
    assert is_isomorphism(sc, c, basis)
    return pres


__all__ = [
    "NotBl4",
    "Bl4Presentation",
    "WeakIso",
    "to_structure_constants",
    "is_bl4",
    "normalize_xi3",
    "weak_iso_matrix",
    "compose",
    "invert",
    "iso_condition_holds",
    "extract_presentation",
    "is_weak_iso_shape",
]
