"""Automorphism groups of the canonical BL4 algebras.

Every group here consists of 4x4 matrices of the flag-preserving shape::

    [[eps, 0,  0,  0  ],
     [psi1, p1, q1, 0 ],
     [psi2, p2, q2, 0 ],
     [u,    p3, q3, |A|]]

with ``A = [[p1, q1], [p2, q2]]``, ``a = (p3, q3)`` and a cocycle column
``psi = psi(A, a)``. Families differ in which blocks are free and in the
cocycle. Each family renders parameters to a matrix and recognises its own
members by reading designated entries and re-rendering.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Optional, Tuple, Union

from .algebra import is_isomorphism
from .linalg import Mat, Q, det, format_rational, mat, mat_mul
from .normal_form import CanonicalLabel, canonical_structure_constants
from . import sampling

Pair = Tuple[Fraction, Fraction]
Params = Dict[str, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)

THETA = ((-_ONE, _ZERO), (_ZERO, _ONE))
SIGMA: Mat = (
    (-_ONE, _ZERO, _ZERO, _ZERO),
    (_ZERO, _ZERO, _ONE, _ZERO),
    (_ZERO, _ONE, _ZERO, _ZERO),
    (_ZERO, _ZERO, _ZERO, -_ONE),
)


# --------------------------------------------------------------------------
# Aut(n) and the cocycle


def _det2(a: Mat) -> Fraction:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def _mv2(a: Mat, v: Pair) -> Pair:
    return (a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1])


def _vm2(v: Pair, a: Mat) -> Pair:
    """Row vector times matrix."""
    return (v[0] * a[0][0] + v[1] * a[1][0], v[0] * a[0][1] + v[1] * a[1][1])


def phi(A: Mat, a: Pair) -> Pair:
    (p1, q1), (p2, q2) = mat(A)
    p3, q3 = Q(a[0]), Q(a[1])
    d = p1 * q2 - p2 * q1
    if d == 0:
        raise ValueError("phi needs an invertible block")
    return ((p3 * q1 - p1 * q3) / d, (p3 * q2 - p2 * q3) / d)


def _require_diagonal(A: Mat) -> None:
    if A[0][1] != 0 or A[1][0] != 0:
        raise ValueError("block must be diagonal")


def theta_phi(A: Mat, a: Pair) -> Pair:
    """``Theta phi`` on diagonal blocks: (q3/q2, p3/p1)."""
    A = mat(A)
    _require_diagonal(A)
    f = phi(A, a)
    return (-f[0], f[1])


def gamma_ab_cocycle(alpha, beta) -> Callable[[Mat, Pair], Pair]:
    """``N phi(D, a)`` with ``N = diag(alpha, beta)`` on diagonal blocks."""
    alpha, beta = Q(alpha), Q(beta)

    def psi(A: Mat, a: Pair) -> Pair:
        A = mat(A)
        _require_diagonal(A)
        f = phi(A, a)
        return (alpha * f[0], beta * f[1])

    return psi


def _autn_image(A: Mat, a: Pair, B: Mat, b: Pair) -> Tuple[Mat, Pair]:
    ab = mat_mul(A, B)
    aB = _vm2(a, B)
    dA = _det2(A)
    return ab, (aB[0] + dA * b[0], aB[1] + dA * b[1])


def check_cocycle(variant: str, A: Mat, a: Pair, B: Mat, b: Pair) -> bool:
    """``psi(A,a) + A psi(B,b) == psi(AB, a^t B + |A| b^t)`` for psi = phi or Theta phi."""
    psi = {"phi": phi, "theta_phi": theta_phi}[variant]
    A, B = mat(A), mat(B)
    a, b = (Q(a[0]), Q(a[1])), (Q(b[0]), Q(b[1]))
    lhs0 = psi(A, a)
    lhs1 = _mv2(A, psi(B, b))
    ab, c = _autn_image(A, a, B, b)
    return (lhs0[0] + lhs1[0], lhs0[1] + lhs1[1]) == psi(ab, c)


@dataclass(frozen=True)
class AutNElement:
    """``[[A, 0], [a^t, |A|]]``, an automorphism of the Heisenberg algebra."""

    A: Mat
    a: Pair

    def __post_init__(self):
        object.__setattr__(self, "A", mat(self.A))
        object.__setattr__(self, "a", (Q(self.a[0]), Q(self.a[1])))
        if _det2(self.A) == 0:
            raise ValueError("AutNElement needs an invertible block")

    def render(self) -> Mat:
        (p1, q1), (p2, q2) = self.A
        return ((p1, q1, _ZERO), (p2, q2, _ZERO), (self.a[0], self.a[1], _det2(self.A)))

    def __mul__(self, other: "AutNElement") -> "AutNElement":
        ab, c = _autn_image(self.A, self.a, other.A, other.a)
        return AutNElement(ab, c)


@dataclass(frozen=True)
class AutNFactor:
    """A triple ``(xi, S, x)`` with ``det S = 1``."""

    xi: Fraction
    S: Mat
    x: Pair

    def __post_init__(self):
        object.__setattr__(self, "xi", Q(self.xi))
        object.__setattr__(self, "S", mat(self.S))
        object.__setattr__(self, "x", (Q(self.x[0]), Q(self.x[1])))
        if self.xi == 0:
            raise ValueError("xi must be nonzero")
        if _det2(self.S) != 1:
            raise ValueError("S must have determinant 1")


def autn_factor_mul(f: AutNFactor, g: AutNFactor) -> AutNFactor:
    xs = _vm2(f.x, g.S)
    return AutNFactor(f.xi * g.xi, mat_mul(f.S, g.S), (xs[0] + g.x[0], xs[1] + g.x[1]))


def autn_delta(f: AutNFactor) -> Mat:
    """``[[xi S, 0], [xi x^t, xi]]`` as a 3x3 matrix.

    The corner is ``xi`` while ``det(xi S) = xi**2``, so the image is an
    automorphism of the Heisenberg algebra only when ``xi == 1``.
    """
    xi = f.xi
    (s11, s12), (s21, s22) = f.S
    return (
        (xi * s11, xi * s12, _ZERO),
        (xi * s21, xi * s22, _ZERO),
        (xi * f.x[0], xi * f.x[1], xi),
    )


def autn_delta_inv(m: Union[Mat, AutNElement]) -> AutNFactor:
    """Read ``(c, A/c, a/c)`` off a block matrix with corner ``c``.

    Raises ValueError unless ``det(A) == c**2``, i.e. off the image of
    :func:`autn_delta`. For a genuine automorphism (corner ``|A|``) this
    means ``|A| == 1``.
    """
    if isinstance(m, AutNElement):
        m = m.render()
    m = mat(m)
    if m[0][2] != 0 or m[1][2] != 0:
        raise ValueError("not a block lower-triangular 3x3 matrix")
    c = m[2][2]
    if c == 0:
        raise ValueError("corner entry must be nonzero")
    S = ((m[0][0] / c, m[0][1] / c), (m[1][0] / c, m[1][1] / c))
    if _det2(S) != 1:
        raise ValueError("matrix is not in the image of the factorization map")
    return AutNFactor(c, S, (m[2][0] / c, m[2][1] / c))


# --------------------------------------------------------------------------
# Matrix families


@dataclass(frozen=True)
class Accept:
    params: Params
    coset: bool = False

    def to_json(self) -> dict:
        out = {k: format_rational(v) for k, v in self.params.items()}
        return {"accept": True, "coset": self.coset, "params": out}


@dataclass(frozen=True)
class Reject:
    reason: str  # "shape" | "equation-residual"
    position: Tuple[int, int]
    detail: str = ""

    def to_json(self) -> dict:
        return {"accept": False, "reason": self.reason, "position": list(self.position), "detail": self.detail}


Membership = Union[Accept, Reject]

# Weak-isomorphism zero pattern, then parameter recovery order:
# u0, the 2x2 block, (p3, q3), u3, then the dependent entries.
_SHAPE_ZEROS = ((0, 1), (0, 2), (0, 3), (1, 3), (2, 3))
_CHECK_ORDER = ((0, 0), (1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (3, 0), (1, 0), (2, 0), (3, 3))


class Degenerate(ValueError):
    """Designated entries do not give valid parameters."""


class MatrixFamily:
    """Parametrized matrix family with read-back membership."""

    name: str = "family"
    param_names: Tuple[str, ...] = ()
    fixed: Dict[Tuple[int, int], Fraction] = {}

    def render(self, params: Params) -> Mat:
        raise NotImplementedError

    def read(self, m: Mat) -> Params:
        raise NotImplementedError

    def sample(self, rng: random.Random, height: int = sampling.DEFAULT_HEIGHT) -> Params:
        raise NotImplementedError

    def element(self, **params) -> Mat:
        return self.render({k: Q(v) for k, v in params.items()})

    def membership(self, m: Mat) -> Membership:
        m = mat(m)
        if len(m) != 4 or any(len(r) != 4 for r in m):
            return Reject("shape", (0, 0), "matrix must be 4x4")
        for pos in _SHAPE_ZEROS:
            if m[pos[0]][pos[1]] != 0:
                return Reject("shape", pos, "outside the flag-preserving pattern")
        for pos in _CHECK_ORDER:
            want = self.fixed.get(pos)
            if want is not None and m[pos[0]][pos[1]] != want:
                return Reject("shape", pos, f"entry must be {format_rational(want)}")
        try:
            params = self.read(m)
            r = self.render(params)
        except (Degenerate, ZeroDivisionError, ValueError) as exc:
            return Reject("shape", (1, 1), f"degenerate block: {exc}")
        for pos in _CHECK_ORDER:
            i, j = pos
            if r[i][j] != m[i][j]:
                reason = "shape" if pos in self.fixed else "equation-residual"
                return Reject(reason, pos, f"expected {format_rational(r[i][j])}")
        return Accept(params)

    def __contains__(self, m: Mat) -> bool:
        return isinstance(self.membership(m), Accept)


def _cocycle_matrix(eps: Fraction, psi: Pair, A: Mat, a: Pair, u: Fraction) -> Mat:
    (p1, q1), (p2, q2) = A
    return (
        (eps, _ZERO, _ZERO, _ZERO),
        (psi[0], p1, q1, _ZERO),
        (psi[1], p2, q2, _ZERO),
        (u, a[0], a[1], _det2(A)),
    )


class CocycleFamily(MatrixFamily):
    """``[[1,0,0],[psi(A,a), A, 0],[u, a^t, |A|]]`` with a block constraint.

    ``block`` is "general" (A in GL2), "diagonal" (p2 = q1 = 0) or
    "triangle" (p1 = 1, q1 = 0, and a = 0). ``psi`` None means the zero
    cocycle.
    """

    def __init__(self, name: str, block: str, psi: Optional[Callable[[Mat, Pair], Pair]]):
        self.name = name
        self.block = block
        self.psi = psi
        fixed = {(0, 0): _ONE}
        if block == "diagonal":
            fixed.update({(1, 2): _ZERO, (2, 1): _ZERO})
            self.param_names = ("p1", "q2", "p3", "q3", "u")
        elif block == "triangle":
            fixed.update({(1, 1): _ONE, (1, 2): _ZERO, (3, 1): _ZERO, (3, 2): _ZERO})
            self.param_names = ("p2", "q2", "u")
        elif block == "general":
            self.param_names = ("p1", "q1", "p2", "q2", "p3", "q3", "u")
        else:
            raise ValueError(f"unknown block kind {block!r}")
        if psi is None:
            fixed.update({(1, 0): _ZERO, (2, 0): _ZERO})
        self.fixed = fixed

    def _parts(self, params: Params) -> Tuple[Mat, Pair, Fraction]:
        g = lambda k: Q(params.get(k, 0))  # noqa: E731
        if self.block == "diagonal":
            A = ((g("p1"), _ZERO), (_ZERO, g("q2")))
            a = (g("p3"), g("q3"))
        elif self.block == "triangle":
            A = ((_ONE, _ZERO), (g("p2"), g("q2")))
            a = (_ZERO, _ZERO)
        else:
            A = ((g("p1"), g("q1")), (g("p2"), g("q2")))
            a = (g("p3"), g("q3"))
        if _det2(A) == 0:
            raise Degenerate("block is singular")
        return A, a, g("u")

    def render(self, params: Params) -> Mat:
        A, a, u = self._parts(params)
        psi = self.psi(A, a) if self.psi is not None else (_ZERO, _ZERO)
        return _cocycle_matrix(_ONE, psi, A, a, u)

    def read(self, m: Mat) -> Params:
        full = {
            "p1": m[1][1], "q1": m[1][2], "p2": m[2][1], "q2": m[2][2],
            "p3": m[3][1], "q3": m[3][2], "u": m[3][0],
        }
        return {k: full[k] for k in self.param_names}

    def sample(self, rng: random.Random, height: int = sampling.DEFAULT_HEIGHT) -> Params:
        while True:
            params = {k: sampling.rational(rng, height) for k in self.param_names}
            try:
                self._parts(params)
            except Degenerate:
                continue
            return params

    def cocycle_value(self, m1: Mat, m2: Mat) -> Fraction:
        """``a^t psi(B, b)`` for members m1 = (A, a, .) and m2 = (B, b, .)."""
        return m1[3][1] * m2[1][0] + m1[3][2] * m2[2][0]

    @property
    def is_semidirect(self) -> bool:
        return self.psi is None


class LiteralBFamily(MatrixFamily):
    """Automorphisms of ``b(lam)``: params p2, q2, u3."""

    param_names = ("p2", "q2", "u3")

    def __init__(self, lam):
        self.lam = Q(lam)
        self.name = f"Aut(B({format_rational(self.lam)}))"
        self.fixed = {(0, 0): _ONE, (1, 0): _ZERO, (1, 1): _ONE, (1, 2): _ZERO, (3, 2): _ZERO}

    def render(self, params: Params) -> Mat:
        p2, q2, u3 = (Q(params[k]) for k in self.param_names)
        if q2 == 0:
            raise Degenerate("q2 must be nonzero")
        lam = self.lam
        return (
            (_ONE, _ZERO, _ZERO, _ZERO),
            (_ZERO, _ONE, _ZERO, _ZERO),
            (p2 * (lam - 1), p2, q2, _ZERO),
            (u3, p2 * (1 - lam), _ZERO, q2),
        )

    def read(self, m: Mat) -> Params:
        return {"p2": m[2][1], "q2": m[2][2], "u3": m[3][0]}

    def sample(self, rng: random.Random, height: int = sampling.DEFAULT_HEIGHT) -> Params:
        return {"p2": sampling.rational(rng, height), "q2": sampling.nonzero_rational(rng, height), "u3": sampling.rational(rng, height)}


class SigmaUnion(MatrixFamily):
    """``G  union  G sigma`` for a diagonal cocycle family G.

    Members with top-left entry -1 are in the sigma coset; they are
    recognised through ``M sigma`` (sigma is an involution).
    """

    def __init__(self, name: str, base: CocycleFamily):
        self.name = name
        self.base = base
        self.param_names = base.param_names + ("coset",)
        self.fixed = {}

    def render(self, params: Params) -> Mat:
        m = self.base.render({k: v for k, v in params.items() if k != "coset"})
        return mat_mul(m, SIGMA) if params.get("coset") else m

    def read(self, m: Mat) -> Params:
        raise NotImplementedError("use membership")

    def membership(self, m: Mat) -> Membership:
        m = mat(m)
        if len(m) != 4 or any(len(r) != 4 for r in m):
            return Reject("shape", (0, 0), "matrix must be 4x4")
        if m[0][0] == -1:
            res = self.base.membership(mat_mul(m, SIGMA))
            if isinstance(res, Accept):
                return Accept(res.params, coset=True)
            return res
        return self.base.membership(m)

    def sample(self, rng: random.Random, height: int = sampling.DEFAULT_HEIGHT) -> Params:
        params = dict(self.base.sample(rng, height))
        params["coset"] = rng.random() < 0.5
        return params


# --------------------------------------------------------------------------
# Abstract groups


_VARIANTS = ("Gamma", "Gamma0", "GammaTriangle", "GammaPlus", "GammaMinus", "GammaAB", "AutA1")


@dataclass(frozen=True)
class GroupId:
    variant: str
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None

    def __post_init__(self):
        if self.variant not in _VARIANTS:
            raise ValueError(f"unknown group {self.variant!r}")
        if (self.variant == "GammaAB") != (self.alpha is not None and self.beta is not None):
            raise ValueError("GammaAB needs (alpha, beta) and only it takes them")
        if self.alpha is not None:
            object.__setattr__(self, "alpha", Q(self.alpha))
            object.__setattr__(self, "beta", Q(self.beta))

    @classmethod
    def gamma_ab(cls, alpha, beta) -> "GroupId":
        return cls("GammaAB", alpha, beta)

    def to_json(self) -> dict:
        out = {"variant": self.variant}
        if self.variant == "GammaAB":
            out["alpha"] = format_rational(self.alpha)
            out["beta"] = format_rational(self.beta)
        return out

    def __str__(self) -> str:
        if self.variant == "GammaAB":
            return f"GammaAB({format_rational(self.alpha)},{format_rational(self.beta)})"
        return self.variant


def group_family(gid: GroupId) -> MatrixFamily:
    v = gid.variant
    if v == "Gamma":
        return CocycleFamily("Gamma", "general", phi)
    if v == "Gamma0":
        return CocycleFamily("Gamma0", "general", None)
    if v == "GammaTriangle":
        return CocycleFamily("GammaTriangle", "triangle", None)
    if v == "GammaPlus":
        return CocycleFamily("GammaPlus", "diagonal", phi)
    if v == "GammaMinus":
        return CocycleFamily("GammaMinus", "diagonal", theta_phi)
    if v == "GammaAB":
        return CocycleFamily(str(gid), "diagonal", gamma_ab_cocycle(gid.alpha, gid.beta))
    return SigmaUnion("AutA1", CocycleFamily("GammaAB(-1,1)", "diagonal", gamma_ab_cocycle(-1, 1)))


def group_element(gid: GroupId, params: Params) -> Mat:
    return group_family(gid).render({k: (v if k == "coset" else Q(v)) for k, v in params.items()})


def group_mul(gid: GroupId, m1: Mat, m2: Mat) -> Mat:
    """Product of two members; raises if the result leaves the group."""
    fam = group_family(gid)
    out = mat_mul(mat(m1), mat(m2))
    if out not in fam:
        raise ArithmeticError(f"product left {gid}")
    return out


def membership(gid: GroupId, m: Mat) -> Membership:
    return group_family(gid).membership(m)


def is_semidirect(gid: GroupId) -> bool:
    """Whether the extension by the u-coordinate splits with the zero cocycle."""
    fam = group_family(gid)
    return isinstance(fam, CocycleFamily) and fam.is_semidirect


def extension_mul(m1: Mat, m2: Mat) -> Tuple[Mat, Fraction]:
    """Product in the extension picture: ``(A B, u eps2 + |A| v + a^t psi(B, b))``.

    Returns the 3x3 Aut(n) block of the product and its u-coordinate,
    computed from the block data alone (no 4x4 multiplication).
    """
    A = ((m1[1][1], m1[1][2]), (m1[2][1], m1[2][2]))
    B = ((m2[1][1], m2[1][2]), (m2[2][1], m2[2][2]))
    a = (m1[3][1], m1[3][2])
    b = (m2[3][1], m2[3][2])
    ab, c = _autn_image(A, a, B, b)
    u = m1[3][0] * m2[0][0] + _det2(A) * m2[3][0] + a[0] * m2[1][0] + a[1] * m2[2][0]
    return AutNElement(ab, c).render(), u


def t_subgroup_commutator(gid: GroupId, a: Pair, b: Pair) -> Fraction:
    """``a^t psi(E, b) - b^t psi(E, a)`` on the unipotent part."""
    e = ((_ONE, _ZERO), (_ZERO, _ONE))
    a, b = (Q(a[0]), Q(a[1])), (Q(b[0]), Q(b[1]))
    if gid.variant == "GammaPlus":
        psi = phi
    elif gid.variant == "GammaMinus":
        psi = theta_phi
    elif gid.variant == "GammaAB":
        psi = gamma_ab_cocycle(gid.alpha, gid.beta)
    else:
        raise ValueError("commutator is defined for the diagonal cocycle groups")
    fb, fa = psi(e, b), psi(e, a)
    return a[0] * fb[0] + a[1] * fb[1] - b[0] * fa[0] - b[1] * fa[1]


def rescale(m: Mat, tau) -> Mat:
    """Scale the cocycle column and the u-entry by ``tau`` (top-left kept).

    Maps the cocycle-psi group onto the cocycle-(tau psi) group
    isomorphically; in particular GammaAB(a, b) onto GammaAB(tau a, tau b).
    """
    tau = Q(tau)
    if tau == 0:
        raise ValueError("tau must be nonzero")
    rows = [list(r) for r in mat(m)]
    for i in (1, 2, 3):
        rows[i][0] *= tau
    return tuple(tuple(r) for r in rows)


def shear_ab(m: Mat, kappa) -> Mat:
    """Isomorphism GammaAB(a, b) -> GammaAB(a - kappa, b + kappa).

    Changes the u-coordinate by the coboundary of ``kappa p3 q3 / (p1 q2)``
    and re-renders the cocycle column for the new parameters.
    """
    kappa = Q(kappa)
    m = mat(m)
    p1, q2, p3, q3 = m[1][1], m[2][2], m[3][1], m[3][2]
    # cocycle column of GammaAB(a, b) is (-a q3/q2, b p3/p1)
    rows = [list(r) for r in m]
    rows[1][0] = m[1][0] + kappa * q3 / q2
    rows[2][0] = m[2][0] + kappa * p3 / p1
    rows[3][0] = m[3][0] + kappa * p3 * q3 / (p1 * q2)
    return tuple(tuple(r) for r in rows)


# --------------------------------------------------------------------------
# Literal automorphism families of the canonical algebras


@dataclass(frozen=True)
class AutFamily:
    algebra: CanonicalLabel
    abstract_id: GroupId
    literal: MatrixFamily = field(compare=False)
    to_abstract: Callable[[Mat], Mat] = field(compare=False)

    def element(self, params: Params) -> Mat:
        return self.literal.render(params)

    def membership(self, m: Mat) -> Membership:
        return self.literal.membership(m)

    def sample(self, rng: random.Random, n: int, height: int = sampling.DEFAULT_HEIGHT, verify: bool = True) -> list:
        sc = canonical_structure_constants(self.algebra)
        out = []
        for _ in range(n):
            m = self.literal.render(self.literal.sample(rng, height))
            if verify and not is_isomorphism(sc, sc, m):
                raise AssertionError(f"sampled matrix is not an automorphism of {self.algebra}")
            out.append(m)
        return out

    def to_json(self, generators: list) -> dict:
        from .linalg import format_matrix

        return {
            "algebra": self.algebra.to_json(),
            "abstract_id": self.abstract_id.to_json(),
            "generators": [format_matrix(g) for g in generators],
        }


def _identity_map(m: Mat) -> Mat:
    return mat(m)


def _b_to_triangle(m: Mat) -> Mat:
    rows = [list(r) for r in mat(m)]
    rows[2][0] = _ZERO
    rows[3][1] = _ZERO
    return tuple(tuple(r) for r in rows)


def aut_family_of(label: CanonicalLabel) -> AutFamily:
    v = label.variant
    if v == "A0":
        return AutFamily(label, GroupId("Gamma"), CocycleFamily("Aut(A0)", "general", phi), _identity_map)
    if v == "C":
        lam = label.lam
        if lam == 1:
            return AutFamily(label, GroupId("Gamma0"), CocycleFamily("Aut(C(1))", "general", None), _identity_map)

        def psi(A, a, s=lam - 1):
            f = phi(A, a)
            return (s * f[0], s * f[1])

        tau = 1 / (lam - 1)
        return AutFamily(label, GroupId("Gamma"), CocycleFamily(f"Aut({label})", "general", psi), lambda m: rescale(m, tau))
    if v == "B":
        return AutFamily(label, GroupId("GammaTriangle"), LiteralBFamily(label.lam), _b_to_triangle)
    if v == "A1":
        base = CocycleFamily("GammaAB(1,-1)", "diagonal", gamma_ab_cocycle(1, -1))
        return AutFamily(label, GroupId("AutA1"), SigmaUnion("Aut(A1)", base), lambda m: rescale(m, -1))
    lam, mu = label.lam, label.mu
    alpha, beta = lam - mu, lam - 1
    literal = CocycleFamily(f"Aut({label})", "diagonal", gamma_ab_cocycle(alpha, beta))
    s = alpha + beta  # = -(mu - 2 lam + 1)
    if s == 0:
        return AutFamily(label, GroupId("GammaMinus"), literal, lambda m: rescale(m, 1 / beta))
    kappa = (alpha - beta) / 2
    return AutFamily(label, GroupId("GammaPlus"), literal, lambda m: rescale(shear_ab(m, kappa), 2 / s))


def aut_membership(label: CanonicalLabel, m: Mat) -> Membership:
    return aut_family_of(label).membership(m)


__all__ = [
    "THETA",
    "SIGMA",
    "phi",
    "theta_phi",
    "gamma_ab_cocycle",
    "check_cocycle",
    "AutNElement",
    "AutNFactor",
    "autn_delta",
    "autn_delta_inv",
    "autn_factor_mul",
    "Accept",
    "Reject",
    "MatrixFamily",
    "CocycleFamily",
    "LiteralBFamily",
    "SigmaUnion",
    "GroupId",
    "group_family",
    "group_element",
    "group_mul",
    "membership",
    "is_semidirect",
    "extension_mul",
    "t_subgroup_commutator",
    "rescale",
    "shear_ab",
    "AutFamily",
    "aut_family_of",
    "aut_membership",
]
