"""Canonical forms of BL4 algebras, isomorphism decisions and identity tables.

Witness convention: a chain from a source algebra to a target algebra has a
product ``M`` with ``is_isomorphism(source, target, M)``, i.e.
``apply_basis_change(source, M) == target``. Chains compose left to right.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from . import algebra
from .algebra import StructureConstants, is_isomorphism
from .linalg import Mat, Q, format_rational, identity, inverse, mat_mul, parse_rational
from .presentation import (
    Bl4Presentation,
    NotBl4,
    is_bl4,
    normalize_xi3,
    to_structure_constants,
    weak_iso_matrix,
)

VARIANTS = ("A0", "A1", "B", "C", "D")


@dataclass(frozen=True, order=False)
class CanonicalLabel:
    variant: str
    lam: Optional[Fraction] = None
    mu: Optional[Fraction] = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.lam is not None:
            object.__setattr__(self, "lam", Q(self.lam))
        if self.mu is not None:
            object.__setattr__(self, "mu", Q(self.mu))
        needs_lam = self.variant in ("B", "C", "D")
        if needs_lam != (self.lam is not None) or (self.variant == "D") != (self.mu is not None):
            raise ValueError(f"wrong parameters for variant {self.variant}")
        if self.variant == "D":
            if self.mu in (0, 1):
                raise ValueError("D(lambda, mu) requires mu not in {0, 1}")
            if (self.lam, self.mu) == (0, -1):
                raise ValueError("D(0, -1) is A1")

    @classmethod
    def A0(cls) -> "CanonicalLabel":
        return cls("A0")

    @classmethod
    def A1(cls) -> "CanonicalLabel":
        return cls("A1")

    @classmethod
    def B(cls, lam) -> "CanonicalLabel":
        return cls("B", lam)

    @classmethod
    def C(cls, lam) -> "CanonicalLabel":
        return cls("C", lam)

    @classmethod
    def D(cls, lam, mu) -> "CanonicalLabel":
        return cls("D", lam, mu)

    @classmethod
    def diagonal(cls, lam, mu) -> "CanonicalLabel":
        """Label of diag(1, mu, lam), folding in C and A1."""
        lam, mu = Q(lam), Q(mu)
        if mu == 1:
            return cls.C(lam)
        if (lam, mu) == (0, -1):
            return cls.A1()
        return cls.D(lam, mu)

    @property
    def is_full_canonical(self) -> bool:
        if self.variant != "D":
            return True
        return (self.mu, self.lam) <= (1 / self.mu, self.lam / self.mu)

    def to_json(self) -> dict:
        out = {"variant": self.variant}
        if self.lam is not None:
            out["lambda"] = format_rational(self.lam)
        if self.mu is not None:
            out["mu"] = format_rational(self.mu)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "CanonicalLabel":
        lam = obj.get("lambda")
        mu = obj.get("mu")
        return cls(
            obj["variant"],
            parse_rational(lam) if lam is not None else None,
            parse_rational(mu) if mu is not None else None,
        )

    def __str__(self) -> str:
        if self.variant in ("A0", "A1"):
            return self.variant
        if self.variant == "D":
            return f"D({format_rational(self.lam)},{format_rational(self.mu)})"
        return f"{self.variant}({format_rational(self.lam)})"


@dataclass(frozen=True)
class WitnessChain:
    steps: Tuple[Tuple[str, Mat], ...] = ()
    product: Mat = field(default_factory=lambda: identity(4))

    def then(self, tag: str, m: Mat) -> "WitnessChain":
        return WitnessChain(self.steps + ((tag, m),), mat_mul(self.product, m))

    @classmethod
    def start(cls, tag: str, m: Mat) -> "WitnessChain":
        return cls(((tag, m),), m)

    def after(self, tag: str, m: Mat) -> "WitnessChain":
        """Prepend a step (``m`` acts first)."""
        return WitnessChain(((tag, m),) + self.steps, mat_mul(m, self.product))


def canonical_presentation(label: CanonicalLabel) -> Bl4Presentation:
    v = label.variant
    if v == "A0":
        return Bl4Presentation(0, 1, ((0, 0), (0, 1)))
    if v == "A1":
        return Bl4Presentation(1, 1, ((-1, 0), (0, 0)))
    if v == "B":
        return Bl4Presentation(1, 1, ((label.lam, 1), (0, 0)))
    if v == "C":
        return Bl4Presentation(1, 1, ((1, 0), (0, label.lam)))
    return Bl4Presentation(1, 1, ((label.mu, 0), (0, label.lam)))


def canonical_structure_constants(label: CanonicalLabel) -> StructureConstants:
    return to_structure_constants(canonical_presentation(label))


class WitnessError(AssertionError):
    """A computed witness failed the structure-constant oracle."""


def _verified(src: StructureConstants, dst: StructureConstants, chain: WitnessChain) -> WitnessChain:
    if not is_isomorphism(src, dst, chain.product):
        raise WitnessError("witness chain failed the isomorphism oracle")
    return chain


def reduce_direct(p: Bl4Presentation) -> Tuple[CanonicalLabel, WitnessChain]:
    """Direct-isomorphism normal form of a BL4 presentation."""
    ok, reason = is_bl4(p)
    if not ok:
        raise NotBl4(reason)
    norm, w = normalize_xi3(p)
    chain = WitnessChain.start("normalize-xi3", weak_iso_matrix(w))
    x11, x22, x32, x23, x33 = norm.x11, norm.x22, norm.x32, norm.x23, norm.x33
    z = Fraction(0)
    if x11 == 0:
        m = (
            (1 / x33, z, z, z),
            (-x23 / x33, Fraction(1), z, z),
            (z, z, Fraction(1), z),
            (z, z, z, Fraction(1)),
        )
        label = CanonicalLabel.A0()
        chain = chain.then("diagonalize-nilpotent", m)
    elif x32 == 0:
        m = (
            (1 / x11, z, z, z),
            (-x23 / x11, Fraction(1), z, z),
            (z, z, Fraction(1), z),
            (z, z, z, Fraction(1)),
        )
        label = CanonicalLabel.diagonal(x33 / x11, x22 / x11)
        chain = chain.then("diagonalize", m)
    else:
        m = (
            (1 / x11, z, z, z),
            (x33 * x22 / (x32 * x11) - x23 / x11, x11 / x32, z, z),
            (z, z, x32, z),
            (z, z, x33, x11),
        )
        label = CanonicalLabel.B((x22 + x33) / x11)
        chain = chain.then("triangular", m)
    return label, _verified(to_structure_constants(p), canonical_structure_constants(label), chain)


def opposite_matrix(mu) -> Mat:
    """Opposite isomorphism D(lam, mu) -> D(lam/mu, 1/mu) (p2 = q1 = 1)."""
    mu = Q(mu)
    z, one = Fraction(0), Fraction(1)
    return ((1 / mu, z, z, z), (z, z, one, z), (z, one, z, z), (z, z, z, -one))


def opposite_label(label: CanonicalLabel) -> CanonicalLabel:
    if label.variant != "D":
        raise ValueError("only D labels have opposite partners")
    return CanonicalLabel.D(label.lam / label.mu, 1 / label.mu)


def canonical_label(p: Bl4Presentation) -> Tuple[CanonicalLabel, WitnessChain]:
    label, chain = reduce_direct(p)
    if label.variant == "D" and not label.is_full_canonical:
        chain = chain.then("opposite", opposite_matrix(label.mu))
        label = opposite_label(label)
        _verified(to_structure_constants(p), canonical_structure_constants(label), chain)
    return label, chain


def classify_constants(sc: StructureConstants) -> Tuple[CanonicalLabel, WitnessChain]:
    """Canonical label of raw constants; the chain starts at ``sc`` itself."""
    from .presentation import extract_presentation

    p, basis = extract_presentation(sc)
    label, chain = canonical_label(p)
    chain = chain.after("distinguished-basis", basis)
    return label, _verified(sc, canonical_structure_constants(label), chain)


@dataclass(frozen=True)
class Isomorphic:
    witness: Mat
    label: CanonicalLabel


@dataclass(frozen=True)
class NotIsomorphic:
    label_a: CanonicalLabel
    label_b: CanonicalLabel


IsoResult = Union[Isomorphic, NotIsomorphic]


def _label_and_chain(x) -> Tuple[CanonicalLabel, WitnessChain, StructureConstants]:
    if isinstance(x, Bl4Presentation):
        label, chain = canonical_label(x)
        return label, chain, to_structure_constants(x)
    label, chain = classify_constants(x)
    return label, chain, x


def are_isomorphic(a, b) -> IsoResult:
    """Decide isomorphism of two presentations (or raw constants).

    On success the witness ``W`` satisfies ``is_isomorphism(sc_a, sc_b, W)``.
    """
    la, ca, sa = _label_and_chain(a)
    lb, cb, sb = _label_and_chain(b)
    if la != lb:
        return NotIsomorphic(la, lb)
    w = mat_mul(ca.product, inverse(cb.product))
    if not is_isomorphism(sa, sb, w):
        raise WitnessError("isomorphism witness failed the oracle")
    return Isomorphic(w, la)


@dataclass(frozen=True)
class Properties:
    is_lie: bool
    is_malcev: bool
    is_binary_lie: bool

    def as_tuple(self) -> Tuple[bool, bool, bool]:
        return (self.is_lie, self.is_malcev, self.is_binary_lie)


def property_table(label: CanonicalLabel) -> Properties:
    v = label.variant
    if v == "A0":
        return Properties(False, False, True)
    if v == "A1":
        return Properties(True, True, True)
    if v == "B":
        return Properties(False, False, False)
    if v == "C":
        return Properties(label.lam == 2, label.lam in (-1, 2), True)
    lie = label.lam == label.mu + 1
    return Properties(lie, lie, lie)


def computed_properties(sc: StructureConstants) -> Properties:
    return Properties(algebra.is_lie(sc), algebra.is_malcev(sc), algebra.is_binary_lie(sc))


__all__ = [
    "CanonicalLabel",
    "WitnessChain",
    "WitnessError",
    "reduce_direct",
    "canonical_label",
    "canonical_presentation",
    "canonical_structure_constants",
    "classify_constants",
    "are_isomorphic",
    "Isomorphic",
    "NotIsomorphic",
    "opposite_matrix",
    "opposite_label",
    "property_table",
    "computed_properties",
    "Properties",
]
