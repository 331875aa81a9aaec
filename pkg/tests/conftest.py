import os
import sys
from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("bl4", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("bl4")

small_ints = st.integers(min_value=-9, max_value=9)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=9))
nonzero_rationals = rationals.filter(lambda q: q != 0)


def vectors(n=4):
    return st.tuples(*[rationals] * n)


def matrices(n=4):
    return st.tuples(*[vectors(n)] * n)


@st.composite
def invertible_matrices(draw, n=4):
    from bl4kit.linalg import det

    m = draw(matrices(n))
    if det(m) == 0:
        # nudge the diagonal; lands on an invertible matrix for all but finitely many shifts
        for shift in range(1, 2 * n + 2):
            m2 = tuple(tuple(x + (shift if i == j else 0) for j, x in enumerate(row)) for i, row in enumerate(m))
            if det(m2) != 0:
                return m2
    return m


@st.composite
def structure_constants(draw, n=4):
    from bl4kit.algebra import StructureConstants

    prods = {}
    for i in range(n):
        for j in range(i + 1, n):
            prods[(i, j)] = draw(vectors(n))
    return StructureConstants.from_products(prods, n)


@st.composite
def bl4_presentations(draw, xi3=None):
    from bl4kit.presentation import Bl4Presentation

    xi = draw(nonzero_rationals) if xi3 is None else xi3
    case = draw(st.sampled_from(("a0", "diag", "general")))
    if case == "a0":
        return Bl4Presentation(0, xi, ((0, 0), (draw(rationals), draw(nonzero_rationals))))
    x11 = draw(nonzero_rationals)
    if case == "diag":
        return Bl4Presentation(x11, xi, ((draw(nonzero_rationals), 0), (draw(rationals), draw(rationals))))
    return Bl4Presentation(x11, xi, ((draw(rationals), draw(nonzero_rationals)), (draw(rationals), draw(rationals))))
