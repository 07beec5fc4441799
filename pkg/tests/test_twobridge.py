"""
Tests for 2-bridge arithmetic, continued fractions and rational expansion.
"""

import random
from fractions import Fraction
from math import gcd

import pytest

from kirbycert.analysis import twobridge
from kirbycert.analysis.homology import first_homology
from kirbycert.analysis.twobridge import (
    NegContinuedFraction,
    TwoBridgeClass,
    equivalent,
    expand_rational_surgery,
    fold,
    from_tag,
    is_hyperbolic,
    neg_continued_fraction,
    normalize,
    normalize_mirror_insensitive,
)
from kirbycert.data.presentation import (
    FIGURE_EIGHT,
    UNKNOT,
    UNKNOWN,
    KnotTag,
    Slope,
    framed_linking_matrix,
    new_presentation,
)
from kirbycert.errors import (
    AlreadyIntegral,
    DegenerateQ,
    EvenP,
    Meridional,
    NotCoprime,
    NotUnknot,
    ZeroDenominator,
)
from tests.randomized import random_presentation, with_slope


def test_normalize_family_example():
    """S(41, -18): -18 = 23 (mod 41) and 23 * 25 = 1 (mod 41)."""
    assert normalize(41, -18) == TwoBridgeClass(41, 23)
    assert normalize(41, 25) == TwoBridgeClass(41, 23)
    assert str(normalize(41, -18)) == "S(41,23)"


def test_normalize_errors():
    with pytest.raises(EvenP):
        normalize(8, 3)
    with pytest.raises(NotCoprime):
        normalize(9, 3)
    with pytest.raises(DegenerateQ):
        normalize(7, 14)
    with pytest.raises(DegenerateQ):
        normalize(1, 0)


def test_normalize_is_class_invariant():
    """q, q + p and q^-1 all land on the same canonical form."""
    for p in range(3, 60, 2):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            c = normalize(p, q)
            assert 0 < c.q_canonical < p
            assert normalize(p, q + 7 * p) == c
            assert normalize(p, pow(q, -1, p)) == c


def test_mirror_insensitive():
    assert normalize(7, 2) != normalize(7, -2)
    assert normalize_mirror_insensitive(7, 2) == normalize_mirror_insensitive(7, -2)
    assert normalize_mirror_insensitive(41, -18) == TwoBridgeClass(41, 16)
    assert twobridge.mirror(normalize(7, 2)) == normalize(7, 5)


def test_equivalence_relation():
    classes = [normalize(p, q) for p in range(3, 40, 2) for q in range(1, p) if gcd(p, q) == 1]
    for flag in (False, True):
        for a in classes[:60]:
            assert equivalent(a, a, flag)
            for b in classes[:60]:
                assert equivalent(a, b, flag) == equivalent(b, a, flag)
    assert not equivalent(normalize(7, 2), normalize(7, 3))
    assert equivalent(normalize(7, 2), normalize(7, 3), mirror_insensitive=True)
    assert not equivalent(normalize(7, 2), normalize(9, 2), mirror_insensitive=True)


def test_is_hyperbolic():
    # torus knots T(2, p)
    assert not is_hyperbolic(normalize(3, 1))
    assert not is_hyperbolic(normalize(5, 1))
    assert not is_hyperbolic(normalize(7, 6))
    assert is_hyperbolic(normalize(5, 2))
    assert is_hyperbolic(normalize(7, 3))


def test_figure_eight_tag():
    assert from_tag(FIGURE_EIGHT) == TwoBridgeClass(5, 2)
    assert from_tag(KnotTag.two_bridge(41, -18)) == TwoBridgeClass(41, 23)
    assert from_tag(UNKNOT) is None
    assert from_tag(UNKNOWN) is None


def test_family_knots_hyperbolic_and_distinct():
    """Every S(1+20m, 2-10m) with m >= 1 is a hyperbolic knot, one class per m."""
    seen = set()
    for m in range(1, 101):
        p, q = twobridge.family_pq(m, 0)
        assert p % 2 == 1 and gcd(p, q) == 1
        c = twobridge.family_knot(m, 0)
        assert is_hyperbolic(c)
        assert twobridge.knot_determinant(c) == p
        seen.add(normalize_mirror_insensitive(c.p, c.q_canonical))
    assert len(seen) == 100


def test_family_pq_depends_on_sum():
    assert twobridge.family_pq(2, 0) == (41, -18)
    assert twobridge.family_pq(3, 2) == twobridge.family_pq(5, 0) == (101, -48)


def test_neg_continued_fraction_examples():
    assert neg_continued_fraction(7, 2) == NegContinuedFraction((4, 2))
    assert neg_continued_fraction(41, 23).coefficients == (2, 5, 3, 2)
    assert neg_continued_fraction(-7, 2).coefficients == (-3, 2)
    assert neg_continued_fraction(5, 1).coefficients == (5,)
    assert neg_continued_fraction(7, -2).coefficients == (-3, 2)
    assert len(neg_continued_fraction(41, 23)) == 4


def test_neg_continued_fraction_errors():
    with pytest.raises(ZeroDenominator):
        neg_continued_fraction(3, 0)
    with pytest.raises(NotCoprime):
        neg_continued_fraction(4, 2)
    with pytest.raises(ValueError):
        fold([])


def test_neg_continued_fraction_folds_back():
    for a in range(2, 501):
        for b in range(1, a):
            if gcd(a, b) != 1:
                continue
            cf = neg_continued_fraction(a, b)
            assert all(x >= 2 for x in cf.coefficients[1:])
            assert cf.fold() == Fraction(a, b)


def test_neg_continued_fraction_negative_values():
    for a in range(-60, 61):
        for b in range(1, 30):
            if gcd(a, b) == 1:
                cf = neg_continued_fraction(a, b)
                assert fold(cf.coefficients) == Fraction(a, b)
                assert all(x >= 2 for x in cf.coefficients[1:])


def test_expand_lens_space():
    p = new_presentation([(UNKNOT, Slope(7, 2))], [[0]])
    expanded = expand_rational_surgery(p, 1)
    assert expanded.ids == [1, 2]
    assert framed_linking_matrix(expanded) == ((4, 1), (1, 2))
    assert first_homology(expanded).invariant_factors == (7,)


def test_expand_keeps_links_on_first_component():
    hopf = new_presentation([(UNKNOT, Slope(0)), (UNKNOT, Slope(41, 23))], [[0, 1], [1, 0]])
    expanded = expand_rational_surgery(hopf, 2)
    assert expanded.ids == [1, 2, 3, 4, 5]
    assert framed_linking_matrix(expanded) == (
        (0, 1, 0, 0, 0),
        (1, 2, 1, 0, 0),
        (0, 1, 5, 1, 0),
        (0, 0, 1, 3, 1),
        (0, 0, 0, 1, 2),
    )
    assert first_homology(expanded) == first_homology(hopf)


def test_expand_errors():
    with pytest.raises(NotUnknot):
        expand_rational_surgery(new_presentation([(FIGURE_EIGHT, Slope(3, 2))], [[0]]), 1)
    with pytest.raises(Meridional):
        expand_rational_surgery(new_presentation([(UNKNOT, Slope(1, 0))], [[0]]), 1)
    with pytest.raises(AlreadyIntegral):
        expand_rational_surgery(new_presentation([(UNKNOT, Slope(3))], [[0]]), 1)


def test_expand_preserves_homology_random():
    rng = random.Random(21)
    for _ in range(1000):
        p = random_presentation(rng, rational=True)
        target = rng.choice(p.ids)
        while True:
            slope = Slope(rng.randint(-9, 9), rng.randint(2, 6))
            if not slope.is_integral:
                break
        p = with_slope(p, target, slope, UNKNOT)
        expanded = expand_rational_surgery(p, target)
        assert first_homology(expanded) == first_homology(p)
        assert expanded.component(target).slope.is_integral


def test_smallest_family_knot():
    # 13 * 13 = 1 (mod 21), so S(21,-8) is its own inverse class
    assert twobridge.family_pq(1, 0) == (21, -8)
    c = twobridge.family_knot(1, 0)
    assert c == TwoBridgeClass(21, 13)
    assert is_hyperbolic(c)
    assert normalize_mirror_insensitive(21, -8) == TwoBridgeClass(21, 8)
