"""
Arithmetic of 2-bridge knots S(p, q) and negative continued fractions.

Two 2-bridge knots S(p, q) and S(p', q') are treated as the same class when
p = p' and q' = q or q*q' = 1 (mod p). Mirrors are distinct unless the
mirror-insensitive variant is requested, which also allows q' = -q^(+-1).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from ..data.presentation import (
    Component,
    KnotKind,
    KnotTag,
    Slope,
    SurgeryPresentation,
    UNKNOT,
)
from ..errors import (
    AlreadyIntegral,
    DegenerateQ,
    EvenP,
    Meridional,
    NotCoprime,
    NotUnknot,
    ZeroDenominator,
)

FIGURE_EIGHT_PQ = (5, 3)


@dataclass(frozen=True, order=True)
class TwoBridgeClass:
    """Schubert normal form with the canonical q in (0, p)."""

    p: int
    q_canonical: int

    def __str__(self) -> str:
        return f"S({self.p},{self.q_canonical})"

    def to_dict(self) -> dict:
        return {"p": self.p, "q_canonical": self.q_canonical}


def _residues(p: int, q: int) -> Tuple[int, int]:
    if p % 2 == 0:
        raise EvenP(f"p={p} is even: S(p,q) would be a 2-component link")
    if p < 3:
        raise DegenerateQ(f"p={p} leaves no unit q: S(p,q) needs p >= 3")
    r = q % p
    if r == 0:
        raise DegenerateQ(f"q={q} is divisible by p={p}")
    if gcd(p, r) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, r)}")
    return r, pow(r, -1, p)


def normalize(p: int, q: int) -> TwoBridgeClass:
    """Canonical class of S(p, q): q_canonical = min(q mod p, q^-1 mod p)."""
    r, inverse = _residues(p, q)
    return TwoBridgeClass(p, min(r, inverse))


def normalize_mirror_insensitive(p: int, q: int) -> TwoBridgeClass:
    """Canonical class of S(p, q) up to mirror image as well."""
    r, inverse = _residues(p, q)
    return TwoBridgeClass(p, min(r, inverse, p - r, p - inverse))


def mirror(c: TwoBridgeClass) -> TwoBridgeClass:
    return normalize(c.p, -c.q_canonical)


def equivalent(a: TwoBridgeClass, b: TwoBridgeClass, mirror_insensitive: bool = False) -> bool:
    if mirror_insensitive:
        return (
            a.p == b.p
            and normalize_mirror_insensitive(a.p, a.q_canonical)
            == normalize_mirror_insensitive(b.p, b.q_canonical)
        )
    return a == b


def is_hyperbolic(c: TwoBridgeClass) -> bool:
    """A 2-bridge knot is hyperbolic unless it is the (2, p) torus knot."""
    return c.q_canonical not in (1, c.p - 1)


def knot_determinant(c: TwoBridgeClass) -> int:
    return c.p


def from_tag(tag: KnotTag) -> Optional[TwoBridgeClass]:
    """The 2-bridge class a knot tag names, or None for Unknot/Unknown."""
    if tag.kind is KnotKind.FIGURE_EIGHT:
        return normalize(*FIGURE_EIGHT_PQ)
    if tag.kind is KnotKind.TWO_BRIDGE:
        return normalize(tag.p, tag.q)
    return None


def family_pq(i: int, k: int) -> Tuple[int, int]:
    """Schubert parameters of the i-th component after a band with i+k full twists."""
    twists = i + k
    return 1 + 20 * twists, 2 - 10 * twists


def family_knot(i: int, k: int) -> TwoBridgeClass:
    return normalize(*family_pq(i, k))


# Continued fractions

@dataclass(frozen=True)
class NegContinuedFraction:
    """a1 - 1/(a2 - 1/(... - 1/am))"""

    coefficients: Tuple[int, ...]

    def fold(self) -> Fraction:
        return fold(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)


def fold(coefficients: Sequence[int]) -> Fraction:
    """Evaluate a negative continued fraction exactly."""
    if not coefficients:
        raise ValueError("empty continued fraction")
    value = Fraction(coefficients[-1])
    for a in reversed(coefficients[:-1]):
        value = a - 1 / value
    return value


def neg_continued_fraction(num: int, den: int) -> NegContinuedFraction:
    """Expand num/den as a1 - 1/(a2 - ...) with a_j >= 2 for j >= 2.

    a1 is the ceiling of num/den, so it may be any integer (negative fractions
    included); every later quotient exceeds 1 and so rounds up to at least 2.
    """
    if den == 0:
        raise ZeroDenominator(f"{num}/0 has no continued fraction")
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    if g != 1:
        raise NotCoprime(f"gcd({num}, {den}) = {g}")

    coefficients: List[int] = []
    while True:
        a = -((-num) // den)
        coefficients.append(a)
        remainder = a * den - num
        if remainder == 0:
            return NegContinuedFraction(tuple(coefficients))
        num, den = den, remainder


def expand_rational_surgery(p: SurgeryPresentation, component_id: int) -> SurgeryPresentation:
    """Replace a rational slope on an unknot by an integral chain of unknots.

    The component keeps its id and takes framing a1; the chain of new unknots
    with framings a2, ..., am is appended, each linked once to its neighbour.
    """
    position = p.index_of(component_id)
    component = p.components[position]
    if not component.knot.is_unknot:
        raise NotUnknot(f"component {component_id} is tagged {component.knot}")
    if component.slope.is_meridional:
        raise Meridional(f"component {component_id} has the meridional slope")
    if component.slope.is_integral:
        raise AlreadyIntegral(f"component {component_id} already has slope {component.slope}")

    coefficients = neg_continued_fraction(
        component.slope.numerator, component.slope.denominator
    ).coefficients
    size = len(p)
    chain = len(coefficients) - 1
    total = size + chain

    linking = [list(row) + [0] * chain for row in p.linking]
    linking.extend([0] * total for _ in range(chain))
    previous = position
    for offset in range(chain):
        current = size + offset
        linking[previous][current] = linking[current][previous] = 1
        previous = current

    components = list(p.components)
    components[position] = Component(component.id, component.knot, Slope.integral(coefficients[0]))
    next_id = p.next_id()
    for offset, framing in enumerate(coefficients[1:]):
        components.append(Component(next_id + offset, UNKNOT, Slope.integral(framing)))
    return p.replace(components, linking)
