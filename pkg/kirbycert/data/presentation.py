"""
Surgery presentations of closed 3-manifolds as framed-link data.

A presentation is reduced to what the arithmetic needs: a knot-type tag and a
surgery slope per component, plus the symmetric matrix of pairwise linking
numbers. Framings live in the slopes, so the linking matrix has zero diagonal.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from ..errors import (
    AsymmetricMatrix,
    DimensionMismatch,
    DuplicateId,
    InvalidKnotTag,
    InvalidSlope,
    Meridional,
    NonIntegral,
    NonzeroDiagonal,
    SchemaError,
    UnknownId,
)
from .validation import validate_document

Matrix = Tuple[Tuple[int, ...], ...]
FramedLinkingMatrix = Matrix


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    """Freeze a nested iterable of integers into a tuple matrix."""
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class Slope:
    """A surgery slope p/q, normalized so that gcd(|p|, q) = 1 and q >= 0.

    The meridian (trivial filling) is stored as 1/0; -1/0 is accepted for it.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        num, den = int(self.numerator), int(self.denominator)
        if num == 0 and den == 0:
            raise InvalidSlope("slope 0/0 is not a curve")
        if den < 0:
            num, den = -num, -den
        if den == 0:
            if abs(num) != 1:
                raise InvalidSlope(f"slope {num}/0: only 1/0 names the meridian")
            num = 1
        else:
            g = gcd(num, den)
            num, den = num // g, den // g
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def integral(cls, framing: int) -> "Slope":
        return cls(framing, 1)

    @classmethod
    def meridian(cls) -> "Slope":
        return cls(1, 0)

    @property
    def is_meridional(self) -> bool:
        return self.denominator == 0

    @property
    def is_integral(self) -> bool:
        return self.denominator == 1

    def as_fraction(self) -> Fraction:
        """Return the slope as an exact rational."""
        if self.is_meridional:
            raise Meridional("the meridional slope has no rational value")
        return Fraction(self.numerator, self.denominator)

    def __str__(self) -> str:
        if self.is_meridional:
            return "inf"
        if self.is_integral:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


class KnotKind(str, Enum):
    UNKNOT = "Unknot"
    FIGURE_EIGHT = "FigureEight"
    TWO_BRIDGE = "TwoBridge"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class KnotTag:
    """Knot type of a single component.

    Tags are bookkeeping, not diagrams. ``TwoBridge`` keeps the (p, q) it was
    given; canonical forms are computed by :mod:`kirbycert.analysis.twobridge`.
    """

    kind: KnotKind
    p: Optional[int] = None
    q: Optional[int] = None

    def __post_init__(self):
        try:
            kind = KnotKind(self.kind)
        except ValueError:
            raise InvalidKnotTag(f"unknown knot kind {self.kind!r}") from None
        object.__setattr__(self, "kind", kind)

        if kind is KnotKind.TWO_BRIDGE:
            if self.p is None or self.q is None:
                raise InvalidKnotTag("TwoBridge needs both p and q")
            p, q = int(self.p), int(self.q)
            if p < 3 or p % 2 == 0:
                raise InvalidKnotTag(f"TwoBridge p must be odd and >= 3, got {p}")
            if q % p == 0 or gcd(p, q % p) != 1:
                raise InvalidKnotTag(f"TwoBridge q={q} is not a unit mod {p}")
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)
        elif self.p is not None or self.q is not None:
            raise InvalidKnotTag(f"{kind.value} takes no parameters")

    @classmethod
    def two_bridge(cls, p: int, q: int) -> "KnotTag":
        return cls(KnotKind.TWO_BRIDGE, p, q)

    @property
    def is_unknot(self) -> bool:
        return self.kind is KnotKind.UNKNOT

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value}
        if self.kind is KnotKind.TWO_BRIDGE:
            data["p"] = self.p
            data["q"] = self.q
        return data

    def __str__(self) -> str:
        if self.kind is KnotKind.TWO_BRIDGE:
            return f"S({self.p},{self.q})"
        return self.kind.value


UNKNOT = KnotTag(KnotKind.UNKNOT)
FIGURE_EIGHT = KnotTag(KnotKind.FIGURE_EIGHT)
UNKNOWN = KnotTag(KnotKind.UNKNOWN)


@dataclass(frozen=True)
class Component:
    id: int
    knot: KnotTag
    slope: Slope


@dataclass(frozen=True)
class SurgeryPresentation:
    """An ordered list of surgered components and their linking numbers.

    ``linking`` is indexed by position in ``components``; ids are stable
    labels that survive every move which keeps the component.
    """

    components: Tuple[Component, ...] = ()
    linking: Matrix = ()
    _index: Dict[int, int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        components = tuple(self.components)
        linking = as_matrix(self.linking)
        object.__setattr__(self, "components", components)
        object.__setattr__(self, "linking", linking)

        size = len(components)
        if len(linking) != size or any(len(row) != size for row in linking):
            raise DimensionMismatch(
                f"linking matrix must be {size}x{size} for {size} components"
            )
        for i in range(size):
            if linking[i][i] != 0:
                raise NonzeroDiagonal(
                    f"linking diagonal must be zero (framings live in slopes), "
                    f"entry ({i},{i}) is {linking[i][i]}"
                )
            for j in range(i + 1, size):
                if linking[i][j] != linking[j][i]:
                    raise AsymmetricMatrix(f"lk({i},{j}) != lk({j},{i})")

        index = {}
        for position, component in enumerate(components):
            if component.id in index:
                raise DuplicateId(f"component id {component.id} appears twice")
            index[component.id] = position
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.components)

    @property
    def ids(self) -> List[int]:
        return [c.id for c in self.components]

    @property
    def is_empty(self) -> bool:
        return not self.components

    @property
    def is_integral(self) -> bool:
        return all(c.slope.is_integral for c in self.components)

    def next_id(self) -> int:
        return max(self._index, default=0) + 1

    def index_of(self, component_id: int) -> int:
        try:
            return self._index[component_id]
        except KeyError:
            raise UnknownId(f"no component with id {component_id}") from None

    def component(self, component_id: int) -> Component:
        return self.components[self.index_of(component_id)]

    def lk(self, a: int, b: int) -> int:
        """Linking number of the components with ids ``a`` and ``b``."""
        return self.linking[self.index_of(a)][self.index_of(b)]

    def replace(
        self,
        components: Sequence[Component],
        linking: Iterable[Iterable[int]],
    ) -> "SurgeryPresentation":
        return SurgeryPresentation(tuple(components), as_matrix(linking))

    def with_knot(self, component_id: int, knot: KnotTag) -> "SurgeryPresentation":
        position = self.index_of(component_id)
        components = list(self.components)
        old = components[position]
        components[position] = Component(old.id, knot, old.slope)
        return SurgeryPresentation(tuple(components), self.linking)

    def without(self, component_id: int) -> "SurgeryPresentation":
        """Drop a component together with its linking row and column."""
        position = self.index_of(component_id)
        keep = [i for i in range(len(self)) if i != position]
        return SurgeryPresentation(
            tuple(self.components[i] for i in keep),
            tuple(tuple(self.linking[i][j] for j in keep) for i in keep),
        )


def new_presentation(
    components: Sequence[Tuple[KnotTag, Slope]],
    linking: Iterable[Iterable[int]],
) -> SurgeryPresentation:
    """Build a validated presentation with ids 1, 2, ... in the given order."""
    built = tuple(
        Component(position, knot, slope if isinstance(slope, Slope) else Slope(*slope))
        for position, (knot, slope) in enumerate(components, start=1)
    )
    return SurgeryPresentation(built, as_matrix(linking))


def framed_linking_matrix(p: SurgeryPresentation) -> FramedLinkingMatrix:
    """Linking matrix with the integral framings written on the diagonal."""
    for component in p.components:
        if component.slope.is_meridional:
            raise Meridional(f"component {component.id} has the meridional slope")
        if not component.slope.is_integral:
            raise NonIntegral(
                f"component {component.id} has non-integral slope {component.slope}"
            )
    return tuple(
        tuple(
            p.components[i].slope.numerator if i == j else p.linking[i][j]
            for j in range(len(p))
        )
        for i in range(len(p))
    )


def generalized_relation_matrix(p: SurgeryPresentation) -> Matrix:
    """First-homology relation matrix of a rational surgery.

    Row i reads p_i * mu_i + q_i * sum_j lk(i, j) * mu_j for slope p_i/q_i.
    """
    for component in p.components:
        if component.slope.is_meridional:
            raise Meridional(f"component {component.id} has the meridional slope")
    rows = []
    for i, component in enumerate(p.components):
        num, den = component.slope.numerator, component.slope.denominator
        rows.append(
            tuple(num if i == j else den * p.linking[i][j] for j in range(len(p)))
        )
    return tuple(rows)


def fill_meridians(p: SurgeryPresentation) -> SurgeryPresentation:
    """Remove every component with the meridional slope.

    Meridional filling gives back the solid torus that was drilled out, so the
    surgered manifold does not change.
    """
    result = p
    for component in p.components:
        if component.slope.is_meridional:
            result = result.without(component.id)
    return result


def _same_knot(x: KnotTag, y: KnotTag) -> bool:
    if x == y:
        return True
    # twobridge builds on this module
    from ..analysis.twobridge import from_tag

    a, b = from_tag(x), from_tag(y)
    return a is not None and a == b


def same_up_to_renumbering(a: SurgeryPresentation, b: SurgeryPresentation) -> bool:
    """Compare presentations component by component, ignoring ids.

    Knot tags match when they name the same 2-bridge class, so S(41,-18),
    S(41,23) and S(41,25) agree (the mirror S(41,16) does not), and
    FigureEight agrees with S(5,2).
    """
    if len(a) != len(b) or a.linking != b.linking:
        return False
    return all(
        x.slope == y.slope and _same_knot(x.knot, y.knot)
        for x, y in zip(a.components, b.components)
    )


# JSON interchange

def encode(p: SurgeryPresentation) -> Dict[str, Any]:
    """Convert a presentation to its canonical JSON document."""
    return {
        "components": [
            {
                "id": c.id,
                "knot": c.knot.to_dict(),
                "slope": {"num": c.slope.numerator, "den": c.slope.denominator},
            }
            for c in p.components
        ],
        "linking": [list(row) for row in p.linking],
    }


def _knot(data: Dict[str, Any], where: str) -> KnotTag:
    p, q = data.get("p"), data.get("q")
    try:
        return KnotTag(data["kind"], None if p is None else int(p), None if q is None else int(q))
    except InvalidKnotTag as e:
        raise SchemaError(f"{where}: {e}") from e


def decode_knot(data: Any, where: str = "knot") -> KnotTag:
    """Build a knot tag from its JSON object."""
    validate_document(data, "presentation#/$defs/knot")
    return _knot(data, where)


def decode(doc: Any) -> SurgeryPresentation:
    """Build a presentation from its JSON document.

    The schema covers shapes and types; symmetry, the zero diagonal, unique
    ids and coprime TwoBridge parameters are checked while building.
    """
    validate_document(doc, "presentation")
    components = []
    for position, entry in enumerate(doc["components"]):
        where = f"components[{position}]"
        slope = entry["slope"]
        components.append(
            Component(
                int(entry["id"]),
                _knot(entry["knot"], f"{where}.knot"),
                Slope(int(slope["num"]), int(slope["den"])),
            )
        )
    try:
        return SurgeryPresentation(tuple(components), as_matrix(doc["linking"]))
    except (DimensionMismatch, AsymmetricMatrix, NonzeroDiagonal, DuplicateId) as e:
        raise SchemaError(str(e)) from e


def presentation_to_json(p: SurgeryPresentation) -> str:
    return json.dumps(encode(p), indent=2)


def presentation_from_json(text: str) -> SurgeryPresentation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e}") from e
    return decode(doc)
