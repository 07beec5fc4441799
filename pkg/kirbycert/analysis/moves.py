"""
Kirby and Rolfsen moves acting on surgery presentations.

Moves act on the algebraic shadow of a framed link: knot tags, slopes and the
linking matrix. Whenever a move can change the knot type of a component, its
tag drops to Unknown; only ``retype`` raises a tag again, and it must cite
where the claim comes from.

Twists (and so blow-downs) read a linking number of +-1 with the twisting
unknot as a single passage through its disk. A full twist on one strand is
an isotopy, so such components keep their tags; |lk| >= 2 degrades them.
"""

from dataclasses import dataclass
from typing import Any, ClassVar, Dict, Type, Union

from ..data.presentation import (
    Component,
    KnotTag,
    Slope,
    SurgeryPresentation,
    UNKNOT,
    UNKNOWN,
    decode_knot,
)
from ..data.validation import validate_document
from ..errors import (
    EmptyJustification,
    FramingNotUnit,
    InvalidSign,
    NonIntegral,
    NotMeridional,
    NotUnknot,
    SameComponent,
)
from ..utils.log import get_logger

log = get_logger(__name__)


def _check_sign(sign: int) -> int:
    if sign not in (1, -1):
        raise InvalidSign(f"sign must be +1 or -1, got {sign}")
    return sign


def _require_unknot(p: SurgeryPresentation, component_id: int) -> Component:
    component = p.component(component_id)
    if not component.knot.is_unknot:
        raise NotUnknot(f"component {component_id} is tagged {component.knot}")
    return component


def _twist_others(p: SurgeryPresentation, position: int, t: int):
    """Effect of t full twists along the disk bounded by component ``position``.

    Returns new component and linking lists with the twisting component itself
    left untouched.
    """
    size = len(p)
    lk_c = [p.linking[i][position] for i in range(size)]

    components = []
    for i, component in enumerate(p.components):
        if i == position or lk_c[i] == 0:
            components.append(component)
            continue
        slope = component.slope
        shifted = Slope(slope.numerator + t * slope.denominator * lk_c[i] ** 2, slope.denominator)
        knot = component.knot if abs(lk_c[i]) == 1 else UNKNOWN
        components.append(Component(component.id, knot, shifted))

    linking = [list(row) for row in p.linking]
    for i in range(size):
        for j in range(size):
            if i != j and i != position and j != position:
                linking[i][j] += t * lk_c[i] * lk_c[j]
    return components, linking


def blow_up(p: SurgeryPresentation, sign: int) -> SurgeryPresentation:
    """Add a split (sign)-framed unknot."""
    _check_sign(sign)
    size = len(p)
    linking = [list(row) + [0] for row in p.linking] + [[0] * (size + 1)]
    components = list(p.components) + [Component(p.next_id(), UNKNOT, Slope.integral(sign))]
    return p.replace(components, linking)


def blow_down(p: SurgeryPresentation, component_id: int) -> SurgeryPresentation:
    """Remove a (+-1)-framed unknot, twisting everything through its disk by -+1."""
    component = _require_unknot(p, component_id)
    slope = component.slope
    if not slope.is_integral or slope.numerator not in (1, -1):
        raise FramingNotUnit(f"component {component_id} has slope {slope}, need +1 or -1")
    components, linking = _twist_others(p, p.index_of(component_id), -slope.numerator)
    return p.replace(components, linking).without(component_id)


def handle_slide(p: SurgeryPresentation, moving: int, over: int, sign: int) -> SurgeryPresentation:
    """Band-sum ``moving`` with a framed push-off of ``over``.

    On the framed linking matrix this is A -> E^T A E with E = I + sign * e_(over, moving).
    """
    _check_sign(sign)
    if moving == over:
        raise SameComponent(f"cannot slide component {moving} over itself")
    i, j = p.index_of(moving), p.index_of(over)
    for component in (p.components[i], p.components[j]):
        if not component.slope.is_integral:
            raise NonIntegral(f"component {component.id} has slope {component.slope}")

    f_i = p.components[i].slope.numerator
    f_j = p.components[j].slope.numerator
    lk_ij = p.linking[i][j]

    linking = [list(row) for row in p.linking]
    for m in range(len(p)):
        if m in (i, j):
            continue
        linking[i][m] = linking[m][i] = p.linking[i][m] + sign * p.linking[j][m]
    linking[i][j] = linking[j][i] = lk_ij + sign * f_j

    components = list(p.components)
    components[i] = Component(moving, UNKNOWN, Slope.integral(f_i + f_j + 2 * sign * lk_ij))
    return p.replace(components, linking)


def rolfsen_twist(p: SurgeryPresentation, component_id: int, t: int) -> SurgeryPresentation:
    """t full twists along the disk bounded by an unknotted component.

    The twisting component's slope a/b becomes a/(b + t*a); each other slope
    gains t * lk^2 and linkings shift by t * lk(i, c) * lk(j, c).
    """
    component = _require_unknot(p, component_id)
    position = p.index_of(component_id)
    components, linking = _twist_others(p, position, t)
    a, b = component.slope.numerator, component.slope.denominator
    components[position] = Component(component.id, component.knot, Slope(a, b + t * a))
    return p.replace(components, linking)


def delete_infinity(p: SurgeryPresentation, component_id: int) -> SurgeryPresentation:
    """Drop a meridionally filled unknot."""
    component = p.component(component_id)
    if not component.slope.is_meridional:
        raise NotMeridional(f"component {component_id} has slope {component.slope}")
    _require_unknot(p, component_id)
    return p.without(component_id)


def retype(p: SurgeryPresentation, component_id: int, tag: KnotTag, justification: str) -> SurgeryPresentation:
    """Assert a knot type for a component, on the strength of a citation."""
    p.index_of(component_id)
    if not justification or not justification.strip():
        raise EmptyJustification(f"retype of component {component_id} needs a citation")
    return p.with_knot(component_id, tag)


# Move values, as they appear in scripts

@dataclass(frozen=True)
class KirbyMove:
    op: ClassVar[str] = ""

    def apply(self, p: SurgeryPresentation) -> SurgeryPresentation:
        raise NotImplementedError

    def to_dict(self) -> Dict[str, Any]:
        raise NotImplementedError

    @property
    def label(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in self.to_dict().items() if k not in ("op", "justification"))
        return f"{self.op}({params})"

    @property
    def is_axiom(self) -> bool:
        """True for moves whose soundness the engine cannot check."""
        return False


@dataclass(frozen=True)
class BlowUp(KirbyMove):
    sign: int
    op: ClassVar[str] = "blow_up"

    def apply(self, p):
        return blow_up(p, self.sign)

    def to_dict(self):
        return {"op": self.op, "sign": self.sign}


@dataclass(frozen=True)
class BlowDown(KirbyMove):
    id: int
    op: ClassVar[str] = "blow_down"

    def apply(self, p):
        return blow_down(p, self.id)

    def to_dict(self):
        return {"op": self.op, "id": self.id}


@dataclass(frozen=True)
class HandleSlide(KirbyMove):
    moving: int
    over: int
    sign: int = 1
    op: ClassVar[str] = "handle_slide"

    def apply(self, p):
        return handle_slide(p, self.moving, self.over, self.sign)

    def to_dict(self):
        return {"op": self.op, "moving": self.moving, "over": self.over, "sign": self.sign}


@dataclass(frozen=True)
class RolfsenTwist(KirbyMove):
    on: int
    t: int
    op: ClassVar[str] = "rolfsen_twist"

    def apply(self, p):
        return rolfsen_twist(p, self.on, self.t)

    def to_dict(self):
        return {"op": self.op, "on": self.on, "t": self.t}


@dataclass(frozen=True)
class DeleteInfinity(KirbyMove):
    id: int
    op: ClassVar[str] = "delete_infinity"

    def apply(self, p):
        return delete_infinity(p, self.id)

    def to_dict(self):
        return {"op": self.op, "id": self.id}


@dataclass(frozen=True)
class Retype(KirbyMove):
    id: int
    new: KnotTag
    justification: str
    op: ClassVar[str] = "retype"

    def __post_init__(self):
        if not self.justification or not self.justification.strip():
            raise EmptyJustification(f"retype of component {self.id} needs a citation")

    def apply(self, p):
        return retype(p, self.id, self.new, self.justification)

    def to_dict(self):
        return {
            "op": self.op,
            "id": self.id,
            "new": self.new.to_dict(),
            "justification": self.justification,
        }

    @property
    def label(self) -> str:
        return f"{self.op}(id={self.id}, new={self.new})"

    @property
    def is_axiom(self) -> bool:
        return True


MOVE_TYPES: Dict[str, Type[KirbyMove]] = {
    cls.op: cls for cls in (BlowUp, BlowDown, HandleSlide, RolfsenTwist, DeleteInfinity, Retype)
}

_PARAMS = {
    "blow_up": ["sign"],
    "blow_down": ["id"],
    "handle_slide": ["moving", "over", "sign"],
    "rolfsen_twist": ["on", "t"],
    "delete_infinity": ["id"],
    "retype": ["id", "new", "justification"],
}


def apply_move(p: SurgeryPresentation, move: KirbyMove) -> SurgeryPresentation:
    log.debug("applying %s", move.label)
    return move.apply(p)


def move_from_dict(data: Any, where: str = "move") -> KirbyMove:
    """Decode one move from its JSON object."""
    validate_document(data, "script#/$defs/move")
    op = data["op"]
    kwargs: Dict[str, Union[int, str, KnotTag]] = {}
    for name in _PARAMS[op]:
        value = data[name]
        if name == "new":
            value = decode_knot(value, f"{where}.new")
        elif name != "justification":
            value = int(value)
        kwargs[name] = value
    return MOVE_TYPES[op](**kwargs)
