"""
The n-component link family and its certificates.

For n >= 2 and k >= 0, K_1 is the figure-eight knot and K_2, ..., K_n start
as meridians of K_1 with coefficients (n-2, 0, 1, ..., 1). Sliding each K_i
over K_1 along a band with i+k full twists turns K_i into the 2-bridge knot
S(1+20(i+k), 2-10(i+k)) with coefficient n (i = 2) or n+1 (i > 2).
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..data.presentation import (
    FIGURE_EIGHT,
    UNKNOT,
    KnotTag,
    Slope,
    SurgeryPresentation,
    encode,
    framed_linking_matrix,
    new_presentation,
)
from ..errors import InvalidParams
from ..utils.log import get_logger
from . import twobridge
from .homology import determinant, first_homology, signature
from .moves import BlowDown, HandleSlide, KirbyMove, Retype, RolfsenTwist
from .twobridge import TwoBridgeClass
from .verifier import MoveScript, VerificationReport, verify_script

log = get_logger(__name__)

BAND_UNDONE = "band sum with the framed push-off of K_1 undone; K_{i} is again a meridian of K_1"
UNKNOT_K1 = "K_1 changed to an unknot by using the 0-framed meridian K_2 (diagram isotopy)"
TUNNEL_CITATION = (
    "upper bound: the arcs gamma_1, ..., gamma_{n-1} at the band sums form an "
    "unknotting tunnel system of L (read from the construction diagram)"
)
HOPF_WAYPOINT = (
    "after the twists the diagram is also a Hopf link with coefficients 0 and 2; "
    "this script blows down to the empty diagram instead of stopping there"
)


@dataclass(frozen=True, order=True)
class FamilyParams:
    n: int
    k: int

    def __post_init__(self):
        for name in ("n", "k"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise InvalidParams(f"{name} must be an integer, got {value!r}")
        if self.n < 2:
            raise InvalidParams(f"n must be at least 2, got {self.n}")
        if self.k < 0:
            raise InvalidParams(f"k must be non-negative, got {self.k}")

    def __str__(self) -> str:
        return f"(n={self.n}, k={self.k})"


def _params(params) -> FamilyParams:
    if isinstance(params, FamilyParams):
        return params
    n, k = params
    return FamilyParams(n, k)


def base_presentation(params) -> SurgeryPresentation:
    """The figure-eight knot with n-1 meridians, coefficients (n-2, 0, 1, ..., 1)."""
    n = _params(params).n
    components = [(FIGURE_EIGHT, Slope.integral(n - 2)), (UNKNOT, Slope.integral(0))]
    components.extend((UNKNOT, Slope.integral(1)) for _ in range(3, n + 1))
    linking = [[0] * n for _ in range(n)]
    for i in range(1, n):
        linking[0][i] = linking[i][0] = 1
    return new_presentation(components, linking)


def component_tag(i: int, k: int) -> KnotTag:
    return KnotTag.two_bridge(*twobridge.family_pq(i, k))


def final_presentation(params) -> SurgeryPresentation:
    """The link L after the band sums, with coefficients (n-2, n, n+1, ..., n+1)."""
    params = _params(params)
    n, k = params.n, params.k
    components = [(FIGURE_EIGHT, Slope.integral(n - 2))]
    for i in range(2, n + 1):
        components.append((component_tag(i, k), Slope.integral(n if i == 2 else n + 1)))
    linking = [[0 if i == j else n for j in range(n)] for i in range(n)]
    for i in range(1, n):
        linking[0][i] = linking[i][0] = n - 1
    return new_presentation(components, linking)


def _lemma_moves(n: int) -> List[KirbyMove]:
    moves: List[KirbyMove] = [BlowDown(i) for i in range(n, 2, -1)]
    moves.append(RolfsenTwist(2, -1))
    moves.append(Retype(1, UNKNOT, UNKNOT_K1))
    moves.append(BlowDown(1))
    moves.append(BlowDown(2))
    return moves


def lemma_script(params) -> MoveScript:
    """Reduction of the base presentation to the empty diagram."""
    params = _params(params)
    return MoveScript(
        initial=base_presentation(params),
        moves=tuple(_lemma_moves(params.n)),
        claimed_final=new_presentation([], []),
        notes=(HOPF_WAYPOINT,),
    )


def reduction_script(params) -> MoveScript:
    """Undo the band sums, then reduce the base presentation to the empty diagram."""
    params = _params(params)
    moves: List[KirbyMove] = []
    for i in range(2, params.n + 1):
        moves.append(HandleSlide(i, 1, -1))
        moves.append(Retype(i, UNKNOT, BAND_UNDONE.format(i=i)))
    moves.extend(_lemma_moves(params.n))
    return MoveScript(
        initial=final_presentation(params),
        moves=tuple(moves),
        claimed_final=new_presentation([], []),
        notes=(HOPF_WAYPOINT,),
    )


def component_classes(p: SurgeryPresentation) -> List[Optional[TwoBridgeClass]]:
    return [twobridge.from_tag(c.knot) for c in p.components]


def linking_graph(p: SurgeryPresentation) -> nx.Graph:
    """Components as nodes, an edge wherever the linking number is nonzero."""
    graph = nx.Graph()
    graph.add_nodes_from(p.ids)
    for a, b in combinations(range(len(p)), 2):
        if p.linking[a][b]:
            graph.add_edge(p.components[a].id, p.components[b].id, lk=p.linking[a][b])
    return graph


@dataclass
class FamilyCertificate:
    params: FamilyParams
    presentation: SurgeryPresentation
    script: MoveScript
    s3_report: VerificationReport
    component_classes: List[Optional[TwoBridgeClass]]
    properties: Dict[str, bool]
    retype_axioms: List[Tuple[Optional[int], str]] = field(default_factory=list)
    determinant: int = 0
    signature: int = 0
    tunnel_bounds: Tuple[int, int] = (0, 0)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.properties.values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": {"n": self.params.n, "k": self.params.k},
            "ok": self.ok,
            "properties": dict(self.properties),
            "component_classes": [
                None if c is None else c.to_dict() for c in self.component_classes
            ],
            "determinant": self.determinant,
            "signature": self.signature,
            "tunnel_bounds": {"lower": self.tunnel_bounds[0], "upper": self.tunnel_bounds[1]},
            "retype_axioms": [
                {"step": step, "justification": text} for step, text in self.retype_axioms
            ],
            "notes": list(self.notes),
            "presentation": encode(self.presentation),
            "script": self.script.to_dict(),
            "s3_report": self.s3_report.to_dict(),
        }


def _distinct_and_hyperbolic(classes: Sequence[Optional[TwoBridgeClass]], mirror_insensitive: bool) -> bool:
    if any(c is None for c in classes):
        return False
    if not all(twobridge.is_hyperbolic(c) for c in classes):
        return False
    return not any(
        twobridge.equivalent(a, b, mirror_insensitive) for a, b in combinations(classes, 2)
    )


def certify(params, mirror_insensitive: bool = False) -> FamilyCertificate:
    """Check the four link properties for one member of the family."""
    params = _params(params)
    n = params.n
    presentation = final_presentation(params)
    script = reduction_script(params)
    report = verify_script(script)
    matrix = framed_linking_matrix(presentation)

    surgery_s3 = (
        report.ok
        and first_homology(presentation).is_trivial
        and not any(c.slope.is_meridional for c in presentation.components)
    )
    classes = component_classes(presentation)
    distinct = _distinct_and_hyperbolic(classes, mirror_insensitive)
    # connected nonzero linking is sufficient, not necessary, for unsplittability
    unsplittable = nx.is_connected(linking_graph(presentation))
    # lower bound: a link of n components needs at least n-1 tunnels
    lower, upper = len(presentation) - 1, n - 1

    axioms = list(report.retype_steps)
    axioms.append((None, TUNNEL_CITATION))
    notes = [
        "unsplittability certified by the connected nonzero-linking graph "
        "(a sufficient condition)",
    ]
    if n == 2:
        notes.append(
            "n = 2: L has tunnel number one; hyperbolicity of the link exterior follows "
            "from atoroidality and non-Seifert-fiberedness results (recorded, not verified)"
        )

    properties = {
        "surgery_yields_s3": surgery_s3,
        "components_distinct_hyperbolic": distinct,
        "unsplittable": unsplittable,
        "tunnel_number": lower == upper,
    }
    for name, value in properties.items():
        log.info("%s %s: %s", params, name, value)

    return FamilyCertificate(
        params=params,
        presentation=presentation,
        script=script,
        s3_report=report,
        component_classes=classes,
        properties=properties,
        retype_axioms=axioms,
        determinant=determinant(matrix),
        signature=signature(matrix),
        tunnel_bounds=(lower, upper),
        notes=notes,
    )


def _certify_one(args) -> FamilyCertificate:
    params, mirror_insensitive = args
    return certify(params, mirror_insensitive)


def certify_range(
    params: Iterable,
    workers: int = 1,
    mirror_insensitive: bool = False,
) -> List[FamilyCertificate]:
    """Certify many parameter pairs, returned in (n, k) order."""
    ordered = sorted({_params(p) for p in params})
    jobs = [(p, mirror_insensitive) for p in ordered]
    if workers <= 1 or len(jobs) <= 1:
        return [_certify_one(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_certify_one, jobs))


def class_multiset(params, mirror_insensitive: bool = False) -> Counter:
    classes = component_classes(final_presentation(params))
    if mirror_insensitive:
        classes = [twobridge.normalize_mirror_insensitive(c.p, c.q_canonical) for c in classes]
    return Counter(classes)


def distinct_links(a, b, mirror_insensitive: bool = False) -> bool:
    """True when the multisets of component classes differ."""
    return class_multiset(a, mirror_insensitive) != class_multiset(b, mirror_insensitive)
