"""
Move scripts and their replay.

A script is a certificate: an initial presentation, a list of moves and the
presentation the author claims to reach. Replaying it checks every move's
preconditions and keeps a trace of H_1 after each step.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..data.presentation import (
    SurgeryPresentation,
    decode,
    encode,
    fill_meridians,
    generalized_relation_matrix,
    same_up_to_renumbering,
)
from ..data.validation import validate_document
from ..errors import KirbyCertError, SchemaError
from ..utils.log import get_logger
from .homology import determinant, first_homology
from .moves import KirbyMove, apply_move, move_from_dict

log = get_logger(__name__)


@dataclass(frozen=True)
class MoveScript:
    initial: SurgeryPresentation
    moves: Tuple[KirbyMove, ...]
    claimed_final: SurgeryPresentation
    notes: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "initial": encode(self.initial),
            "moves": [move.to_dict() for move in self.moves],
            "final": encode(self.claimed_final),
        }
        if self.notes:
            data["notes"] = list(self.notes)
        return data

    @classmethod
    def from_dict(cls, data: Any) -> "MoveScript":
        validate_document(data, "script")
        return cls(
            initial=decode(data["initial"]),
            moves=tuple(
                move_from_dict(move, f"moves[{index}]")
                for index, move in enumerate(data["moves"])
            ),
            claimed_final=decode(data["final"]),
            notes=tuple(data.get("notes", ())),
        )


def script_to_json(script: MoveScript) -> str:
    return json.dumps(script.to_dict(), indent=2)


def script_from_json(text: str) -> MoveScript:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e}") from e
    return MoveScript.from_dict(data)


@dataclass
class VerificationReport:
    """Outcome of replaying a script.

    ``homology_trace``, ``determinant_trace`` and ``labels`` hold one entry for
    the initial presentation followed by one per move that was applied.
    """

    ok: bool = False
    steps_checked: int = 0
    homology_trace: List[List[int]] = field(default_factory=list)
    determinant_trace: List[int] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)
    retype_steps: List[Tuple[int, str]] = field(default_factory=list)
    failure: Optional[Tuple[int, str]] = None

    @property
    def homology_constant(self) -> bool:
        return all(entry == self.homology_trace[0] for entry in self.homology_trace)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "steps_checked": self.steps_checked,
            "homology_trace": [list(entry) for entry in self.homology_trace],
            "determinant_trace": list(self.determinant_trace),
            "labels": list(self.labels),
            "retype_steps": [
                {"step": step, "justification": text} for step, text in self.retype_steps
            ],
            "failure": (
                None
                if self.failure is None
                else {"step": self.failure[0], "reason": self.failure[1]}
            ),
        }


def _snapshot(p: SurgeryPresentation) -> Tuple[List[int], int]:
    filled = fill_meridians(p)
    factors = list(first_homology(filled).invariant_factors)
    return factors, determinant(generalized_relation_matrix(filled))


def verify_script(script: MoveScript) -> VerificationReport:
    """Replay a script, checking preconditions and H_1 after every step.

    Steps are numbered from 1; a failure at step 0 means the initial
    presentation itself could not be evaluated. Components with the
    meridional slope are filled before H_1 is computed.
    """
    report = VerificationReport()
    current = script.initial
    try:
        factors, det = _snapshot(current)
    except KirbyCertError as e:
        report.failure = (0, str(e))
        return report
    report.homology_trace.append(factors)
    report.determinant_trace.append(det)
    report.labels.append("initial")

    for step, move in enumerate(script.moves, start=1):
        try:
            current = apply_move(current, move)
            factors, det = _snapshot(current)
        except KirbyCertError as e:
            report.failure = (step, str(e))
            log.info("script failed at step %d (%s): %s", step, move.label, e)
            return report
        report.steps_checked = step
        report.homology_trace.append(factors)
        report.determinant_trace.append(det)
        report.labels.append(move.label)
        if move.is_axiom:
            report.retype_steps.append((step, move.justification))
        if factors != report.homology_trace[0]:
            report.failure = (step, f"HomologyChanged: {report.homology_trace[0]} -> {factors}")
            log.info("homology changed at step %d (%s)", step, move.label)
            return report

    if not same_up_to_renumbering(current, script.claimed_final):
        report.failure = (
            len(script.moves),
            "FinalMismatch: replay does not end at the claimed final presentation",
        )
        return report

    report.ok = True
    return report
