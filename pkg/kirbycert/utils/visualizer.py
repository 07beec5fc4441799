"""
Table views of presentations, scripts, reports and certificates.
"""

from typing import List, Optional, Sequence

from rich import box
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from ..analysis.family import FamilyCertificate
from ..analysis.homology import HomologyClass
from ..analysis.twobridge import TwoBridgeClass
from ..analysis.verifier import MoveScript, VerificationReport
from ..data.presentation import SurgeryPresentation

PROPERTY_TITLES = {
    "surgery_yields_s3": ("S^3", "non-trivial surgery yields S^3"),
    "components_distinct_hyperbolic": ("distinct", "components distinct and hyperbolic"),
    "unsplittable": ("unsplit", "unsplittable"),
    "tunnel_number": ("tunnels", "tunnel number n-1"),
}


def _mark(flag: bool) -> str:
    return "[green]yes[/green]" if flag else "[red]no[/red]"


def _factors(factors: Sequence[int]) -> str:
    return str(HomologyClass(tuple(factors)))


class CertificateVisualizer:
    """Render kirbycert objects as rich tables."""

    def __init__(self, console: Optional[Console] = None):
        self.console = console or Console()

    def presentation_table(self, p: SurgeryPresentation, title: str = "Surgery presentation") -> Table:
        table = Table(title=title, box=box.SIMPLE_HEAVY)
        table.add_column("id", justify="right")
        table.add_column("knot")
        table.add_column("slope", justify="right")
        for c in p.components:
            table.add_column(f"lk {c.id}", justify="right")
        for row, c in zip(p.linking, p.components):
            table.add_row(str(c.id), str(c.knot), str(c.slope), *[str(x) for x in row])
        return table

    def display_presentation(self, p: SurgeryPresentation, title: str = "Surgery presentation"):
        if p.is_empty:
            self.console.print(f"{title}: empty diagram (S^3)")
            return
        self.console.print(self.presentation_table(p, title))

    def display_script(self, script: MoveScript):
        self.display_presentation(script.initial, "Initial presentation")
        table = Table(title="Moves", box=box.SIMPLE_HEAVY)
        table.add_column("step", justify="right")
        table.add_column("move")
        table.add_column("justification")
        for step, move in enumerate(script.moves, start=1):
            table.add_row(str(step), move.label, getattr(move, "justification", ""))
        self.console.print(table)
        self.display_presentation(script.claimed_final, "Claimed final presentation")
        for note in script.notes:
            self.console.print(f"note: {note}")

    def report_table(self, report: VerificationReport) -> Table:
        retyped = {step for step, _ in report.retype_steps}
        table = Table(title="Script replay", box=box.SIMPLE_HEAVY)
        table.add_column("step", justify="right")
        table.add_column("move")
        table.add_column("det", justify="right")
        table.add_column("H_1")
        table.add_column("flags")
        for step, (label, det, factors) in enumerate(
            zip(report.labels, report.determinant_trace, report.homology_trace)
        ):
            table.add_row(
                str(step), label, str(det), _factors(factors), "axiom" if step in retyped else ""
            )
        return table

    def display_report(self, report: VerificationReport):
        self.console.print(self.report_table(report))
        if report.ok:
            self.console.print(
                f"[bold green]OK[/bold green] {report.steps_checked} steps, "
                f"{len(report.retype_steps)} flagged retype axioms"
            )
        else:
            step, reason = report.failure or (report.steps_checked, "unknown")
            self.console.print(f"[bold red]FAILED[/bold red] at step {step}: {escape(reason)}")

    def display_certificate(self, cert: FamilyCertificate):
        self.console.print(
            Panel(f"Family certificate {cert.params}", style="bold blue", box=box.DOUBLE)
        )
        table = Table(show_header=True, header_style="bold", box=box.SIMPLE_HEAVY)
        table.add_column("Property")
        table.add_column("Holds", justify="center")
        for name, value in cert.properties.items():
            table.add_row(PROPERTY_TITLES.get(name, (name, name))[1], _mark(value))
        self.console.print(table)

        classes = Table(title="Components", box=box.SIMPLE_HEAVY)
        classes.add_column("id", justify="right")
        classes.add_column("tag")
        classes.add_column("class")
        classes.add_column("slope", justify="right")
        for component, cls in zip(cert.presentation.components, cert.component_classes):
            classes.add_row(
                str(component.id), str(component.knot), str(cls) if cls else "-", str(component.slope)
            )
        self.console.print(classes)
        self.console.print(
            f"det = {cert.determinant}, signature = {cert.signature}, "
            f"tunnel number bounds = {cert.tunnel_bounds[0]}..{cert.tunnel_bounds[1]}"
        )

        axioms = Table(title="Flagged axioms", box=box.SIMPLE_HEAVY)
        axioms.add_column("step", justify="right")
        axioms.add_column("justification")
        for step, text in cert.retype_axioms:
            axioms.add_row("-" if step is None else str(step), text)
        self.console.print(axioms)
        for note in cert.notes:
            self.console.print(f"note: {note}")

    def display_sweep(self, certificates: List[FamilyCertificate]):
        table = Table(title="Family sweep", box=box.SIMPLE_HEAVY)
        table.add_column("n", justify="right")
        table.add_column("k", justify="right")
        for short, _ in PROPERTY_TITLES.values():
            table.add_column(short, justify="center")
        table.add_column("classes")
        for cert in certificates:
            table.add_row(
                str(cert.params.n),
                str(cert.params.k),
                *[_mark(cert.properties[name]) for name in PROPERTY_TITLES],
                " ".join(str(c) for c in cert.component_classes),
            )
        self.console.print(table)

    def display_homology(self, h: HomologyClass):
        self.console.print(f"H_1 = {h}")
        if h.is_trivial:
            self.console.print("[green]trivial (necessary for S^3)[/green]")

    def display_class(self, c: TwoBridgeClass, hyperbolic: bool):
        table = Table(box=box.SIMPLE_HEAVY)
        table.add_column("p", justify="right")
        table.add_column("q_canonical", justify="right")
        table.add_column("hyperbolic", justify="center")
        table.add_column("determinant", justify="right")
        table.add_row(str(c.p), str(c.q_canonical), _mark(hyperbolic), str(c.p))
        self.console.print(table)
