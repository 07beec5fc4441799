#!/usr/bin/env python3
"""
kirbycert CLI - Main entry point
"""

import functools
import json
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import click
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from kirbycert import __version__
from kirbycert.analysis import family, twobridge
from kirbycert.analysis.homology import determinant, first_homology
from kirbycert.analysis.verifier import script_from_json, verify_script
from kirbycert.data.presentation import (
    encode,
    generalized_relation_matrix,
    presentation_from_json,
)
from kirbycert.errors import KirbyCertError
from kirbycert.utils.config import DEFAULTS, OUTPUT_FORMATS, Config
from kirbycert.utils.log import configure_logging, get_logger
from kirbycert.utils.visualizer import CertificateVisualizer

log = get_logger(__name__)

# fixed width keeps table output byte-identical across terminals
TABLE_WIDTH = 110

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _stdout_console() -> Console:
    return Console(file=sys.stdout, width=TABLE_WIDTH, highlight=False)


def _stderr_console() -> Console:
    return Console(file=sys.stderr, width=TABLE_WIDTH, highlight=False)


def emit_json(data: Any):
    click.echo(json.dumps(data, indent=2))


def handle_errors(command):
    """Turn library and IO errors into a diagnostic and exit code 2."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (KirbyCertError, OSError, KeyError, ValueError) as e:
            _stderr_console().print(f"[bold red]Error:[/bold red] {escape(str(e))}")
            sys.exit(EXIT_USAGE)

    return wrapper


def format_option(command):
    return click.option(
        "--format",
        "output_format",
        type=click.Choice(OUTPUT_FORMATS),
        default=None,
        help="Output format (defaults to the configured one).",
    )(command)


def _format(ctx: click.Context, output_format: Optional[str]) -> str:
    return output_format or ctx.obj["config"].output_format


def _mirror(ctx: click.Context, flag: bool) -> bool:
    return flag or bool(ctx.obj["config"].get("mirror_insensitive", False))


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _pair(value: str):
    try:
        n, k = (int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter(f"expected N,K but got {value!r}")
    return family.FamilyParams(n, k)


@click.group()
@click.version_option(__version__)
@click.option("-v", "--verbose", is_flag=True, help="Log progress (INFO).")
@click.option("--debug", is_flag=True, help="Log every move (DEBUG).")
@click.option(
    "--config-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Directory holding config.json (default ~/.config/kirbycert).",
)
@click.pass_context
def cli(ctx, verbose, debug, config_dir):
    """kirbycert: exact surgery calculus and certificates for links with S^3 surgeries."""
    config = Config(config_dir)
    level = "DEBUG" if debug else "INFO" if verbose else config.get("log_level", "WARNING")
    configure_logging(level, _stderr_console())
    ctx.obj = {"config": config}


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Number of components (n >= 2).")
@click.option("--k", "k", type=int, required=True, help="Twist offset (k >= 0).")
@click.option("--stage", type=click.Choice(["base", "final"]), default="final", show_default=True)
@format_option
@click.pass_context
@handle_errors
def generate(ctx, n, k, stage, output_format):
    """Emit the base or final presentation of the family member (n, k)."""
    params = family.FamilyParams(n, k)
    build = family.base_presentation if stage == "base" else family.final_presentation
    presentation = build(params)
    if _format(ctx, output_format) == "json":
        emit_json(encode(presentation))
    else:
        CertificateVisualizer(_stdout_console()).display_presentation(
            presentation, f"{stage.capitalize()} presentation {params}"
        )


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@format_option
@click.pass_context
@handle_errors
def script(ctx, n, k, output_format):
    """Emit the reduction script from the final presentation to S^3."""
    move_script = family.reduction_script(family.FamilyParams(n, k))
    if _format(ctx, output_format) == "json":
        emit_json(move_script.to_dict())
    else:
        CertificateVisualizer(_stdout_console()).display_script(move_script)


@cli.command()
@click.option("--n", "n", type=int, required=True)
@format_option
@click.pass_context
@handle_errors
def lemma(ctx, n, output_format):
    """Emit the script reducing the base presentation (n-2, 0, 1, ..., 1) to S^3."""
    move_script = family.lemma_script(family.FamilyParams(n, 0))
    if _format(ctx, output_format) == "json":
        emit_json(move_script.to_dict())
    else:
        CertificateVisualizer(_stdout_console()).display_script(move_script)


@cli.command()
@click.argument("script_file", type=click.Path(exists=True, dir_okay=False))
@format_option
@click.pass_context
@handle_errors
def verify(ctx, script_file, output_format):
    """Replay a move script and report whether it is a valid certificate."""
    report = verify_script(script_from_json(_read(script_file)))
    if _format(ctx, output_format) == "json":
        emit_json(report.to_dict())
    else:
        CertificateVisualizer(_stdout_console()).display_report(report)
    ctx.exit(EXIT_OK if report.ok else EXIT_FAILED)


@cli.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--mirror-insensitive", is_flag=True, help="Identify 2-bridge knots with their mirrors.")
@format_option
@click.pass_context
@handle_errors
def certify(ctx, n, k, mirror_insensitive, output_format):
    """Certify surgery to S^3, distinct hyperbolic components, unsplittability and tunnel number for (n, k)."""
    cert = family.certify(family.FamilyParams(n, k), _mirror(ctx, mirror_insensitive))
    if _format(ctx, output_format) == "json":
        emit_json(cert.to_dict())
    else:
        CertificateVisualizer(_stdout_console()).display_certificate(cert)
    ctx.exit(EXIT_OK if cert.ok else EXIT_FAILED)


@cli.command()
@click.option("--n-max", type=int, default=None, help="Largest n (default from config).")
@click.option("--k-max", type=int, default=None, help="Largest k (default from config).")
@click.option("--workers", type=int, default=None, help="Worker processes (default from config).")
@click.option("--mirror-insensitive", is_flag=True)
@format_option
@click.pass_context
@handle_errors
def sweep(ctx, n_max, k_max, workers, mirror_insensitive, output_format):
    """Certify every (n, k) with 2 <= n <= n_max, 0 <= k <= k_max."""
    config = ctx.obj["config"]
    default_n, default_k = config.sweep_bounds
    n_max = default_n if n_max is None else n_max
    k_max = default_k if k_max is None else k_max
    mirror = _mirror(ctx, mirror_insensitive)
    grid = [(n, k) for n in range(2, n_max + 1) for k in range(k_max + 1)]
    certificates = family.certify_range(grid, workers or config.workers, mirror)

    distinct = {}
    for n in range(2, n_max + 1):
        distinct[n] = all(
            family.distinct_links((n, a), (n, b), mirror)
            for a in range(k_max + 1)
            for b in range(a + 1, k_max + 1)
        )
    ok = all(c.ok for c in certificates) and all(distinct.values())

    if _format(ctx, output_format) == "json":
        emit_json(
            {
                "ok": ok,
                "certificates": [
                    {
                        "params": {"n": c.params.n, "k": c.params.k},
                        "ok": c.ok,
                        "properties": c.properties,
                        "determinant": c.determinant,
                        "retype_axioms": len(c.s3_report.retype_steps),
                    }
                    for c in certificates
                ],
                "distinct_across_k": {str(n): value for n, value in distinct.items()},
            }
        )
    else:
        visualizer = CertificateVisualizer(_stdout_console())
        visualizer.display_sweep(certificates)
        for n, value in distinct.items():
            visualizer.console.print(f"n = {n}: all k distinct = {value}")
    ctx.exit(EXIT_OK if ok else EXIT_FAILED)


@cli.command()
@click.argument("presentation_file", type=click.Path(exists=True, dir_okay=False))
@format_option
@click.pass_context
@handle_errors
def homology(ctx, presentation_file, output_format):
    """First homology of the manifold presented by a presentation file."""
    presentation = presentation_from_json(_read(presentation_file))
    h = first_homology(presentation)
    if _format(ctx, output_format) == "json":
        emit_json(
            {
                "invariant_factors": list(h.invariant_factors),
                "group": str(h),
                "trivial": h.is_trivial,
                "determinant": determinant(generalized_relation_matrix(presentation)),
            }
        )
    else:
        CertificateVisualizer(_stdout_console()).display_homology(h)


@cli.command()
@click.option("--p", "p", type=int, required=True)
@click.option("--q", "q", type=int, required=True)
@click.option("--mirror-insensitive", is_flag=True)
@format_option
@click.pass_context
@handle_errors
def classify(ctx, p, q, mirror_insensitive, output_format):
    """Schubert normal form of the 2-bridge knot S(p, q)."""
    if _mirror(ctx, mirror_insensitive):
        c = twobridge.normalize_mirror_insensitive(p, q)
    else:
        c = twobridge.normalize(p, q)
    hyperbolic = twobridge.is_hyperbolic(c)
    if _format(ctx, output_format) == "json":
        emit_json(
            {
                "p": c.p,
                "q_canonical": c.q_canonical,
                "hyperbolic": hyperbolic,
                "determinant": twobridge.knot_determinant(c),
            }
        )
    else:
        CertificateVisualizer(_stdout_console()).display_class(c, hyperbolic)


@cli.command()
@click.option("--a", "a", required=True, help="First member as N,K.")
@click.option("--b", "b", required=True, help="Second member as N,K.")
@click.option("--mirror-insensitive", is_flag=True)
@format_option
@click.pass_context
@handle_errors
def distinct(ctx, a, b, mirror_insensitive, output_format):
    """Whether two family members have different multisets of component classes."""
    first, second = _pair(a), _pair(b)
    mirror = _mirror(ctx, mirror_insensitive)
    result = family.distinct_links(first, second, mirror)

    def describe(params) -> Dict[str, Any]:
        classes = sorted(family.class_multiset(params, mirror).elements())
        return {"n": params.n, "k": params.k, "classes": [str(c) for c in classes]}

    if _format(ctx, output_format) == "json":
        emit_json({"a": describe(first), "b": describe(second), "distinct": result})
    else:
        console = _stdout_console()
        for label, params in (("a", first), ("b", second)):
            console.print(f"{label} {params}: {' '.join(describe(params)['classes'])}")
        console.print(f"distinct: {result}")


@cli.command("config")
@click.option("--set", "assignments", multiple=True, metavar="KEY=VALUE", help="Change a setting.")
@click.pass_context
@handle_errors
def configure(ctx, assignments):
    """Show or change kirbycert settings."""
    config = ctx.obj["config"]
    console = _stdout_console()
    if not assignments:
        console.print(Panel("Current Configuration", style="bold blue"))
        table = Table(show_header=True, header_style="bold")
        table.add_column("Setting")
        table.add_column("Value")
        for key in DEFAULTS:
            table.add_row(key, json.dumps(config.get(key)))
        console.print(table)
        console.print(f"\nStored in {config.config_file}")
        return

    for assignment in assignments:
        key, sep, raw = assignment.partition("=")
        if not sep:
            raise click.BadParameter(f"expected KEY=VALUE, got {assignment!r}")
        key = key.strip()
        config.set(key, Config.parse_value(key, raw))
        console.print(f"{key} set to [bold]{json.dumps(config.get(key))}[/bold]")


if __name__ == "__main__":
    cli()
