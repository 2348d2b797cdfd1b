"""Center commands."""

from typing import Optional

import typer

from apps.cli.core.config import settings
from apps.cli.io import emit, finish, handle_errors, load_monoid, start_timer
from apps.cli.schemas import CenterLocusFile
from packages.center.equations import center_equations, render_locus
from packages.center.verification import center_cross_validate

app = typer.Typer(help="Equations of the center and the commutation oracle.", no_args_is_help=True)


@app.command()
@handle_errors
def equations(
    monoid: str = typer.Option("-", "--monoid", help="Monoid JSON file, - for stdin"),
    bound: int = typer.Option(settings.CENTER_DEGREE_BOUND, "--bound", help="Degree bound for the index set"),
    trivial: bool = typer.Option(False, "--trivial", help="Also list equalities that always hold"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Vanishing conditions and equalities cutting out the center."""
    X = load_monoid(monoid)
    locus = center_equations(X, bound)
    data = locus.as_dict()
    emit(
        CenterLocusFile(
            active=data["active"],
            index_bound=data["index_bound"],
            vanishing=data["vanishing"],
            equalities=data["equalities"],
            equations=render_locus(X, locus, include_trivial=trivial),
        ),
        json,
    )


@app.command()
@handle_errors
def verify(
    monoid: str = typer.Option("-", "--monoid", help="Monoid JSON file, - for stdin"),
    samples: int = typer.Option(settings.DEFAULT_SAMPLES, "--samples", min=1),
    seed: int = typer.Option(settings.ROOTMONOID_SEED, "--seed"),
    bound: Optional[int] = typer.Option(None, "--bound", help="Degree bound for the index set"),
    witnesses: int = typer.Option(20, "--witnesses", min=1, help="Units tried per point"),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Check the center equations against the commutation oracle."""
    X = load_monoid(monoid)
    degree_bound = bound if bound is not None else settings.CENTER_DEGREE_BOUND
    started = start_timer(timing)
    report = center_cross_validate(
        X,
        samples,
        seed,
        degree_bound=degree_bound,
        bound=settings.RATIONAL_BOUND,
        witness_samples=witnesses,
    )
    report.notes.extend(render_locus(X, center_equations(X, degree_bound)))
    finish("center verify", report, json, started)
