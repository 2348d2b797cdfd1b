"""Idempotent commands."""

from typing import Optional

import typer

from apps.cli.core.config import settings
from apps.cli.io import emit, finish, handle_errors, load_monoid, parse_face, start_timer
from apps.cli.schemas import IdempotentLocusFile
from packages.center.equations import render_unit_equations
from packages.idempotents.classification import IdempotentLocus, classify, closure_faces
from packages.idempotents.verification import verify_orbit_structure
from packages.monoid.root_monoid import RootMonoid

app = typer.Typer(help="Idempotents orbit by orbit.", no_args_is_help=True)


def _locus_file(X: RootMonoid, locus: IdempotentLocus) -> IdempotentLocusFile:
    data = locus.as_dict()
    return IdempotentLocusFile(
        face=data["face"],
        case=data["case"],
        equations=data["equations"],
        rendered=render_unit_equations(X, locus.equations),
        witness=data["witness"],
        certificate=data["certificate"],
        closure_faces=[] if locus.is_empty else [list(f.ray_indices) for f in closure_faces(X, locus.gamma)],
    )


@app.command("classify")
@handle_errors
def classify_(
    monoid: str = typer.Option("-", "--monoid", help="Monoid JSON file, - for stdin"),
    face: Optional[str] = typer.Option(None, "--face", help="Ray indices, e.g. 0,2; all faces when omitted"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Classify the idempotents of one orbit, or of every orbit."""
    X = load_monoid(monoid)
    faces = [parse_face(X.sigma, face)] if face is not None else X.sigma.faces
    loci = [_locus_file(X, classify(X, gamma)).model_dump(mode="json") for gamma in faces]
    emit({"loci": loci}, json)


@app.command()
@handle_errors
def verify(
    monoid: str = typer.Option("-", "--monoid", help="Monoid JSON file, - for stdin"),
    face: str = typer.Option(..., "--face", help="Ray indices, e.g. 0,2"),
    samples: int = typer.Option(settings.DEFAULT_SAMPLES, "--samples", min=1),
    seed: int = typer.Option(settings.ROOTMONOID_SEED, "--seed"),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Sample the torus orbit, closure and off-locus checks for one orbit."""
    X = load_monoid(monoid)
    gamma = parse_face(X.sigma, face)
    started = start_timer(timing)
    report = verify_orbit_structure(X, gamma, samples, seed, bound=settings.RATIONAL_BOUND)
    finish("idem verify", report, json, started)
