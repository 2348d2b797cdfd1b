"""Demazure root commands."""

from typing import List, Optional

import typer

from apps.cli.core.config import settings
from apps.cli.io import (
    EXIT_FAILED,
    emit,
    handle_errors,
    load_cone,
    parse_face,
    parse_pairs,
    parse_vector,
    read_json,
)
from apps.cli.schemas import MonoidFile
from packages.demazure.roots import (
    compatible_pairs_with_differences,
    enumerate_roots,
    is_compatible_set,
    root_pair_set,
)
from packages.lattice.cone import Cone

app = typer.Typer(help="Demazure roots and compatible pairs.", no_args_is_help=True)


@app.command("enumerate")
@handle_errors
def enumerate_(
    cone: str = typer.Option("-", "--cone", help="Cone or monoid JSON file, - for stdin"),
    ray: int = typer.Option(..., "--ray", help="Index of the distinguished ray"),
    bound: int = typer.Option(settings.ROOT_BOUND, "--bound", help="Max-norm of listed roots"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Roots with a given distinguished ray."""
    sigma = load_cone(cone)
    if not 0 <= ray < len(sigma.rays):
        raise ValueError(f"Ray index {ray} out of range")
    roots = enumerate_roots(sigma, ray, bound)
    emit({"ray": ray, "bound": bound, "roots": [list(r.vector) for r in roots]}, json)


@app.command()
@handle_errors
def check(
    monoid: Optional[str] = typer.Option(None, "--monoid", help="Monoid JSON file, - for stdin"),
    cone: Optional[str] = typer.Option(None, "--cone", help="Cone JSON file, instead of --monoid"),
    tau: Optional[str] = typer.Option(None, "--tau", help="Ray indices of the face, e.g. 0,1"),
    pairs: Optional[str] = typer.Option(
        None, "--pairs", help="Root pair JSON file, or inline e1;e2 pairs separated by |"
    ),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Check that root pairs are compatible with a face: a monoid file, or --cone --tau --pairs."""
    if cone is not None:
        if monoid is not None:
            raise ValueError("Give either --monoid or --cone, not both")
        if tau is None or pairs is None:
            raise ValueError("--cone needs --tau and --pairs")
        sigma = load_cone(cone)
        face = parse_face(sigma, tau)
        vectors = parse_pairs(pairs)
    else:
        data = MonoidFile.model_validate(read_json(monoid or "-"))
        sigma = Cone.from_rays(data.cone.rays)
        face = sigma.face(data.tau)
        vectors = [(entry.e1, entry.e2) for entry in data.pairs]
    report = is_compatible_set(sigma, face, root_pair_set(face, vectors))
    emit({"compatible": report.compatible, "violations": list(report.violations)}, json)
    if not report.compatible:
        raise typer.Exit(EXIT_FAILED)


@app.command()
@handle_errors
def construct(
    cone: str = typer.Option("-", "--cone", help="Cone JSON file, - for stdin"),
    tau: str = typer.Option(..., "--tau", help="Ray indices of the face, e.g. 0,1"),
    difference: List[str] = typer.Option(
        [], "--c", help="Difference e1 - e2 for each ray of tau, in order; zero when omitted"
    ),
):
    """Build compatible pairs with prescribed differences and print a monoid file."""
    sigma = load_cone(cone)
    face = parse_face(sigma, tau)
    differences = [parse_vector(c) for c in difference]
    if not differences:
        differences = [[0] * sigma.ambient_rank for _ in face.ray_indices]
    pairs = compatible_pairs_with_differences(sigma, face, differences)
    payload = {"cone": sigma.as_dict(), **pairs.as_dict()}
    payload["tau"] = payload.pop("tau_rays")
    emit(payload, True)
