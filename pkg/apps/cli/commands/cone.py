"""Cone commands."""

import typer

from apps.cli.core.config import settings
from apps.cli.io import emit, handle_errors, load_cone
from packages.lattice.cone import dual_cone, is_regular_face
from packages.lattice.semigroup import semigroup_basis

app = typer.Typer(help="Cones, faces and semigroup generators.", no_args_is_help=True)


@app.command()
@handle_errors
def dual(
    cone: str = typer.Option("-", "--cone", help="Cone or monoid JSON file, - for stdin"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Rays of the dual cone."""
    sigma = load_cone(cone)
    emit(dual_cone(sigma).as_dict(), json)


@app.command()
@handle_errors
def faces(
    cone: str = typer.Option("-", "--cone", help="Cone or monoid JSON file, - for stdin"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Every face with its dimension and regularity."""
    sigma = load_cone(cone)
    rows = [
        {"rays": list(face.ray_indices), "dim": face.dim, "regular": is_regular_face(sigma, face)}
        for face in sigma.faces
    ]
    emit({"count": len(rows), "faces": rows}, json)


@app.command()
@handle_errors
def hilbert(
    cone: str = typer.Option("-", "--cone", help="Cone or monoid JSON file, - for stdin"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Generators of the semigroup of the dual cone."""
    sigma = load_cone(cone)
    basis = semigroup_basis(sigma, settings.HILBERT_BOX_BOUND, settings.HILBERT_MAX_CANDIDATES)
    emit(
        {
            "generators": [list(g) for g in basis.generators],
            "degrees": [basis.degree(g) for g in basis.generators],
            "grading": list(basis.grading),
            "certified": basis.certified,
        },
        json,
    )
