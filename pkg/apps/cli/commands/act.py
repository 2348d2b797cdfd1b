"""Action commands."""

from fractions import Fraction
from typing import List

import typer

from apps.cli.io import emit, handle_errors, load_cone, load_point, parse_vector
from packages.actions.orbit_pairs import he_connected_pairs
from packages.actions.root_subgroup import degenerate_parameter, root_subgroup_action
from packages.actions.torus import ambient_torus_action, ray_subtorus_action
from packages.demazure.roots import make_root

app = typer.Typer(help="Torus, ray-subtorus and root-subgroup actions.", no_args_is_help=True)


@app.command()
@handle_errors
def torus(
    cone: str = typer.Option(..., "--cone", help="Cone or monoid JSON file"),
    x: str = typer.Option(..., "--x", help="Point JSON file"),
    t: List[str] = typer.Option(..., "--t", help="Value on each standard basis vector of M, as p/q"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Act by an element of the acting torus."""
    sigma = load_cone(cone)
    result = ambient_torus_action([Fraction(v) for v in t], load_point(x, sigma))
    emit({"point": result.as_dict()}, json)


@app.command()
@handle_errors
def ray(
    cone: str = typer.Option(..., "--cone", help="Cone or monoid JSON file"),
    x: str = typer.Option(..., "--x", help="Point JSON file"),
    p: str = typer.Option(..., "--p", help="One-parameter subgroup, e.g. 1,0,0"),
    t: str = typer.Option(..., "--t", help="Parameter as p/q"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Act by R_p(t)."""
    sigma = load_cone(cone)
    result = ray_subtorus_action(parse_vector(p), Fraction(t), load_point(x, sigma))
    emit({"point": result.as_dict()}, json)


@app.command()
@handle_errors
def root(
    cone: str = typer.Option(..., "--cone", help="Cone or monoid JSON file"),
    x: str = typer.Option(..., "--x", help="Point JSON file"),
    e: str = typer.Option(..., "--e", help="Demazure root, e.g. -1,0,2"),
    a: str = typer.Option(..., "--a", help="Parameter as p/q"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Act by H_e(a); the degenerate parameter lands in the boundary orbit."""
    sigma = load_cone(cone)
    point = load_point(x, sigma)
    e_root = make_root(sigma, parse_vector(e))
    result = root_subgroup_action(e_root, Fraction(a), point)
    degenerate = None if point.face.contains_ray(e_root.ray_index) else degenerate_parameter(e_root, point)
    emit({"point": result.as_dict(), "degenerate_parameter": degenerate}, json)


@app.command()
@handle_errors
def pairs(
    cone: str = typer.Option("-", "--cone", help="Cone or monoid JSON file, - for stdin"),
    e: str = typer.Option(..., "--e", help="Demazure root, e.g. -1,0,2"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Orbit pairs joined by H_e."""
    sigma = load_cone(cone)
    e_root = make_root(sigma, parse_vector(e))
    found = he_connected_pairs(sigma, e_root)
    emit({"root": e_root.as_dict(), "pairs": [pair.as_dict() for pair in found]}, json)
