"""Monoid commands."""

import typer

from apps.cli.core.config import settings
from apps.cli.io import emit, finish, handle_errors, load_monoid, load_point, start_timer
from packages.monoid.group import from_point
from packages.monoid.point import point_coordinates
from packages.monoid.root_monoid import (
    inverse,
    is_active,
    is_commutative,
    is_invertible,
    multiply,
)
from packages.monoid.verification import verify_monoid

app = typer.Typer(help="Root monoid structure: product, inverse and axiom checks.", no_args_is_help=True)


@app.command()
@handle_errors
def build(
    monoid: str = typer.Option("-", "--monoid", help="Monoid JSON file, - for stdin"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Validate a monoid file and summarize the structure."""
    X = load_monoid(monoid)
    emit(
        {
            "rank": X.sigma.ambient_rank,
            "k": X.k,
            "tau": list(X.tau.ray_indices),
            "active": is_active(X),
            "commutative": is_commutative(X),
            "generators": [list(g) for g in X.generators],
            "certified": X.semigroup.certified,
            "characters": [list(c) for c in X.characters],
            "neutral": X.neutral.as_dict(),
        },
        json,
    )


@app.command()
@handle_errors
def mul(
    monoid: str = typer.Option(..., "--monoid", help="Monoid JSON file"),
    x: str = typer.Option(..., "--x", help="Point JSON file"),
    y: str = typer.Option(..., "--y", help="Point JSON file"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Product x * y."""
    X = load_monoid(monoid)
    product = multiply(X, load_point(x, X.sigma), load_point(y, X.sigma))
    emit(
        {"point": product.as_dict(), "generator_values": list(point_coordinates(product, X.generators))},
        json,
    )


@app.command()
@handle_errors
def inv(
    monoid: str = typer.Option(..., "--monoid", help="Monoid JSON file"),
    x: str = typer.Option(..., "--x", help="Point JSON file"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Inverse of a unit."""
    X = load_monoid(monoid)
    point = load_point(x, X.sigma)
    result = inverse(X, point)
    emit(
        {
            "point": result.as_dict(),
            "generator_values": list(point_coordinates(result, X.generators)),
            "coordinates": from_point(X, point).as_dict() if is_invertible(X, point) else None,
        },
        json,
    )


@app.command()
@handle_errors
def check(
    monoid: str = typer.Option("-", "--monoid", help="Monoid JSON file, - for stdin"),
    samples: int = typer.Option(settings.DEFAULT_SAMPLES, "--samples", min=1),
    seed: int = typer.Option(settings.ROOTMONOID_SEED, "--seed"),
    timing: bool = typer.Option(False, "--timing", help="Include wall-clock time"),
    json: bool = typer.Option(False, "--json", help="Emit JSON"),
):
    """Sample associativity, the neutral element, inverses and the group law."""
    X = load_monoid(monoid)
    started = start_timer(timing)
    report = verify_monoid(X, samples, seed, settings.RATIONAL_BOUND)
    finish("monoid check", report, json, started)
