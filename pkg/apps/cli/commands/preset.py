"""Preset commands: print monoid files for the worked examples."""

from typing import Dict, Optional

import typer

from apps.cli.io import emit, handle_errors, parse_vectors
from packages.presets.examples import (
    QUADRIC_DEFAULT,
    QUADRIC_PARAMETERS,
    affine_space_monoid,
    quadric_cylinder_monoid,
)

app = typer.Typer(help="Monoid files for the affine-space and quadric-cylinder examples.", no_args_is_help=True)


def _parse_params(text: str) -> Dict[str, int]:
    """``"a1=0,b1=1,..."`` over the defaults."""
    params = dict(QUADRIC_DEFAULT)
    for item in text.split(","):
        if not item.strip():
            continue
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in QUADRIC_PARAMETERS:
            raise ValueError(f"Unknown parameter {name!r}; expected one of {', '.join(QUADRIC_PARAMETERS)}")
        params[name] = int(value)
    return params


@app.command()
@handle_errors
def affine(
    n: int = typer.Option(..., "--n", help="Dimension"),
    k: int = typer.Option(..., "--k", help="Number of rays in tau"),
    a: str = typer.Option("", "--a", help="Exponent vectors a_r separated by ';', e.g. 0,0;1,0"),
    b: str = typer.Option("", "--b", help="Exponent vectors b_r separated by ';'"),
):
    """x*y = (x_r y^{a_r} + y_r x^{b_r}, ..., x_i y_i, ...) on A^n."""
    X = affine_space_monoid(n, k, parse_vectors(a), parse_vectors(b))
    emit(X.as_dict(), True)


@app.command()
@handle_errors
def cylinder(
    params: Optional[str] = typer.Option(None, "--params", help="Overrides such as a1=0,b1=1,c2=2"),
):
    """Root monoid on the quadric cylinder {x1 x2 = x4 x5}."""
    values = _parse_params(params or "")
    X = quadric_cylinder_monoid(**values)
    emit(X.as_dict(), True)
