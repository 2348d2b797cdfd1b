"""Command-line entry point."""

import typer

from apps.cli.commands import act, center, cone, idem, monoid, preset, roots
from apps.cli.core.logging import setup_logging

app = typer.Typer(
    name="rootmonoid",
    help="Root monoids on affine toric varieties: products, idempotents and centers.",
    no_args_is_help=True,
)

app.add_typer(cone.app, name="cone")
app.add_typer(roots.app, name="roots")
app.add_typer(monoid.app, name="monoid")
app.add_typer(act.app, name="act")
app.add_typer(idem.app, name="idem")
app.add_typer(center.app, name="center")
app.add_typer(preset.app, name="preset")


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr")):
    """Configure logging before any command runs."""
    setup_logging(verbose)


if __name__ == "__main__":
    app()
