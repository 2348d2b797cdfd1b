#!/usr/bin/env python3
"""Run every verification suite on the preset monoids."""

import logging
from typing import List

import typer

from apps.cli.core.config import settings
from apps.cli.core.logging import setup_logging
from apps.cli.io import EXIT_FAILED, dumps, run_report
from packages.actions.orbit_pairs import verify_orbit_pairs
from packages.center.verification import center_cross_validate
from packages.idempotents.classification import classify_all
from packages.idempotents.verification import verify_classification, verify_orbit_structure
from packages.monoid.verification import verify_monoid
from packages.presets.examples import build_preset, default_presets
from packages.shared.reporting import VerificationReport

logger = logging.getLogger(__name__)

app = typer.Typer()


@app.command()
def run(
    samples: int = typer.Option(20, help="Samples per suite"),
    seed: int = typer.Option(settings.ROOTMONOID_SEED, help="Root seed"),
):
    """Monoid, orbit-pair, idempotent and center suites on every preset."""
    setup_logging()
    reports: List[VerificationReport] = []
    for preset in default_presets():
        X = build_preset(preset)
        start = len(reports)
        logger.info(f"Preset {preset.name} {preset.parameters}")
        reports.append(verify_monoid(X, samples, seed))
        for pair in X.roots.pairs:
            for root in (pair.e1, pair.e2):
                reports.append(verify_orbit_pairs(X.sigma, root, max(1, samples // 4), seed))
        reports.append(verify_classification(X, max(1, samples // 4), seed))
        for locus in classify_all(X):
            if not locus.is_empty:
                reports.append(verify_orbit_structure(X, locus.gamma, samples, seed))
        reports.append(center_cross_validate(X, samples, seed, settings.CENTER_DEGREE_BOUND))
        for report in reports[start:]:
            report.notes.append(f"preset {preset.name}")

    for report in reports:
        typer.echo(dumps(run_report("acceptance", report)))
    failed = sum(report.failed for report in reports)
    logger.info(f"Acceptance: {len(reports)} suites, {failed} failed checks")
    if failed:
        raise typer.Exit(EXIT_FAILED)


if __name__ == "__main__":
    app()
