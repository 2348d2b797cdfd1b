"""Reading input files and writing reports."""

import functools
import logging
import sys
import time
from pathlib import Path
from typing import Any, Callable, List, NoReturn, Optional, Tuple, TypeVar

import orjson
import typer
from pydantic import BaseModel, ValidationError

from apps.cli.core.config import settings
from apps.cli.schemas import ConeFile, ErrorResponse, MonoidFile, PointFile, RootPairEntry, RunReport
from packages.demazure.roots import root_pair_set
from packages.lattice.cone import Cone, Face
from packages.lattice.semigroup import semigroup_basis
from packages.monoid.point import Point, make_point, point_from_generator_values, point_in_basis
from packages.monoid.root_monoid import RootMonoid, build
from packages.shared.exceptions import RootMonoidError
from packages.shared.reporting import VerificationReport, jsonable

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

F = TypeVar("F", bound=Callable[..., Any])


# ============================================================================
# Input
# ============================================================================


def read_json(path: str) -> Any:
    """Parse a JSON file; ``-`` reads stdin."""
    if path == "-":
        raw = sys.stdin.read()
    else:
        raw = Path(path).read_text()
    return orjson.loads(raw)


def parse_vector(text: str) -> List[int]:
    """``"1,0,-2"`` -> [1, 0, -2]."""
    text = text.strip().strip("[]")
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def parse_vectors(text: str) -> List[List[int]]:
    """``"1,0;0,1"`` -> [[1, 0], [0, 1]]."""
    return [parse_vector(part) for part in text.split(";") if part.strip()]


def parse_pairs(text: str) -> List[Tuple[List[int], List[int]]]:
    """
    Root pairs inline or from a file.

    Inline pairs are ``e1;e2`` separated by ``|``, e.g. ``"-1,0,0,1;-1,0,1,2|0,-1,0,2;0,-1,2,1"``.
    A file holds a root pair set or a bare list of ``{"e1": ..., "e2": ...}`` entries.
    """
    if text == "-" or Path(text).is_file():
        payload = read_json(text)
        entries = payload.get("pairs", []) if isinstance(payload, dict) else payload
        return [(entry.e1, entry.e2) for entry in map(RootPairEntry.model_validate, entries)]
    pairs = []
    for part in text.split("|"):
        vectors = parse_vectors(part)
        if len(vectors) != 2:
            raise ValueError(f"Expected 'e1;e2', got {part!r}")
        pairs.append((vectors[0], vectors[1]))
    return pairs


def cone_from_payload(payload: Any) -> Cone:
    """A cone file, or the cone inside a monoid file."""
    if isinstance(payload, dict) and "cone" in payload:
        payload = payload["cone"]
    data = ConeFile.model_validate(payload)
    return Cone.from_rays(data.rays)


def load_cone(path: str) -> Cone:
    return cone_from_payload(read_json(path))


def monoid_from_payload(payload: Any) -> RootMonoid:
    data = MonoidFile.model_validate(payload)
    cone = Cone.from_rays(data.cone.rays)
    tau = cone.face(data.tau)
    roots = root_pair_set(tau, [(entry.e1, entry.e2) for entry in data.pairs])
    basis = semigroup_basis(cone, settings.HILBERT_BOX_BOUND, settings.HILBERT_MAX_CANDIDATES)
    return build(cone, tau, roots, basis)


def load_monoid(path: str) -> RootMonoid:
    return monoid_from_payload(read_json(path))


def point_from_payload(payload: Any, cone: Cone) -> Point:
    data = PointFile.model_validate(payload)
    if data.generator_values is not None:
        generators = semigroup_basis(cone, settings.HILBERT_BOX_BOUND, settings.HILBERT_MAX_CANDIDATES).generators
        return point_from_generator_values(cone, generators, data.rational_generator_values())
    face = cone.face(data.face_rays or [])
    if data.basis is not None:
        return point_in_basis(face, data.basis, data.rational_values())
    return make_point(face, data.rational_values())


def load_point(path: str, cone: Cone) -> Point:
    return point_from_payload(read_json(path), cone)


def parse_face(cone: Cone, text: str) -> Face:
    return cone.face(parse_vector(text))


# ============================================================================
# Output
# ============================================================================


def dumps(payload: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent."""
    data = payload.model_dump(mode="json") if isinstance(payload, BaseModel) else jsonable(payload)
    return orjson.dumps(data, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode()


def emit(payload: Any, as_json: bool) -> None:
    """Write a result to stdout, as JSON or as ``key: value`` lines."""
    if as_json:
        typer.echo(dumps(payload))
        return
    data = payload.model_dump(mode="json") if isinstance(payload, BaseModel) else jsonable(payload)
    if not isinstance(data, dict):
        typer.echo(orjson.dumps(data).decode())
        return
    for key in sorted(data):
        value = data[key]
        shown = value if isinstance(value, (str, int, float, bool)) or value is None else orjson.dumps(value).decode()
        typer.echo(f"{key}: {shown}")


def run_report(command: str, report: VerificationReport, timing: Optional[float] = None) -> RunReport:
    return RunReport(
        command=command,
        suite=report.suite,
        seed=report.seed,
        passed=report.passed,
        failed=report.failed,
        ok=report.ok,
        counterexamples=[jsonable(c.__dict__) for c in report.counterexamples],
        notes=list(report.notes),
        timing=timing,
    )


def finish(command: str, report: VerificationReport, as_json: bool, started: Optional[float]) -> None:
    """Emit a run report and exit 1 when any check failed."""
    timing = round(time.perf_counter() - started, 6) if started is not None else None
    emit(run_report(command, report, timing), as_json)
    if not report.ok:
        raise typer.Exit(EXIT_FAILED)


def start_timer(enabled: bool) -> Optional[float]:
    return time.perf_counter() if enabled else None


def _fail(error: ErrorResponse) -> NoReturn:
    typer.echo(orjson.dumps({"error": error.model_dump()}, option=orjson.OPT_SORT_KEYS).decode(), err=True)
    raise typer.Exit(EXIT_INVALID)


def handle_errors(func: F) -> F:
    """Map input and domain errors to a diagnostic on stderr and exit status 2."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except ValidationError as exc:
            fields = [
                {"loc": ".".join(str(part) for part in err["loc"]), "msg": err["msg"]}
                for err in exc.errors()
            ]
            _fail(ErrorResponse(code="VALIDATION_ERROR", message="Invalid input file", fields=fields))
        except RootMonoidError as exc:
            logger.debug(f"{exc.code}: {exc.message}")
            _fail(ErrorResponse(code=exc.code, message=exc.message, fields=jsonable(exc.details) or None))
        except orjson.JSONDecodeError as exc:
            _fail(ErrorResponse(code="PARSE_ERROR", message=str(exc)))
        except (OSError, ValueError) as exc:
            _fail(ErrorResponse(code="INPUT_ERROR", message=str(exc)))

    return wrapper  # type: ignore[return-value]
