"""
Command Line Interface

One click command per operation family. Every command prints a pydantic
payload as JSON (default) or as a plain table; domain errors propagate to
``ncmodel.main.run`` which maps them to exit codes.
"""

import logging
from typing import Any, Callable, Type, TypeVar

import click
from pydantic import BaseModel, ValidationError

from ncmodel.core.config import settings
from ncmodel.core.exceptions import InputError
from ncmodel.models.quiver import DimVector
from ncmodel.models.surface import BlockStructure
from ncmodel.schemas.divisor import DivisorConfigSchema, SmoothModelVerdictSchema
from ncmodel.schemas.fiber import FiberReportSchema
from ncmodel.schemas.qplane import QuantumPlaneReportSchema
from ncmodel.schemas.quiver import (
    EulerResponse,
    QuiverSchema,
    RamificationResponse,
    SimpleResponse,
)
from ncmodel.schemas.triple import (
    AklmResponse,
    BlockStructureSchema,
    ClassificationResponse,
    LocalModelResponse,
    QuantumBlockStructureSchema,
    RamificationTypeResponse,
    TripleSchema,
)
from ncmodel.services import (
    brauer_severi_service,
    divisor_service,
    quantum_plane_service,
    quiver_service,
    rep_service,
    surface_service,
)


logger = logging.getLogger(__name__)

SchemaT = TypeVar("SchemaT", bound=BaseModel)


# ============== Plumbing ==============

class ClickEchoHandler(logging.Handler):
    """Log records go to stderr through click, so stdout stays parseable."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


def configure_logging(verbose: bool) -> None:
    root = logging.getLogger()
    if not any(isinstance(h, ClickEchoHandler) for h in root.handlers):
        handler = ClickEchoHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else settings.LOG_LEVEL)


class IntListType(click.ParamType):
    """Comma separated integers, e.g. ``1,2,3``."""

    name = "int-list"

    def convert(self, value: Any, param, ctx) -> list[int]:
        if isinstance(value, list):
            return value
        try:
            return [int(part) for part in str(value).split(",") if part.strip()]
        except ValueError:
            self.fail(f"{value!r} is not a comma separated list of integers", param, ctx)


INT_LIST = IntListType()


def _parse(schema: Type[SchemaT], stream) -> SchemaT:
    try:
        return schema.model_validate_json(stream.read())
    except ValidationError as e:
        raise InputError(f"Malformed {schema.__name__} input: {e.errors()[0]['msg']}") from e


def _render_table(payload: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, (dict, list)) and value and any(isinstance(v, (dict, list)) for v in _values(value)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_table(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_flat(value)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_render_table(item, indent + 1))
            else:
                lines.append(f"{pad}- {_flat(item)}")
    else:
        lines.append(f"{pad}{_flat(payload)}")
    return lines


def _values(value: dict | list) -> list:
    return list(value.values()) if isinstance(value, dict) else value


def _flat(value: Any) -> str:
    if isinstance(value, list):
        return " ".join(_flat(v) for v in value)
    if value is None:
        return "-"
    return str(value)


def emit(payload: BaseModel, fmt: str) -> None:
    if fmt == "table":
        click.echo("\n".join(_render_table(payload.model_dump(mode="json"))))
    else:
        click.echo(payload.model_dump_json(indent=2))


def output_format(command: Callable) -> Callable:
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(["json", "table"]),
        default="json",
        show_default=True,
        help="Output format.",
    )(command)


def quiver_input(command: Callable) -> Callable:
    return click.option(
        "--quiver",
        "-q",
        "quiver_file",
        type=click.File("r"),
        required=True,
        help="Quiver JSON file ('-' for stdin).",
    )(command)


def config_input(command: Callable) -> Callable:
    return click.option(
        "--config",
        "-c",
        "config_file",
        type=click.File("r"),
        required=True,
        help="Divisor configuration JSON file ('-' for stdin).",
    )(command)


def _load_quiver(stream):
    return quiver_service.validate_quiver(_parse(QuiverSchema, stream).model_dump())


def _load_config(stream):
    return divisor_service.validate_config(_parse(DivisorConfigSchema, stream).model_dump())


def _klm_options(command: Callable) -> Callable:
    for name in ("m", "l", "k"):
        command = click.option(f"--{name}", type=int, required=True)(command)
    return command


# ============== Command Group ==============

@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level on stderr.")
def cli(verbose: bool) -> None:
    """Local models of orders over surfaces, decided with exact arithmetic."""
    configure_logging(verbose)


# ============== Quivers ==============

@cli.command()
@quiver_input
@output_format
def euler(quiver_file, fmt: str) -> None:
    """Print the Euler matrix of a quiver."""
    q = _load_quiver(quiver_file)
    emit(EulerResponse.from_domain(quiver_service.euler_matrix(q)), fmt)


@cli.command()
@quiver_input
@click.option("--alpha", type=INT_LIST, required=True, help="Dimension vector, e.g. 1,1.")
@click.option("--respect-markings", is_flag=True, help="Drop marked loops from the criterion.")
@output_format
def simple(quiver_file, alpha: list[int], respect_markings: bool, fmt: str) -> None:
    """Decide whether alpha is the dimension vector of a simple representation."""
    q = _load_quiver(quiver_file)
    a = DimVector.of(alpha)
    is_simple = rep_service.is_simple_dimvector(q, a, respect_markings=respect_markings)
    dimension = rep_service.quotient_dimension(q, a) if is_simple else None
    emit(SimpleResponse(alpha=alpha, simple=is_simple, dimension=dimension), fmt)


@cli.command()
@quiver_input
@click.option("--alpha", type=INT_LIST, required=True, help="Simple dimension vector.")
@click.option("--bound", type=int, default=None, help="Override the enumeration entry bound.")
@output_format
def dim(quiver_file, alpha: list[int], bound: int | None, fmt: str) -> None:
    """Quotient dimension d(alpha) and the ramification components."""
    q = _load_quiver(quiver_file)
    profile = rep_service.ramification_profile(q, DimVector.of(alpha), bound)
    emit(RamificationResponse.from_domain(alpha, profile), fmt)


# ============== Surface Settings ==============

@cli.command()
@_klm_options
@output_format
def aklm(k: int, l: int, m: int, fmt: str) -> None:
    """Build the A_klm setting."""
    setting = surface_service.build_aklm(k, l, m)
    x_cycle, y_cycle = surface_service.aklm_invariant_cycles(setting)
    emit(AklmResponse(
        k=k,
        l=l,
        m=m,
        quiver=QuiverSchema.model_validate(quiver_service.quiver_to_json(setting.quiver)),
        alpha=list(setting.alpha.entries),
        cycles=(list(x_cycle), list(y_cycle)),
    ), fmt)


@cli.command()
@click.option("--n", type=int, required=True, help="Index of the order.")
@output_format
def classify(n: int, fmt: str) -> None:
    """List every local triple of index n."""
    triples = surface_service.classify_triples(n)
    emit(ClassificationResponse(
        n=n,
        count=len(triples),
        triples=[TripleSchema.from_domain(t) for t in triples],
    ), fmt)


@cli.command()
@_klm_options
@output_format
def ramtype(k: int, l: int, m: int, fmt: str) -> None:
    """Local shape of the ramification locus at an A_klm point."""
    kind = surface_service.ramification_type(k, l, m)
    emit(RamificationTypeResponse(k=k, l=l, m=m, type=kind), fmt)


@cli.command()
@click.option("--k", type=int, default=None)
@click.option("--l", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--gamma", type=INT_LIST, default=None, help="Block sizes of a triple.")
@click.option("--config", "-c", "config_file", type=click.File("r"), default=None,
              help="Divisor configuration JSON instead of a triple.")
@click.option("--locus", default=None, help="Crossing or curve id; omit for an Azumaya point.")
@click.option("--cover-degree", type=int, default=None, help="Cyclic cover degree b.")
@click.option("--a", "a_hint", type=int, default=None, help="Number of diagonal blocks a.")
@output_format
def local(k, l, m, gamma, config_file, locus, cover_degree, a_hint, fmt: str) -> None:
    """Block picture of the completed stalk, from a triple or a divisor locus."""
    if config_file is not None:
        config = _load_config(config_file)
        model = divisor_service.local_model_at_point(config, locus, cover_degree, a_hint)
    else:
        if None in (k, l, m, gamma):
            raise click.UsageError("local needs --k, --l, --m and --gamma, or --config")
        setting = surface_service.build_aklm(k, l, m)
        model = surface_service.etale_local_structure(surface_service.make_triple(setting, gamma))

    if isinstance(model, BlockStructure):
        emit(LocalModelResponse(blocks=BlockStructureSchema.from_domain(model)), fmt)
    else:
        emit(LocalModelResponse(quantum=QuantumBlockStructureSchema.from_domain(model)), fmt)


# ============== Divisors ==============

@cli.command("am-validate")
@config_input
@output_format
def am_validate(config_file, fmt: str) -> None:
    """Validate ramification data against the local sum-zero law."""
    config = _load_config(config_file)
    for message in divisor_service.curve_sum_warnings(config):
        logger.warning(message)
    emit(DivisorConfigSchema.from_domain(config), fmt)


@cli.command("am-blowup")
@config_input
@click.option("--point", "point_id", required=True, help="Crossing to blow up.")
@output_format
def am_blowup(config_file, point_id: str, fmt: str) -> None:
    """Blow up one crossing and print the new configuration."""
    config = _load_config(config_file)
    emit(DivisorConfigSchema.from_domain(divisor_service.blow_up_crossing(config, point_id)), fmt)


@cli.command("am-decide")
@config_input
@click.option("--max-blowups", type=int, default=None, help="Cap on the witness trace.")
@output_format
def am_decide(config_file, max_blowups: int | None, fmt: str) -> None:
    """Decide whether a noncommutative smooth model exists."""
    config = _load_config(config_file)
    verdict = divisor_service.decide_smooth_model(config, max_blowups)
    emit(SmoothModelVerdictSchema.from_domain(verdict), fmt)


# ============== Brauer-Severi ==============

@cli.command()
@click.option("--k", type=int, required=True, help="Length of the branch tail.")
@click.option("--gamma", type=INT_LIST, required=True, help="k+1 block sizes.")
@click.option("--seed", type=int, default=None, help="Sampler seed (settings default 0).")
@click.option("--samples", type=int, default=None, help="Random thin reps to classify; 0 skips.")
@output_format
def bsev(k: int, gamma: list[int], seed: int | None, samples: int | None, fmt: str) -> None:
    """Fiber of the Brauer-Severi scheme over a point of type A_{k01}."""
    if k < 0:
        raise InputError(f"k must be nonnegative, got {k}")
    setting = surface_service.build_aklm(k, 0, 1)
    triple = surface_service.make_triple(setting, gamma)
    report = brauer_severi_service.fiber_report(triple)

    extended = brauer_severi_service.extend_setting(triple)
    census = None
    if samples != 0:
        census = brauer_severi_service.sample_stability(extended, samples, seed)
    emit(FiberReportSchema.from_domain(
        report,
        moduli_dimension=brauer_severi_service.moduli_dimension(extended),
        census=census,
    ), fmt)


# ============== Quantum Plane ==============

@cli.group()
def qplane() -> None:
    """Checks on the quantum plane of order two."""


@qplane.command()
@click.option("--a", "a_param", default="1", show_default=True, help="Nonzero rational parameter of the point.")
@output_format
def verify(a_param: str, fmt: str) -> None:
    """Singularity, strict transform and stabilizer obstruction of trep_2."""
    try:
        report = quantum_plane_service.quantum_plane_report(a_param)
    except ValueError as e:
        raise InputError(str(e)) from e
    emit(QuantumPlaneReportSchema.from_domain(report), fmt)
