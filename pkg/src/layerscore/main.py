# src/layerscore/main.py

"""
Command-line entry point.

Standard output carries only the requested document; diagnostics go to
standard error, one ``<CODE> <subject>: <message>`` line per violation.
Exit status is 0 on success, 1 when a schema or assessment is invalid and
2 when a document, file or configuration cannot be read.
"""

import functools
from pathlib import Path
from typing import Any, Callable, Optional

import click

from layerscore import __version__
from layerscore.core.config import Settings, load_settings, setup_logging
from layerscore.core.exceptions import DocumentIOError, LayerscoreError
from layerscore.core.utils.logger import get_logger
from layerscore.framework import (
    BUILTIN_MISA_REF,
    AssessmentClient,
    RenderOptions,
    ReportFormat,
)

logger = get_logger(__name__)


def _handles_errors(command: Callable[..., Any]) -> Callable[..., Any]:
    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except LayerscoreError as e:
            logger.debug("Command failed: %s", e)
            for line in e.lines():
                click.echo(line, err=True)
            click.get_current_context().exit(e.exit_code)

    return wrapper


def _report_options(command: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.option(
            "--schema",
            "schema_ref",
            default=BUILTIN_MISA_REF,
            show_default=True,
            help="'builtin:misa' or the path of a JSON schema document.",
        ),
        click.option(
            "--format",
            "format_",
            type=click.Choice([f.value for f in ReportFormat]),
            default=None,
            help="Output format (default from configuration: table).",
        ),
        click.option(
            "--precision",
            type=click.IntRange(0, 6),
            default=None,
            help="Decimal places for displayed values (default 1).",
        ),
        click.option(
            "--output",
            "-o",
            type=click.Path(dir_okay=False, path_type=Path),
            default=None,
            help="Write the document to this file instead of standard output.",
        ),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _scores_option(required: bool) -> Callable[..., Any]:
    return click.option(
        "--scores",
        "scores_path",
        type=click.Path(dir_okay=False, path_type=Path),
        required=required,
        help="Scores document (.csv or .json).",
    )


def _client(
    ctx: click.Context, format_: Optional[str], precision: Optional[int]
) -> AssessmentClient:
    settings: Settings = ctx.obj
    options = RenderOptions(
        format=format_ or settings.report.format,
        precision=settings.report.precision if precision is None else precision,
    )
    return AssessmentClient(settings=settings, options=options)


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        click.echo(text, nl=False)
        return
    try:
        with output.open("w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as e:
        raise DocumentIOError(str(output), str(e)) from e
    logger.info("Wrote %s", output)


@click.group()
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="YAML file overriding the bundled configuration.",
)
@click.option("--verbose", "-v", is_flag=True, help="Log debug output to stderr.")
@click.version_option(__version__, prog_name="layerscore")
@click.pass_context
@_handles_errors
def cli(ctx: click.Context, config_path: Optional[Path], verbose: bool) -> None:
    """Assess security readiness against a six-layer framework schema."""
    settings = load_settings(config_path)
    if verbose:
        settings.logging.log_level = "DEBUG"
    setup_logging(settings.logging, settings.service_name, __version__)
    ctx.obj = settings


@cli.command()
@_report_options
@_scores_option(required=True)
@click.pass_context
@_handles_errors
def assess(
    ctx: click.Context,
    schema_ref: str,
    scores_path: Path,
    format_: Optional[str],
    precision: Optional[int],
    output: Optional[Path],
) -> None:
    """Evaluate an assessment and print every node, layer and overall score."""
    client = _client(ctx, format_, precision)
    schema = client.load_schema(schema_ref)
    _, result = client.assess(schema, scores_path)
    _emit(client.render_result(result, schema), output)


@cli.command()
@_report_options
@_scores_option(required=False)
@click.pass_context
@_handles_errors
def validate(
    ctx: click.Context,
    schema_ref: str,
    scores_path: Optional[Path],
    format_: Optional[str],
    precision: Optional[int],
    output: Optional[Path],
) -> None:
    """Check a schema and, when given, a scores document against it."""
    client = _client(ctx, format_, precision)
    schema = client.load_schema(schema_ref)
    assessment = client.bind(schema, scores_path) if scores_path else None
    _emit(client.render_validation(schema, assessment), output)


@cli.command()
@click.option(
    "--schema",
    "schema_ref",
    default=BUILTIN_MISA_REF,
    show_default=True,
    help="'builtin:misa' or the path of a JSON schema document.",
)
@click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write the document to this file instead of standard output.",
)
@click.pass_context
@_handles_errors
def schema(ctx: click.Context, schema_ref: str, output: Optional[Path]) -> None:
    """Print the schema document for a schema reference."""
    client = AssessmentClient(settings=ctx.obj)
    _emit(client.export_schema(client.load_schema(schema_ref)), output)


@cli.command()
@_report_options
@_scores_option(required=False)
@click.option("--leaf", "leaf_id", default=None, help="Report a single leaf id.")
@click.pass_context
@_handles_errors
def sensitivity(
    ctx: click.Context,
    schema_ref: str,
    scores_path: Optional[Path],
    leaf_id: Optional[str],
    format_: Optional[str],
    precision: Optional[int],
    output: Optional[Path],
) -> None:
    """
    Print how much the overall score moves per unit change of each leaf.

    Sensitivities depend on the schema structure only; a scores document,
    when given, is validated against the schema first.
    """
    client = _client(ctx, format_, precision)
    schema = client.load_schema(schema_ref)
    if scores_path is not None:
        client.bind(schema, scores_path)
    values = client.sensitivities(schema, leaf_id)
    _emit(client.render_sensitivities(values, schema), output)


@cli.command()
@_report_options
@_scores_option(required=True)
@click.pass_context
@_handles_errors
def chart(
    ctx: click.Context,
    schema_ref: str,
    scores_path: Path,
    format_: Optional[str],
    precision: Optional[int],
    output: Optional[Path],
) -> None:
    """Print the ideal/achievement/priority series per layer, largest gap first."""
    client = _client(ctx, format_, precision)
    schema = client.load_schema(schema_ref)
    _emit(client.render_chart(client.gaps(schema, scores_path)), output)


@cli.command()
@_report_options
@_scores_option(required=True)
@click.pass_context
@_handles_errors
def gaps(
    ctx: click.Context,
    schema_ref: str,
    scores_path: Path,
    format_: Optional[str],
    precision: Optional[int],
    output: Optional[Path],
) -> None:
    """Print layer and control gaps with the strongest and weakest layer."""
    client = _client(ctx, format_, precision)
    schema = client.load_schema(schema_ref)
    _emit(client.render_gaps(client.gaps(schema, scores_path)), output)


def main() -> None:
    cli(prog_name="layerscore")
