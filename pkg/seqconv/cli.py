import json
import logging
import sys
from collections import OrderedDict
from dataclasses import dataclass
from pathlib import Path
from typing import Tuple

import click

from seqconv import __version__
from seqconv import logger
from seqconv import settings
from seqconv.catalog import select
from seqconv.chebyshev import cheb_eval
from seqconv.chebyshev import cheb_poly
from seqconv.exactmath import to_rational
from seqconv.exceptions import SeqConvError
from seqconv.identities import convolve
from seqconv.identities import sweep
from seqconv.sequences import binet_at
from seqconv.sequences import lucas_u
from seqconv.sequences import lucas_v
from seqconv.sequences import make_sequence
from seqconv.sequences import named
from seqconv.utils import FORMATS
from seqconv.utils import cell_record
from seqconv.utils import format_rational
from seqconv.utils import format_scalar
from seqconv.utils import header_line
from seqconv.utils import parse_range
from seqconv.utils import render
from seqconv.utils import summary_lines

PROVENANCES = ("theorem", "printed", "any")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class CliConfig:
    """Everything a verification run needs, after options and settings file are merged."""

    ids: Tuple[str, ...] = ()
    tags: Tuple[str, ...] = ()
    everything: bool = False
    provenance: str = settings.DEFAULT_PROVENANCE
    r_range: range = parse_range(settings.DEFAULT_R_RANGE)
    n_range: range = parse_range(settings.DEFAULT_N_RANGE)
    fmt: str = settings.DEFAULT_FORMAT
    fail_fast: bool = False
    workers: int = 1
    header: bool = True
    summary: bool = False


def run(config: CliConfig) -> Tuple[int, str]:
    """
    Select, sweep and render.

    :return: the exit code (0 all checked cells pass, 1 at least one fail) and the report text
    :raises SeqConvError: for an unknown identity or tag
    """
    entries = select(config.ids, config.tags, config.everything, config.provenance)
    report = sweep(
        entries,
        config.r_range,
        config.n_range,
        workers=config.workers,
        fail_fast=config.fail_fast,
    )
    lines = []
    if config.header:
        lines.append(header_line() + "\n")
    lines.append(render([cell_record(cell) for cell in report.cells], config.fmt))
    if config.summary:
        lines.append("".join(line + "\n" for line in summary_lines(report)))
    return (EXIT_OK if report.ok else EXIT_FAIL), "".join(lines)


def _usage_error(message: str):
    click.echo("Error: %s" % message, err=True)
    sys.exit(EXIT_USAGE)


def load_settings() -> "OrderedDict[str, object]":
    if not Path(settings.SETTINGS_FILE).exists():
        return OrderedDict()
    with open(settings.SETTINGS_FILE, "r", encoding="utf8") as f:
        try:
            settings_dict = json.loads(f.read(), object_pairs_hook=OrderedDict)
        except json.decoder.JSONDecodeError:
            settings_dict = None
    if not isinstance(settings_dict, dict):
        logger.error("The config file %s is not correct, it should be a json object.", settings.SETTINGS_FILE)
        sys.exit(EXIT_USAGE)
    return settings_dict


def _from_settings(settings_dict, key, value, default):
    if value is not None:
        return value
    configured = settings_dict.get(key)
    if configured is not None:
        logger.info("Using `%s` in config file.", key)
        return configured
    return default


@click.group(invoke_without_command=True)
@click.option(
    "--show-config",
    "show_config",
    is_flag=True,
    help="When specified, the config file will be created if not exists and the path will be shown.",
)
@click.option(
    "-q",
    "--quiet",
    is_flag=True,
    help="When specified, only errors are logged.",
)
@click.option(
    "-v",
    "--verbose",
    is_flag=True,
    help="When specified, cache growth and worker start-up are logged too.",
)
@click.version_option(__version__, prog_name="seqconv")
@click.pass_context
def seqconv(ctx, show_config, quiet, verbose):
    """
    seqconv computes Horadam, Lucas and Chebyshev sequences exactly and verifies a catalog of
    convolution identities against a brute-force convolution oracle.
    """
    if show_config:
        if not Path(settings.SETTINGS_FILE).exists():
            Path(settings.SETTINGS_FILE).parent.mkdir(parents=True, exist_ok=True)
            with open(settings.SETTINGS_FILE, "w", encoding="utf8") as f:
                json.dump({}, f)
        click.echo(f"The config file is {settings.SETTINGS_FILE}.")
        sys.exit(EXIT_OK)

    if quiet:
        logger.setLevel(logging.ERROR)
    elif verbose:
        logger.setLevel(logging.DEBUG)
    else:
        logger.setLevel(logging.INFO)

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@seqconv.command("list")
@click.option("-t", "--tag", "tags", type=click.STRING, multiple=True, help="Only identities carrying this tag.")
@click.option(
    "--provenance",
    type=click.Choice(PROVENANCES),
    default="any",
    show_default=True,
    help="Only theorem-derived or only as-printed identities.",
)
def list_identities(tags, provenance):
    """List the catalogued identities with their provenance, tags and anchor."""
    try:
        if tags:
            entries = select(tags=tags, provenance=provenance)
        else:
            entries = select(everything=True, provenance=provenance)
    except SeqConvError as e:
        _usage_error(e.body())
    for entry in entries:
        click.echo(
            "%-40s %-18s %-32s %s" % (entry.id, entry.provenance.value, ",".join(entry.tags), entry.anchor)
        )


@seqconv.command()
@click.option("-a", "--all", "everything", is_flag=True, help="Every identity of the selected provenance.")
@click.option("-i", "--id", "ids", type=click.STRING, multiple=True, help="Identity id. It can be specified multiple times.")
@click.option("-t", "--tag", "tags", type=click.STRING, multiple=True, help="Identity tag. It can be specified multiple times.")
@click.option(
    "--provenance",
    type=click.Choice(PROVENANCES),
    help="Restrict --all and --tag to theorem-derived or as-printed identities "
    "(default: theorem). Explicit --id selections are always run.",
)
@click.option("--r", "r_text", type=click.STRING, help="Stride range a..b (default 1..4).")
@click.option("--n", "n_text", type=click.STRING, help="Length range a..b (default 0..20).")
@click.option("--format", "fmt", type=click.Choice(FORMATS), help="Report format (default table).")
@click.option("--fail-fast", "fail_fast", is_flag=True, help="Stop at the first failing cell.")
@click.option(
    "-w",
    "--workers",
    type=click.IntRange(min=1),
    envvar="SEQCONV_WORKERS",
    help="Worker processes for the sweep; 1 runs sequentially.",
)
@click.option("--no-header", "no_header", is_flag=True, help="Leave out the timestamped header line.")
@click.option("--summary", is_flag=True, help="Append tallies and minimal counterexamples.")
def verify(everything, ids, tags, provenance, r_text, n_text, fmt, fail_fast, workers, no_header, summary):
    """Check the selected identities at every (r, n) cell and report each cell."""
    if not (everything or ids or tags):
        _usage_error("select identities with --all, --id or --tag")
    settings_dict = load_settings()
    try:
        fmt = _from_settings(settings_dict, "format", fmt, settings.DEFAULT_FORMAT)
        provenance = _from_settings(settings_dict, "provenance", provenance, settings.DEFAULT_PROVENANCE)
        workers = int(_from_settings(settings_dict, "workers", workers, 1))
        config = CliConfig(
            ids=tuple(ids),
            tags=tuple(tags),
            everything=everything,
            provenance=provenance,
            r_range=parse_range(_from_settings(settings_dict, "r-range", r_text, settings.DEFAULT_R_RANGE)),
            n_range=parse_range(_from_settings(settings_dict, "n-range", n_text, settings.DEFAULT_N_RANGE)),
            fmt=fmt,
            fail_fast=fail_fast,
            workers=workers,
            header=not no_header,
            summary=summary,
        )
    except (SeqConvError, ValueError, TypeError) as e:
        _usage_error(e.body() if isinstance(e, SeqConvError) else str(e))
    if config.fmt not in FORMATS:
        _usage_error("unknown format %r in config file" % config.fmt)
    if config.provenance not in PROVENANCES:
        _usage_error("unknown provenance %r in config file" % config.provenance)
    if config.workers < 1:
        _usage_error("workers must be at least 1")
    if config.n_range.start < 0:
        _usage_error("n must be >= 0")

    try:
        code, text = run(config)
    except SeqConvError as e:
        _usage_error(e.body())
    click.echo(text, nl=False)
    sys.exit(code)


@seqconv.command("eval")
@click.option("-s", "--sequence", type=click.STRING, help="Named sequence, e.g. fibonacci or its symbol F.")
@click.option("--p", "p_text", type=click.STRING, help="Recurrence parameter p.")
@click.option("--q", "q_text", type=click.STRING, help="Recurrence parameter q.")
@click.option("--a", "a_text", type=click.STRING, help="Seed w_0 of an arbitrary Horadam sequence.")
@click.option("--b", "b_text", type=click.STRING, help="Seed w_1 of an arbitrary Horadam sequence.")
@click.option(
    "--kind",
    type=click.Choice(("u", "v")),
    default="u",
    show_default=True,
    help="Lucas sequence of the first (u) or second (v) kind when no seeds are given.",
)
@click.option("-n", "--index", type=click.INT, required=True, help="Index, negative allowed.")
@click.option("--binet", is_flag=True, help="Evaluate through the characteristic roots instead of the recurrence.")
def evaluate(sequence, p_text, q_text, a_text, b_text, kind, index, binet):
    """Print one exact sequence value."""
    try:
        if sequence:
            seq = named(sequence)
        elif p_text is not None and q_text is not None:
            p, q = to_rational(p_text), to_rational(q_text)
            if a_text is not None or b_text is not None:
                seq = make_sequence(to_rational(a_text or 0), to_rational(b_text or 0), p, q)
            else:
                seq = lucas_u(p, q) if kind == "u" else lucas_v(p, q)
        else:
            _usage_error("give --sequence, or --p and --q")
        value = binet_at(seq.params, index) if binet else seq[index]
    except SeqConvError as e:
        _usage_error(e.body())
    except (ValueError, ZeroDivisionError) as e:
        _usage_error(str(e))
    click.echo(format_rational(value))


@seqconv.command()
@click.option("--left", type=click.STRING, required=True, help="Named sequence X.")
@click.option("--right", type=click.STRING, required=True, help="Named sequence Y.")
@click.option("--r", "stride", type=click.INT, default=1, show_default=True, help="Stride r.")
@click.option("--n", "length", type=click.INT, required=True, help="Upper summation index n.")
def conv(left, right, stride, length):
    """Print the brute-force convolution sum_{k=0}^{n} X_{rk} Y_{r(n-k)}."""
    try:
        value = convolve(named(left), named(right), stride, length)
    except SeqConvError as e:
        _usage_error(e.body())
    click.echo(format_rational(value))


@seqconv.command()
@click.option("-k", "--kind", type=click.Choice(("t", "u")), required=True, help="First (t) or second (u) kind.")
@click.option("-d", "--degree", type=click.INT, required=True, help="Index n, negative allowed.")
@click.option("--at", "x0", type=click.STRING, help="Rational point to evaluate at instead of printing coefficients.")
def cheb(kind, degree, x0):
    """Print the coefficients of t_n(x) or u_n(x), lowest degree first."""
    if x0 is not None:
        try:
            click.echo(format_rational(cheb_eval(kind, degree, x0)))
        except (SeqConvError, ValueError, ZeroDivisionError) as e:
            _usage_error(str(e))
        return
    click.echo("[" + ", ".join(format_scalar(cheb_poly(kind, degree))) + "]")


if __name__ == "__main__":
    seqconv()
