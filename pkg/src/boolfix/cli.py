"""Command-line front end.

Results (fixed points, sets, arc lists, JSON documents, generated networks)
go to stdout; summaries, tables and error messages go to stderr. Exit status
follows ``BoolFixError.exit_code``: 0 success, 1 missing input or parse
error, 2 invalid sets or schedule, 3 resource guard, 4 precondition or
generation failure.
"""

from __future__ import annotations

import functools
import logging
import random
from pathlib import Path
from typing import Callable, Optional, TypeVar

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from .bench import mean_times, run_bench, write_csv
from .config import Limits
from .constants import OrderMode, Strategy
from .errors import BoolFixError, ErrorCode, GenerationError, InvalidScheduleError
from .graph.cycles import brute_tau, brute_tau_plus, find_positive_cycle
from .graph.digraph import derive
from .logging_config import configure_logging
from .models import OracleDocument
from .netfile import load_network
from .netgen import GenSpec, generate, write_network
from .network.network import BooleanNetwork
from .oracle import brute_fixed_points, check_theorem2
from .pfvs.algorithm import best_random_pfvs, pfvs_algorithm, verify_pfvs_output
from .pfvs.order import check_order, min_order
from .solver import solve as solve_network
from .utils.serializers import (
    graph_document,
    names_of,
    parse_vertex_list,
    pfvs_document,
    to_json,
)

logger = logging.getLogger(__name__)

app = typer.Typer(
    help="Fixed points of Boolean networks through positive feedback vertex sets.",
    no_args_is_help=True,
    add_completion=False,
)
err_console = Console(stderr=True)

F = TypeVar("F", bound=Callable[..., object])


# ============================================================================
# Error Handling
# ============================================================================


def handle_errors(func: F) -> F:
    """Decorator turning engine errors into a message and an exit status.

    - BoolFixError: message on stderr, exit with ``exit_code``
    - OSError: unreadable or unwritable file, exit 1
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BoolFixError as exc:
            logger.debug("Command failed: %s", exc.to_dict())
            err_console.print(f"[bold red]error[/] ({exc.code.value}): {escape(exc.message)}")
            raise typer.Exit(code=exc.exit_code) from exc
        except OSError as exc:
            err_console.print(f"[bold red]error[/] (io): {escape(str(exc))}")
            raise typer.Exit(code=1) from exc

    return wrapper  # type: ignore[return-value]


# ============================================================================
# Argument Helpers
# ============================================================================


def _load(path: Path, limits: Limits) -> BooleanNetwork:
    if not path.is_file():
        raise BoolFixError(ErrorCode.NO_INPUT, f"no such network file: {path}")
    return load_network(path, limits)


def _order_spec(
    net: BooleanNetwork, order: str, order_file: Optional[Path]
) -> tuple[OrderMode, Optional[list[int]]]:
    """Read ``--order``: ``min``, ``rand``, ``file`` or an explicit vertex list."""
    if order_file is not None:
        text = order_file.read_text(encoding="utf-8").replace("\n", ",")
        return OrderMode.FILE, parse_vertex_list(net, text)
    lowered = order.strip().lower()
    if lowered in {mode.value for mode in OrderMode}:
        return OrderMode(lowered), None
    return OrderMode.FILE, parse_vertex_list(net, order)


def _int_list(text: str, option: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise typer.BadParameter(
            f"expected comma-separated integers, got '{text}'", param_hint=option
        ) from exc


def _fmt(net: BooleanNetwork, vertices) -> str:
    return ",".join(names_of(net, vertices))


# ============================================================================
# Commands
# ============================================================================


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging on stderr."),
) -> None:
    configure_logging(verbose=True if verbose else None)


@app.command()
@handle_errors
def solve(
    file: Path = typer.Argument(..., help="Network file."),
    strategy: Strategy = typer.Option(Strategy.AUTO, "--strategy", "-s", case_sensitive=False),
    pfvs: Optional[str] = typer.Option(None, "--pfvs", help="PFVS, e.g. 'x3' or '3'."),
    fvs: Optional[str] = typer.Option(None, "--fvs", help="FVS containing the PFVS."),
    order: str = typer.Option("min", "--order", help="min, rand, file or a vertex list."),
    order_file: Optional[Path] = typer.Option(None, "--order-file", help="Vertex order file."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for --order rand."),
    verify: bool = typer.Option(False, "--verify", help="Check the sets before enumerating."),
    json_output: bool = typer.Option(False, "--json", help="Print the result document."),
    timings: bool = typer.Option(False, "--timings", help="Include timings in --json."),
) -> None:
    """Enumerate the fixed points of a network, one bit string per line."""
    limits = Limits.from_env()
    net = _load(file, limits)
    mode, explicit = _order_spec(net, order, order_file)
    report = solve_network(
        net,
        strategy,
        pfvs=parse_vertex_list(net, pfvs),
        fvs=parse_vertex_list(net, fvs),
        order_mode=mode,
        order=explicit,
        seed=seed,
        verify=verify,
        limits=limits,
    )
    if json_output:
        typer.echo(to_json(report.to_document(net, file.stem, include_timings=timings)))
        return
    for x in report.fixed_points:
        typer.echo(str(x))
    summary = f"{len(report.fixed_points)} fixed point(s); P={{{_fmt(net, report.P)}}}"
    if report.F is not None:
        summary += f" F={{{_fmt(net, report.F)}}}"
    summary += f"; {report.candidates_tested} candidate(s) tested"
    err_console.print(summary, highlight=False)


@app.command("pfvs")
@handle_errors
def pfvs_command(
    file: Path = typer.Argument(..., help="Network file."),
    order: str = typer.Option("min", "--order", help="min, rand, file or a vertex list."),
    order_file: Optional[Path] = typer.Option(None, "--order-file", help="Vertex order file."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for --order rand."),
    verify: bool = typer.Option(False, "--verify", help="Check P and the minimality of F."),
    json_output: bool = typer.Option(False, "--json", help="Print the PFVS document."),
) -> None:
    """Construct a PFVS ``P`` and a minimal FVS ``F = P + O``."""
    limits = Limits.from_env()
    net = _load(file, limits)
    graph = derive(net)
    mode, explicit = _order_spec(net, order, order_file)
    if explicit is not None:
        output = pfvs_algorithm(graph, check_order(graph, explicit))
    elif mode is OrderMode.RAND:
        output = best_random_pfvs(graph, random.Random(seed))
    elif mode is OrderMode.MIN:
        output = pfvs_algorithm(graph, min_order(graph))
    else:
        raise InvalidScheduleError("--order file needs --order-file")
    if verify:
        verify_pfvs_output(graph, output, limits)

    if json_output:
        typer.echo(to_json(pfvs_document(net, output, file.stem)))
        return
    typer.echo(f"P = {{{_fmt(net, output.P)}}}")
    typer.echo(f"O = {{{_fmt(net, output.O)}}}")
    typer.echo(f"F = {{{_fmt(net, output.F)}}}")
    typer.echo(f"phases = {output.phases}")


@app.command()
@handle_errors
def graph(
    file: Path = typer.Argument(..., help="Network file."),
    json_output: bool = typer.Option(False, "--json", help="Print the graph document."),
) -> None:
    """Print the signed interaction graph as ``source target sign`` lines."""
    limits = Limits.from_env()
    net = _load(file, limits)
    document = graph_document(net, derive(net), file.stem)
    if json_output:
        typer.echo(to_json(document))
        return
    for arc in document.arcs:
        typer.echo(f"{arc.source} {arc.target} {'+' if arc.sign > 0 else '-'}")


@app.command()
@handle_errors
def oracle(
    file: Path = typer.Argument(..., help="Network file."),
    json_output: bool = typer.Option(False, "--json", help="Print the oracle document."),
) -> None:
    """Brute-force cross-check: every fixed point, transversal numbers, and the
    convergence equivalences when no positive cycle exists."""
    limits = Limits.from_env()
    net = _load(file, limits)
    graph = derive(net)
    document = OracleDocument(
        network=file.stem,
        n=net.n,
        fixed_points=[str(x) for x in brute_fixed_points(net, limits)],
    )
    if net.n <= limits.brute_tau_max_n:
        document.tau = brute_tau(graph, limits)[0]
        document.tau_plus = brute_tau_plus(graph, limits)[0]
    document.positive_cycles = find_positive_cycle(graph, (), limits) is not None
    if not document.positive_cycles and net.n <= limits.dynamics_max_n:
        verdict = check_theorem2(net, limits=limits)
        document.equivalences_hold = verdict.holds
        document.violations = list(verdict.violations)

    if json_output:
        typer.echo(to_json(document))
        return
    for bits in document.fixed_points:
        typer.echo(bits)
    table = Table(title=f"oracle: {file.stem}", show_header=False)
    table.add_row("n", str(document.n))
    table.add_row("fixed points", str(len(document.fixed_points)))
    if document.tau is not None:
        table.add_row("tau / tau+", f"{document.tau} / {document.tau_plus}")
    table.add_row("positive cycles", "yes" if document.positive_cycles else "no")
    if document.equivalences_hold is not None:
        table.add_row("equivalences", "hold" if document.equivalences_hold else "VIOLATED")
    err_console.print(table)
    for violation in document.violations:
        err_console.print(f"[bold red]violation[/] {escape(violation)}")


@app.command()
@handle_errors
def gen(
    n: int = typer.Option(..., "--n", help="Number of components."),
    tau: int = typer.Option(0, "--tau", help="Planted minimum FVS size."),
    tau_plus: int = typer.Option(0, "--tau-plus", help="Planted minimum PFVS size."),
    fanin: int = typer.Option(3, "--fanin", help="Maximum inputs per component."),
    seed: int = typer.Option(0, "--seed", help="Generator seed."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write here, not stdout."),
) -> None:
    """Generate a random network with planted FVS and PFVS sizes."""
    limits = Limits.from_env()
    try:
        spec = GenSpec(n=n, tau=tau, tau_plus=tau_plus, fanin=fanin, seed=seed)
    except ValidationError as exc:
        messages = "; ".join(error["msg"] for error in exc.errors())
        raise GenerationError(messages, {"n": n, "tau": tau, "tau_plus": tau_plus}) from exc
    planted = generate(spec, limits)
    text = write_network(planted)
    if output is None:
        typer.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
    err_console.print(
        f"planted F={{{_fmt(planted.network, planted.fvs)}}} "
        f"P={{{_fmt(planted.network, planted.pfvs)}}}",
        highlight=False,
    )


@app.command()
@handle_errors
def bench(
    sizes: str = typer.Option("20,40,60", "--sizes", help="Comma-separated n values."),
    tau: str = typer.Option("10", "--tau", help="Comma-separated tau values."),
    tau_plus: str = typer.Option("0,2,4,6,8,10", "--tau-plus", help="Comma-separated tau+."),
    reps: int = typer.Option(3, "--reps", min=1, help="Networks per configuration."),
    csv_path: Optional[Path] = typer.Option(None, "--csv", help="Write rows to this CSV."),
    strategy: Strategy = typer.Option(Strategy.SCHEDULED, "--strategy", case_sensitive=False),
    fanin: int = typer.Option(3, "--fanin", help="Maximum inputs per component."),
    seed: int = typer.Option(0, "--seed", help="Seed of the first repetition."),
    heuristic: bool = typer.Option(
        False, "--heuristic", help="Time the full pipeline instead of the planted sets."
    ),
) -> None:
    """Time the solver over a grid of planted networks."""
    limits = Limits.from_env()
    rows = run_bench(
        _int_list(sizes, "--sizes"),
        _int_list(tau, "--tau"),
        _int_list(tau_plus, "--tau-plus"),
        reps,
        strategy=strategy,
        fanin=fanin,
        seed=seed,
        planted_sets=not heuristic,
        limits=limits,
    )
    if csv_path is not None:
        write_csv(rows, csv_path)

    table = Table(title=f"mean ms over {reps} rep(s)")
    for column in ("n", "tau", "tau+", "strategy", "ms"):
        table.add_column(column, justify="right")
    for (n_value, tau_value, tp_value, name), ms in mean_times(rows).items():
        table.add_row(str(n_value), str(tau_value), str(tp_value), name, f"{ms:.3f}")
    err_console.print(table)
