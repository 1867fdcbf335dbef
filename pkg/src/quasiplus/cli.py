"""
Command line interface.

Exit codes: 0 when everything checked holds, 1 when a counterexample was
found, 2 for usage and domain errors (bad tables, bad identities, orders
over the limit).
"""
import functools
import json
import logging
from enum import Enum
from pathlib import Path
from typing import Optional

import typer

from quasiplus.constants import IDENTITY_KEYS, MAX_EXHAUSTIVE_ORDER
from quasiplus.core.io import read_table, table_to_dict, table_to_text, write_table
from quasiplus.core.quasigroup import ParastropheKind
from quasiplus.identities.evaluate import holds
from quasiplus.identities.parse import parse_identity, print_identity
from quasiplus.identities.registry import get_identity, identity_label
from quasiplus.search.census import identity_census
from quasiplus.search.corpus import Corpus
from quasiplus.search.enumerate import enumerate_latin_squares
from quasiplus.search.query import SearchQuery, run_query
from quasiplus.utils.misc import split_keys
from quasiplus.verify.report import verify_statement
from quasiplus.verify.trimedial import is_trimedial

app = typer.Typer(
    help="Finite quasigroups: identities, enumeration and trimediality.",
    add_completion=False,
    no_args_is_help=True,
)


class Dedup(str, Enum):
    raw = "raw"
    iso = "iso"


def _error_message(err: Exception) -> str:
    if isinstance(err, KeyError) and err.args:
        return str(err.args[0])
    return str(err)


def _domain_errors(func):
    """Report domain errors on stderr and exit with code 2."""

    @functools.wraps(func)
    def _wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ValueError, KeyError, OSError) as err:
            typer.echo(f"error: {_error_message(err)}", err=True)
            raise typer.Exit(code=2)

    return _wrapper


def _echo_json(data) -> None:
    typer.echo(json.dumps(data, indent=2))


def _exit_for(ok: bool) -> None:
    if not ok:
        raise typer.Exit(code=1)


def _result_dict(result) -> dict:
    """JSON form of True or a falsy witness."""
    if result is True:
        return {"holds": True}
    out = result._asdict()
    for key, value in out.items():
        if hasattr(value, "_asdict"):
            out[key] = value._asdict()
    return {"holds": False, **out}


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress."),
):
    """Finite quasigroups: identities, enumeration and trimediality."""
    level = logging.INFO if verbose else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@app.command()
@_domain_errors
def check(
    table_file: Path = typer.Argument(..., exists=True, dir_okay=False),
    identities: Optional[str] = typer.Option(
        None, help="Comma separated registry keys; all of them by default."
    ),
    trimedial: bool = typer.Option(False, "--trimedial", help="Check trimediality."),
    as_json: bool = typer.Option(False, "--json", help="Structured output."),
):
    """Check named identities (and trimediality) on a table."""
    quasigroup = read_table(table_file)
    keys = split_keys(identities)
    if not keys and not trimedial:
        keys = list(IDENTITY_KEYS)
    results = {identity_label(x): holds(quasigroup, get_identity(x)) for x in keys}
    if trimedial:
        results["trimedial"] = is_trimedial(quasigroup)
    if as_json:
        out = {name: _result_dict(value) for name, value in results.items()}
        _echo_json({"order": quasigroup.order, "results": out})
    else:
        for name, value in results.items():
            text = "true" if value is True else f"false ({value})"
            typer.echo(f"{name}: {text}")
    _exit_for(all(x is True for x in results.values()))


@app.command("eval")
@_domain_errors
def eval_identity(
    table_file: Path = typer.Argument(..., exists=True, dir_okay=False),
    identity: str = typer.Option(..., help='Identity text, e.g. "x*y = y*x".'),
    as_json: bool = typer.Option(False, "--json", help="Structured output."),
):
    """Evaluate one identity on a table."""
    quasigroup = read_table(table_file)
    parsed = parse_identity(identity)
    result = holds(quasigroup, parsed)
    if as_json:
        _echo_json({"identity": print_identity(parsed), **_result_dict(result)})
    else:
        typer.echo("true" if result is True else f"false ({result})")
    _exit_for(result is True)


@app.command()
@_domain_errors
def parastrophe(
    table_file: Path = typer.Argument(..., exists=True, dir_okay=False),
    which: ParastropheKind = typer.Option(..., help="l, r or opp."),
    out: Optional[Path] = typer.Option(None, help="Write the table here."),
):
    """Print (or write) a parastrophe of a table."""
    result = read_table(table_file).parastrophe(which)
    if out is None:
        typer.echo(table_to_text(result), nl=False)
    else:
        write_table(result, out)


@app.command()
@_domain_errors
def search(
    min_order: int = typer.Option(1, help="Smallest order searched."),
    max_order: int = typer.Option(..., help="Largest order searched."),
    satisfy: Optional[str] = typer.Option(None, help="Identities to satisfy."),
    violate: Optional[str] = typer.Option(None, help="Identities to violate."),
    dedup: Dedup = typer.Option(Dedup.raw, help="raw or iso."),
    limit: Optional[int] = typer.Option(None, help="Stop after this many models."),
    sample_count: Optional[int] = typer.Option(
        None, help=f"Random models per order above {MAX_EXHAUSTIVE_ORDER}."
    ),
    seed: int = typer.Option(0, help="Seed for sampled orders."),
    workers: int = typer.Option(1, help="Number of processes."),
    allow_large: bool = typer.Option(False, help="Enumerate above the limit."),
    as_json: bool = typer.Option(False, "--json", help="Structured output."),
):
    """Find models satisfying and violating given identities."""
    query = SearchQuery(
        min_order=min_order,
        max_order=max_order,
        satisfy=split_keys(satisfy),
        violate=split_keys(violate),
        dedup=dedup.value,
        limit=limit,
        sample_count=sample_count,
        seed=seed,
        allow_large=allow_large,
    )
    result = run_query(query, workers=workers)
    if as_json:
        summary = result.summary.to_dict(orient="records")
        models = [table_to_dict(x) for x in result.models]
        _echo_json({"query": query.model_dump(), "summary": summary, "models": models})
        return
    typer.echo(result.summary.to_string(index=False))
    for model in result.models:
        typer.echo("")
        typer.echo(table_to_text(model), nl=False)


@app.command("enumerate")
@_domain_errors
def enumerate_command(
    order: int = typer.Option(..., help="Order of the Latin squares."),
    count: bool = typer.Option(False, "--count", help="Only print the count."),
    out: Optional[Path] = typer.Option(None, help="Write a corpus file."),
    dedup: Dedup = typer.Option(Dedup.raw, help="raw or iso."),
    reduced: bool = typer.Option(False, help="Only reduced squares (--count)."),
    workers: int = typer.Option(1, help="Number of processes."),
    allow_large: bool = typer.Option(False, help="Enumerate above the limit."),
):
    """Enumerate every Latin square of an order."""
    if count and dedup is Dedup.raw:
        total = enumerate_latin_squares(order, reduced=reduced, allow_large=allow_large)
        typer.echo(str(total))
        return
    corpus = Corpus.exhaustive(
        order,
        dedup=dedup.value,
        workers=workers,
        allow_large=allow_large,
        cache_path=None,
    )
    if count:
        typer.echo(str(len(corpus)))
    elif out is not None:
        corpus.write(out)
    else:
        typer.echo(corpus.to_text(), nl=False)


@app.command()
@_domain_errors
def verify(
    statement: str = typer.Option(..., help="Statement id, e.g. thm1."),
    max_order: int = typer.Option(..., help="Check every order up to this."),
    sample_order_6: Optional[int] = typer.Option(
        None, "--sample-order-6", help="Also check this many random order 6 models."
    ),
    seed: int = typer.Option(0, help="Seed of the order 6 sample."),
    workers: int = typer.Option(1, help="Number of processes."),
    allow_large: bool = typer.Option(False, help="Enumerate above the limit."),
    progress: bool = typer.Option(False, help="Show a progress bar."),
    as_json: bool = typer.Option(False, "--json", help="Structured output."),
):
    """Verify a registered statement over all small quasigroups."""
    report = verify_statement(
        statement,
        max_order,
        sample_order_6=sample_order_6,
        seed=seed,
        workers=workers,
        allow_large=allow_large,
        progress=progress,
    )
    typer.echo(report.to_json() if as_json else report.to_text(), nl=False)
    _exit_for(report.verified)


@app.command()
@_domain_errors
def census(
    min_order: int = typer.Option(1, help="Smallest order."),
    max_order: int = typer.Option(4, help="Largest order."),
    identities: Optional[str] = typer.Option(None, help="Identities to count."),
    dedup: Dedup = typer.Option(Dedup.raw, help="raw or iso."),
    workers: int = typer.Option(1, help="Number of processes."),
    as_json: bool = typer.Option(False, "--json", help="Structured output."),
):
    """Count models satisfying each identity, per order."""
    keys = split_keys(identities) or None
    frame = identity_census(
        min_order, max_order, keys=keys, dedup=dedup.value, workers=workers
    )
    if as_json:
        _echo_json(frame.reset_index().to_dict(orient="records"))
    else:
        typer.echo(frame.to_string())


if __name__ == "__main__":
    app()
