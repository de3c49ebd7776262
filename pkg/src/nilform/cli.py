"""Command-line verification surface.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import os
import sys

import click

from . import catalog, serialize, verify
from .invariants import DEFAULT_SEED
from .reports import Report


def _parse_range(text):
    """'7..12' or '9' -> inclusive integer range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise click.BadParameter(f"expected A..B or an integer, got {text!r}")


def _parse_alphas(text):
    from .rational import parse_rat

    try:
        alphas = tuple(parse_rat(part) for part in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated rationals, got {text!r}")
    if any(a == 0 for a in alphas):
        raise click.BadParameter("alpha samples must be nonzero")
    return alphas


def _seed(value):
    if value is not None:
        return value
    env = os.environ.get("NILFORM_SEED")
    return int(env) if env else DEFAULT_SEED


def _emit(report: Report, fmt):
    click.echo(report.render(fmt))
    sys.exit(report.exit_code)


@click.group()
def main():
    """Exact verification toolkit for the (n-5)-filiform classification."""


@main.command()
@click.option("--dims", default="7..13", help="inclusive dimension range A..B")
@click.option("--alpha", default="1,2,-1,1/2", help="comma-separated alpha samples")
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
@click.option("--file", "path", type=click.Path(exists=True), default=None,
              help="check a single algebra file instead of the catalog")
def check(dims, alpha, seed, fmt, path):
    """Jacobi, characteristic sequence and nonsplitness over the catalog."""
    seed = _seed(seed)
    if path:
        g = serialize.load(path)
        _emit(verify.check_algebra_file(g, seed=seed), fmt)
    dims = [n for n in _parse_range(dims) if n >= 7]
    _emit(verify.check_suite(dims, alphas=_parse_alphas(alpha), seed=seed), fmt)


@main.command()
@click.option("--id", "table_id", type=int, required=True, help="table number 1..9")
@click.option("--m", "m_range", default="4..6", help="m values A..B")
@click.option("--alpha", default="1,2,-1,1/2")
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
def tables(table_id, m_range, alpha, seed, fmt):
    """Recompute a printed table and diff it column by column."""
    if not 1 <= table_id <= 9:
        raise click.BadParameter("table id must be in 1..9")
    seed = _seed(seed)
    ms = _parse_range(m_range)
    if table_id in (8, 9):
        _emit(verify.weight_rows_suite(table_id, ms, seed=seed), fmt)
    _emit(
        verify.tables_structural_suite(table_id, ms, alphas=_parse_alphas(alpha), seed=seed),
        fmt,
    )


@main.command()
@click.option("--dims", default="7..9")
@click.option("--alpha", default="1,2,-1,1/2")
@click.option("--sums/--no-sums", default=False,
              help="also verify the nilindex-5 direct sums at n=14")
@click.option("--certificates/--no-certificates", default=False,
              help="emit a per-instance certificate item (witness or transcript)")
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
def charnilp(dims, alpha, sums, certificates, seed, fmt):
    """Characteristic nilpotency classification over the catalog."""
    seed = _seed(seed)
    report = verify.charnilp_suite(
        [n for n in _parse_range(dims) if n >= 7], alphas=_parse_alphas(alpha),
        seed=seed, certificates=certificates,
    )
    if sums:
        extra = verify.corollary_sums_suite(seed=seed)
        report.items.extend(extra.items)
    _emit(report, fmt)


@main.command()
@click.option("--family", type=int, required=True)
@click.option("--dim", type=int, required=True)
@click.option("--depth", type=int, default=1)
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
def dertower(family, dim, depth, seed, fmt):
    """Derivation tower of one catalog entry."""
    if family not in catalog.FAMILIES:
        raise click.BadParameter(f"no family {family}")
    fam = catalog.FAMILIES[family]
    m = dim // 2 if fam.parity == "even" else (dim - 1) // 2
    if fam.dimension(m) != dim or m < fam.m_min:
        raise click.BadParameter(f"family {family} is not defined at dimension {dim}")
    _emit(verify.dertower_suite(family, dim, depth=depth, seed=_seed(seed)), fmt)


@main.command()
@click.option("--dim", "n", type=int, required=True)
@click.option("--alpha", default="1,2")
@click.option("--seed", type=int, default=None)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv"]), default="text")
def distinguish(n, alpha, seed, fmt):
    """Fingerprint classes and unresolved pairs at one dimension."""
    if n < 7:
        raise click.BadParameter("dimension must be at least 7")
    _emit(verify.distinguish_suite(n, alphas=_parse_alphas(alpha), seed=_seed(seed)), fmt)


@main.group()
def catalog_cmd():
    """Catalog utilities."""


main.add_command(catalog_cmd, name="catalog")


@catalog_cmd.command("export")
@click.option("--dim", "n", type=int, required=True)
@click.option("--alpha", default="1,2,-1,1/2")
@click.option("--out", type=click.Path(file_okay=False), default=".")
def catalog_export(n, alpha, out):
    """Write every instance at a dimension as algebra JSON files."""
    if n < 7:
        raise click.BadParameter("dimension must be at least 7")
    os.makedirs(out, exist_ok=True)
    count = 0
    for inst in catalog.enumerate_instances(n, alphas=_parse_alphas(alpha)):
        path = os.path.join(out, inst.id + ".json")
        serialize.save(inst.algebra, path)
        count += 1
    click.echo(f"wrote {count} files to {out}")


@catalog_cmd.command("errata")
@click.option("--family", type=int, default=None)
def catalog_errata(family):
    """Show documented deviations from the printed listing."""
    targets = [family] if family else sorted(catalog.ERRATA)
    for i in targets:
        notes = catalog.errata(i)
        if not notes:
            click.echo(f"family {i}: no errata")
        for note in notes:
            click.echo(f"family {i}: {note}")


if __name__ == "__main__":
    main()
