"""``regpoly`` command line: verify, sweep, export, conjecture."""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor

import click

from .certificate import LATTICE_MAX_N, verify
from .construction import build_group
from .fpgroup import DEFAULT_MAX_COSETS, conjecture_record, paper_presentation
from .polytope import build_lattice, flag_graph_dot, hasse_dot
from .sggi import GeneratorSystem

MAX_COSETS_ENV = "REGPOLY_MAX_COSETS"


def _max_cosets_option(f):
    return click.option("--max-cosets", type=click.IntRange(min=1), default=DEFAULT_MAX_COSETS,
                        envvar=MAX_COSETS_ENV, show_default=True,
                        help=f"Coset enumeration cap (env {MAX_COSETS_ENV}).")(f)


def _check_range(lo, hi, what):
    if lo > hi:
        raise click.UsageError(f"{what}: minimum {lo} exceeds maximum {hi}")


@click.group()
@click.version_option(package_name="regpoly")
def main():
    """Build and verify the self-dual regular polytopes of type {n,n}."""


@main.command("verify")
@click.argument("n", type=click.IntRange(min=3))
@click.option("--skip-lattice", is_flag=True, help="Skip face lattice and axiom checks.")
@_max_cosets_option
@click.option("--json", "json_path", type=click.Path(dir_okay=False, writable=True),
              help="Also write the certificate to this file.")
def verify_cmd(n, skip_lattice, max_cosets, json_path):
    """Verify the polytope for N and print its certificate."""
    cert = verify(n, skip_lattice=True if skip_lattice else None, max_cosets=max_cosets)
    text = cert.to_json()
    click.echo(text)
    if json_path:
        with open(json_path, "w") as fh:
            fh.write(text + "\n")
    sys.exit(0 if cert.passed else 1)


def _sweep_job(args):
    n, max_cosets = args
    return verify(n, max_cosets=max_cosets)


@main.command("sweep")
@click.argument("n_min", type=click.IntRange(min=3))
@click.argument("n_max", type=click.IntRange(min=3))
@click.option("--parallel", "-j", type=click.IntRange(min=1), default=1, show_default=True,
              help="Worker processes.")
@_max_cosets_option
@click.option("--out", type=click.File("w"), default="-",
              help="JSON-lines destination (default stdout).")
def sweep_cmd(n_min, n_max, parallel, max_cosets, out):
    """Verify every n in N_MIN..N_MAX; one JSON record per line.

    The summary table goes to stderr so stdout stays machine-readable.
    """
    _check_range(n_min, n_max, "n range")
    jobs = [(n, max_cosets) for n in range(n_min, n_max + 1)]
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            certs = _write_in_order(pool.map(_sweep_job, jobs), out)
    else:
        certs = _write_in_order(map(_sweep_job, jobs), out)
    click.echo(f"{'n':>3} {'order':>8} {'flags':>8} {'type':>10}  result", err=True)
    for c in certs:
        flags = "-" if c.flag_count is None else str(c.flag_count)
        order = "-" if c.group_order is None else str(c.group_order)
        typ = "-" if c.schlafli_type is None else "{%s}" % ",".join(map(str, c.schlafli_type))
        click.echo(f"{c.n:>3} {order:>8} {flags:>8} {typ:>10}  "
                   f"{'pass' if c.passed else 'FAIL'}", err=True)
    failed = [c.n for c in certs if not c.passed]
    click.echo(f"{len(certs) - len(failed)}/{len(certs)} passed"
               + (f"; failures: {failed}" if failed else ""), err=True)
    sys.exit(1 if failed else 0)


def _write_in_order(certs, out):
    done = []
    for c in certs:
        out.write(c.to_json(indent=None) + "\n")
        out.flush()
        done.append(c)
    return done


@main.command("export")
@click.argument("n", type=click.IntRange(min=3))
@click.argument("kind", type=click.Choice(["hasse", "flaggraph", "presentation"]))
@click.argument("out", type=click.File("w"), default="-")
def export_cmd(n, kind, out):
    """Write a DOT graph or the presentation text for N to OUT (default stdout)."""
    if kind == "presentation":
        out.write(paper_presentation(n).to_text())
        return
    if n > LATTICE_MAX_N:
        raise click.UsageError(f"{kind} for n={n} has {2 ** n * n} flags; "
                               f"graph export is limited to n <= {LATTICE_MAX_N}")
    group = build_group(n)
    lat = build_lattice(GeneratorSystem(tuple(group.generators), group))
    out.write(hasse_dot(lat) if kind == "hasse" else flag_graph_dot(lat))


def _conjecture_job(args):
    d, n, max_cosets, strategy = args
    return conjecture_record(d, n, max_cosets, strategy)


@main.command("conjecture")
@click.argument("d_min", type=click.IntRange(min=3))
@click.argument("d_max", type=click.IntRange(min=3))
@click.argument("n_min", type=click.IntRange(min=3))
@click.argument("n_max", type=click.IntRange(min=3))
@_max_cosets_option
@click.option("--strategy", type=click.Choice(["hlt", "felsch"]), default="hlt", show_default=True)
@click.option("--parallel", "-j", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--out", type=click.File("w"), default="-",
              help="JSON-lines destination (default stdout).")
def conjecture_cmd(d_min, d_max, n_min, n_max, max_cosets, strategy, parallel, out):
    """Enumerate the rank-d quotient presentations for every (d, n) pair.

    Pairs that exceed the coset cap are reported as inconclusive and do not
    change the exit status; only an error status does.
    """
    _check_range(d_min, d_max, "d range")
    _check_range(n_min, n_max, "n range")
    jobs = [(d, n, max_cosets, strategy)
            for d in range(d_min, d_max + 1) for n in range(n_min, n_max + 1)]
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            records = list(_stream_records(pool.map(_conjecture_job, jobs), out))
    else:
        records = list(_stream_records(map(_conjecture_job, jobs), out))
    sys.exit(1 if any(r.status == "error" for r in records) else 0)


def _stream_records(records, out):
    for r in records:
        out.write(json.dumps(r.to_dict()) + "\n")
        out.flush()
        extra = f" order={r.order} type={r.schlafli} string_c={r.string_c}" if r.order else ""
        click.echo(f"d={r.d} n={r.n}: {r.status}{extra}", err=True)
        yield r


if __name__ == "__main__":
    main()
