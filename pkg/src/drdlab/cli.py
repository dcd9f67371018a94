"""``drdlab`` command line.

Exit codes: 0 claim holds / predicate true, 1 claim fails / predicate false
/ counterexample found, 2 usage, IO or precondition error.
"""

from __future__ import annotations

import hashlib
import json
import sys
from pathlib import Path

import click

from drdlab import __version__, edgelist
from drdlab import connectivity as conn
from drdlab import harness
from drdlab.constructions import (
    block_cycle,
    damerell_lift,
    directed_cycle,
    find_srd,
    gamma_n,
    undirected_cycle,
)
from drdlab.digraph import Digraph
from drdlab.errors import ConsistencyError, DigraphError, NotStronglyConnected, PreconditionError
from drdlab import regularity as reg

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

FAMILIES = ("dcycle", "ucycle", "blockcycle", "lift", "gamma", "srd")


class Failure(click.ClickException):
    """Runtime error reported with exit status 2."""

    exit_code = EXIT_ERROR


def _load(path: str) -> Digraph:
    try:
        return edgelist.read(path)
    except OSError as exc:
        raise Failure(f"cannot read {path}: {exc.strerror or exc}") from None
    except (DigraphError, UnicodeDecodeError) as exc:
        raise Failure(f"malformed edge list {path}: {exc}") from None


def _file_hash(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _parse_params(text: str) -> tuple[int, int, int, int, int]:
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise click.BadParameter(f"expected n,k,t,lambda,mu; got {text!r}", param_hint="--params") from None
    if len(values) != 5:
        raise click.BadParameter(f"expected 5 integers, got {len(values)}", param_hint="--params")
    n, k, t, lam, mu = values
    if not (1 <= n <= 10 and 0 <= k <= n - 1 and 0 <= t <= k and 0 <= lam <= k and 0 <= mu <= k):
        raise click.BadParameter(f"parameters out of range (search supports n <= 10): {text}",
                                 param_hint="--params")
    return values


def _parse_range(text: str) -> list[int]:
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise click.BadParameter(f"expected N or A..B, got {text!r}", param_hint="--n") from None
    if lo > hi:
        raise click.BadParameter(f"empty range {text!r}", param_hint="--n")
    return list(range(lo, hi + 1))


@click.group()
@click.version_option(__version__, prog_name="drdlab")
def main() -> None:
    """Distance-regular and strongly regular digraphs: generation, recognition, cuts, verification."""


# -- gen ---------------------------------------------------------------------------


@main.command()
@click.option("--family", type=click.Choice(FAMILIES), required=True)
@click.option("--n", "n", type=int, help="Cycle length, gamma_n order, or lifted cycle length.")
@click.option("--t", "t", type=int, help="Block count (blockcycle).")
@click.option("--rho", type=int, help="Block size (blockcycle).")
@click.option("--m", "m", type=int, help="Lift multiplicity (lift).")
@click.option("--params", help="n,k,t,lambda,mu (srd).")
@click.option("-o", "--output", type=click.Path(), help="Output file (directory for srd).")
def gen(family, n, t, rho, m, params, output):
    """Write a generated digraph as an edge list."""
    need = {"dcycle": ("n",), "ucycle": ("n",), "blockcycle": ("t", "rho"), "lift": ("n", "m"),
            "gamma": ("n",), "srd": ("params",)}[family]
    given = {"n": n, "t": t, "rho": rho, "m": m, "params": params}
    for name in need:
        if given[name] is None:
            raise click.UsageError(f"--family {family} requires --{name}")
    lows = {"dcycle": {"n": 2}, "ucycle": {"n": 3}, "blockcycle": {"t": 2, "rho": 1},
            "lift": {"n": 3, "m": 2}, "gamma": {"n": 2}}.get(family, {})
    for name, low in lows.items():
        if given[name] < low:
            raise click.BadParameter(f"must be >= {low} for {family}", param_hint=f"--{name}")
    size = {"dcycle": n, "ucycle": n, "blockcycle": (t or 0) * (rho or 0),
            "lift": (n or 0) * (m or 0), "gamma": 2 * (n or 0)}.get(family, 0)
    if size > 64:
        raise click.UsageError(f"{family} would have {size} vertices; at most 64 are supported")

    if family == "srd":
        values = _parse_params(params)
        graphs = find_srd(*values)
        out_dir = Path(output or ".")
        tag = "_".join(map(str, values))
        files = []
        for i, g in enumerate(graphs):
            path = out_dir / f"srd_{tag}_{i}.dg"
            edgelist.write(g, path, comments=[f"srd{values} solution {i}"])
            files.append(path.name)
        index = {"params": list(values), "count": len(graphs), "files": files}
        (out_dir / f"srd_{tag}_index.json").write_text(json.dumps(index, indent=2, sort_keys=True) + "\n")
        click.echo(f"srd{values}: {len(graphs)} solution(s) written to {out_dir}")
        return

    g, label = {
        "dcycle": lambda: (directed_cycle(n), f"dcycle n={n}"),
        "ucycle": lambda: (undirected_cycle(n), f"ucycle n={n}"),
        "blockcycle": lambda: (block_cycle(t, rho), f"blockcycle t={t} rho={rho}"),
        "lift": lambda: (damerell_lift(directed_cycle(n), m), f"lift of dcycle n={n}, m={m}"),
        "gamma": lambda: (gamma_n(n), f"gamma n={n}"),
    }[family]()
    if output:
        edgelist.write(g, output, comments=[label])
        click.echo(f"{label}: {g.n} vertices, {g.edge_count} edges -> {output}")
    else:
        click.echo(edgelist.dumps(g, comments=[label]), nl=False)


# -- check ---------------------------------------------------------------------------


CHECKS = ("drd", "wdrd", "srd", "normal", "stable", "type")


@main.command()
@click.option("--what", type=click.Choice(CHECKS), required=True)
@click.argument("path")
def check(what, path):
    """Test a regularity predicate on an edge-list file."""
    g = _load(path)
    try:
        holds, lines = _run_check(what, g)
    except (PreconditionError, NotStronglyConnected, ConsistencyError) as exc:
        raise Failure(str(exc)) from None
    click.echo(f"{what}: {'true' if holds else 'false'}")
    for line in lines:
        click.echo(line)
    sys.exit(EXIT_TRUE if holds else EXIT_FALSE)


def _run_check(what: str, g: Digraph) -> tuple[bool, list[str]]:
    if what == "drd":
        numbers = reg.intersection_numbers(g)
        if isinstance(numbers, reg.Violation):
            return False, [f"witness: u={numbers.u} v={numbers.v} i={numbers.index}"]
        lines = [f"valency: {numbers.valency}", f"diameter: {numbers.diameter}", f"lambda: {numbers.lam}"]
        lines += [f"a[{k}]: {' '.join(map(str, row))}" for k, row in numbers.table.items()]
        return True, lines
    if what == "wdrd":
        v = reg.wdrd_violation(g)
        if v is not None:
            return False, [f"witness: u={v.u} v={v.v} length={v.index}"]
        return True, [f"diameter: {g.diameter}"]
    if what == "srd":
        p = reg.srd_params(g)
        if p is None:
            return False, []
        mu = "vacuous" if p.mu is None else p.mu
        return True, [f"params: n={p.n} k={p.k} t={p.t} lambda={p.lam} mu={mu}"]
    if what == "normal":
        return reg.is_normal(g), []
    if what == "stable":
        if g.n < 2:
            raise PreconditionError("stability needs at least 2 vertices")
        g.dist
        return reg.is_stable(g), [f"girth: {g.girth}"]
    kind = reg.drd_type(g)
    return True, [f"type: {kind}", f"diameter: {g.diameter}", f"girth: {g.girth}"]


# -- cut ---------------------------------------------------------------------------------


@main.command()
@click.option("--edge/--vertex", "edge", default=True, help="Edge (default) or vertex cuts.")
@click.option("--enumerate", "enum", is_flag=True, help="List every minimum cut.")
@click.option("--classify", is_flag=True, help="Tag each listed cut (star / neighbourhood / non-trivial).")
@click.argument("path")
def cut(edge, enum, classify, path):
    """Print edge or vertex connectivity, optionally listing all minimum cuts."""
    g = _load(path)
    try:
        if edge:
            cuts = conn.enumerate_min_edge_cuts(g) if (enum or classify) else None
            value = cuts[0].size if cuts else conn.edge_connectivity(g)
            click.echo(f"edge connectivity: {value}")
            for i, c in enumerate(cuts or []):
                crossing = " ".join(f"{u}->{v}" for u, v in c.crossing)
                line = f"cut {i}: size={c.size} side_a={sorted(c.side_a)} crossing={crossing}"
                if classify:
                    line += f" class={conn.classify_edge_cut(g, c)}"
                click.echo(line)
        else:
            cuts = conn.enumerate_min_vertex_cuts(g) if (enum or classify) else None
            value = cuts[0].size if cuts else conn.vertex_connectivity(g)
            click.echo(f"vertex connectivity: {value}")
            for i, c in enumerate(cuts or []):
                line = f"cut {i}: size={c.size} vertices={list(c.vertices)}"
                if classify:
                    line += f" class={conn.classify_vertex_cut(g, c)}"
                click.echo(line)
    except (PreconditionError, NotStronglyConnected) as exc:
        raise Failure(str(exc)) from None


# -- verify ---------------------------------------------------------------------------------


THEOREMS = ("drd", "srd", "gamma", "srd8", "figure1")  # figure1 is an alias of srd8


@main.command()
@click.option("--all", "run_everything", is_flag=True, help="Run every applicable check.")
@click.option("--theorem", type=click.Choice(THEOREMS), help="Run a single claim check.")
@click.option("--default-catalog", is_flag=True, help="Include the generated default catalog.")
@click.option("--n", "n_range", help="Range A..B of gamma_n orders (--theorem gamma).")
@click.option("--seed", default="0", envvar="DRDLAB_SEED", show_default=True,
              help="Seed for randomized balance checks (env DRDLAB_SEED).")
@click.option("--report", type=click.Path(), help="Write the JSON report here.")
@click.option("--timings", is_flag=True, help="Record per-check timings (report is then not byte-stable).")
@click.argument("paths", nargs=-1)
def verify(run_everything, theorem, default_catalog, n_range, seed, report, timings, paths):
    """Verify claims on files and/or the default catalog; exit 0 iff nothing fails."""
    if bool(run_everything) == bool(theorem):
        raise click.UsageError("give exactly one of --all or --theorem")
    if n_range and theorem != "gamma":
        raise click.UsageError("--n only applies to --theorem gamma")
    gamma_orders = _parse_range(n_range) if n_range else []
    if any(not 2 <= n <= 16 for n in gamma_orders):
        raise click.BadParameter("gamma orders must lie in 2..16", param_hint="--n")

    expect = {"drd": {"drd"}, "srd": {"srd"}}.get(theorem, set())
    entries = []
    inputs = []
    for p in paths:
        g = _load(p)
        inputs.append({"path": p, "sha256": _file_hash(p)})
        entries.append(harness.CatalogEntry(p, "file", {"path": p}, g, frozenset(expect), file=p))
    catalog = harness.build_catalog() if default_catalog else harness.Catalog()
    for e in entries:
        catalog.add(e)

    try:
        if run_everything:
            rep = harness.run_all(catalog, seed=seed, inputs=inputs)
        else:
            results = _theorem_results(theorem, catalog, gamma_orders, explicit=bool(paths))
            results.sort(key=lambda r: (harness.natural_key(r.instance), r.claim))
            rep = harness.Report(seed, [e.as_dict() for e in catalog], results, inputs)
    except (PreconditionError, NotStronglyConnected) as exc:
        raise Failure(str(exc)) from None

    for r in rep.results:
        line = f"{r.verdict.upper():<17} {r.claim:<26} {r.instance}"
        if r.failed and r.witness is not None:
            line += "  witness=" + json.dumps(r.witness, sort_keys=True)
        click.echo(line)
    click.echo("summary: " + ", ".join(f"{k}={v}" for k, v in rep.summary().items()))
    if report:
        try:
            rep.write(report, timings=timings)
        except OSError as exc:
            raise Failure(f"cannot write report {report}: {exc.strerror or exc}") from None
    sys.exit(EXIT_TRUE if rep.ok else EXIT_FALSE)


def _theorem_results(theorem, catalog, gamma_orders, explicit):
    out = []
    if theorem == "gamma":
        orders = gamma_orders or ([e.params["n"] for e in catalog if e.family == "gamma"])
        if not orders and not catalog.entries:
            orders = list(range(2, 11))
        return [harness.verify_gamma_family(n) for n in orders]
    if theorem in ("srd8", "figure1") and not catalog.entries:
        return [harness.verify_srd8_vertex_cut(g, f"srd(8,3,2,1,1)#{i}") for i, g in enumerate(find_srd(8, 3, 2, 1, 1))]
    for e in catalog:
        g = e.graph
        if theorem == "drd":
            if e.family == "file" or (g.regular_degree is not None and g.strongly_connected and g.n >= 2
                                      and reg.is_distance_regular(g)):
                out.append(harness.verify_drd_theorem(g, e.name))
        elif theorem == "srd":
            if e.family == "file" or reg.srd_params(g) is not None:
                out.append(harness.verify_srd_theorem(g, e.name))
        elif theorem in ("srd8", "figure1"):
            p = reg.srd_params(g)
            if e.family == "file" or (p is not None and p.as_tuple() == (8, 3, 2, 1, 1)):
                out.append(harness.verify_srd8_vertex_cut(g, e.name))
    return out


# -- search --------------------------------------------------------------------------------------


@main.command()
@click.option("--conjecture", is_flag=True, required=True, help="Search for counterexamples to the WDRD edge conjecture.")
@click.option("--max-n", default=8, show_default=True, type=int)
@click.option("--max-k", default=3, show_default=True, type=int)
@click.option("--exhaustive/--catalog", "exhaustive", default=True, help="Instance source.")
@click.option("--out", "out_dir", type=click.Path(), help="Directory for counterexample files.")
@click.option("-v", "--verbose", is_flag=True, help="List every instance checked.")
def search(conjecture, max_n, max_k, exhaustive, out_dir, verbose):
    """Check the WDRD edge-connectivity conjecture; exit 1 if a counterexample turns up."""
    if not conjecture:
        raise click.UsageError("--conjecture is required")
    if exhaustive and not (2 <= max_n <= 8 and 1 <= max_k <= 3):
        raise click.BadParameter("exhaustive search supports 2 <= n <= 8 and 1 <= k <= 3",
                                 param_hint="--max-n/--max-k")
    source = "exhaustive" if exhaustive else "catalog"
    results = harness.search_conjecture(max_n, max_k, source, out_dir=out_dir)
    fails = [r for r in results if r.failed]
    flagged = [r for r in results if r.info and "flag" in r.info]
    for r in results:
        if verbose or r.failed:
            line = f"{r.verdict.upper():<6} {r.instance}"
            if r.info and "flag" in r.info:
                line += f"  [{r.info['flag']}]"
            if r.failed:
                line += "  witness=" + json.dumps(r.witness, sort_keys=True)
            click.echo(line)
    click.echo(f"checked {len(results)} weakly distance-regular digraph(s) ({source}); "
               f"{len(flagged)} with a non-star minimum cut at k <= 2; counterexamples: {len(fails)}")
    sys.exit(EXIT_FALSE if fails else EXIT_TRUE)


if __name__ == "__main__":
    main()
