"""Claim verification over a catalog of generated digraphs.

Each check returns a :class:`ClaimResult`; failures are data, never
exceptions.  Reports are JSON documents whose bytes depend only on the
catalog and the recorded seed.
"""

from __future__ import annotations

import json
import random
import re
import time
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Callable

from drdlab import __version__, edgelist
from drdlab.connectivity import (
    NON_TRIVIAL,
    check_cut_balance,
    classify_edge_cut,
    classify_vertex_cut,
    edge_connectivity,
    enumerate_min_edge_cuts,
    enumerate_min_vertex_cuts,
    vertex_connectivity,
)
from drdlab.constructions import (
    antipodal_quotient,
    block_cycle,
    damerell_lift,
    dedupe_isomorphic,
    directed_cycle,
    find_srd,
    gamma_n,
    isomorphic,
    undirected_cycle,
    walk_constrained_digraphs,
)
from drdlab.digraph import Digraph
from drdlab.errors import ConsistencyError, NotStronglyConnected, PreconditionError
from drdlab.regularity import (
    IntersectionNumbers,
    Violation,
    drd_type,
    a11_failure,
    family_d_structure,
    intersection_numbers,
    is_normal,
    is_stable,
    srd_identity_holds,
    srd_params,
    wdrd_violation,
)

REPORT_VERSION = 1
MAX_N = 64

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"
EXCEPTION = "exception-matched"

DRD_EDGE = "drd-edge-connectivity"
SRD_EDGE = "srd-edge-connectivity"
GAMMA = "gamma-family"
SRD8_VERTEX_CUT = "srd8-vertex-cut"
CONJECTURE = "wdrd-edge-conjecture"
BALANCE = "cut-balance"
CHARACTERIZATION = "drd-iff-normal-wdrd"
STABILITY = "drd-stable-type"
BLOCK_LAMBDA = "block-cycle-iff-lambda0"
A11 = "a11-positive"
ROUND_TRIP = "lift-quotient-round-trip"
LAMBDA_SCALING = "lift-lambda-scaling"
LIFT_GIRTH = "lift-girth"


@dataclass
class ClaimResult:
    claim: str
    instance: str
    verdict: str
    witness: dict | None = None
    info: dict | None = None
    timing_ms: float | None = None

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    def as_dict(self, timings: bool = False) -> dict:
        out = {"claim": self.claim, "instance": self.instance, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.info is not None:
            out["info"] = self.info
        if timings and self.timing_ms is not None:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out


@dataclass
class CatalogEntry:
    name: str
    family: str
    params: dict
    graph: Digraph
    expect: frozenset[str] = frozenset()
    file: str | None = None

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "family": self.family,
            "params": self.params,
            "file": self.file,
            "sha256": edgelist.digest(self.graph),
        }


@dataclass
class Catalog:
    entries: list[CatalogEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def add(self, entry: CatalogEntry) -> None:
        self.entries.append(entry)

    def by_name(self, name: str) -> CatalogEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


@dataclass(frozen=True)
class CatalogSpec:
    dcycle: tuple[int, ...] = ()
    ucycle: tuple[int, ...] = ()
    blockcycle: tuple[tuple[int, int], ...] = ()
    lift: tuple[tuple[int, int], ...] = ()  # (directed cycle length, multiplicity)
    gamma: tuple[int, ...] = ()
    srd: tuple[tuple[int, int, int, int, int], ...] = ()

    @classmethod
    def default(cls) -> "CatalogSpec":
        return cls(
            dcycle=tuple(range(2, 13)),
            ucycle=tuple(range(3, 13)),
            blockcycle=tuple((t, r) for t in range(2, 7) for r in range(1, 5) if t * r <= 24),
            lift=tuple((n, m) for n in range(3, 7) for m in (2, 3)),
            gamma=tuple(range(2, 11)),
            srd=((6, 2, 1, 0, 1), (8, 3, 2, 1, 1), (4, 2, 2, 0, 2), (5, 2, 2, 0, 1)),
        )


# -- catalog construction ------------------------------------------------------


def _admit(entry: CatalogEntry, check: Callable[[Digraph], bool]) -> CatalogEntry:
    if entry.graph.n > MAX_N:
        raise ValueError(f"{entry.name}: n={entry.graph.n} exceeds {MAX_N}")
    if not check(entry.graph):
        raise ConsistencyError(f"{entry.name} fails its generator postconditions")
    return entry


@lru_cache(maxsize=None)
def _srd_solutions(params: tuple[int, int, int, int, int]) -> tuple[Digraph, ...]:
    return tuple(find_srd(*params))


def build_catalog(spec: CatalogSpec | None = None) -> Catalog:
    """Generate the catalog described by ``spec`` (default ranges when None)."""
    spec = CatalogSpec.default() if spec is None else spec
    for n in spec.dcycle:
        if n < 2:
            raise ValueError(f"directed cycle length {n} < 2")
    for n in spec.ucycle:
        if n < 3:
            raise ValueError(f"undirected cycle length {n} < 3")
    for t, rho in spec.blockcycle:
        if t < 2 or rho < 1:
            raise ValueError(f"block cycle needs t >= 2, rho >= 1; got t={t}, rho={rho}")
    for n, m in spec.lift:
        if n < 3 or m < 2:
            raise ValueError(f"lift needs a directed cycle of length >= 3 and m >= 2; got {n}, {m}")
    for n in spec.gamma:
        if n < 2:
            raise ValueError(f"gamma_n needs n >= 2, got {n}")

    cat = Catalog()
    drd = frozenset({"drd"})
    for n in spec.dcycle:
        cat.add(_admit(
            CatalogEntry(f"dcycle(n={n})", "dcycle", {"n": n}, directed_cycle(n), drd),
            lambda g: g.regular_degree == 1 and g.strongly_connected,
        ))
    for n in spec.ucycle:
        cat.add(_admit(
            CatalogEntry(f"ucycle(n={n})", "ucycle", {"n": n}, undirected_cycle(n), drd),
            lambda g: g.regular_degree == 2 and g.undirected and g.strongly_connected,
        ))
    for t, rho in spec.blockcycle:
        cat.add(_admit(
            CatalogEntry(f"blockcycle(t={t},rho={rho})", "blockcycle", {"t": t, "rho": rho},
                         block_cycle(t, rho), drd),
            lambda g, t=t, rho=rho: g.regular_degree == rho and g.n == t * rho
            and (t < 3 or family_d_structure(g) is not None),
        ))
    for n, m in spec.lift:
        base = directed_cycle(n)
        cat.add(_admit(
            CatalogEntry(f"lift(dcycle(n={n}),m={m})", "lift", {"base": "dcycle", "n": n, "m": m},
                         damerell_lift(base, m), drd),
            lambda g, n=n, m=m: g.n == n * m and g.regular_degree == m,
        ))
    for n in spec.gamma:
        cat.add(_admit(
            CatalogEntry(f"gamma(n={n})", "gamma", {"n": n}, gamma_n(n), frozenset({"gamma"})),
            lambda g, n=n: g.n == 2 * n and g.regular_degree == 2,
        ))
    for params in spec.srd:
        for i, g in enumerate(_srd_solutions(tuple(params))):
            name = "srd(" + ",".join(map(str, params)) + f")#{i}"
            cat.add(_admit(
                CatalogEntry(name, "srd", {"params": list(params), "index": i}, g, frozenset({"srd"})),
                lambda g, params=params: (p := srd_params(g)) is not None and p.as_tuple() == tuple(params),
            ))
    return cat


def entry_from_file(path: str | Path, expect=frozenset()) -> CatalogEntry:
    path = Path(path)
    g = edgelist.read(path)
    return CatalogEntry(path.name, "file", {"path": str(path)}, g, frozenset(expect), file=str(path))


# -- helpers -----------------------------------------------------------------------


def _cut_dict(g: Digraph, cut) -> dict:
    return {
        "side_a": sorted(cut.side_a),
        "crossing": [list(e) for e in cut.crossing],
        "size": cut.size,
        "class": str(classify_edge_cut(g, cut)),
    }


def _regularity_failure(g: Digraph) -> dict | None:
    """Witness for why ``g`` is not a DRD, or None if it is one."""
    if g.n < 2:
        return {"type": "too-small", "n": g.n}
    if not g.strongly_connected:
        try:
            g.dist
        except NotStronglyConnected as exc:
            return {"type": "unreachable", "pair": list(exc.pair)}
    w = g.degree_witness()
    if w is not None:
        return {"type": "irregular", "vertex": w[0], "out_degree": w[1], "in_degree": w[2]}
    numbers = intersection_numbers(g)
    if isinstance(numbers, Violation):
        return {"type": "intersection-number", **numbers.as_dict()}
    return None


def is_undirected_cycle(g: Digraph) -> bool:
    return g.n >= 3 and g.undirected and g.regular_degree == 2 and g.strongly_connected


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        result = fn(*args, **kwargs)
        result.timing_ms = (time.perf_counter() - t0) * 1000
        return result
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# -- theorem checks -------------------------------------------------------------------


@_timed
def verify_drd_theorem(g: Digraph, instance: str = "") -> ClaimResult:
    """Edge connectivity equals valency; minimum cuts are stars unless g is an undirected cycle.

    A non-DRD input yields a fail whose witness shows why it is not one.
    """
    why = _regularity_failure(g)
    if why is not None:
        return ClaimResult(DRD_EDGE, instance, FAIL, {"reason": "not distance-regular", **why})
    k = g.regular_degree
    cuts = enumerate_min_edge_cuts(g)
    lam = cuts[0].size
    if lam != k:
        return ClaimResult(DRD_EDGE, instance, FAIL,
                           {"reason": "edge connectivity != valency", "edge_connectivity": lam,
                            "valency": k, "cut": _cut_dict(g, cuts[0])})
    nontrivial = [c for c in cuts if not classify_edge_cut(g, c).trivial]
    info = {"valency": k, "min_cuts": len(cuts), "nontrivial": len(nontrivial)}
    if nontrivial and is_undirected_cycle(g):
        return ClaimResult(DRD_EDGE, instance, PASS, info={**info, "exemption": "undirected cycle"})
    if nontrivial:
        return ClaimResult(DRD_EDGE, instance, FAIL,
                           {"reason": "non-star minimum edge cut", "cut": _cut_dict(g, nontrivial[0])},
                           info)
    return ClaimResult(DRD_EDGE, instance, PASS, info=info)


def srd_exceptions() -> list[tuple[str, Digraph]]:
    out = [("ucycle(n=4)", undirected_cycle(4)), ("ucycle(n=5)", undirected_cycle(5))]
    out += [(f"srd(6,2,1,0,1)#{i}", g) for i, g in enumerate(_srd_solutions((6, 2, 1, 0, 1)))]
    return out


def match_srd_exception(g: Digraph) -> str | None:
    """Name of the exceptional digraph isomorphic to ``g``, if any."""
    for name, h in srd_exceptions():
        if isomorphic(g, h):
            return name
    return None


@_timed
def verify_srd_theorem(g: Digraph, instance: str = "") -> ClaimResult:
    """Edge connectivity equals k; minimum cuts are stars except on the three exceptional digraphs."""
    params = srd_params(g)
    if params is None:
        raise PreconditionError("not a strongly regular digraph")
    if not g.strongly_connected:
        raise PreconditionError("strongly regular digraph is not strongly connected")
    k = params.k
    cuts = enumerate_min_edge_cuts(g)
    lam = cuts[0].size
    info = {"params": list(params.as_tuple()), "min_cuts": len(cuts)}
    if lam != k:
        return ClaimResult(SRD_EDGE, instance, FAIL,
                           {"reason": "edge connectivity != valency", "edge_connectivity": lam,
                            "valency": k, "cut": _cut_dict(g, cuts[0])}, info)
    nontrivial = [c for c in cuts if not classify_edge_cut(g, c).trivial]
    info["nontrivial"] = len(nontrivial)
    match = match_srd_exception(g)
    if match is not None:
        info["exception"] = match
        if not nontrivial or nontrivial[0].size != k:
            return ClaimResult(SRD_EDGE, instance, FAIL,
                               {"reason": "exceptional digraph has no non-star minimum cut",
                                "exception": match}, info)
        return ClaimResult(SRD_EDGE, instance, EXCEPTION, {"cut": _cut_dict(g, nontrivial[0])}, info)
    if nontrivial:
        return ClaimResult(SRD_EDGE, instance, FAIL,
                           {"reason": "non-star minimum edge cut", "cut": _cut_dict(g, nontrivial[0])},
                           info)
    return ClaimResult(SRD_EDGE, instance, PASS, info=info)


@_timed
def verify_gamma_family(n: int) -> ClaimResult:
    """gamma_n(n): 2-regular WDRD, diameter n//2 + 1, edge connectivity 2, a non-star minimum cut."""
    if not 2 <= n <= 16:
        raise PreconditionError(f"gamma family check supports 2 <= n <= 16, got {n}")
    g = gamma_n(n)
    instance = f"gamma(n={n})"
    failures = {}
    if g.regular_degree != 2:
        failures["regular_degree"] = g.regular_degree
    if not g.strongly_connected:
        failures["strongly_connected"] = False
    else:
        if g.regular_degree is not None:
            v = wdrd_violation(g)
            if v is not None:
                failures["wdrd_violation"] = v.as_dict()
        if g.diameter != n // 2 + 1:
            failures["diameter"] = {"got": g.diameter, "want": n // 2 + 1}
        cuts = enumerate_min_edge_cuts(g)
        if cuts[0].size != 2:
            failures["edge_connectivity"] = cuts[0].size
        nontrivial = [c for c in cuts if not classify_edge_cut(g, c).trivial]
        if not nontrivial:
            failures["nontrivial_cut"] = None
    info = {"diameter": g.diameter if g.strongly_connected else None}
    if failures:
        return ClaimResult(GAMMA, instance, FAIL, failures, info)
    return ClaimResult(GAMMA, instance, PASS, {"cut": _cut_dict(g, nontrivial[0])}, info)


@_timed
def verify_srd8_vertex_cut(g: Digraph, instance: str = "") -> ClaimResult:
    """An SRD(8,3,2,1,1) has vertex connectivity 2 < 3 with a non-neighbourhood minimum vertex cut."""
    params = srd_params(g)
    if params is None or params.as_tuple() != (8, 3, 2, 1, 1):
        raise PreconditionError("expected a strongly regular digraph with parameters (8, 3, 2, 1, 1)")
    failures = {}
    if not srd_identity_holds(g, params):
        failures["identity"] = "A^2 != I + J"
    kappa = vertex_connectivity(g)
    cuts = enumerate_min_vertex_cuts(g)
    nontrivial = [c for c in cuts if classify_vertex_cut(g, c).tag == NON_TRIVIAL]
    if kappa != 2:
        failures["vertex_connectivity"] = kappa
    if not nontrivial:
        failures["nontrivial_vertex_cut"] = None
    info = {"vertex_connectivity": kappa, "min_vertex_cuts": len(cuts), "nontrivial": len(nontrivial)}
    if failures:
        return ClaimResult(SRD8_VERTEX_CUT, instance, FAIL, failures, info)
    return ClaimResult(SRD8_VERTEX_CUT, instance, PASS, {"vertex_cut": list(nontrivial[0].vertices)}, info)


@_timed
def check_conjecture(g: Digraph, instance: str = "") -> ClaimResult:
    """For a WDRD of valency k: edge connectivity k, and stars only when k > 2."""
    v = wdrd_violation(g)
    if v is not None:
        raise PreconditionError(f"not weakly distance-regular: {v}")
    k = g.regular_degree
    cuts = enumerate_min_edge_cuts(g)
    info = {"valency": k, "n": g.n}
    if cuts[0].size != k:
        return ClaimResult(CONJECTURE, instance, FAIL,
                           {"reason": "edge connectivity != valency", "edge_connectivity": cuts[0].size,
                            "cut": _cut_dict(g, cuts[0])}, info)
    nontrivial = [c for c in cuts if not classify_edge_cut(g, c).trivial]
    if nontrivial and k > 2:
        return ClaimResult(CONJECTURE, instance, FAIL,
                           {"reason": "non-star minimum edge cut", "cut": _cut_dict(g, nontrivial[0])},
                           info)
    if nontrivial:
        info["flag"] = "non-star minimum cut with k <= 2"
    return ClaimResult(CONJECTURE, instance, PASS, info=info)


@_timed
def check_balance(g: Digraph, instance: str, seed, trials: int = 1000) -> ClaimResult:
    """Randomized check that every sampled cut is balanced."""
    rng = random.Random(f"{seed}:{instance}")
    full = (1 << g.n) - 1
    for _ in range(trials):
        mask = 0
        while mask == 0 or mask == full:
            mask = rng.getrandbits(g.n)
        side = [u for u in range(g.n) if mask >> u & 1]
        if not check_cut_balance(g, side):
            return ClaimResult(BALANCE, instance, FAIL, {"side_a": side})
    return ClaimResult(BALANCE, instance, PASS, info={"trials": trials})


@_timed
def check_characterization(g: Digraph, instance: str = "") -> ClaimResult:
    drd = isinstance(intersection_numbers(g), IntersectionNumbers)
    wdrd = wdrd_violation(g) is None
    normal = is_normal(g)
    info = {"drd": drd, "wdrd": wdrd, "normal": normal}
    verdict = PASS if drd == (wdrd and normal) else FAIL
    return ClaimResult(CHARACTERIZATION, instance, verdict, info if verdict == FAIL else None, info)


def _drd_structure_checks(g: Digraph, numbers: IntersectionNumbers, instance: str) -> list[ClaimResult]:
    out = []
    if g.girth < 3:
        for claim in (STABILITY, BLOCK_LAMBDA, A11):
            out.append(ClaimResult(claim, instance, VACUOUS, info={"girth": g.girth}))
        return out
    try:
        kind = drd_type(g)
        stable = is_stable(g)
        verdict = PASS if stable else FAIL
        out.append(ClaimResult(STABILITY, instance, verdict, None if stable else {"stable": False},
                               {"type": kind, "diameter": g.diameter, "girth": g.girth}))
    except ConsistencyError as exc:
        out.append(ClaimResult(STABILITY, instance, FAIL, {"error": str(exc)}))
    block = family_d_structure(g)
    ok = (block is not None) == (numbers.lam == 0)
    out.append(ClaimResult(BLOCK_LAMBDA, instance, PASS if ok else FAIL,
                           None if ok else {"lambda": numbers.lam, "block_cycle": block is not None},
                           {"lambda": numbers.lam, "block_cycle": block is not None}))
    if block is not None:
        out.append(ClaimResult(A11, instance, VACUOUS, info={"reason": "block cycle"}))
    else:
        l = a11_failure(g)
        out.append(ClaimResult(A11, instance, PASS if l is None else FAIL,
                               None if l is None else {"l": l}, {"diameter": numbers.diameter}))
    return out


def _lift_checks(entry: CatalogEntry) -> list[ClaimResult]:
    base = directed_cycle(entry.params["n"])
    m = entry.params["m"]
    g = entry.graph
    out = []
    try:
        q = antipodal_quotient(g)
        ok = isomorphic(q, base)
        out.append(ClaimResult(ROUND_TRIP, entry.name, PASS if ok else FAIL,
                               None if ok else {"quotient_edges": [list(e) for e in q.edges()]}))
    except (PreconditionError, ConsistencyError) as exc:
        out.append(ClaimResult(ROUND_TRIP, entry.name, FAIL, {"error": str(exc)}))
    lam_g, lam_b = intersection_numbers(g), intersection_numbers(base)
    if isinstance(lam_g, IntersectionNumbers) and isinstance(lam_b, IntersectionNumbers):
        ok = lam_g.lam == m * lam_b.lam
        out.append(ClaimResult(LAMBDA_SCALING, entry.name, PASS if ok else FAIL,
                               None if ok else {"lift": lam_g.lam, "base": lam_b.lam, "m": m}))
    else:
        out.append(ClaimResult(LAMBDA_SCALING, entry.name, FAIL, {"reason": "not distance-regular"}))
    ok = g.girth == base.girth
    out.append(ClaimResult(LIFT_GIRTH, entry.name, PASS if ok else FAIL,
                           None if ok else {"lift": g.girth, "base": base.girth}))
    return out


# -- catalog-wide driver ------------------------------------------------------------------


def check_entry(entry: CatalogEntry, seed) -> list[ClaimResult]:
    g = entry.graph
    name = entry.name
    results: list[ClaimResult] = []
    regular = g.regular_degree is not None
    connected = g.strongly_connected and g.n >= 2

    if regular and g.n >= 2:
        results.append(check_balance(g, name, seed))

    numbers = intersection_numbers(g) if regular and connected else None
    is_drd = isinstance(numbers, IntersectionNumbers)
    if is_drd or "drd" in entry.expect:
        results.append(verify_drd_theorem(g, name))
    if regular and connected:
        results.append(check_characterization(g, name))
    if is_drd:
        results.extend(_drd_structure_checks(g, numbers, name))

    params = srd_params(g) if connected else None
    if params is not None:
        results.append(verify_srd_theorem(g, name))
        if params.as_tuple() == (8, 3, 2, 1, 1):
            results.append(verify_srd8_vertex_cut(g, name))
    elif "srd" in entry.expect:
        results.append(ClaimResult(SRD_EDGE, name, FAIL, {"reason": "not strongly regular"}))

    if entry.family == "gamma":
        results.append(verify_gamma_family(entry.params["n"]))
    if entry.family == "lift":
        results.extend(_lift_checks(entry))

    if regular and connected and wdrd_violation(g) is None:
        results.append(check_conjecture(g, name))
    elif "gamma" in entry.expect:
        results.append(ClaimResult(CONJECTURE, name, FAIL, {"reason": "not weakly distance-regular"}))
    return results


@dataclass
class Report:
    seed: object
    catalog: list[dict]
    results: list[ClaimResult]
    inputs: list[dict] = field(default_factory=list)

    @property
    def failures(self) -> list[ClaimResult]:
        return [r for r in self.results if r.failed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        counts: dict[str, int] = {}
        for r in self.results:
            counts[r.verdict] = counts.get(r.verdict, 0) + 1
        return dict(sorted(counts.items()))

    def as_dict(self, timings: bool = False) -> dict:
        return {
            "version": REPORT_VERSION,
            "tool_version": __version__,
            "seed": self.seed,
            "inputs": self.inputs,
            "catalog": self.catalog,
            "results": [r.as_dict(timings) for r in self.results],
            "summary": self.summary(),
        }

    def dumps(self, timings: bool = False) -> str:
        return json.dumps(self.as_dict(timings), indent=2, sort_keys=True) + "\n"

    def write(self, path: str | Path, timings: bool = False) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.dumps(timings))


def run_all(catalog: Catalog, seed=0, inputs: list[dict] | None = None) -> Report:
    """Run every applicable claim check on every member; results are canonically sorted."""
    results: list[ClaimResult] = []
    for entry in catalog:
        results.extend(check_entry(entry, seed))
    results.sort(key=lambda r: (natural_key(r.instance), r.claim))
    return Report(seed, [e.as_dict() for e in catalog], results, inputs or [])


def natural_key(name: str) -> tuple:
    # "gamma(n=10)" after "gamma(n=9)"
    return tuple(int(p) if p.isdigit() else p for p in re.split(r"(\d+)", name))


def replay(result: ClaimResult, g: Digraph, seed=0) -> bool:
    """Re-run the check behind ``result`` on ``g``; True iff the same verdict and witness recur."""
    runners = {
        DRD_EDGE: lambda: verify_drd_theorem(g, result.instance),
        SRD_EDGE: lambda: verify_srd_theorem(g, result.instance),
        SRD8_VERTEX_CUT: lambda: verify_srd8_vertex_cut(g, result.instance),
        CONJECTURE: lambda: check_conjecture(g, result.instance),
        BALANCE: lambda: check_balance(g, result.instance, seed),
        CHARACTERIZATION: lambda: check_characterization(g, result.instance),
    }
    if result.claim not in runners:
        raise ValueError(f"no replay for claim {result.claim!r}")
    again = runners[result.claim]()
    return again.verdict == result.verdict and again.witness == result.witness


# -- conjecture search -----------------------------------------------------------------


def wdrd_instances(max_n: int, max_k: int):
    """All strongly connected WDRDs with n <= max_n, 1 <= k <= max_k, one per isomorphism class.

    Every WDRD of diameter >= 2 has constant length-2 walk counts on the
    diagonal and on edges, and counts in {0, mu} on non-edges; the
    enumeration prunes on that.  Diameter-1 WDRDs are complete digraphs.
    """
    out = []
    for n in range(2, max_n + 1):
        for k in range(1, min(max_k, n - 1) + 1):
            found = []
            for t in range(k + 1):
                for lam in range(k + 1):
                    for mu in range(k + 1):
                        for g in walk_constrained_digraphs(n, k, t, lam, mu, allow_zero=True):
                            if g.strongly_connected and wdrd_violation(g) is None:
                                found.append(g)
            if k == n - 1:
                found.append(Digraph(n, [((1 << n) - 1) & ~(1 << u) for u in range(n)]))
            unique = sorted(dedupe_isomorphic(found), key=lambda g: g.edges())
            out.extend((n, k, i, g) for i, g in enumerate(unique))
    return out


def search_conjecture(max_n: int = 8, max_k: int = 3, source: str = "exhaustive",
                      catalog: Catalog | None = None, out_dir: str | Path | None = None) -> list[ClaimResult]:
    """Check the WDRD edge-connectivity conjecture on exhaustive or catalog instances.

    Counterexamples are written to ``out_dir`` as edge-list files.
    """
    if source == "exhaustive":
        if not (2 <= max_n <= 8 and 1 <= max_k <= 3):
            raise PreconditionError(f"exhaustive search supports n <= 8, k <= 3; got n={max_n}, k={max_k}")
        instances = [(f"wdrd(n={n},k={k})#{i}", g) for n, k, i, g in wdrd_instances(max_n, max_k)]
    elif source == "catalog":
        catalog = build_catalog() if catalog is None else catalog
        instances = [
            (e.name, e.graph) for e in catalog
            if e.graph.n >= 2 and e.graph.strongly_connected and e.graph.regular_degree is not None
            and wdrd_violation(e.graph) is None
        ]
    else:
        raise ValueError(f"unknown source {source!r}")
    results = [check_conjecture(g, name) for name, g in instances]
    if out_dir is not None:
        graphs = dict(instances)
        for r in results:
            if r.failed:
                edgelist.write(graphs[r.instance], Path(out_dir) / f"{_slug(r.instance)}.dg",
                               comments=[f"counterexample: {r.claim}", json.dumps(r.witness, sort_keys=True)])
    return results


def _slug(name: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in name).strip("_")
