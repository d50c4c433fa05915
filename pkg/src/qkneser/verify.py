"""Named verification suites over configurable parameter grids.

Each suite cross-checks one slice of the package against an independent
route: counting identities against exact big-integer evaluation, the degree
formula against explicitly built graphs, the independence formula against
exact solver runs and the extremal constructions, the treewidth formula
against validated constructive decompositions, and the separator property
against the exact solver plus exhaustive search.

Suites return a SuiteReport; the CLI maps failures to a nonzero exit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from . import ekr, families, twsolve
from .gf import make_field
from .graph import build_cograssmann, build_qkneser, build_qkneser_all_t, gauss
from .qcount import (
    Params,
    alpha_formula,
    degree_formula,
    delta_alpha_below_vertex_count,
    gauss_bounds_hold,
    gauss_identities_hold,
    intersect_count,
    layer_exceeds_alpha,
    pigeonhole_bound_holds,
    tw_formula_applies,
    tw_formula_cograssmann,
    tw_formula_qkneser,
)
from .subspace import canonicalize
from .td import star_decomposition, validate, width

SWEEP_QS = (2, 3, 4, 5, 7, 8, 9)  # prime powers; formulas accept any q >= 2


@dataclass
class SuiteReport:
    name: str
    ok: bool = True
    checks: int = 0
    failures: list[str] = dc_field(default_factory=list)
    lines: list[str] = dc_field(default_factory=list)

    def check(self, passed: bool, message: str) -> None:
        self.checks += 1
        if not passed:
            self.ok = False
            self.failures.append(message)

    def info(self, line: str) -> None:
        self.lines.append(line)


def unit_subspace(q: int, n: int, dim: int):
    """span{e_1, ..., e_dim} in F_q^n, the canonical fixed subspace
    (the zero subspace for dim = 0)."""
    field = make_field(q)
    if dim == 0:
        return canonicalize(field, [[0] * n])
    rows = [[1 if j == i else 0 for j in range(n)] for i in range(dim)]
    return canonicalize(field, rows)


def buildable_instances(qs=(2, 3), max_vertices: int = 3000):
    """All Params (q, n, k, t) with 1 <= t < k and [n,k]_q <= max_vertices."""
    out = []
    for q in qs:
        k = 2
        while gauss(k + 1, k, q) <= max_vertices:
            n = k
            while gauss(n, k, q) <= max_vertices:
                for t in range(1, k):
                    out.append(Params(n, k, t, q))
                n += 1
            k += 1
    return out


def claims_params(qmax: int = 9, nmax: int = 40, kmax: int = 8):
    """The inequality sweep grid: prime-power q <= qmax, 1 <= t < k <= kmax,
    2k <= n <= nmax."""
    out = []
    for q in SWEEP_QS:
        if q > qmax:
            continue
        for k in range(2, kmax + 1):
            for t in range(1, k):
                for n in range(2 * k, nmax + 1):
                    out.append(Params(n, k, t, q))
    return out


def suite_identities(qmax: int = 9, mmax: int = 12) -> SuiteReport:
    """Gaussian-binomial recurrences and power bounds, exactly, for every
    integer 2 <= q <= qmax and 1 <= i <= m <= mmax."""
    rep = SuiteReport("identities")
    for q in range(2, qmax + 1):
        for m in range(1, mmax + 1):
            for i in range(1, m + 1):
                rep.check(gauss_identities_hold(m, i, q),
                          f"recurrence identity fails at m={m} i={i} q={q}")
                rep.check(gauss_bounds_hold(m, i, q),
                          f"power bounds fail at m={m} i={i} q={q}")
    rep.info(f"identities+bounds exact on q=2..{qmax}, m<={mmax}: {rep.checks} checks")
    return rep


def suite_claims(qmax: int = 9, nmax: int = 40, kmax: int = 8) -> SuiteReport:
    """Inequality sweep: the t-layer count exceeds alpha for n >= 2k; the
    pigeonhole bound holds in the treewidth-formula range; and
    Delta + alpha < |V| wherever alpha is defined."""
    rep = SuiteReport("claims")
    in_range = 0
    for p in claims_params(qmax, nmax, kmax):
        rep.check(layer_exceeds_alpha(p),
                  f"layer count fails to exceed alpha at {p}")
        rep.check(delta_alpha_below_vertex_count(p),
                  f"Delta + alpha >= |V| at {p}")
        if tw_formula_applies(p):
            in_range += 1
            rep.check(pigeonhole_bound_holds(p),
                      f"pigeonhole bound fails at {p}")
            rep.check(
                tw_formula_qkneser(p)
                == gauss(p.n, p.k, p.q) - alpha_formula(p) - 1,
                f"treewidth formula disagrees with |V| - alpha - 1 at {p}",
            )
    rep.info(f"claims sweep: {rep.checks} checks, {in_range} params in formula range")
    return rep


def suite_degrees(qs=(2, 3), max_vertices: int = 3000) -> SuiteReport:
    """Build every instance and compare each vertex's degree and full
    intersection-dimension histogram with the closed-form counts."""
    rep = SuiteReport("degrees")
    seen = set()
    for p in buildable_instances(qs, max_vertices):
        if (p.q, p.n, p.k) in seen:
            continue
        seen.add((p.q, p.n, p.k))
        graphs, hists = build_qkneser_all_t(p.n, p.k, p.q, limit=max_vertices)
        expected_hist = [intersect_count(p.n, p.k, p.k, m, p.q) for m in range(p.k + 1)]
        bad = next((u for u, h in enumerate(hists) if h != expected_hist), None)
        rep.check(bad is None,
                  f"histogram mismatch at vertex {bad} of q={p.q} n={p.n} k={p.k}")
        for t, g in graphs.items():
            delta = degree_formula(Params(p.n, p.k, t, p.q))
            bad = next((u for u in range(g.n_vertices) if g.degree(u) != delta), None)
            rep.check(bad is None,
                      f"degree mismatch at vertex {bad} of q={p.q} n={p.n} k={p.k} t={t}")
        rep.info(f"q={p.q} n={p.n} k={p.k}: {graphs[1].n_vertices} vertices, "
                 f"degrees+histograms match for all t")
    return rep


def suite_ekr(qs=(2, 3), max_vertices: int = 3000,
              mis_time_budget: float = 600.0) -> SuiteReport:
    """Extremal families have the formula sizes and are independent on all
    buildable instances; the exact solver reproduces alpha on the two
    pinned desk-scale q-Kneser graphs."""
    rep = SuiteReport("ekr")
    instances = buildable_instances(qs, max_vertices)
    by_nk: dict[tuple[int, int, int], list[int]] = {}
    for p in instances:
        by_nk.setdefault((p.q, p.n, p.k), []).append(p.t)
    for (q, n, k), ts in by_nk.items():
        graphs, _ = build_qkneser_all_t(n, k, q, limit=max_vertices)
        for t in ts:
            g = graphs[t]
            pencil = ekr.point_pencil(g, unit_subspace(q, n, t))
            size = gauss(n - t, k - t, q)
            where = f"q={q} n={n} k={k} t={t}"
            rep.check(pencil.bit_count() == size,
                      f"pencil size {pencil.bit_count()} != {size} at {where}")
            rep.check(ekr.is_independent(g, pencil), f"pencil not independent at {where}")
            if n == 2 * k:
                nest = ekr.nest_family(g, unit_subspace(q, n, n - t))
                rep.check(nest.bit_count() == size,
                          f"nest size {nest.bit_count()} != {size} at {where}")
                rep.check(ekr.is_independent(g, nest), f"nest not independent at {where}")
    rep.info(f"extremal families validated on {len(instances)} instances")

    for n, expected in ((4, 7), (5, 15)):
        p = Params(n, 2, 1, 2)
        g = build_qkneser(p)
        r = ekr.max_independent_set_exact(g, time_budget=mis_time_budget)
        rep.check(r.exact and r.size == expected,
                  f"exact MIS on q=2 n={n} k=2 t=1 returned {r.size} "
                  f"(exact={r.exact}), expected {expected}")
        rep.info(f"alpha(K_2({n},2,1)) = {r.size} by exact solver "
                 f"({r.nodes} nodes, {r.elapsed:.2f}s)")
    return rep


def suite_td() -> SuiteReport:
    """Constructive treewidth upper bounds: star decompositions from point
    pencils achieve the formula width and pass the validator."""
    rep = SuiteReport("td")
    for name, g, formula in (
        ("q-Kneser q=2 n=7 k=2 t=1", build_qkneser(Params(7, 2, 1, 2)),
         tw_formula_qkneser(Params(7, 2, 1, 2))),
        ("complement Grassmann q=2 n=5 k=2", build_cograssmann(5, 2, 2),
         tw_formula_cograssmann(5, 2, 2)),
    ):
        p = g.meta
        pencil = ekr.point_pencil(g, unit_subspace(p.q, p.n, p.t))
        d = star_decomposition(g, pencil)
        report = validate(g, d)
        w = width(d)
        rep.check(report.valid, f"{name}: decomposition invalid: {report}")
        rep.check(w == formula, f"{name}: width {w} != formula value {formula}")
        rep.info(f"{name}: width {w} = formula, validator passed "
                 f"({len(d.bags)} bags)")
    return rep


def suite_separators(count: int = 50, seed: int = 20240801,
                     time_budget: float = 300.0) -> SuiteReport:
    """For every corpus graph with exact treewidth w, a balanced separator
    of order <= w+1 exists: exhaustive search must find a witness whose
    parts satisfy the 1/3 - 2/3 size bounds with no crossing edge."""
    rep = SuiteReport("separators")
    start = time.monotonic()
    for name, g in corpus(count, seed):
        remaining = max(5.0, time_budget - (time.monotonic() - start))
        r = twsolve.treewidth_exact(g, time_budget=remaining)
        if r.status != twsolve.EXACT:
            rep.check(False, f"{name}: solver did not reach exactness")
            continue
        witness = twsolve.balanced_separator_search(g, r.value + 1)
        if witness is None:
            rep.check(False, f"{name}: no separator of order <= tw+1 = {r.value + 1}")
            continue
        rep.check(_separator_ok(g, witness), f"{name}: separator witness invalid")
    rep.info(f"separator property verified on {rep.checks} corpus graphs")
    return rep


def _separator_ok(g, witness) -> bool:
    x, a, b = witness.separator, witness.side_a, witness.side_b
    full = (1 << g.n_vertices) - 1
    if x | a | b != full or x & a or x & b or a & b:
        return False
    m = a
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if g.rows[v] & b:
            return False
    r = (a | b).bit_count()
    return 3 * a.bit_count() >= r and 3 * b.bit_count() >= r \
        and 3 * a.bit_count() <= 2 * r and 3 * b.bit_count() <= 2 * r


def corpus(count: int = 50, seed: int = 20240801) -> list[tuple[str, "families.Graph"]]:
    """The solver-validation corpus: complete graphs to K_12, trees up to 20
    vertices, cycles, the 3x3 grid, Petersen, and seeded random graphs."""
    graphs = []
    for m in range(1, 13):
        graphs.append((f"K_{m}", families.complete_graph(m)))
    graphs.append(("P_20 (path)", families.path_graph(20)))
    for m, s in ((10, 7), (15, 8), (20, 9)):
        graphs.append((f"tree-{m}", families.random_tree(m, seed + s)))
    for m in (4, 5, 6, 9, 12):
        graphs.append((f"C_{m}", families.cycle_graph(m)))
    graphs.append(("grid-3x3", families.grid_graph(3, 3)))
    graphs.append(("petersen", families.petersen_graph()))
    graphs.extend(families.solver_corpus(count, seed))
    return graphs


SUITES = {
    "identities": suite_identities,
    "claims": suite_claims,
    "degrees": suite_degrees,
    "ekr": suite_ekr,
    "td": suite_td,
    "separators": suite_separators,
}
