"""Exact treewidth and balanced-separator search at desk scale.

Treewidth is computed by iterative-deepening branch and bound over
elimination orderings: for each candidate width L (starting from the best
lower bound) a depth-first search with memoization on eliminated-vertex sets
decides whether some ordering stays within L.  A completed refutation of L
is an honest lower bound of L+1, so interrupted runs still return a valid
bracket.  Upper bounds are seeded by the min-fill heuristic; lower bounds by
minor-min-width and the exact clique number (omega - 1 <= tw).

balanced_separator_search exhaustively looks for a vertex set X of bounded
size whose removal splits the graph into parts A and B with no A-B edge and
(1-p)|V-X| <= |A|, |B| <= p|V-X|; it certifies non-existence within the cap.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .cliques import max_clique
from .errors import SearchSpaceTooLargeError, TooLargeError
from .graph import Graph
from .td import TreeDecomposition

VERTEX_CAP = 64
SEPARATOR_VERTEX_CAP = 40
SEPARATOR_SIZE_CAP = 12

EXACT = "exact"
LOWER_BOUND_ONLY = "lower_bound_only"
UPPER_BOUND_ONLY = "upper_bound_only"


@dataclass
class SolveResult:
    value: int
    status: str  # EXACT, LOWER_BOUND_ONLY or UPPER_BOUND_ONLY
    lower: int
    upper: int
    order: list[int] | None
    decomposition: TreeDecomposition | None
    nodes: int
    elapsed: float


class _Budget(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def min_fill_order(g: Graph) -> tuple[int, list[int]]:
    """Min-fill elimination heuristic; returns (width, ordering)."""
    n = g.n_vertices
    rows = list(g.rows)
    alive = (1 << n) - 1
    order = []
    w = -1 if n == 0 else 0
    while alive:
        best_v, best_fill = -1, None
        m = alive
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            nb = rows[v] & alive
            fill = 0
            mm = nb
            while mm:
                lo2 = mm & -mm
                u = lo2.bit_length() - 1
                mm ^= lo2
                fill += (nb & ~rows[u] & ~lo2).bit_count()
            if best_fill is None or fill < best_fill:
                best_v, best_fill = v, fill
                if fill == 0:
                    break
        v = best_v
        nb = rows[v] & alive
        w = max(w, nb.bit_count())
        mm = nb
        while mm:
            lo2 = mm & -mm
            u = lo2.bit_length() - 1
            mm ^= lo2
            rows[u] |= nb & ~lo2
        order.append(v)
        alive ^= 1 << v
    return w, order


def minor_min_width(g: Graph) -> int:
    """Minor-min-width lower bound: repeatedly contract a minimum-degree
    vertex into its least-connected neighbor, tracking the max min-degree."""
    n = g.n_vertices
    rows = list(g.rows)
    alive = (1 << n) - 1
    mmw = 0
    while alive.bit_count() >= 2:
        v, dv = -1, None
        m = alive
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            d = (rows[u] & alive).bit_count()
            if dv is None or d < dv:
                v, dv = u, d
        mmw = max(mmw, dv)
        nv = rows[v] & alive
        if not nv:
            alive ^= 1 << v
            continue
        u, common = -1, None
        mm = nv
        while mm:
            lo2 = mm & -mm
            w2 = lo2.bit_length() - 1
            mm ^= lo2
            c = (rows[w2] & nv).bit_count()
            if common is None or c < common:
                u, common = w2, c
        # contract v into u
        rows[u] = (rows[u] | nv) & ~(1 << u) & ~(1 << v)
        mm = nv
        while mm:
            lo2 = mm & -mm
            w2 = lo2.bit_length() - 1
            mm ^= lo2
            if w2 != u:
                rows[w2] = (rows[w2] | (1 << u)) & ~(1 << v)
        alive ^= 1 << v
    return mmw


def clique_lower_bound(g: Graph, node_budget: int | None = 2_000_000,
                       time_budget: float | None = None) -> int:
    """Exact maximum clique size (omega - 1 <= tw).  If the budget runs out
    the best clique found is still a valid bound and is returned."""
    if g.n_vertices == 0:
        return 0
    return max_clique(g.rows, node_budget=node_budget, time_budget=time_budget).size


def decomposition_from_order(g: Graph, order: list[int]) -> TreeDecomposition:
    """Tree decomposition induced by an elimination ordering: bag(v) is v
    plus its (fill-in) neighborhood at elimination time, attached to the bag
    of the earliest-eliminated other member."""
    n = g.n_vertices
    if n == 0:
        return TreeDecomposition(0, [0], [])
    assert sorted(order) == list(range(n))
    rows = list(g.rows)
    alive = (1 << n) - 1
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    for v in order:
        nb = rows[v] & alive & ~(1 << v)
        bags.append((1 << v) | nb)
        mm = nb
        while mm:
            lo2 = mm & -mm
            u = lo2.bit_length() - 1
            mm ^= lo2
            rows[u] |= nb & ~lo2
        alive ^= 1 << v
    edges = []
    for i, v in enumerate(order):
        rest = bags[i] & ~(1 << v)
        if rest:
            parent = min(_bits(rest), key=lambda u: pos[u])
            edges.append((i, pos[parent]))
        elif i + 1 < n:
            edges.append((i, i + 1))
    return TreeDecomposition(n, bags, edges)


def _decide_width(rows0: list[int], n: int, target: int, order_out: list[int],
                  state: dict, node_budget: int | None, deadline: float | None) -> bool:
    """Does some elimination ordering keep every elimination degree <= target?
    Fills order_out on success.  Memoizes refuted eliminated-sets."""
    failed: set[int] = set()
    full = (1 << n) - 1

    def dfs(rows: list[int], alive: int) -> bool:
        count = alive.bit_count()
        if count <= target + 1:
            order_out.extend(_bits(alive))
            return True
        if alive in failed:
            return False
        state["nodes"] += 1
        if node_budget is not None and state["nodes"] > node_budget:
            raise _Budget
        if deadline is not None and state["nodes"] % 128 == 0 and time.monotonic() > deadline:
            raise _Budget
        cands = []
        m = alive
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            nb = rows[v] & alive
            if nb.bit_count() <= target:
                # simplicial vertices are always safe to eliminate first
                simplicial = True
                mm = nb
                while mm:
                    lo2 = mm & -mm
                    u = lo2.bit_length() - 1
                    mm ^= lo2
                    if nb & ~rows[u] & ~lo2:
                        simplicial = False
                        break
                if simplicial:
                    cands = [(v, nb)]
                    break
                cands.append((v, nb))
        for v, nb in cands:
            new_rows = list(rows)
            mm = nb
            while mm:
                lo2 = mm & -mm
                u = lo2.bit_length() - 1
                mm ^= lo2
                new_rows[u] |= nb & ~lo2
            order_out.append(v)
            if dfs(new_rows, alive & ~(1 << v)):
                return True
            order_out.pop()
        failed.add(alive)
        return False

    return dfs(rows0, full)


def treewidth_exact(g: Graph, node_budget: int | None = None,
                    time_budget: float | None = None,
                    cap: int = VERTEX_CAP) -> SolveResult:
    """Exact treewidth for graphs of at most `cap` vertices.

    Runs width-decision searches for L = lower, lower+1, ... until one
    succeeds; every refuted level raises the proven lower bound, so budget
    exhaustion still yields a valid [lower, upper] bracket (status flags
    which side the returned value certifies).
    """
    n = g.n_vertices
    if n > cap:
        raise TooLargeError(f"{n} vertices exceeds solver cap {cap}")
    start = time.monotonic()
    deadline = start + time_budget if time_budget is not None else None
    state = {"nodes": 0}

    if n == 0:
        return SolveResult(-1, EXACT, -1, -1, [], TreeDecomposition(0, [0], []),
                           0, time.monotonic() - start)

    upper, best_order = min_fill_order(g)
    omega = clique_lower_bound(
        g,
        time_budget=None if deadline is None else max(0.1, (deadline - time.monotonic()) / 4),
    )
    lower = max(minor_min_width(g), omega - 1, 0)

    interrupted = False
    level = lower
    while level < upper:
        attempt: list[int] = []
        try:
            remaining = None if deadline is None else deadline - time.monotonic()
            if remaining is not None and remaining <= 0:
                raise _Budget
            if _decide_width(list(g.rows), n, level, attempt, state,
                             node_budget, deadline):
                upper, best_order = level, attempt
                break
            lower = level + 1
            level += 1
        except _Budget:
            interrupted = True
            break

    elapsed = time.monotonic() - start
    decomposition = decomposition_from_order(g, best_order)
    if not interrupted or lower == upper:
        value, status = upper, EXACT
        lower = upper
    else:
        value, status = upper, UPPER_BOUND_ONLY
    return SolveResult(value, status, lower, upper, best_order, decomposition,
                       state["nodes"], elapsed)


def write_order(order: list[int], path) -> None:
    """Persist an elimination ordering, one 1-indexed vertex id per line."""
    with open(path, "w") as fh:
        for v in order:
            fh.write(f"{v + 1}\n")


# -- balanced separators ------------------------------------------------------


@dataclass
class SeparatorWitness:
    separator: int  # vertex bitmask X
    side_a: int     # union of components assigned to A
    side_b: int     # the remaining components


def _components(rows: list[int], alive: int) -> list[int]:
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                nxt |= rows[v] & alive & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def balanced_separator_search(g: Graph, size_cap: int, p: Fraction = Fraction(2, 3)):
    """Smallest vertex set X with |X| <= size_cap such that V - X splits
    into parts A, B (unions of components, no A-B edge) with

        (1-p) * |V - X|  <=  |A|, |B|  <=  p * |V - X|.

    Exhaustive over all candidate sets in deterministic order; returns a
    SeparatorWitness or None when none exists within the cap.  Guarded to
    |V| <= 40 and size_cap <= 12.
    """
    n = g.n_vertices
    if n > SEPARATOR_VERTEX_CAP or size_cap > SEPARATOR_SIZE_CAP:
        raise SearchSpaceTooLargeError(
            f"exhaustive search limited to |V| <= {SEPARATOR_VERTEX_CAP} "
            f"and cap <= {SEPARATOR_SIZE_CAP}, got |V|={n} cap={size_cap}"
        )
    p = Fraction(p)
    if not Fraction(2, 3) <= p < 1:
        raise ValueError(f"p must lie in [2/3, 1), got {p}")
    full = (1 << n) - 1
    for size in range(min(size_cap, n) + 1):
        for combo in combinations(range(n), size):
            x_mask = 0
            for v in combo:
                x_mask |= 1 << v
            rest = full & ~x_mask
            r = rest.bit_count()
            lo_f = (1 - p) * r
            hi_f = p * r
            lo = -((-lo_f.numerator) // lo_f.denominator) if r else 0  # ceil
            hi = hi_f.numerator // hi_f.denominator  # floor
            if lo > hi:
                continue
            comps = _components(g.rows, rest)
            sizes = [c.bit_count() for c in comps]
            # suffix[i] = bitmask of sums achievable from components i..end
            suffix = [1] * (len(sizes) + 1)
            for i in range(len(sizes) - 1, -1, -1):
                suffix[i] = suffix[i + 1] | (suffix[i + 1] << sizes[i])
            windows = suffix[0] & (((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1))
            if not windows:
                continue
            target = (windows & -windows).bit_length() - 1
            side_a = 0
            need = target
            for i, (c, s) in enumerate(zip(comps, sizes)):
                if not (suffix[i + 1] >> need) & 1:  # cannot skip component i
                    side_a |= c
                    need -= s
            assert need == 0 and side_a.bit_count() == target
            return SeparatorWitness(x_mask, side_a, rest & ~side_a)
    return None
