"""Extremal t-intersecting families and the exact independence-number oracle.

A t-intersecting family of k-subspaces is exactly an independent set in
K_q(n,k,t).  The two extremal constructions are implemented directly:

* point pencil: all k-subspaces containing a fixed t-subspace
  (size [n-t, k-t]_q, the independence number for n >= 2k);
* nest family (n = 2k only): all k-subspaces of a fixed (n-t)-subspace
  (size [n-t, k]_q = [n-t, k-t]_q, the other equality case).

Vertex sets are bitmasks over the graph's vertex range.  The exact solver
reduces maximum independent set to maximum clique on the complement graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import CliqueResult, max_clique, maximal_cliques
from .errors import DimMismatchError, NotIndependentError, OutOfRangeError
from .graph import Graph
from .subspace import Subspace


def point_pencil(g: Graph, t_space: Subspace) -> int:
    """Bitmask of the vertices whose subspace contains the fixed t-subspace."""
    if g.labels is None or g.meta is None:
        raise ValueError("graph has no subspace labels")
    if t_space.k != g.meta.t:
        raise DimMismatchError(f"need a {g.meta.t}-subspace, got dim {t_space.k}")
    mask = 0
    for i, s in enumerate(g.labels):
        if s.contains(t_space):
            mask |= 1 << i
    return mask


def nest_family(g: Graph, w_space: Subspace) -> int:
    """Bitmask of the vertices whose subspace lies inside the fixed
    (n-t)-subspace; only defined when n = 2k (otherwise not extremal)."""
    if g.labels is None or g.meta is None:
        raise ValueError("graph has no subspace labels")
    p = g.meta
    if p.n != 2 * p.k:
        raise OutOfRangeError(f"nest family needs n = 2k, got n={p.n} k={p.k}")
    if w_space.k != p.n - p.t:
        raise DimMismatchError(f"need a {p.n - p.t}-subspace, got dim {w_space.k}")
    mask = 0
    for i, s in enumerate(g.labels):
        if w_space.contains(s):
            mask |= 1 << i
    return mask


def is_independent(g: Graph, members: int) -> bool:
    """True iff the vertex bitmask induces no edge."""
    m = members
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if g.rows[v] & members:
            return False
        m ^= low
    return True


@dataclass
class MisResult:
    size: int
    members: int  # vertex bitmask
    exact: bool   # False: budget ran out, size is only a lower bound
    nodes: int
    elapsed: float


def max_independent_set_exact(g: Graph, node_budget: int | None = None,
                              time_budget: float | None = None) -> MisResult:
    """Exact maximum independent set (= maximum clique of the complement).

    On budget exhaustion the best set found is returned with exact=False;
    an inexact size is a valid lower bound for alpha, never reported as it.
    """
    comp = g.complement()
    r: CliqueResult = max_clique(comp.rows, node_budget=node_budget,
                                 time_budget=time_budget)
    assert is_independent(g, r.members)
    return MisResult(r.size, r.members, r.exact, r.nodes, r.elapsed)


def maximum_independent_sets(g: Graph) -> list[int]:
    """All maximum independent sets, via maximal-clique enumeration on the
    complement.  Exponential in general; meant for desk-scale instances."""
    comp = g.complement()
    best: list[int] = []
    best_size = 0
    for mask in maximal_cliques(comp.rows):
        size = mask.bit_count()
        if size > best_size:
            best, best_size = [mask], size
        elif size == best_size:
            best.append(mask)
    return sorted(best)


def write_vertex_set(members: int, path) -> None:
    """Persist a witness as sorted 1-indexed vertex ids, one per line."""
    with open(path, "w") as fh:
        m = members
        while m:
            low = m & -m
            fh.write(f"{low.bit_length()}\n")
            m ^= low


def check_family(g: Graph, members: int, expected_size: int) -> None:
    """Assert a constructed family has the formula size and is independent."""
    if members.bit_count() != expected_size:
        raise DimMismatchError(
            f"family has {members.bit_count()} members, expected {expected_size}"
        )
    if not is_independent(g, members):
        raise NotIndependentError("family induces an edge")
