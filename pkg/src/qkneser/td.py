"""Tree decompositions: data type, validator, width, star construction.

A decomposition is valid when (i) the bags cover every vertex, (ii) every
edge lies inside some bag, and (iii) for each vertex the set of bags
containing it induces a connected subtree.  The validator reports a concrete
witness for each violated condition.

star_decomposition realizes the upper bound max(Delta, |V|-alpha-1): one
center bag holding everything outside an independent set I, plus one leaf
bag {v} + N(v) per v in I.  With I a maximum independent set and
Delta <= |V|-alpha-1 its width meets the treewidth formula exactly.

Includes a reader/writer for the PACE 2017 .td format.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .ekr import is_independent
from .errors import MalformedFileError, MalformedTreeError, NotIndependentError
from .graph import Graph


@dataclass
class TreeDecomposition:
    """Bags are vertex bitmasks over the underlying graph's range; tree
    edges are 0-indexed bag-id pairs.  n_vertices is the graph's size."""

    n_vertices: int
    bags: list[int]
    edges: list[tuple[int, int]]


@dataclass
class ValidationReport:
    vertices_covered: bool
    uncovered_vertex: int | None
    edges_covered: bool
    uncovered_edge: tuple[int, int] | None
    coherent: bool
    incoherent_vertex: int | None

    @property
    def valid(self) -> bool:
        return self.vertices_covered and self.edges_covered and self.coherent


def width(d: TreeDecomposition) -> int:
    """max bag size - 1."""
    if not d.bags:
        raise MalformedTreeError("decomposition has no bags")
    return max(b.bit_count() for b in d.bags) - 1


def _check_tree(d: TreeDecomposition) -> list[list[int]]:
    """Verify the bag graph is a tree; return its adjacency lists."""
    b = len(d.bags)
    if b == 0:
        raise MalformedTreeError("decomposition has no bags")
    if len(d.edges) != b - 1:
        raise MalformedTreeError(f"{b} bags need {b - 1} tree edges, got {len(d.edges)}")
    adj: list[list[int]] = [[] for _ in range(b)]
    for x, y in d.edges:
        if not (0 <= x < b and 0 <= y < b) or x == y:
            raise MalformedTreeError(f"bad tree edge ({x}, {y})")
        adj[x].append(y)
        adj[y].append(x)
    seen = [False] * b
    queue = deque([0])
    seen[0] = True
    count = 1
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                queue.append(y)
    if count != b:
        raise MalformedTreeError("tree edges do not connect all bags")
    return adj


def validate(g: Graph, d: TreeDecomposition) -> ValidationReport:
    """Check the three decomposition conditions against g, with witnesses.

    Raises MalformedTreeError when the bag edges do not form a tree; all
    other defects are reported, first witness in deterministic order.
    """
    adj = _check_tree(d)
    if d.n_vertices != g.n_vertices:
        raise MalformedTreeError(
            f"decomposition is over {d.n_vertices} vertices, graph has {g.n_vertices}"
        )

    union = 0
    for b in d.bags:
        union |= b
    full = (1 << g.n_vertices) - 1
    uncovered_vertex = None
    missing = full & ~union
    if missing:
        uncovered_vertex = (missing & -missing).bit_length() - 1

    # bags containing each vertex, as bag-id bitmasks
    bags_of = [0] * g.n_vertices
    for bid, b in enumerate(d.bags):
        m = b
        while m:
            low = m & -m
            bags_of[low.bit_length() - 1] |= 1 << bid
            m ^= low

    uncovered_edge = None
    for u, v in g.edges():
        if not bags_of[u] & bags_of[v]:
            uncovered_edge = (u, v)
            break

    incoherent_vertex = None
    for v in range(g.n_vertices):
        mask = bags_of[v]
        if not mask:
            continue  # reported as uncovered above
        start = (mask & -mask).bit_length() - 1
        seen = 1 << start
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                ybit = 1 << y
                if mask & ybit and not seen & ybit:
                    seen |= ybit
                    queue.append(y)
        if seen != mask:
            incoherent_vertex = v
            break

    return ValidationReport(
        vertices_covered=uncovered_vertex is None,
        uncovered_vertex=uncovered_vertex,
        edges_covered=uncovered_edge is None,
        uncovered_edge=uncovered_edge,
        coherent=incoherent_vertex is None,
        incoherent_vertex=incoherent_vertex,
    )


def star_decomposition(g: Graph, independent: int) -> TreeDecomposition:
    """Center bag V - I, one leaf bag {v} + N(v) per v in the independent
    set I, every leaf attached to the center.

    Width is max(|V| - |I| - 1, max_{v in I} deg(v)); with I empty this
    degenerates to the single full bag.  Raises NotIndependentError when I
    induces an edge.
    """
    if not is_independent(g, independent):
        raise NotIndependentError("the given vertex set induces an edge")
    full = (1 << g.n_vertices) - 1
    bags = [full & ~independent]
    edges = []
    m = independent
    while m:
        low = m & -m
        v = low.bit_length() - 1
        edges.append((0, len(bags)))
        bags.append(low | g.rows[v])
        m ^= low
    return TreeDecomposition(g.n_vertices, bags, edges)


# -- PACE 2017 .td format ---------------------------------------------------


def write_td(d: TreeDecomposition, path) -> None:
    """`s td <#bags> <max bag size> <#vertices>`, bag lines
    `b <id> <v...>`, then one `<id> <id>` line per tree edge; ids and
    vertices 1-indexed, matching the .gr export of the same graph."""
    lines = []
    max_bag = max((b.bit_count() for b in d.bags), default=0)
    lines.append(f"s td {len(d.bags)} {max_bag} {d.n_vertices}")
    for bid, b in enumerate(d.bags, start=1):
        vs = []
        m = b
        while m:
            low = m & -m
            vs.append(str(low.bit_length()))
            m ^= low
        lines.append(" ".join(["b", str(bid)] + vs))
    for x, y in d.edges:
        lines.append(f"{x + 1} {y + 1}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_td(path) -> TreeDecomposition:
    header = None
    bags: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "s":
                if header is not None:
                    raise MalformedFileError(f"{path}:{lineno}: duplicate solution line")
                if len(parts) != 5 or parts[1] != "td":
                    raise MalformedFileError(f"{path}:{lineno}: bad solution line {line!r}")
                header = (int(parts[2]), int(parts[3]), int(parts[4]))
                continue
            if header is None:
                raise MalformedFileError(f"{path}:{lineno}: data before `s td` line")
            if parts[0] == "b":
                bid = int(parts[1])
                if bid in bags:
                    raise MalformedFileError(f"{path}:{lineno}: duplicate bag {bid}")
                mask = 0
                for tok in parts[2:]:
                    v = int(tok)
                    if v < 1 or v > header[2]:
                        raise MalformedFileError(f"{path}:{lineno}: vertex {v} out of range")
                    mask |= 1 << (v - 1)
                bags[bid] = mask
                continue
            if len(parts) != 2:
                raise MalformedFileError(f"{path}:{lineno}: bad tree edge {line!r}")
            edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
    if header is None:
        raise MalformedFileError(f"{path}: missing `s td` line")
    n_bags, _, n_vertices = header
    if set(bags) != set(range(1, n_bags + 1)):
        raise MalformedFileError(f"{path}: expected bag ids 1..{n_bags}")
    return TreeDecomposition(n_vertices, [bags[i] for i in range(1, n_bags + 1)], edges)
