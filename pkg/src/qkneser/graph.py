"""Explicit construction of generalized q-Kneser graphs.

Vertices are the k-subspaces of F_q^n in enumeration order (never re-sorted,
so exports are bit-exact across runs); u and v are adjacent iff their
intersection has dimension < t.  Adjacency is stored as packed bit rows
(Python ints), which the independent-set and treewidth solvers operate on
directly.

Includes a reader/writer for the PACE 2017 .gr format.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import MalformedFileError, TooLargeError
from .gf import make_field
from .qcount import Params, alpha_formula, degree_formula, gauss, tw_formula_applies, tw_formula_qkneser
from .subspace import Subspace, enumerate_subspaces

VERTEX_LIMIT = 5000


@dataclass
class Graph:
    """Simple undirected graph over a fixed vertex range.

    rows[u] is the neighbor bitmask of u (bit v set iff uv is an edge);
    symmetric with zero diagonal.  labels, when present, are the Subspace
    vertices in enumeration order; meta the Params that built the graph.
    """

    n_vertices: int
    rows: list[int]
    labels: list[Subspace] | None = None
    meta: Params | None = None
    comments: list[str] = dc_field(default_factory=list)

    @classmethod
    def from_edges(cls, n_vertices: int, edges) -> "Graph":
        rows = [0] * n_vertices
        for u, v in edges:
            if u == v:
                continue
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n_vertices, rows)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edges(self):
        """Yield edges (u, v) with u < v, in ascending order."""
        for u in range(self.n_vertices):
            m = self.rows[u] >> (u + 1)
            v = u + 1
            while m:
                low = m & -m
                yield u, v + low.bit_length() - 1
                shift = low.bit_length()
                m >>= shift
                v += shift

    def complement(self) -> "Graph":
        full = (1 << self.n_vertices) - 1
        rows = [full & ~r & ~(1 << u) for u, r in enumerate(self.rows)]
        return Graph(self.n_vertices, rows)

    def subgraph_rows(self, keep: int) -> list[int]:
        """Adjacency restricted to the vertex bitmask keep (same indexing)."""
        return [self.rows[u] & keep if (keep >> u) & 1 else 0 for u in range(self.n_vertices)]


def max_degree(g: Graph) -> int:
    if g.n_vertices == 0:
        return 0
    return max(r.bit_count() for r in g.rows)


def edge_count(g: Graph) -> int:
    twice = sum(r.bit_count() for r in g.rows)
    assert twice % 2 == 0
    return twice // 2


def is_regular(g: Graph) -> bool:
    if g.n_vertices == 0:
        return True
    d = g.rows[0].bit_count()
    return all(r.bit_count() == d for r in g.rows)


def vector_masks(labels: list[Subspace]) -> list[int]:
    """Bitmask of member vectors per subspace; vector (c_0..c_{n-1}) maps to
    bit sum_i c_i * q^i.  |A cap B| = q^dim(A cap B), so popcounts of ANDed
    masks give intersection dimensions without rank computations."""
    masks = []
    for s in labels:
        q = s.field.q
        if q == 2:
            # over GF(2) the bit index of a vector sum is the XOR of indices
            span = [0]
            for row in s.basis:
                r = 0
                for c in reversed(row):
                    r = (r << 1) | c
                span += [v ^ r for v in span]
            m = 0
            for v in span:
                m |= 1 << v
        else:
            m = 0
            for vec in s.vectors():
                idx = 0
                for c in reversed(vec):
                    idx = idx * q + c
                m |= 1 << idx
        masks.append(m)
    return masks


def intersection_dim(masks: list[int], q: int, u: int, v: int) -> int:
    """dim of the intersection of subspaces u, v from their vector masks."""
    c = (masks[u] & masks[v]).bit_count()
    d = 0
    while q**d < c:
        d += 1
    assert q**d == c
    return d


def build_qkneser(p: Params, limit: int = VERTEX_LIMIT) -> Graph:
    """Materialize K_q(n,k,t): vertices = k-subspaces of F_q^n, edges where
    dim(intersection) < t.  Fails fast when [n,k]_q exceeds the limit."""
    field = make_field(p.q)
    nv = gauss(p.n, p.k, p.q)
    if nv > limit:
        raise TooLargeError(f"[{p.n},{p.k}]_{p.q} = {nv} exceeds vertex limit {limit}")
    labels = list(enumerate_subspaces(field, p.n, p.k))
    masks = vector_masks(labels)
    threshold = p.q**p.t  # popcount < q^t  <=>  dim < t
    rows = [0] * nv
    for u in range(nv):
        mu = masks[u]
        ru = rows[u]
        for v in range(u + 1, nv):
            if (mu & masks[v]).bit_count() < threshold:
                ru |= 1 << v
                rows[v] |= 1 << u
        rows[u] = ru
    return Graph(nv, rows, labels=labels, meta=p)


def build_cograssmann(n: int, k: int, q: int, limit: int = VERTEX_LIMIT) -> Graph:
    """Complement of the Grassmann graph G_q(n,k), i.e. K_q(n,k,k-1)."""
    return build_qkneser(Params(n, k, k - 1, q), limit=limit)


def build_qkneser_all_t(n: int, k: int, q: int, limit: int = VERTEX_LIMIT
                        ) -> tuple[dict[int, Graph], list[list[int]]]:
    """All graphs K_q(n,k,t) for 1 <= t < k in a single pairwise pass.

    Returns ({t: Graph}, histograms) where histograms[u][d] counts the
    vertices v (u itself included) with dim(label_u cap label_v) = d.
    Identical output to per-t build_qkneser calls, k-1 times cheaper.
    """
    field = make_field(q)
    nv = gauss(n, k, q)
    if nv > limit:
        raise TooLargeError(f"[{n},{k}]_{q} = {nv} exceeds vertex limit {limit}")
    labels = list(enumerate_subspaces(field, n, k))
    masks = vector_masks(labels)
    powers = {q**d: d for d in range(k + 1)}
    # layers[d][u] = bitmask of v != u with dim(u cap v) = d
    layers = [[0] * nv for _ in range(k)]
    for u in range(nv):
        mu = masks[u]
        for v in range(u + 1, nv):
            d = powers[(mu & masks[v]).bit_count()]
            if d < k:
                layers[d][u] |= 1 << v
                layers[d][v] |= 1 << u
    hists = []
    for u in range(nv):
        h = [layers[d][u].bit_count() for d in range(k)]
        h.append(1)  # only v = u has full-dimensional intersection
        hists.append(h)
    graphs = {}
    rows = [0] * nv
    for t in range(1, k):
        rows = [r | layers[t - 1][u] for u, r in enumerate(rows)]
        graphs[t] = Graph(nv, list(rows), labels=labels, meta=Params(n, k, t, q))
    return graphs, hists


def intersection_histogram(g: Graph, u: int, masks: list[int] | None = None) -> list[int]:
    """Counts of vertices v (including u itself) by dim(label_u cap label_v),
    indexed 0..k.  Requires labels."""
    if g.labels is None or g.meta is None:
        raise ValueError("graph has no subspace labels")
    if masks is None:
        masks = vector_masks(g.labels)
    q, k = g.meta.q, g.meta.k
    powers = {q**d: d for d in range(k + 1)}
    hist = [0] * (k + 1)
    mu = masks[u]
    for mv in masks:
        hist[powers[(mu & mv).bit_count()]] += 1
    return hist


# -- PACE 2017 .gr format ---------------------------------------------------


def write_gr(g: Graph, path) -> None:
    """Write the graph in PACE 2017 format: optional `c key=value` comment
    lines, header `p tw <n> <m>`, then one `u v` line per edge (1-indexed,
    ascending, no duplicates).  Byte-identical across runs."""
    lines = []
    if g.meta is not None:
        p = g.meta
        lines.append(f"c q={p.q} n={p.n} k={p.k} t={p.t}")
        lines.append(f"c vertices={gauss(p.n, p.k, p.q)}")
        lines.append(f"c delta={degree_formula(p)}")
        if p.n >= 2 * p.k:
            lines.append(f"c alpha={alpha_formula(p)}")
        if tw_formula_applies(p):
            lines.append(f"c tw={tw_formula_qkneser(p)}")
    m = edge_count(g)
    lines.append(f"p tw {g.n_vertices} {m}")
    for u, v in g.edges():
        lines.append(f"{u + 1} {v + 1}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_gr(path) -> Graph:
    """Parse a PACE 2017 .gr file; comments are preserved on the Graph."""
    comments = []
    n = None
    declared_m = None
    edges = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("c"):
                comments.append(line)
                continue
            parts = line.split()
            if parts[0] == "p":
                if n is not None:
                    raise MalformedFileError(f"{path}:{lineno}: duplicate header")
                if len(parts) != 4 or parts[1] != "tw":
                    raise MalformedFileError(f"{path}:{lineno}: bad header {line!r}")
                n, declared_m = int(parts[2]), int(parts[3])
                continue
            if n is None:
                raise MalformedFileError(f"{path}:{lineno}: edge before header")
            if len(parts) != 2:
                raise MalformedFileError(f"{path}:{lineno}: bad edge line {line!r}")
            u, v = int(parts[0]) - 1, int(parts[1]) - 1
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise MalformedFileError(f"{path}:{lineno}: edge out of range {line!r}")
            edges.append((u, v))
    if n is None:
        raise MalformedFileError(f"{path}: missing `p tw` header")
    g = Graph.from_edges(n, edges)
    if declared_m is not None and edge_count(g) != declared_m:
        raise MalformedFileError(
            f"{path}: header declares {declared_m} edges, found {edge_count(g)}"
        )
    g.comments = comments
    return g
