"""Finite simple graphs: representation, generators, matrices, and file formats.

Vertices are the contiguous ids 0..n-1.  Edges are unordered pairs stored
canonically as (u, v) with u < v.  All values are immutable after
construction and safe to share across workers.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .rng import SplitMix64


class GraphError(ValueError):
    """Invalid graph input, parameters, or file contents."""


@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices 0..n-1.

    ``edges`` must be canonical: each pair (u, v) with 0 <= u < v < n, no
    duplicates, sorted lexicographically.  Use :func:`from_edge_list` to
    build one from raw input.  ``degrees`` is cached and read-only.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    _degrees: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("vertex count must be positive")
        deg = np.zeros(self.n, dtype=np.int64)
        prev = None
        for (u, v) in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"non-canonical or out-of-range edge {(u, v)}")
            if prev is not None and (u, v) <= prev:
                raise GraphError(f"edges not sorted/deduplicated at {(u, v)}")
            prev = (u, v)
            deg[u] += 1
            deg[v] += 1
        deg.flags.writeable = False
        object.__setattr__(self, "_degrees", deg)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees


def from_edge_list(n: int, pairs) -> Graph:
    """Build a simple graph from (u, v) pairs, deduplicating repeats.

    Self-loops and out-of-range ids are rejected with the 0-based index of
    the offending pair in the input sequence.
    """
    seen = set()
    for i, (u, v) in enumerate(pairs):
        u, v = int(u), int(v)
        if u == v:
            raise GraphError(f"pair {i}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"pair {i}: vertex id out of range 0..{n - 1}: ({u}, {v})")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


# ---------------------------------------------------------------------------
# generators


def gen_path(n: int) -> Graph:
    """Path on n >= 2 vertices, edges (i, i+1)."""
    if n < 2:
        raise GraphError("path needs n >= 2")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def gen_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def gen_star(n: int) -> Graph:
    """Star on n >= 2 vertices with the center at vertex n-1.

    Placing the center last makes the degree-ascending labeling the
    identity, which the reduced-basis bounds rely on.
    """
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph(n, tuple((i, n - 1) for i in range(n - 1)))


def gen_complete(n: int) -> Graph:
    """Complete graph on n >= 2 vertices."""
    if n < 2:
        raise GraphError("complete graph needs n >= 2")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def gen_join(n: int, p: int) -> Graph:
    """Join of an empty graph on n-p vertices with a complete graph on p.

    The p mutually adjacent "center" vertices take the highest labels
    n-p..n-1 and are adjacent to everything.  p=1 gives the star, p=n-1 the
    complete graph.  m = p(n-p) + p(p-1)/2.
    """
    if not 1 <= p <= n - 1:
        raise GraphError(f"join parameter p={p} outside 1..{n - 1}")
    edges = [(u, v) for v in range(n - p, n) for u in range(v)]
    return Graph(n, tuple(sorted(edges)))


def gen_lattice_subgraph(coords, induced: bool = True, edges=None):
    """Graph from integer lattice coordinates, one vertex per coordinate.

    With ``induced=True`` the edges are exactly the pairs of coordinates at
    l1-distance 1 (same point on all axes but one, off by +-1 there).  With
    ``induced=False`` an explicit edge list must be supplied; every edge is
    validated to join lattice neighbors, but neighbor pairs may be omitted.

    Returns (Graph, LatticeEmbedding).
    """
    coords = tuple(tuple(int(x) for x in c) for c in coords)
    if not coords:
        raise GraphError("need at least one coordinate")
    nu = len(coords[0])
    if nu < 1 or any(len(c) != nu for c in coords):
        raise GraphError("coordinates must share a common dimension >= 1")
    index = {}
    for i, c in enumerate(coords):
        if c in index:
            raise GraphError(f"duplicate coordinate {c} at vertices {index[c]} and {i}")
        index[c] = i
    n = len(coords)
    if induced:
        if edges is not None:
            raise GraphError("explicit edges are only accepted with induced=False")
        found = []
        for i, c in enumerate(coords):
            for axis in range(nu):
                up = list(c)
                up[axis] += 1
                j = index.get(tuple(up))
                if j is not None:
                    found.append((i, j) if i < j else (j, i))
        graph = Graph(n, tuple(sorted(found)))
    else:
        if edges is None:
            raise GraphError("induced=False requires an explicit edge list")
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise GraphError(f"edge {i}: invalid endpoints ({u}, {v})")
            if _l1_distance(coords[u], coords[v]) != 1:
                raise GraphError(
                    f"edge {i}: vertices {u} and {v} are not lattice neighbors"
                )
        graph = from_edge_list(n, edges)
    return graph, LatticeEmbedding(nu, coords, induced)


def _l1_distance(a, b) -> int:
    return sum(abs(x - y) for x, y in zip(a, b))


@dataclass(frozen=True)
class LatticeEmbedding:
    """Integer coordinates in dimension nu, one per vertex.

    ``induced`` records whether adjacency is claimed to coincide with
    lattice neighborliness (True) or only to be contained in it (False).
    """

    nu: int
    coords: tuple[tuple[int, ...], ...]
    induced: bool = True

    def __post_init__(self):
        if self.nu < 1:
            raise GraphError("lattice dimension must be >= 1")
        if any(len(c) != self.nu for c in self.coords):
            raise GraphError("coordinate length does not match dimension")
        if len(set(self.coords)) != len(self.coords):
            raise GraphError("coordinates must be distinct")


def validate_embedding(G: Graph, emb: LatticeEmbedding) -> None:
    """Raise GraphError unless emb is a faithful lattice placement of G."""
    if len(emb.coords) != G.n:
        raise GraphError("embedding has wrong number of coordinates")
    for (u, v) in G.edges:
        if _l1_distance(emb.coords[u], emb.coords[v]) != 1:
            raise GraphError(f"edge ({u}, {v}) does not join lattice neighbors")
    if emb.induced:
        index = {c: i for i, c in enumerate(emb.coords)}
        edge_set = set(G.edges)
        for i, c in enumerate(emb.coords):
            for axis in range(emb.nu):
                up = list(c)
                up[axis] += 1
                j = index.get(tuple(up))
                if j is not None and ((min(i, j), max(i, j)) not in edge_set):
                    raise GraphError(
                        f"induced embedding is missing lattice edge ({i}, {j})"
                    )


def gen_random_connected(n: int, edge_probability: float, seed: int) -> Graph:
    """Connected Erdos-Renyi draw, deterministic in the seed.

    Each unordered pair, visited in lexicographic order, becomes an edge
    when the next SplitMix64 variate falls below ``edge_probability``; the
    draw is repeated (a fresh pass over all pairs) until the result is
    connected, up to 1000 attempts.  Conditioning on connectivity biases
    the distribution, which is fine for producing valid test corpora.
    """
    if not 0 < edge_probability <= 1:
        raise GraphError("edge probability must be in (0, 1]")
    if n < 1:
        raise GraphError("vertex count must be positive")
    gen = SplitMix64(seed)
    for _ in range(1000):
        pairs = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if gen.random() < edge_probability
        ]
        graph = Graph(n, tuple(pairs))
        if is_connected(graph):
            return graph
    raise GraphError(
        "no connected draw in 1000 attempts; increase the edge probability"
    )


# ---------------------------------------------------------------------------
# matrices and scalar invariants


def adjacency_matrix(G: Graph) -> np.ndarray:
    """Dense symmetric 0/1 adjacency matrix."""
    A = np.zeros((G.n, G.n))
    if G.edges:
        e = np.asarray(G.edges)
        A[e[:, 0], e[:, 1]] = 1.0
        A[e[:, 1], e[:, 0]] = 1.0
    return A


def laplacian(G: Graph) -> np.ndarray:
    """Positive-semidefinite combinatorial Laplacian Deg - A (rows sum to 0)."""
    H = -adjacency_matrix(G)
    H[np.diag_indices(G.n)] = G.degrees
    return H


def normalized_laplacian(G: Graph) -> np.ndarray:
    """Degree-renormalized Laplacian Deg^{-1/2} (Deg - A) Deg^{-1/2}.

    The diagonal is exactly 1.  Rejects graphs with an isolated vertex.
    """
    if np.any(G.degrees == 0):
        bad = int(np.argmin(G.degrees))
        raise GraphError(f"vertex {bad} has degree zero; renormalization undefined")
    scale = 1.0 / np.sqrt(G.degrees.astype(float))
    N = -adjacency_matrix(G) * np.outer(scale, scale)
    N[np.diag_indices(G.n)] = 1.0
    return N


def zagreb_index(G: Graph) -> int:
    """First Zagreb index: the sum of squared degrees."""
    return int(np.sum(G.degrees**2))


def adjacency_lists(G: Graph) -> list[list[int]]:
    out = [[] for _ in range(G.n)]
    for (u, v) in G.edges:
        out[u].append(v)
        out[v].append(u)
    return out


def is_connected(G: Graph) -> bool:
    """Breadth-first search reachability from vertex 0."""
    if G.n == 1:
        return True
    adj = adjacency_lists(G)
    seen = bytearray(G.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                queue.append(v)
    return count == G.n


def complement(G: Graph) -> Graph:
    """Graph with edge {u,v} exactly when G has none."""
    edge_set = set(G.edges)
    edges = tuple(
        (u, v)
        for u in range(G.n)
        for v in range(u + 1, G.n)
        if (u, v) not in edge_set
    )
    return Graph(G.n, edges)


# ---------------------------------------------------------------------------
# file formats
#
# Edge-list file: UTF-8 text; '#' starts a comment; first data line "n m",
# then m lines "u v" with 0-based ids.
#
# Lattice file: first data line "n nu induced" with induced in {0,1}; then
# n lines "vid x1 ... x_nu"; if induced=0, a line "m" followed by m edge
# lines "u v".


def edge_list_text(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for (u, v) in G.edges)
    return "\n".join(lines) + "\n"


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise GraphError(f"line {lineno}: expected {count} integers, got {len(parts)}")
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise GraphError(f"line {lineno}: non-integer token") from None


def parse_edge_list(text: str) -> Graph:
    rows = list(_data_lines(text))
    if not rows:
        raise GraphError("empty edge-list input")
    lineno, head = rows[0]
    n, m = _ints(head, lineno, 2)
    if len(rows) - 1 != m:
        raise GraphError(f"header declares {m} edges but {len(rows) - 1} lines follow")
    pairs = []
    for lineno, line in rows[1:]:
        u, v = _ints(line, lineno, 2)
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: invalid edge ({u}, {v})")
        pairs.append((u, v))
    return from_edge_list(n, pairs)


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(G: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(edge_list_text(G))


def lattice_text(G: Graph, emb: LatticeEmbedding) -> str:
    lines = [f"{G.n} {emb.nu} {1 if emb.induced else 0}"]
    for vid, c in enumerate(emb.coords):
        lines.append(" ".join([str(vid)] + [str(x) for x in c]))
    if not emb.induced:
        lines.append(str(G.m))
        lines.extend(f"{u} {v}" for (u, v) in G.edges)
    return "\n".join(lines) + "\n"


def parse_lattice_file(text: str):
    rows = list(_data_lines(text))
    if not rows:
        raise GraphError("empty lattice input")
    lineno, head = rows[0]
    n, nu, induced = _ints(head, lineno, 3)
    if induced not in (0, 1):
        raise GraphError(f"line {lineno}: induced flag must be 0 or 1")
    if len(rows) < 1 + n:
        raise GraphError(f"expected {n} coordinate lines")
    coords: list[tuple[int, ...] | None] = [None] * n
    for lineno, line in rows[1 : 1 + n]:
        vals = _ints(line, lineno, nu + 1)
        vid = vals[0]
        if not 0 <= vid < n or coords[vid] is not None:
            raise GraphError(f"line {lineno}: bad or repeated vertex id {vid}")
        coords[vid] = tuple(vals[1:])
    if induced == 1:
        if len(rows) != 1 + n:
            raise GraphError("unexpected trailing lines in induced lattice file")
        return gen_lattice_subgraph(coords, induced=True)
    rest = rows[1 + n :]
    if not rest:
        raise GraphError("missing edge count for non-induced lattice file")
    lineno, line = rest[0]
    (m,) = _ints(line, lineno, 1)
    if len(rest) - 1 != m:
        raise GraphError(f"line {lineno}: declares {m} edges, found {len(rest) - 1}")
    edges = []
    for lineno, line in rest[1:]:
        u, v = _ints(line, lineno, 2)
        edges.append((u, v))
    return gen_lattice_subgraph(coords, induced=False, edges=edges)


def read_lattice_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_lattice_file(fh.read())


def write_lattice_file(G: Graph, emb: LatticeEmbedding, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(lattice_text(G, emb))
