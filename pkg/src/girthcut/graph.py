"""Simple undirected graphs: ingestion, certification, BFS balls, fixtures.

Graphs are immutable after construction and stored in CSR form (offset
array plus flattened sorted neighbor lists), which keeps the per-vertex
BFS used everywhere else cheap.  The only ingestion format is a plain
edge list of whitespace-separated 0-based vertex id pairs.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import IO, Iterable

import numpy as np

from .errors import CertificationError, GenerationError, IngestionError

__all__ = [
    "Graph",
    "GraphCertificate",
    "load_edge_list",
    "builtin",
    "BUILTIN_NAMES",
    "certify",
    "distances_within",
    "random_regular",
]


class Graph:
    """Finite simple undirected graph with sorted adjacency lists."""

    __slots__ = ("n", "m", "_indptr", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        pairs = np.array(sorted(set(
            (u, v) if u < v else (v, u) for u, v in edges
        )), dtype=np.int64).reshape(-1, 2)
        m = pairs.shape[0]
        if m:
            if pairs.min() < 0:
                raise ValueError("negative vertex id")
            if pairs.max() >= n:
                raise ValueError("vertex id out of range")
            if (pairs[:, 0] == pairs[:, 1]).any():
                raise ValueError("self-loop")
        degrees = np.zeros(n, dtype=np.int64)
        for u, v in pairs:
            degrees[u] += 1
            degrees[v] += 1
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(degrees, out=indptr[1:])
        adj = np.zeros(2 * m, dtype=np.int64)
        cursor = indptr[:-1].copy()
        for u, v in pairs:
            adj[cursor[u]] = v
            cursor[u] += 1
            adj[cursor[v]] = u
            cursor[v] += 1
        for v in range(n):
            adj[indptr[v]:indptr[v + 1]].sort()
        self.n = n
        self.m = m
        self._indptr = indptr
        self._adj = adj
        self._edges = pairs
        for arr in (indptr, adj, pairs):
            arr.setflags(write=False)

    @property
    def simple(self) -> bool:
        return True

    @property
    def edges(self) -> np.ndarray:
        """Edge array of shape (m, 2) with u < v, lexicographically sorted."""
        return self._edges

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def neighbors(self, v: int) -> np.ndarray:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range [0, {self.n})")
        return self._adj[self._indptr[v]:self._indptr[v + 1]]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class GraphCertificate:
    """Verified (degree, girth) certificate; girth is math.inf on forests."""

    d: int
    girth: int | float
    k_max: int | float


def load_edge_list(stream: str | IO[str] | Iterable[str]) -> Graph:
    """Parse an edge list: one ``u v`` pair per line, ``#`` comments allowed.

    Duplicate edges collapse; the vertex count is max id + 1.  Raises
    ``IngestionError`` (with the offending line number) on self-loops,
    negative ids, or unparsable tokens.
    """
    if isinstance(stream, str):
        lines: Iterable[str] = stream.splitlines()
    else:
        lines = stream
    edges: list[tuple[int, int]] = []
    max_id = -1
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise IngestionError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise IngestionError(f"line {lineno}: unparsable vertex id in {line!r}") from None
        if u < 0 or v < 0:
            raise IngestionError(f"line {lineno}: negative vertex id in {line!r}")
        if u == v:
            raise IngestionError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
        max_id = max(max_id, u, v)
    return Graph(max_id + 1, edges)


def _lcf_edges(n: int, pattern: list[int]) -> list[tuple[int, int]]:
    """Hamiltonian cycle plus chords i -> i + pattern[i mod len] (mod n)."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        edges.append((i, (i + pattern[i % len(pattern)]) % n))
    return edges

_PETERSEN = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
]

_LCF = {
    "heawood": (14, [5, -5]),
    "pappus": (18, [5, 7, -7, 7, -7, -5]),
    "mcgee": (24, [12, 7, -7]),
    "tutte_coxeter": (30, [-13, -9, 7, -7, 9, 13]),
}

BUILTIN_NAMES = ("petersen", "heawood", "pappus", "mcgee", "tutte_coxeter")


def builtin(name: str) -> Graph:
    """Return a named cubic test graph with a hard-coded edge list."""
    if name == "petersen":
        return Graph(10, _PETERSEN)
    if name in _LCF:
        n, pattern = _LCF[name]
        return Graph(n, _lcf_edges(n, pattern))
    raise ValueError(
        f"unknown builtin graph {name!r}; valid names: {', '.join(BUILTIN_NAMES)}"
    )


def _common_degree(g: Graph) -> int:
    """Common degree of a regular graph; CertificationError otherwise."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    degrees = g.degrees()
    d = int(degrees[0])
    bad = np.nonzero(degrees != d)[0]
    if bad.size:
        v = int(bad[0])
        raise CertificationError(
            f"graph is not regular: vertex {v} has degree {int(degrees[v])}, "
            f"vertex 0 has degree {d}"
        )
    return d


def _girth(g: Graph) -> int | float:
    """Exact girth by BFS from every vertex; math.inf for forests.

    Each BFS records the first non-tree edge closing a cycle; the minimum
    of dist[u] + dist[w] + 1 over all roots is the girth.  Exploration is
    pruned once it can no longer improve on the best cycle found.
    """
    best: int | float = math.inf
    indptr, adj = g._indptr, g._adj
    dist = np.empty(g.n, dtype=np.int64)
    parent = np.empty(g.n, dtype=np.int64)
    for root in range(g.n):
        if best == 3:
            break
        dist.fill(-1)
        dist[root] = 0
        parent[root] = -1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            # Any cycle candidate via u has length >= 2*du.
            if 2 * du >= best:
                continue
            for w in adj[indptr[u]:indptr[u + 1]]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cycle = int(du + dist[w] + 1)
                    if cycle < best:
                        best = cycle
    return best


def certify(g: Graph) -> GraphCertificate:
    """Verify regularity and compute the exact girth.

    Raises ``CertificationError`` naming a violating vertex if the graph is
    not regular.  Forests get girth inf and k_max inf.
    """
    d = _common_degree(g)
    girth = _girth(g)
    k_max = girth // 2 if girth != math.inf else math.inf
    return GraphCertificate(d=d, girth=girth, k_max=k_max)


def _ball_arrays(g: Graph, root: int, radius: int) -> tuple[np.ndarray, np.ndarray]:
    """Vertices within ``radius`` of ``root`` in BFS order, with distances."""
    indptr, adj = g._indptr, g._adj
    verts = [root]
    dists = [0]
    seen = {root: 0}
    frontier = [root]
    for depth in range(1, radius + 1):
        nxt = []
        for u in frontier:
            for w in adj[indptr[u]:indptr[u + 1]]:
                w = int(w)
                if w not in seen:
                    seen[w] = depth
                    nxt.append(w)
                    verts.append(w)
                    dists.append(depth)
        if not nxt:
            break
        frontier = nxt
    return np.array(verts, dtype=np.int64), np.array(dists, dtype=np.int64)


def distances_within(g: Graph, root: int, radius: int) -> dict[int, int]:
    """Map of vertex -> distance for every vertex at distance <= radius."""
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range [0, {g.n})")
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    verts, dists = _ball_arrays(g, root, radius)
    return {int(v): int(d) for v, d in zip(verts, dists)}


def random_regular(
    n: int,
    d: int,
    min_girth: int = 3,
    seed: int = 0,
    max_attempts: int = 10_000,
) -> Graph:
    """Sample a d-regular simple graph of girth >= min_girth.

    Pairing-model sampling with rejection: stubs are shuffled, paired, and
    the outcome is kept only if it is simple with sufficient girth.
    Deterministic for a fixed seed.  Raises ``ValueError`` on parity
    violations and ``GenerationError`` when the attempt budget runs out.
    """
    if n * d % 2 != 0:
        raise ValueError(f"n*d must be even, got n={n}, d={d}")
    if n < d + 1:
        raise ValueError(f"need n >= d+1, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n, dtype=np.int64), d)
    for _ in range(max_attempts):
        pairs = stubs[rng.permutation(n * d)].reshape(-1, 2)
        u = np.minimum(pairs[:, 0], pairs[:, 1])
        v = np.maximum(pairs[:, 0], pairs[:, 1])
        if (u == v).any():
            continue
        keys = u * n + v
        if np.unique(keys).size != keys.size:
            continue
        g = Graph(n, zip(u.tolist(), v.tolist()))
        if _girth(g) >= min_girth:
            return g
    raise GenerationError(
        f"no simple {d}-regular graph with girth >= {min_girth} on {n} vertices "
        f"found in {max_attempts} attempts"
    )
