"""Immutable simple undirected graphs plus the vertex-set plumbing every
solver shares.

Vertices are dense 0-based indices.  Vertex subsets cross API boundaries as
plain ``frozenset`` objects; the performance-sensitive internals use integer
bitmasks where bit ``v`` stands for vertex ``v``.  The text file format is
documented on :func:`parse_graph`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """A graph text file could not be parsed."""


class DisconnectedGraphError(ValueError):
    """A connected graph was required but the input is disconnected."""


def mask_from(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_from(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


def format_vertex_set(s: Iterable[int]) -> str:
    """Canonical textual form: increasing indices, comma separated."""
    return ",".join(str(v) for v in sorted(s))


_BYTE_BITS = tuple(tuple(b for b in range(8) if byte >> b & 1) for byte in range(256))


class Graph:
    """Simple undirected graph, immutable after construction.

    ``n`` is the vertex count, ``m`` the edge count.  Adjacency lists are
    strictly increasing tuples and symmetric; no self-loops or duplicate
    edges survive construction.  Instances are safe to share across threads.
    """

    __slots__ = ("n", "m", "_adj", "_nmask", "_cmask", "_maxdeg")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbytes = (n + 7) // 8 if n else 1
        rows = [bytearray(nbytes) for _ in range(n)]
        m = 0
        for u, v in edges:
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise ValueError(f"edge endpoint out of range: ({u},{v}) with n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            row = rows[u]
            byte, bit = v >> 3, 1 << (v & 7)
            if not row[byte] & bit:
                row[byte] |= bit
                rows[v][u >> 3] |= 1 << (u & 7)
                m += 1
        self.n = n
        self.m = m
        nmask = [int.from_bytes(row, "little") for row in rows]
        self._nmask = tuple(nmask)
        self._cmask = tuple(nm | (1 << v) for v, nm in enumerate(nmask))
        expand = _BYTE_BITS
        adj = []
        for row in rows:
            lst: list[int] = []
            base = 0
            for byte in row:
                if byte:
                    lst.extend(base + b for b in expand[byte])
                base += 8
            adj.append(tuple(lst))
        self._adj = tuple(adj)
        self._maxdeg = max((len(a) for a in adj), default=0)

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from (u, v) pairs; deduplicates and symmetrizes.

        The result does not depend on the order of ``edges``.
        """
        return cls(n, edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def max_degree(self) -> int:
        return self._maxdeg

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbor_mask(self, v: int) -> int:
        return self._nmask[v]

    def closed_mask(self, v: int) -> int:
        return self._cmask[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._nmask[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in self._adj[u]:
                if v > u:
                    out.append((u, v))
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Bipartition:
    """Two-coloring witness: every edge runs between ``left`` and ``right``."""

    left: frozenset[int]
    right: frozenset[int]


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (true for n <= 1)."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= g.neighbor_mask(v)
        frontier = grown & ~seen
        seen |= frontier
    return seen == g.full_mask


def pendant_and_support(g: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """Degree-1 vertices and the set of their (unique) neighbors."""
    pendants = frozenset(v for v in range(g.n) if g.degree(v) == 1)
    supports = frozenset(g.neighbors(v)[0] for v in pendants)
    return pendants, supports


def bipartition(g: Graph) -> Bipartition | None:
    """Deterministic 2-coloring, or None if the graph has an odd cycle.

    Vertex 0 (and the smallest vertex of every further component) goes left.
    The returned coloring is re-verified by a full edge scan.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
    left_mask = mask_from(v for v in range(g.n) if color[v] == 0)
    right_mask = g.full_mask & ~left_mask
    for v in iter_bits(left_mask):
        if g.neighbor_mask(v) & left_mask:
            return None
    for v in iter_bits(right_mask):
        if g.neighbor_mask(v) & right_mask:
            return None
    return Bipartition(left=set_from(left_mask), right=set_from(right_mask))


def check_bipartition(g: Graph, parts: Bipartition) -> None:
    """Raise ValueError unless ``parts`` is a valid bipartition of ``g``."""
    left_mask = mask_from(parts.left)
    right_mask = mask_from(parts.right)
    if left_mask & right_mask or left_mask | right_mask != g.full_mask:
        raise ValueError("bipartition sides must partition the vertex set")
    for v in iter_bits(left_mask):
        if g.neighbor_mask(v) & left_mask:
            raise ValueError("an edge lies inside the left side of the bipartition")
    for v in iter_bits(right_mask):
        if g.neighbor_mask(v) & right_mask:
            raise ValueError("an edge lies inside the right side of the bipartition")


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices`` plus the position -> original map."""
    keep = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(keep)}
    edges = []
    for i, v in enumerate(keep):
        for w in g.neighbors(v):
            if w in pos and pos[w] > i:
                edges.append((i, pos[w]))
    return Graph(len(keep), edges), tuple(keep)


def parse_graph(text: str) -> Graph:
    """Parse the canonical text format.

    Lines beginning ``#`` are comments.  The first data line is ``n m``;
    exactly ``m`` data lines ``u v`` follow.  Readers accept edges in any
    order and orientation; duplicates, self-loops and out-of-range
    endpoints are errors.
    """
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line))
    if not data:
        raise GraphFormatError("missing header line 'n m'")
    lineno, header = data[0]
    fields = header.split()
    if len(fields) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m'")
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError as exc:
        raise GraphFormatError(f"line {lineno}: header must be two integers") from exc
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: negative counts in header")
    if len(data) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(data) - 1}")
    edges = []
    for lineno, line in data[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: edge line must be 'u v'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: edge endpoints must be integers") from exc
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: endpoint out of range")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop")
        edges.append((u, v) if u < v else (v, u))
    if len(set(edges)) != len(edges):
        raise GraphFormatError("duplicate edge")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    """Canonical text form: 'n m' then edges 'u v' (u < v) in lexicographic order."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_graph(g))
