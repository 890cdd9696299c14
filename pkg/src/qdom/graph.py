"""Immutable small graphs stored as per-vertex adjacency bitsets.

Vertices are the integers ``0..n-1``.  Row ``adj[i]`` is an ``int`` whose bit
``j`` is set iff ``i ~ j``.  Every operation returns a new ``Graph``.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DuplicateEdge,
    EdgeAbsent,
    EdgePresent,
    EmptyResult,
    MalformedGraph6,
    OutOfRange,
    SelfLoop,
)

MAX_ORDER = 64
INF = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise OutOfRange(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise OutOfRange("adjacency length does not match order")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise OutOfRange(f"row {i} references a vertex >= n")
            if row >> i & 1:
                raise SelfLoop(f"loop at vertex {i}")
            for j in bits(row):
                if not self.adj[j] >> i & 1:
                    raise OutOfRange(f"asymmetric adjacency between {i} and {j}")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i] >> (i + 1) << (i + 1))]

    def closed_neighborhoods(self) -> list[int]:
        return [row | (1 << i) for i, row in enumerate(self.adj)]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on ``n`` vertices from a list of vertex pairs."""
    if not 1 <= n <= MAX_ORDER:
        raise OutOfRange(f"order {n} outside 1..{MAX_ORDER}")
    adj = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise OutOfRange(f"edge ({i}, {j}) outside 0..{n - 1}")
        if i == j:
            raise SelfLoop(f"loop at vertex {i}")
        if adj[i] >> j & 1:
            raise DuplicateEdge(f"edge ({i}, {j}) listed twice")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


# ---------------------------------------------------------------- structure

def bfs_distances(g: Graph, source: int, skip_edge: tuple[int, int] | None = None) -> list[float]:
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    a, b = skip_edge if skip_edge else (-1, -1)
    while queue:
        u = queue.popleft()
        for w in bits(g.adj[u]):
            if (u == a and w == b) or (u == b and w == a):
                continue
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def components(g: Graph) -> list[int]:
    """Connected components as vertex bitmasks, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_unicyclic(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)


def two_coloring(g: Graph) -> list[int] | None:
    """Proper 2-coloring by BFS, or ``None`` when an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in bits(g.adj[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``inf`` for forests."""
    best = INF
    for u, w in g.edges():
        d = bfs_distances(g, u, skip_edge=(u, w))[w]
        best = min(best, d + 1)
    return best


def odd_girth(g: Graph) -> float:
    """Length of a shortest odd cycle, via BFS on the bipartite double cover."""
    best = INF
    n = g.n
    for s in range(n):
        # state (v, parity) encoded as v + parity * n
        dist = [INF] * (2 * n)
        dist[s] = 0
        queue = deque([s])
        while queue:
            state = queue.popleft()
            v, p = state % n, state // n
            if dist[state] >= best:
                break
            for w in bits(g.adj[v]):
                t = w + (1 - p) * n
                if dist[t] == INF:
                    dist[t] = dist[state] + 1
                    queue.append(t)
        best = min(best, dist[s + n])
    return best


def pendant_vertices(g: Graph) -> int:
    return mask_of(v for v in range(g.n) if g.adj[v].bit_count() == 1)


def p_dominators(g: Graph) -> int:
    """Support vertices: vertices adjacent to at least one pendant vertex."""
    out = 0
    for v in bits(pendant_vertices(g)):
        out |= g.adj[v]
    return out


@dataclass(frozen=True)
class StructuralProfile:
    connected: bool
    bipartite: bool
    girth: float
    odd_girth: float
    min_degree: int
    pendant_vertices: frozenset[int]
    p_dominators: frozenset[int]

    def to_json(self) -> dict:
        def num(x: float):
            return None if x == INF else int(x)

        return {
            "connected": self.connected,
            "bipartite": self.bipartite,
            "girth": num(self.girth),
            "odd_girth": num(self.odd_girth),
            "min_degree": self.min_degree,
            "pendant_vertices": sorted(self.pendant_vertices),
            "p_dominators": sorted(self.p_dominators),
        }


def profile(g: Graph) -> StructuralProfile:
    og = odd_girth(g)
    return StructuralProfile(
        connected=is_connected(g),
        bipartite=og == INF,
        girth=girth(g),
        odd_girth=og,
        min_degree=min(g.degrees()),
        pendant_vertices=frozenset(bits(pendant_vertices(g))),
        p_dominators=frozenset(bits(p_dominators(g))),
    )


def cycle_order(g: Graph) -> list[int]:
    """Vertices of the unique cycle of a unicyclic graph, in cyclic order."""
    deg = [g.degree(v) for v in range(g.n)]
    alive = (1 << g.n) - 1
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive &= ~(1 << v)
        for u in bits(g.adj[v] & alive):
            deg[u] -= 1
            if deg[u] == 1:
                stack.append(u)
    core = list(bits(alive))
    if not core:
        return []
    start = core[0]
    order = [start]
    prev, cur = -1, start
    while len(order) < len(core):
        nxt = [u for u in bits(g.adj[cur] & alive) if u != prev]
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def hanging_trees(g: Graph, cyc: Sequence[int]) -> dict[int, list[tuple[int, int]]]:
    """For each cycle vertex, its hanging tree as (parent, child) edges in BFS order."""
    on_cycle = mask_of(cyc)
    trees: dict[int, list[tuple[int, int]]] = {}
    for r in cyc:
        edges = []
        frontier = [r]
        seen = on_cycle
        while frontier:
            nxt = []
            for p in frontier:
                for c in bits(g.adj[p] & ~seen):
                    seen |= 1 << c
                    edges.append((p, c))
                    nxt.append(c)
            frontier = nxt
        trees[r] = edges
    return trees


# -------------------------------------------------------------------- edits

def add_edge(g: Graph, e: tuple[int, int]) -> Graph:
    i, j = e
    if not (0 <= i < g.n and 0 <= j < g.n):
        raise OutOfRange(f"edge {e} outside 0..{g.n - 1}")
    if i == j:
        raise SelfLoop(f"loop at vertex {i}")
    if g.has_edge(i, j):
        raise EdgePresent(f"edge {e} already present")
    adj = list(g.adj)
    adj[i] |= 1 << j
    adj[j] |= 1 << i
    return Graph(g.n, tuple(adj))


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    i, j = e
    if not (0 <= i < g.n and 0 <= j < g.n) or not g.has_edge(i, j):
        raise EdgeAbsent(f"edge {e} not present")
    adj = list(g.adj)
    adj[i] &= ~(1 << j)
    adj[j] &= ~(1 << i)
    return Graph(g.n, tuple(adj))


def edit(g: Graph, remove: Iterable[tuple[int, int]] = (), add: Iterable[tuple[int, int]] = ()) -> Graph:
    """Delete then add edges, validating each step."""
    for e in remove:
        g = delete_edge(g, e)
    for e in add:
        g = add_edge(g, e)
    return g


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Remove vertices; survivors keep their relative order.

    Returns the new graph and the map old index -> new index.
    """
    gone = mask_of(removed)
    if gone >> g.n:
        raise OutOfRange("vertex to delete is outside the graph")
    kept = [v for v in range(g.n) if not gone >> v & 1]
    if not kept:
        raise EmptyResult("cannot delete every vertex")
    index = {old: new for new, old in enumerate(kept)}
    adj = tuple(mask_of(index[w] for w in bits(g.adj[v] & ~gone)) for v in kept)
    return Graph(len(kept), adj), index


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = mask_of(vertices)
    return delete_vertices(g, [v for v in range(g.n) if not keep >> v & 1])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply ``perm`` (old index -> new index)."""
    adj = [0] * g.n
    for v in range(g.n):
        adj[perm[v]] = mask_of(perm[w] for w in bits(g.adj[v]))
    return Graph(g.n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = g.adj + tuple(row << g.n for row in h.adj)
    return Graph(g.n + h.n, adj)


@dataclass(frozen=True)
class Coalescence:
    graph: Graph
    root: int
    left_map: dict[int, int]
    right_map: dict[int, int]


def coalesce(g1: Graph, v1: int, g2: Graph, v2: int) -> Coalescence:
    """Identify ``v1`` of ``g1`` with ``v2`` of ``g2``.

    Vertices of ``g1`` keep their indices; the remaining vertices of ``g2``
    follow in order.  The merged vertex is ``v1``.
    """
    if not 0 <= v1 < g1.n or not 0 <= v2 < g2.n:
        raise OutOfRange("coalescence vertex outside its graph")
    right_map = {}
    nxt = g1.n
    for w in range(g2.n):
        if w == v2:
            right_map[w] = v1
        else:
            right_map[w] = nxt
            nxt += 1
    edges = list(g1.edges()) + [(right_map[a], right_map[b]) for a, b in g2.edges()]
    merged = build(g1.n + g2.n - 1, edges)
    return Coalescence(merged, v1, {v: v for v in range(g1.n)}, right_map)


# ------------------------------------------------------------- named graphs

def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    return build(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    return build(r + s, [(i, r + j) for i in range(r) for j in range(s)])


# ------------------------------------------------------------------- graph6

def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode in the graph6 format (upper triangle in column order)."""
    out = [_encode_order(g.n)]
    acc = 0
    count = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            count += 1
            if count == 6:
                out.append(chr(acc + 63))
                acc = 0
                count = 0
    if count:
        out.append(chr((acc << (6 - count)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedGraph6(f"invalid character in {text!r}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise MalformedGraph6("unsupported graph6 order encoding")
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 1 or n > MAX_ORDER:
        raise MalformedGraph6(f"order {n} outside 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    stream = 0
    for c in body:
        stream = (stream << 6) | (ord(c) - 63)
    pad = 6 * len(body) - nbits
    if stream & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    stream >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------- DOT

def to_dot(g: Graph, labels: Mapping[int, str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = labels.get(v, str(v)) if labels else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def from_dot(text: str) -> Graph:
    """Read back the subset of DOT written by :func:`to_dot`."""
    import re

    nodes = [int(v) for v in re.findall(r"^\s*(\d+)\s*\[", text, flags=re.M)]
    edges = [(int(a), int(b)) for a, b in re.findall(r"^\s*(\d+)\s*--\s*(\d+)", text, flags=re.M)]
    n = max(nodes + [v for e in edges for v in e], default=-1) + 1
    return build(n, edges)
