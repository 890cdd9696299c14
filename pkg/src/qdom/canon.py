"""Canonical labeling by partition refinement and individualization.

The canonical form of a graph is the relabeling whose upper-triangle bit
string (read in graph6 order) is lexicographically largest among the leaves
of the individualization-refinement tree.  Automorphisms discovered at equal
leaves prune sibling branches lying in the same orbit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, bits, relabel, to_graph6


@dataclass(frozen=True)
class CanonicalForm:
    cert: bytes
    relabeling: tuple[int, ...]  # old index -> canonical index


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    adj = g.adj
    while True:
        masks = []
        for cell in cells:
            mk = 0
            for v in cell:
                mk |= 1 << v
            masks.append(mk)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & mk).bit_count() for mk in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                for sig in sorted(groups):
                    out.append(groups[sig])
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_key(g: Graph, order: list[int]) -> int:
    key = 0
    adj = g.adj
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            key = (key << 1) | (row >> order[i] & 1)
    return key


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        self.best_key: int | None = None
        self.best_order: list[int] | None = None
        self.automorphisms: list[tuple[int, ...]] = []

    def run(self) -> None:
        g = self.g
        by_degree: dict[int, list[int]] = {}
        for v in range(g.n):
            by_degree.setdefault(g.degree(v), []).append(v)
        cells = _refine(g, [by_degree[d] for d in sorted(by_degree)])
        self._visit(cells, [])

    def _visit(self, cells: list[list[int]], fixed: list[int]) -> None:
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = idx
        if target is None:
            self._leaf([c[0] for c in cells])
            return
        cell = cells[target]
        done: list[int] = []
        for v in cell:
            if done:
                gens = [a for a in self.automorphisms if all(a[f] == f for f in fixed)]
                if gens:
                    orbit = _orbit_members(gens, self.g.n)
                    if any(orbit[v] == orbit[u] for u in done):
                        continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            self._visit(_refine(self.g, child), fixed + [v])
            done.append(v)

    def _leaf(self, order: list[int]) -> None:
        key = _leaf_key(self.g, order)
        if self.best_key is None or key > self.best_key:
            self.best_key = key
            self.best_order = order
        elif key == self.best_key:
            # order[p] and best_order[p] play the same role
            aut = [0] * self.g.n
            for p, v in enumerate(order):
                aut[self.best_order[p]] = v
            aut_t = tuple(aut)
            if any(aut_t[i] != i for i in range(self.g.n)):
                self.automorphisms.append(aut_t)


def _orbit_members(gens: list[tuple[int, ...]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in gens:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def canonical(g: Graph) -> CanonicalForm:
    search = _Search(g)
    search.run()
    perm = [0] * g.n
    for pos, v in enumerate(search.best_order):
        perm[v] = pos
    cert = to_graph6(relabel(g, perm)).encode("ascii")
    return CanonicalForm(cert, tuple(perm))


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Automorphisms met during the canonical search (they generate a subgroup)."""
    search = _Search(g)
    search.run()
    return list(search.automorphisms)


def canonical_graph(g: Graph) -> Graph:
    form = canonical(g)
    return relabel(g, form.relabeling)


def cert(g: Graph) -> bytes:
    return canonical(g).cert


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical(g).cert == canonical(h).cert


def isomorphic_by_search(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test used as an independent oracle."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    n = g.n
    mapping = [-1] * n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == n:
            return True
        for w in range(n):
            if used >> w & 1 or g.degree(v) != h.degree(w):
                continue
            ok = True
            for u in bits(g.adj[v] & ((1 << v) - 1)):
                if not h.has_edge(mapping[u], w):
                    ok = False
                    break
            if ok:
                for u in range(v):
                    if not g.has_edge(u, v) and h.has_edge(mapping[u], w):
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(v + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    return extend(0)
