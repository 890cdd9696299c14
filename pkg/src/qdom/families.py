"""Constructors for the named graph families, with paper-style vertex labels.

Every constructor returns ``(Graph, LabelMap)``.  Path/cycle vertices
``v_1, v_2, ...`` occupy indices ``0, 1, ...`` (label ``v_i`` is index
``i - 1``); attached pendant vertices follow, in the order listed in each
constructor's docstring.

Naming used below: ``L_{g,l}`` is the lollipop, a cycle ``v_1..v_g`` plus the
path ``v_g v_{g+1} .. v_{g+l}``.  An F-graph adds pendant vertices to
nonpendant vertices of ``L_{g,l}``: at most one per vertex, except
``v_{g+l-1}``, which may carry several.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .errors import InvalidSpec
from .graph import (
    Graph,
    bits,
    build,
    cycle_order,
    from_graph6,
    is_connected,
    pendant_vertices,
)

KINDS = (
    "Path",
    "Cycle",
    "Star",
    "StarPlus",
    "Complete",
    "CompleteBipartite",
    "Lollipop",
    "FGraph",
    "CurlyF",
    "CurlyFCirc",
    "C3Star",
    "Corona",
    "H1",
    "H2",
    "H3",
    "H4",
    "H5",
    "ScriptH3",
    "Theorem39K",
    "CycleWithTrees",
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: Mapping[str, Any] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "params": dict(self.params)}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str | Mapping) -> "FamilySpec":
        obj = json.loads(text) if isinstance(text, str) else text
        if not isinstance(obj, Mapping) or "kind" not in obj:
            raise InvalidSpec('family spec must be an object {"kind": ..., "params": {...}}')
        if obj["kind"] not in KINDS:
            raise InvalidSpec(f"unknown family kind {obj['kind']!r}")
        return cls(obj["kind"], dict(obj.get("params", {})))


class LabelMap:
    """Bijection between paper-style vertex names and graph indices."""

    def __init__(self, names: Iterable[str]):
        self._names = list(names)
        self._index = {name: i for i, name in enumerate(self._names)}
        if len(self._index) != len(self._names):
            raise InvalidSpec("duplicate vertex label")

    def __getitem__(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self._names)

    def name(self, index: int) -> str:
        return self._names[index]

    def v(self, i: int) -> int:
        """Index of the paper vertex ``v_i``."""
        return self._index[f"v_{i}"]

    def as_dict(self) -> dict[str, int]:
        return dict(self._index)

    def names(self) -> list[str]:
        return list(self._names)


class _Builder:
    def __init__(self) -> None:
        self.names: list[str] = []
        self.edges: list[tuple[int, int]] = []

    def vertex(self, name: str) -> int:
        self.names.append(name)
        return len(self.names) - 1

    def edge(self, a: int, b: int) -> None:
        self.edges.append((a, b))

    def path_vertices(self, count: int, start: int = 1) -> list[int]:
        return [self.vertex(f"v_{i}") for i in range(start, start + count)]

    def done(self) -> tuple[Graph, LabelMap]:
        return build(len(self.names), self.edges), LabelMap(self.names)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidSpec(message)


def _int(params: Mapping[str, Any], key: str, default: int | None = None) -> int:
    if key not in params:
        if default is None:
            raise InvalidSpec(f"missing parameter {key!r}")
        return default
    value = params[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidSpec(f"parameter {key!r} must be an integer")
    return value


# ---------------------------------------------------------------- elementary


def make_path(n: int) -> tuple[Graph, LabelMap]:
    _need(n >= 1, "Path needs n >= 1")
    b = _Builder()
    vs = b.path_vertices(n)
    for a, c in zip(vs, vs[1:]):
        b.edge(a, c)
    return b.done()


def make_cycle(n: int) -> tuple[Graph, LabelMap]:
    _need(n >= 3, "Cycle needs n >= 3")
    b = _Builder()
    vs = b.path_vertices(n)
    for i in range(n):
        b.edge(vs[i], vs[(i + 1) % n])
    return b.done()


def make_star(n: int, plus: bool = False) -> tuple[Graph, LabelMap]:
    """Star S_n: centre ``c`` (index 0), leaves ``u_1..u_{n-1}``.

    With ``plus`` the leaves ``u_1`` and ``u_2`` are joined (S_n^+).
    """
    _need(n >= (3 if plus else 1), "Star needs n >= 1; StarPlus needs n >= 3")
    b = _Builder()
    c = b.vertex("c")
    leaves = [b.vertex(f"u_{i}") for i in range(1, n)]
    for u in leaves:
        b.edge(c, u)
    if plus:
        b.edge(leaves[0], leaves[1])
    return b.done()


def make_complete(n: int) -> tuple[Graph, LabelMap]:
    _need(n >= 1, "Complete needs n >= 1")
    b = _Builder()
    vs = b.path_vertices(n)
    for i in range(n):
        for j in range(i + 1, n):
            b.edge(vs[i], vs[j])
    return b.done()


def make_complete_bipartite(r: int, s: int) -> tuple[Graph, LabelMap]:
    _need(r >= 1 and s >= 1, "CompleteBipartite needs r, s >= 1")
    b = _Builder()
    left = [b.vertex(f"a_{i}") for i in range(1, r + 1)]
    right = [b.vertex(f"b_{i}") for i in range(1, s + 1)]
    for a in left:
        for c in right:
            b.edge(a, c)
    return b.done()


# ---------------------------------------------------------------- lollipops and F-graphs


def _lollipop(b: _Builder, g: int, l: int) -> list[int]:
    vs = b.path_vertices(g + l)
    for i in range(g):
        b.edge(vs[i], vs[(i + 1) % g])
    for i in range(g - 1, g + l - 1):
        b.edge(vs[i], vs[i + 1])
    return vs


def make_lollipop(g: int, l: int) -> tuple[Graph, LabelMap]:
    """L_{g,l}: cycle v_1..v_g, path v_g..v_{g+l}; n = g + l."""
    _need(g >= 3 and l >= 1, "Lollipop needs g >= 3 and l >= 1")
    b = _Builder()
    _lollipop(b, g, l)
    return b.done()


def make_curly_f(g: int, l: int, pendants: Iterable[int], circ: bool = False) -> tuple[Graph, LabelMap]:
    """F-graph from L_{g,l} plus one pendant per listed position.

    ``pendants`` lists 1-based positions ``i`` in ``1..g+l-1``; the pendant on
    ``v_i`` is labelled ``tau_i`` (repeats at ``v_{g+l-1}`` are labelled
    ``tau_{g+l-1}^j``).  With ``circ`` the vertex ``v_g`` must be a p-dominator.
    Pendant indices follow ``v_{g+l}`` in the listed order.
    """
    _need(g >= 3 and l >= 1, "CurlyF needs g >= 3 and l >= 1")
    positions = list(pendants)
    top = g + l - 1
    for i in positions:
        _need(isinstance(i, int) and 1 <= i <= top, f"pendant position {i} must be a nonpendant vertex 1..{top}")
    for i in set(positions):
        _need(i == top or positions.count(i) == 1, f"v_{i} may carry at most one pendant")
    if circ:
        _need(l == 1 or g in positions, "CurlyFCirc needs a pendant at v_g")
    b = _Builder()
    vs = _lollipop(b, g, l)
    seen: dict[int, int] = {}
    for i in positions:
        seen[i] = seen.get(i, 0) + 1
        name = f"tau_{i}" if seen[i] == 1 else f"tau_{i}^{seen[i]}"
        t = b.vertex(name)
        b.edge(vs[i - 1], t)
    return b.done()


def make_sunlike_star(g: int, k: int, n: int) -> tuple[Graph, LabelMap]:
    """Sunlike graph on cycle v_1..v_g whose p-dominators are exactly v_1..v_k.

    ``v_1..v_{k-1}`` carry one pendant each (``tau_i``); ``v_k`` carries the
    remaining ``n - g - k + 1`` pendants (``tau_k``, ``tau_k^2``, ...).
    """
    _need(g >= 3, "FGraph needs g >= 3")
    _need(1 <= k <= g, "FGraph needs 1 <= k <= g")
    _need(n >= g + k, "FGraph needs n >= g + k")
    b = _Builder()
    vs = b.path_vertices(g)
    for i in range(g):
        b.edge(vs[i], vs[(i + 1) % g])
    for i in range(1, k):
        b.edge(vs[i - 1], b.vertex(f"tau_{i}"))
    for j in range(1, n - g - k + 2):
        b.edge(vs[k - 1], b.vertex(f"tau_{k}" if j == 1 else f"tau_{k}^{j}"))
    return b.done()


def make_c3_star(k: int, n: int) -> tuple[Graph, LabelMap]:
    """C*_{3,k}: triangle v_1v_2v_3, path v_3..v_{3+k}, pendants u_1..u_{n-3-k} at v_{3+k}.

    ``k = 0`` hangs the pendants on v_3 directly.
    """
    _need(k >= 0, "C3Star needs k >= 0")
    _need(n - 3 - k >= 1, "C3Star needs at least one pendant at the far end (n >= k + 4)")
    b = _Builder()
    vs = b.path_vertices(3 + k)
    b.edge(vs[0], vs[1])
    b.edge(vs[1], vs[2])
    b.edge(vs[2], vs[0])
    for i in range(2, 2 + k):
        b.edge(vs[i], vs[i + 1])
    for j in range(1, n - 2 - k):
        b.edge(vs[-1], b.vertex(f"u_{j}"))
    return b.done()


def make_corona(h: Graph) -> tuple[Graph, LabelMap]:
    """H∘K₁: vertex ``h_i`` (index i) gets private pendant ``p_i`` (index |H| + i)."""
    b = _Builder()
    hs = [b.vertex(f"h_{i}") for i in range(h.n)]
    for i, j in h.edges():
        b.edge(hs[i], hs[j])
    for i in range(h.n):
        b.edge(hs[i], b.vertex(f"p_{i}"))
    return b.done()


# ---------------------------------------------------------------- the H families


def _check_h(eps: int, k: int, s: int) -> None:
    _need(eps >= 4, "H families need eps >= 4 (v_{eps-1} must carry the pendant v_eps)")
    _need(0 <= k <= eps - 2, "H families need 0 <= k <= eps - 2")
    _need(s >= 1, "H families need s >= 1 pendants at v_{eps-1}")


def _h_base(eps: int, positions: list[int], s: int) -> tuple[_Builder, list[int], list[int], list[int]]:
    """F_{3,eps-3} skeleton: returns builder, path vertices, tau vertices, omega vertices.

    ``omega_1`` is ``v_eps`` itself; ``omega_2..omega_s`` follow the taus.
    """
    b = _Builder()
    vs = _lollipop(b, 3, eps - 3)
    taus = []
    for j, a in enumerate(positions, start=1):
        t = b.vertex(f"tau_{j}")
        taus.append(t)
        b.edge(vs[a - 1], t)
    omegas = [vs[eps - 1]]
    for j in range(2, s + 1):
        w = b.vertex(f"omega_{j}")
        omegas.append(w)
        b.edge(vs[eps - 2], w)
    return b, vs, taus, omegas


def make_h1(eps: int, k: int, attachments: Iterable[int], s: int = 1) -> tuple[Graph, LabelMap]:
    """H^k_1: triangle v_1v_2v_3 and path v_3..v_eps, p-dominators v_{a_1}..v_{a_k} (a_j <= eps-2).

    ``tau_j`` hangs on ``v_{a_j}``; ``v_{eps-1}`` carries ``v_eps = omega_1`` and
    ``omega_2..omega_s``.  Index order: v_1..v_eps, tau_1..tau_k, omega_2..omega_s.
    """
    _check_h(eps, k, s)
    a = list(attachments)
    _need(len(a) == k, f"H1 needs exactly k={k} attachment positions")
    _need(all(1 <= x <= eps - 2 for x in a), "H1 attachment positions must lie in 1..eps-2")
    _need(all(x < y for x, y in zip(a, a[1:])), "H1 attachment positions must increase strictly")
    b, *_ = _h_base(eps, a, s)
    return b.done()


def h2_positions(eps: int, k: int) -> list[int]:
    return [eps - 2 - k + j for j in range(1, k + 1)]


def make_h2(eps: int, k: int, s: int = 1) -> tuple[Graph, LabelMap]:
    """H^k_2: the k single pendants sit on v_{eps-1-k}..v_{eps-2}."""
    _check_h(eps, k, s)
    b, *_ = _h_base(eps, h2_positions(eps, k), s)
    return b.done()


def _h2_edges(eps: int, k: int, s: int):
    b, vs, taus, omegas = _h_base(eps, h2_positions(eps, k), s)
    return b, vs, taus, omegas


def _move(b: _Builder, leaf: int, old: int, new: int) -> None:
    b.edges.remove((old, leaf))
    b.edges.append((new, leaf))


def make_h3(eps: int, k: int, s: int) -> tuple[Graph, LabelMap]:
    """H^k_3 from H^k_2 (needs k >= 1, s >= 2).

    The pendant of v_{eps-1-k} moves to v_{eps-1}; omega_2..omega_s move from
    v_{eps-1} onto omega_1 = v_eps.
    """
    _check_h(eps, k, s)
    _need(k >= 1, "H3 needs k >= 1")
    _need(s >= 2, "H3 needs s >= 2")
    b, vs, taus, omegas = _h2_edges(eps, k, s)
    _move(b, taus[0], vs[eps - 2 - k], vs[eps - 2])
    for w in omegas[1:]:
        _move(b, w, vs[eps - 2], omegas[0])
    return b.done()


def make_h4(eps: int, k: int, s: int = 1) -> tuple[Graph, LabelMap]:
    """H^{k-1}_4 from H^k_2 (needs k >= 1): the pendant of v_{eps-1-k} moves to v_{eps-1}."""
    _check_h(eps, k, s)
    _need(k >= 1, "H4 needs k >= 1")
    b, vs, taus, _ = _h2_edges(eps, k, s)
    _move(b, taus[0], vs[eps - 2 - k], vs[eps - 2])
    return b.done()


def make_h5(eps: int, k: int, s: int = 1) -> tuple[Graph, LabelMap]:
    """H^{k-2}_5 from H^{k-1}_4 (needs k >= 2): the pendant of v_{eps-k} also moves to v_{eps-1}."""
    _check_h(eps, k, s)
    _need(k >= 2, "H5 needs k >= 2")
    b, vs, taus, _ = _h2_edges(eps, k, s)
    _move(b, taus[0], vs[eps - 2 - k], vs[eps - 2])
    _move(b, taus[1], vs[eps - 1 - k], vs[eps - 2])
    return b.done()


def make_h_family(variant: int, eps: int, k: int, attachments: Iterable[int] | None = None, s: int = 1):
    """Dispatch on variant 1..5; ``eps``/``k``/``s`` are those of the parent H^k_1 or H^k_2."""
    if variant == 1:
        return make_h1(eps, k, attachments if attachments is not None else h2_positions(eps, k), s)
    if variant == 2:
        return make_h2(eps, k, s)
    if variant == 3:
        return make_h3(eps, k, s)
    if variant == 4:
        return make_h4(eps, k, s)
    if variant == 5:
        return make_h5(eps, k, s)
    raise InvalidSpec(f"H variant must be 1..5, got {variant}")


def script_h3_eps(n: int, alpha: int) -> int:
    return n - alpha + 1


def script_h3_valid(n: int, alpha: int) -> bool:
    if alpha == 0:
        return n == 3
    return alpha >= 1 and n >= 2 * alpha and n >= alpha + 3


def make_script_h3(n: int, alpha: int) -> tuple[Graph, LabelMap]:
    """𝓗_{3,α}: H^{α-1}_2 with a single pendant at v_{ε-1}, ε = n - α + 1; α = 0 gives C₃.

    Valid for α = 0 (n = 3) and for α >= 1 with n >= 2α and n >= α + 3.
    """
    _need(alpha >= 0, "ScriptH3 needs alpha >= 0")
    if alpha == 0:
        _need(n == 3, "ScriptH3 with alpha = 0 is C3 (n = 3)")
        return make_cycle(3)
    _need(n >= 2 * alpha, "ScriptH3 needs n >= 2*alpha")
    _need(n >= alpha + 3, "ScriptH3 needs n >= alpha + 3")
    return make_h2(script_h3_eps(n, alpha), alpha - 1, 1)


def least_alpha(n: int, gamma: int) -> int | None:
    """Least α >= 1 with a valid 𝓗_{3,α} of order n whose closed-form γ equals ``gamma``."""
    from .domination import gamma_script_h3

    for alpha in range(1, n + 1):
        if script_h3_valid(n, alpha) and gamma_script_h3(n, alpha) == gamma:
            return alpha
    return None


# ---------------------------------------------------------------- odd-cycle rewiring


def theorem39_k_edits(n: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """(removed, added) edges, 1-based, turning C_n into the rewired graph 𝒦."""
    h = (n + 1) // 2  # ceil(n/2) for odd n

    def wrap(i: int) -> int:
        return (i - 1) % n + 1

    removed = [(h, h + 1)]
    added = [(h, h - 2)]
    if n % 3 == 1:
        removed.append((h + 1, wrap(h + 2)))
        added.append((h + 1, wrap(h + 4)))
    return removed, added


def make_theorem39_k(n: int) -> tuple[Graph, LabelMap]:
    """Rewire the odd cycle v_1..v_n around v_h, h = ⌈n/2⌉.

    Always: remove v_h v_{h+1}, add v_h v_{h-2}.  When n ≡ 1 (mod 3) also
    remove v_{h+1} v_{h+2} and add v_{h+1} v_{h+4} (indices mod n).  n = 3 is C₃.
    """
    _need(n % 2 == 1 and n >= 3, "Theorem39K needs odd n >= 3")
    if n == 3:
        return make_cycle(3)
    removed, added = theorem39_k_edits(n)
    edges = {frozenset((i, i % n + 1)) for i in range(1, n + 1)}
    for a, c in removed:
        edges.remove(frozenset((a, c)))
    for a, c in added:
        edges.add(frozenset((a, c)))
    b = _Builder()
    b.path_vertices(n)
    for e in sorted(tuple(sorted(e)) for e in edges):
        b.edge(e[0] - 1, e[1] - 1)
    return b.done()


def make_cycle_with_trees(
    k: int, trees: list[Graph], roots: list[int], positions: list[int]
) -> tuple[Graph, LabelMap]:
    """Odd cycle v_1..v_k with tree ``trees[j]`` glued at its ``roots[j]`` onto cycle index ``positions[j]``.

    Positions are 0-based cycle indices.  Non-root tree vertices are labelled
    ``t{j}_{i}`` (tree j, original index i) and appended tree by tree.
    """
    _need(k >= 3 and k % 2 == 1, "CycleWithTrees needs odd k >= 3")
    _need(len(trees) == len(roots) == len(positions), "trees, roots and positions must align")
    _need(len(set(positions)) == len(positions), "positions must be distinct")
    _need(all(0 <= p < k for p in positions), "positions must be cycle indices 0..k-1")
    b = _Builder()
    vs = b.path_vertices(k)
    for i in range(k):
        b.edge(vs[i], vs[(i + 1) % k])
    for j, (t, r, pos) in enumerate(zip(trees, roots, positions)):
        _need(t.n >= 2 and t.m == t.n - 1 and is_connected(t), f"tree {j} must be a nontrivial tree")
        _need(0 <= r < t.n, f"root {r} outside tree {j}")
        index = {r: vs[pos]}
        for i in range(t.n):
            if i != r:
                index[i] = b.vertex(f"t{j}_{i}")
        for a, c in t.edges():
            b.edge(index[a], index[c])
    return b.done()


# ---------------------------------------------------------------- dispatch


def make(spec: FamilySpec) -> tuple[Graph, LabelMap]:
    """Construct the family member named by ``spec``."""
    p = spec.params
    kind = spec.kind
    if kind == "Path":
        return make_path(_int(p, "n"))
    if kind == "Cycle":
        return make_cycle(_int(p, "n"))
    if kind == "Star":
        return make_star(_int(p, "n"))
    if kind == "StarPlus":
        return make_star(_int(p, "n"), plus=True)
    if kind == "Complete":
        return make_complete(_int(p, "n"))
    if kind == "CompleteBipartite":
        return make_complete_bipartite(_int(p, "r"), _int(p, "s"))
    if kind == "Lollipop":
        return make_lollipop(_int(p, "g"), _int(p, "l"))
    if kind in ("CurlyF", "CurlyFCirc"):
        graph, labels = make_curly_f(_int(p, "g"), _int(p, "l"), p.get("pendants", []), circ=kind == "CurlyFCirc")
        if "n" in p:
            _need(graph.n == _int(p, "n"), f"{kind}: pendant list gives order {graph.n}, not n={p['n']}")
        return graph, labels
    if kind == "FGraph":
        return make_sunlike_star(_int(p, "g"), _int(p, "k"), _int(p, "n"))
    if kind == "C3Star":
        return make_c3_star(_int(p, "k"), _int(p, "n"))
    if kind == "Corona":
        if "graph6" in p:
            return make_corona(from_graph6(p["graph6"]))
        if "base" in p:
            return make_corona(make(FamilySpec.from_json(p["base"]))[0])
        raise InvalidSpec("Corona needs 'graph6' or 'base'")
    if kind in ("H1", "H2", "H3", "H4", "H5"):
        variant = int(kind[1])
        return make_h_family(variant, _int(p, "eps"), _int(p, "k"), p.get("a"), _int(p, "s", 1 if variant != 3 else None))
    if kind == "ScriptH3":
        return make_script_h3(_int(p, "n"), _int(p, "alpha"))
    if kind == "Theorem39K":
        return make_theorem39_k(_int(p, "n"))
    if kind == "CycleWithTrees":
        trees = [from_graph6(t) for t in p.get("trees", [])]
        return make_cycle_with_trees(_int(p, "k"), trees, list(p.get("roots", [0] * len(trees))), list(p.get("positions", [])))
    raise InvalidSpec(f"unknown family kind {kind!r}")


# ---------------------------------------------------------------- F-graph recognition


@dataclass(frozen=True)
class FDecomposition:
    """A reading of G as an F_{g,l}-graph: ``cycle`` is v_1..v_g, ``path`` is v_g..v_{g+l}."""

    g: int
    l: int
    cycle: tuple[int, ...]
    path: tuple[int, ...]
    pendants: Mapping[int, tuple[int, ...]]  # nonpendant vertex -> attached extra pendants

    @property
    def circ(self) -> bool:
        """v_g is a p-dominator."""
        return self.l == 1 or bool(self.pendants.get(self.cycle[-1]))

    @property
    def p_dominators_on_cycle(self) -> list[int]:
        """1-based cycle positions r_1 < ... < r_t of p-dominators."""
        out = []
        for pos, v in enumerate(self.cycle, start=1):
            if self.pendants.get(v) or (self.l == 1 and pos == self.g):
                out.append(pos)
        return out


def f_decompositions(g: Graph) -> list[FDecomposition]:
    """All readings of a connected unicyclic G as an F_{g,l}-graph (empty if none)."""
    if g.m != g.n or not is_connected(g):
        return []
    cyc = cycle_order(g)
    on_cycle = 0
    for v in cyc:
        on_cycle |= 1 << v
    leaves = pendant_vertices(g)
    core = ((1 << g.n) - 1) & ~leaves
    leaf_count = {v: (g.adj[v] & leaves).bit_count() for v in bits(core)}
    off_cycle = core & ~on_cycle
    out: list[FDecomposition] = []
    glen = len(cyc)

    def labelled(vg_index: int) -> list[list[int]]:
        # both orientations of the cycle ending at v_g
        fwd = [cyc[(vg_index + 1 + j) % glen] for j in range(glen)]
        return [fwd, list(reversed(fwd[:-1])) + [fwd[-1]]]

    if not off_cycle:
        for idx, vg in enumerate(cyc):
            if leaf_count[vg] < 1:
                continue
            if any(leaf_count[v] > 1 for v in cyc if v != vg):
                continue
            own = sorted(bits(g.adj[vg] & leaves))
            end = own[0]
            pend = {v: tuple(sorted(bits(g.adj[v] & leaves))) for v in cyc if v != vg and leaf_count[v]}
            if own[1:]:
                pend[vg] = tuple(own[1:])
            for lab in labelled(idx)[:1]:
                out.append(FDecomposition(glen, 1, tuple(lab), (vg, end), pend))
        return out

    # one pendant path leaves the cycle at v_g
    anchors = [v for v in cyc if g.adj[v] & off_cycle]
    if len(anchors) != 1 or (g.adj[anchors[0]] & off_cycle).bit_count() != 1:
        return []
    vg = anchors[0]
    walk = [vg]
    cur = vg
    seen = on_cycle
    while True:
        nxt = [u for u in bits(g.adj[cur] & off_cycle & ~seen)]
        if not nxt:
            break
        if len(nxt) > 1:
            return []
        cur = nxt[0]
        seen |= 1 << cur
        walk.append(cur)
    if len(walk) - 1 != off_cycle.bit_count():
        return []
    tip = walk[-1]
    body = [v for v in bits(core) if v != tip]
    if any(leaf_count[v] > 1 for v in body):
        return []
    own = sorted(bits(g.adj[tip] & leaves))
    pend = {v: tuple(sorted(bits(g.adj[v] & leaves))) for v in body if leaf_count[v]}
    if own[1:]:
        pend[tip] = tuple(own[1:])
    idx = cyc.index(vg)
    lab = labelled(idx)[0]
    out.append(FDecomposition(glen, len(walk), tuple(lab), tuple(walk) + (own[0],), pend))
    return out


def is_f_graph(g: Graph) -> bool:
    return bool(f_decompositions(g))


__all__ = [
    "FDecomposition",
    "FamilySpec",
    "KINDS",
    "LabelMap",
    "f_decompositions",
    "h2_positions",
    "is_f_graph",
    "least_alpha",
    "make",
    "make_c3_star",
    "make_corona",
    "make_curly_f",
    "make_cycle",
    "make_cycle_with_trees",
    "make_h1",
    "make_h2",
    "make_h3",
    "make_h4",
    "make_h5",
    "make_h_family",
    "make_lollipop",
    "make_path",
    "make_script_h3",
    "make_star",
    "make_sunlike_star",
    "make_theorem39_k",
    "script_h3_eps",
    "script_h3_valid",
    "theorem39_k_edits",
]
