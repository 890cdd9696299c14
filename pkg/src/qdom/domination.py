"""Exact domination numbers.

The solver treats domination as a set cover over closed neighbourhoods:
branch on the undominated vertex with the fewest admissible dominators,
bound with a greedy incumbent and a counting lower bound
``ceil(|undominated| / best single cover)``.  The same search enumerates
every minimum dominating set exactly once by forbidding, in branch ``i``,
the candidates already tried in branches ``0..i-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import ResultTooLarge
from .graph import Graph, bits, is_connected, mask_of, p_dominators, pendant_vertices

DEFAULT_RESULT_CAP = 1_000_000


@dataclass(frozen=True)
class DominationCert:
    gamma: int
    witness: int  # bitmask
    contains_all_p_dominators: bool
    contains_no_pendant: bool

    @property
    def witness_set(self) -> list[int]:
        return list(bits(self.witness))

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "witness": self.witness_set,
            "flags": {
                "contains_all_p_dominators": self.contains_all_p_dominators,
                "contains_no_pendant": self.contains_no_pendant,
            },
        }


def closed_neighborhoods(g: Graph) -> list[int]:
    return [g.adj[v] | (1 << v) for v in range(g.n)]


def dominates(g: Graph, mask: int) -> bool:
    covered = 0
    for v in bits(mask):
        covered |= g.adj[v] | (1 << v)
    return covered == (1 << g.n) - 1


class _Cover:
    """Branch-and-bound over closed neighbourhoods restricted to ``allowed``."""

    def __init__(self, g: Graph, allowed: int):
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.nbhd = closed_neighborhoods(g)
        # dominators[u] = vertices whose closed neighbourhood contains u
        self.dominators = list(self.nbhd)  # symmetric relation
        self.allowed = allowed

    def _pick(self, undominated: int, allowed: int) -> int:
        best_u, best_c = -1, 1 << 30
        for u in bits(undominated):
            c = (self.dominators[u] & allowed).bit_count()
            if c < best_c:
                best_u, best_c = u, c
                if c <= 1:
                    break
        return best_u

    def _lower_bound(self, undominated: int, allowed: int) -> int:
        if not undominated:
            return 0
        best = 0
        reach = 0
        for u in bits(undominated):
            reach |= self.dominators[u]
        for v in bits(reach & allowed):
            c = (self.nbhd[v] & undominated).bit_count()
            if c > best:
                best = c
        if best == 0:
            return 1 << 30
        return -(-undominated.bit_count() // best)

    def greedy(self, start: int) -> int | None:
        chosen = start
        covered = 0
        for v in bits(start):
            covered |= self.nbhd[v]
        while covered != self.full:
            undominated = self.full & ~covered
            best_v, best_c = -1, 0
            for v in bits(self.allowed & ~chosen):
                c = (self.nbhd[v] & undominated).bit_count()
                if c > best_c:
                    best_v, best_c = v, c
            if best_v < 0:
                return None
            chosen |= 1 << best_v
            covered |= self.nbhd[best_v]
        return chosen

    def minimum(self, start: int = 0) -> int | None:
        """Smallest dominating superset of ``start`` inside ``allowed | start``."""
        incumbent = self.greedy(start)
        if incumbent is None:
            return None
        best = [incumbent.bit_count(), incumbent]
        covered = 0
        for v in bits(start):
            covered |= self.nbhd[v]

        def rec(chosen: int, covered: int, size: int, allowed: int) -> None:
            undominated = self.full & ~covered
            if not undominated:
                if size < best[0]:
                    best[0], best[1] = size, chosen
                return
            if size + self._lower_bound(undominated, allowed) >= best[0]:
                return
            u = self._pick(undominated, allowed)
            cands = self.dominators[u] & allowed
            # try the candidate covering most first
            order = sorted(bits(cands), key=lambda v: -(self.nbhd[v] & undominated).bit_count())
            for v in order:
                rec(chosen | (1 << v), covered | self.nbhd[v], size + 1, allowed & ~(1 << v))
                allowed &= ~(1 << v)

        rec(start, covered, start.bit_count(), self.allowed & ~start)
        return best[1]

    def all_of_size(self, k: int, start: int, on_found: Callable[[int], None]) -> None:
        """Call ``on_found`` once per dominating set of size ``k`` containing ``start``.

        ``k`` must be the minimum achievable size; every such set is reported once.
        """
        covered = 0
        for v in bits(start):
            covered |= self.nbhd[v]

        def rec(chosen: int, covered: int, size: int, allowed: int) -> None:
            undominated = self.full & ~covered
            if not undominated:
                # with k = γ a dominating set is never reached below size k
                if size == k:
                    on_found(chosen)
                return
            if size + self._lower_bound(undominated, allowed) > k:
                return
            u = self._pick(undominated, allowed)
            for v in list(bits(self.dominators[u] & allowed)):
                rec(chosen | (1 << v), covered | self.nbhd[v], size + 1, allowed & ~(1 << v))
                allowed &= ~(1 << v)

        rec(start, covered, start.bit_count(), self.allowed & ~start)


def _flags(g: Graph, witness: int) -> tuple[bool, bool]:
    pd = p_dominators(g)
    pend = pendant_vertices(g)
    return (witness & pd) == pd, (witness & pend) == 0


def domination_number(g: Graph) -> DominationCert:
    """Exact γ(G) with one minimum dominating set as witness.

    >>> from qdom.graph import path
    >>> domination_number(path(6)).gamma
    2
    """
    solver = _Cover(g, (1 << g.n) - 1)
    witness = solver.minimum()
    assert witness is not None
    contains_pd, no_pendant = _flags(g, witness)
    return DominationCert(witness.bit_count(), witness, contains_pd, no_pendant)


def gamma(g: Graph) -> int:
    return domination_number(g).gamma


def minimum_dominating_sets(g: Graph, cap: int = DEFAULT_RESULT_CAP) -> list[int]:
    """Every dominating set of size γ(G), as bitmasks in discovery order."""
    k = gamma(g)
    found: list[int] = []

    def keep(mask: int) -> None:
        if len(found) >= cap:
            raise ResultTooLarge(f"more than {cap} minimum dominating sets")
        found.append(mask)

    _Cover(g, (1 << g.n) - 1).all_of_size(k, 0, keep)
    return found


@dataclass(frozen=True)
class StructuredResult:
    exists: bool
    witness: int | None
    gamma: int


def structured_mds_exists(
    g: Graph, must_include: Iterable[int] = (), must_exclude: Iterable[int] = ()
) -> StructuredResult:
    """Is there a minimum dominating set containing ``must_include`` and avoiding ``must_exclude``?"""
    inc = mask_of(must_include)
    exc = mask_of(must_exclude)
    if inc & exc:
        raise ValueError("must_include and must_exclude overlap")
    k = gamma(g)
    if inc.bit_count() > k:
        return StructuredResult(False, None, k)
    allowed = ((1 << g.n) - 1) & ~exc
    best = _Cover(g, allowed).minimum(inc)
    if best is not None and best.bit_count() == k:
        return StructuredResult(True, best, k)
    return StructuredResult(False, None, k)


# ---------------------------------------------------------------------------
# corona characterisation of γ = n/2


def is_corona(g: Graph) -> bool:
    """Is G = H∘K₁ for a connected H (each vertex of H carries one private pendant)?

    K₂ counts as the corona K₁∘K₁.
    """
    n = g.n
    if n % 2 or n == 0:
        return False
    if n == 2:
        return g.m == 1
    pend = pendant_vertices(g)
    if pend.bit_count() != n // 2:
        return False
    supports = 0
    for p in bits(pend):
        s = g.adj[p]
        if supports & s:
            return False
        supports |= s
    return supports | pend == (1 << n) - 1


def is_c4(g: Graph) -> bool:
    return g.n == 4 and g.m == 4 and all(g.degree(v) == 2 for v in range(4)) and is_connected(g)


@dataclass(frozen=True)
class CoronaCheck:
    gamma_is_half: bool
    structure_is_c4_or_corona: bool

    @property
    def agree(self) -> bool:
        return self.gamma_is_half == self.structure_is_c4_or_corona


def corona_gamma_half_check(g: Graph, gamma_value: int | None = None) -> CoronaCheck:
    """Compare γ(G) = n/2 against "G is C₄ or a corona" for a connected G."""
    k = gamma(g) if gamma_value is None else gamma_value
    half = 2 * k == g.n
    return CoronaCheck(half, is_c4(g) or is_corona(g))


# ---------------------------------------------------------------------------
# closed forms


class NotCovered:
    """Sentinel returned when no closed form applies to a family."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "NotCovered"


NOT_COVERED = NotCovered()


def ceil_div(a: int, b: int) -> int:
    """Mathematical ceiling of a/b (b > 0), valid for negative a."""
    return -((-a) // b)


def gamma_path(n: int) -> int:
    return ceil_div(n, 3)


def gamma_cycle(n: int) -> int:
    return ceil_div(n, 3)


def gamma_h2(eps: int, k: int) -> int:
    if eps - k - 1 <= 2:
        return k + 1
    return ceil_div(eps - k - 4, 3) + k + 1


def gamma_script_h3(n: int, alpha: int) -> int:
    if alpha == 0:
        return 1
    if n - 2 * alpha <= 2:
        return alpha
    return ceil_div(n - 2 * alpha - 2, 3) + alpha


def gamma_sunlike_star(g: int, k: int) -> int:
    return k + ceil_div(g - k - 2, 3)


def closed_form_gamma(spec) -> int | NotCovered:
    """γ from a known formula for the family named by ``spec``, else NOT_COVERED."""
    kind = spec.kind
    p = spec.params
    if kind == "Path":
        return gamma_path(p["n"])
    if kind == "Cycle":
        return gamma_cycle(p["n"])
    if kind == "C3Star":
        return gamma_path(p["k"] + 3)
    if kind == "H2":
        return gamma_h2(p["eps"], p["k"])
    if kind == "ScriptH3":
        return gamma_script_h3(p["n"], p["alpha"])
    if kind == "FGraph":
        return gamma_sunlike_star(p["g"], p["k"])
    if kind == "Corona":
        from .families import make

        return make(spec)[0].n // 2
    if kind in ("Star", "StarPlus", "Complete"):
        return 1
    return NOT_COVERED


__all__ = [
    "DominationCert",
    "NOT_COVERED",
    "CoronaCheck",
    "StructuredResult",
    "ceil_div",
    "closed_form_gamma",
    "corona_gamma_half_check",
    "dominates",
    "domination_number",
    "gamma",
    "gamma_cycle",
    "gamma_h2",
    "gamma_path",
    "gamma_script_h3",
    "gamma_sunlike_star",
    "is_c4",
    "is_corona",
    "minimum_dominating_sets",
    "structured_mds_exists",
]
