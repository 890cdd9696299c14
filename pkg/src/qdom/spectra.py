"""Signless Laplacian spectra with certified least eigenpairs.

All eigenvalues come from Householder reduction to tridiagonal form followed
by implicit-shift QL sweeps.  The eigenvector of the least eigenvalue is then
recovered by inverse iteration on ``Q - (q_min - shift) I`` and certified by
its residual ``||Q x - q_min x||``; ``q_min`` is reported as the Rayleigh
quotient of that vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, EdgeAbsent, InvalidSpec, NoConvergence
from .graph import Graph, bfs_distances, bits, cycle_order, delete_edge, hanging_trees

DEFAULT_TOL = 1e-10
ZERO_THRESHOLD = 1e-7  # |x_i| below this is a structural zero
CLUSTER_FACTOR = 100.0  # eigenvalues within CLUSTER_FACTOR * tol are one cluster


def q_matrix(g: Graph) -> np.ndarray:
    """Q = D + A as a dense float matrix."""
    q = np.zeros((g.n, g.n))
    for i in range(g.n):
        q[i, i] = g.degree(i)
        for j in bits(g.adj[i]):
            q[i, j] = 1.0
    return q


# ---------------------------------------------------------------------------
# dense symmetric eigenvalues


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix; returns (diagonal, subdiagonal)."""
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1 :, k]
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0:
            continue
        alpha = -math.copysign(norm_x, x[0])
        v = x.copy()
        v[0] -= alpha
        v /= np.linalg.norm(v)
        # A <- H A H with H = I - 2 v v^T acting on rows/cols k+1..n-1
        block = a[k + 1 :, k:]
        block -= 2.0 * np.outer(v, v @ block)
        block = a[k:, k + 1 :]
        block -= 2.0 * np.outer(block @ v, v)
    d = np.diag(a).copy()
    e = np.zeros(n)
    if n > 1:
        e[1:] = np.diag(a, -1)
    return d, e


def tridiagonal_eigenvalues(d: np.ndarray, e: np.ndarray, max_iter: int) -> np.ndarray:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL.

    ``e[i]`` is the entry coupling rows i-1 and i (``e[0]`` unused).
    """
    d = np.array(d, dtype=float, copy=True)
    n = d.size
    e = np.append(np.array(e[1:], dtype=float), 0.0) if n > 0 else np.zeros(0)
    total = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= np.finfo(float).eps * dd:
                    break
                m += 1
            if m == l:
                break
            total += 1
            if total > max_iter:
                raise NoConvergence(f"QL iteration exceeded {max_iter} steps")
            gshift = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(gshift, 1.0)
            gshift = d[m] - d[l] + e[l] / (gshift + math.copysign(r, gshift))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, gshift)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = gshift / r
                gshift = d[i + 1] - p
                r = (d[i] - gshift) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = gshift + p
                gshift = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = gshift
            e[m] = 0.0
    return np.sort(d)


def symmetric_eigenvalues(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    if n == 0:
        return np.zeros(0)
    if n == 1:
        return np.array([float(a[0, 0])])
    d, e = tridiagonalize(a)
    return tridiagonal_eigenvalues(d, e, max_iter=100 * n)


# ---------------------------------------------------------------------------
# certified least eigenpair


def rayleigh(g: Graph, x: Sequence[float]) -> float:
    """X^T Q X evaluated as the edge sum of (x_i + x_j)^2."""
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise DimensionMismatch(f"vector of length {x.shape} for a graph of order {g.n}")
    total = 0.0
    for i, j in g.edges():
        s = x[i] + x[j]
        total += s * s
    return float(total)


def _normalize_sign(x: np.ndarray) -> np.ndarray:
    k = int(np.argmax(np.abs(x)))
    return -x if x[k] < 0 else x


def _fmt(v: float) -> float:
    # 17 significant digits survive a JSON round trip exactly
    return float(f"{v:.17g}")


@dataclass(frozen=True)
class SpectralCert:
    q_min: float
    eigvec: np.ndarray = field(repr=False)
    residual: float
    tol: float
    spectrum: np.ndarray = field(repr=False)

    @property
    def gap(self) -> float:
        """Distance from q_min to the next eigenvalue (inf for order 1)."""
        return float(self.spectrum[1] - self.spectrum[0]) if self.spectrum.size > 1 else math.inf

    @property
    def simple(self) -> bool:
        return self.gap > CLUSTER_FACTOR * self.tol

    def to_json(self) -> dict:
        return {
            "q_min": _fmt(self.q_min),
            "eigvec": [_fmt(v) for v in self.eigvec],
            "residual": _fmt(self.residual),
            "tol": self.tol,
            "spectrum": [_fmt(v) for v in self.spectrum],
        }


def q_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> SpectralCert:
    """All Q-eigenvalues plus a residual-certified unit eigenvector for q_min."""
    if not (1e-14 <= tol <= 1e-6):
        raise InvalidSpec(f"tol must lie in [1e-14, 1e-6], got {tol}")
    q = q_matrix(g)
    n = g.n
    spectrum = symmetric_eigenvalues(q)
    if n == 1:
        return SpectralCert(0.0, np.ones(1), 0.0, tol, spectrum)
    lam = float(spectrum[0])
    scale = max(1.0, float(np.max(np.abs(spectrum))))
    shift = lam - 1e-9 * scale
    shifted = q - shift * np.eye(n)
    rng = np.random.default_rng(20240611)
    x = rng.standard_normal(n)
    x /= np.linalg.norm(x)
    residual = math.inf
    for _ in range(100 * n):
        try:
            y = np.linalg.solve(shifted, x)
        except np.linalg.LinAlgError:
            shifted = q - (shift - 1e-9 * scale) * np.eye(n)
            continue
        x = y / np.linalg.norm(y)
        lam = rayleigh(g, x)
        residual = float(np.linalg.norm(q @ x - lam * x))
        if residual <= tol:
            break
    else:
        raise NoConvergence(f"inverse iteration residual {residual:.3e} > tol {tol:.1e}")
    spectrum = spectrum.copy()
    if abs(lam - spectrum[0]) > 1e3 * tol * scale:
        raise NoConvergence("inverse iteration converged away from the least eigenvalue")
    spectrum[0] = min(lam, spectrum[1]) if n > 1 else lam
    return SpectralCert(lam, _normalize_sign(x), residual, tol, spectrum)


def q_min(g: Graph, tol: float = DEFAULT_TOL) -> float:
    return q_spectrum(g, tol).q_min


def interlacing_check(g: Graph, e: tuple[int, int], tol: float = 1e-8) -> bool:
    """Do the Q-spectra of G and G - e interlace (within ``tol``)?"""
    if not g.has_edge(*e):
        raise EdgeAbsent(f"edge {e} not in graph")
    q = symmetric_eigenvalues(q_matrix(g))[::-1]  # descending
    s = symmetric_eigenvalues(q_matrix(delete_edge(g, e)))[::-1]
    n = g.n
    if s[-1] < -tol:
        return False
    for i in range(n):
        if s[i] > q[i] + tol:
            return False
        if i + 1 < n and q[i + 1] > s[i] + tol:
            return False
    return True


# ---------------------------------------------------------------------------
# eigenvector structure on nonbipartite unicyclic graphs


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INCONCLUSIVE = "INCONCLUSIVE"


def combine(statuses) -> Status:
    statuses = list(statuses)
    if any(s is Status.FAIL for s in statuses):
        return Status.FAIL
    if any(s is Status.INCONCLUSIVE for s in statuses):
        return Status.INCONCLUSIVE
    return Status.PASS


def strictly_less(a: float, b: float, theta: float = ZERO_THRESHOLD) -> Status:
    """a < b with resolution theta."""
    if b - a > theta:
        return Status.PASS
    if a - b > theta:
        return Status.FAIL
    return Status.INCONCLUSIVE


def at_most(a: float, b: float, theta: float = ZERO_THRESHOLD) -> Status:
    return Status.PASS if a - b <= theta else Status.FAIL


@dataclass
class StructureReport:
    status: Status
    checks: dict[str, Status]
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "checks": {k: v.value for k, v in self.checks.items()},
            "notes": list(self.notes),
        }


def _sgn(v: float, theta: float) -> int:
    if abs(v) < theta:
        return 0
    return 1 if v > 0 else -1


def _negative_product(a: float, b: float, theta: float) -> Status:
    sa, sb = _sgn(a, theta), _sgn(b, theta)
    if sa == 0 or sb == 0:
        return Status.INCONCLUSIVE
    return Status.PASS if sa != sb else Status.FAIL


def _positive_product(a: float, b: float, theta: float) -> Status:
    sa, sb = _sgn(a, theta), _sgn(b, theta)
    if sa == 0 or sb == 0:
        return Status.INCONCLUSIVE
    return Status.PASS if sa == sb else Status.FAIL


def _cycle_lemma_one_labeling(g: Graph, lab: list[int], x: np.ndarray, s_pos: int, theta: float) -> Status:
    """Cycle claims for a labeling v_1..v_g (lab[0] = argmin) and argmax position s_pos (0-based)."""
    gl = len(lab)
    a = [abs(x[v]) for v in lab]
    xs = [x[v] for v in lab]
    out: list[Status] = [strictly_less(a[0], a[s_pos], theta)]
    if a[0] < theta:
        # x_1 = 0  =>  x_g = -x_2 != 0, alternation on the path v_1..v_g, parity signs
        out.append(Status.PASS if abs(xs[-1] + xs[1]) <= theta and a[1] >= theta else Status.FAIL)
        for i in range(gl - 1):
            if a[i] >= theta and a[i + 1] >= theta:
                out.append(_negative_product(xs[i], xs[i + 1], theta))
        dist = bfs_distances(g, lab[0], skip_edge=(lab[0], lab[-1]))
        signs = {(_sgn(x[v], theta) * (-1) ** int(dist[v])) for v in range(g.n) if abs(x[v]) >= theta}
        out.append(Status.PASS if len(signs) <= 1 else Status.FAIL)
        return combine(out)
    s1 = s_pos + 1  # 1-based position of the maximum
    if 3 <= s1 <= gl - 1:
        for i in range(1, s_pos - 1):  # |x_2| < ... < |x_{s-1}|
            out.append(strictly_less(a[i], a[i + 1], theta))
        out.append(at_most(a[s_pos - 1], a[s_pos], theta))
        for i in range(gl - 1, s_pos + 1, -1):  # |x_g| < |x_{g-1}| < ... < |x_{s+1}|
            out.append(strictly_less(a[i], a[i - 1], theta))
        out.append(at_most(a[s_pos + 1], a[s_pos], theta))
    d2g = a[1] - a[-1]
    if d2g > theta:
        out.append(_positive_product(xs[0], xs[-1], theta))
        out.extend(_negative_product(xs[i], xs[i + 1], theta) for i in range(gl - 1))
        out.append(at_most(a[0], a[-1], theta))
    elif d2g < -theta:
        out.append(_positive_product(xs[0], xs[1], theta))
        out.extend(_negative_product(xs[i], xs[i + 1], theta) for i in range(1, gl - 1))
        out.append(_negative_product(xs[-1], xs[0], theta))
        out.append(at_most(a[0], a[1], theta))
    else:
        out.append(at_most(a[0], a[1], theta))
        pg = _sgn(xs[0], theta) * _sgn(xs[-1], theta)
        p2 = _sgn(xs[0], theta) * _sgn(xs[1], theta)
        if pg == 0 or p2 == 0:
            out.append(Status.INCONCLUSIVE)
        elif (pg > 0) == (p2 > 0):
            out.append(Status.FAIL)
        elif pg > 0:
            out.extend(_negative_product(xs[i], xs[i + 1], theta) for i in range(gl - 1))
        else:
            out.extend(_negative_product(xs[i], xs[i + 1], theta) for i in range(1, gl - 1))
            out.append(_negative_product(xs[-1], xs[0], theta))
    # not both cycle neighbours of the maximum attain it
    left, right = a[(s_pos - 1) % gl], a[(s_pos + 1) % gl]
    both = a[s_pos] - left <= theta and a[s_pos] - right <= theta
    out.append(Status.FAIL if both else Status.PASS)
    return combine(out)


def _cycle_lemma(g: Graph, cyc: list[int], x: np.ndarray, theta: float) -> tuple[Status, list[str]]:
    a = [abs(x[v]) for v in cyc]
    lo, hi = min(a), max(a)
    gl = len(cyc)
    argmins = [i for i in range(gl) if a[i] - lo <= theta]
    argmaxs = [i for i in range(gl) if hi - a[i] <= theta]
    notes = []
    results = []
    for m in argmins:
        for direction in (1, -1):
            lab = [cyc[(m + direction * j) % gl] for j in range(gl)]
            pos = {v: j for j, v in enumerate(lab)}
            for s in argmaxs:
                s_pos = pos[cyc[s]]
                if s_pos == 0:
                    continue
                results.append(_cycle_lemma_one_labeling(g, lab, x, s_pos, theta))
    if not results:
        return Status.FAIL, ["cycle entries have no strict maximum"]
    if len(argmins) == 1 and len(argmaxs) == 1:
        # both orientations are admissible labelings; each must satisfy the claims
        return combine(results), notes
    if any(r is Status.PASS for r in results):
        notes.append("ties among extreme cycle entries: accepted by one admissible labeling")
        return Status.PASS, notes
    notes.append("ties among extreme cycle entries: no labeling resolved")
    return Status.INCONCLUSIVE, notes


def _tree_checks(g: Graph, cyc: list[int], x: np.ndarray, theta: float) -> tuple[Status, Status, Status]:
    """(zero branches, growth along nonzero branches, some root of a nontrivial tree nonzero)."""
    trees = hanging_trees(g, cyc)
    zero_status: list[Status] = []
    grow_status: list[Status] = []
    roots_with_tree = [r for r in cyc if trees[r]]
    for r, edges in trees.items():
        if not edges:
            continue
        if abs(x[r]) < theta:
            zero_status.append(
                Status.PASS if all(abs(x[c]) < theta for _, c in edges) else Status.FAIL
            )
            continue
        for p, c in edges:
            # nonzero bipartite branch: entries nonzero, alternating along edges, growing outward
            zero_status.append(_negative_product(x[p], x[c], theta))
            grow_status.append(strictly_less(abs(x[p]), abs(x[c]), theta))
    if roots_with_tree:
        root_max = max(abs(x[r]) for r in roots_with_tree)
        roots = Status.PASS if root_max >= theta else Status.FAIL
    else:
        roots = Status.PASS
    return combine(zero_status), combine(grow_status), roots


def triangle_attachment_check(g: Graph, x: np.ndarray, theta: float = ZERO_THRESHOLD) -> Status:
    """On a girth-3 𝓕-graph, the triangle vertex carrying the path attains the largest |entry|."""
    from .families import f_decompositions

    decomps = [d for d in f_decompositions(g) if d.g == 3]
    if not decomps:
        return Status.PASS
    out = []
    for d in decomps:
        v1, v2, v3 = d.cycle
        out.append(at_most(max(abs(x[v1]), abs(x[v2])), abs(x[v3]), theta))
    return combine(out)


def eigvec_structure_check(
    g: Graph, cert: SpectralCert | None = None, theta: float = ZERO_THRESHOLD
) -> StructureReport:
    """Evaluate the sign/magnitude structure of the q_min eigenvector of a nonbipartite unicyclic graph."""
    if cert is None:
        cert = q_spectrum(g)
    if g.m != g.n:
        raise InvalidSpec("structure checks need a unicyclic graph")
    cyc = cycle_order(g)
    if len(cyc) % 2 == 0:
        raise InvalidSpec("structure checks need an odd cycle")
    if cert.residual > cert.tol:
        return StructureReport(Status.INCONCLUSIVE, {}, ["residual above tolerance"])
    if not cert.simple:
        return StructureReport(Status.INCONCLUSIVE, {}, ["least eigenvalue is not simple"])
    x = cert.eigvec
    checks: dict[str, Status] = {}
    cyc_status, notes = _cycle_lemma(g, cyc, x, theta)
    checks["cycle_structure"] = cyc_status
    zero, grow, roots = _tree_checks(g, cyc, x, theta)
    checks["bipartite_branches"] = zero
    checks["tree_growth"] = grow
    checks["tree_root_nonzero"] = roots
    checks["triangle_attachment_max"] = triangle_attachment_check(g, x, theta)
    return StructureReport(combine(checks.values()), checks, notes)


__all__ = [
    "DEFAULT_TOL",
    "SpectralCert",
    "Status",
    "StructureReport",
    "ZERO_THRESHOLD",
    "at_most",
    "combine",
    "cycle_order",
    "eigvec_structure_check",
    "hanging_trees",
    "interlacing_check",
    "q_matrix",
    "q_min",
    "q_spectrum",
    "rayleigh",
    "strictly_less",
    "symmetric_eigenvalues",
    "tridiagonalize",
]
