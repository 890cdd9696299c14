"""End-to-end acceptance criteria, each at its stated tolerance.

Every test prints one ``criterion N: PASS|FAIL`` line; the terminal summary
collects them.  Universe sweeps share one measurement cache and four workers.
"""

import pytest

from qdom.domination import closed_form_gamma, gamma
from qdom.enumeration import (
    explore_conjecture,
    verify_bipartite,
    verify_eigvec_structure,
    verify_lemma21,
    verify_lemma26,
    verify_lemma28,
    verify_lemma210,
    verify_theorem,
)
from qdom.families import FamilySpec, make, script_h3_valid
from qdom.perturbations import verify_transform_lemma
from qdom.spectra import Status

pytestmark = [pytest.mark.acceptance, pytest.mark.slow]

WORKERS = 4
MARGIN = 1e-8


def report_line(number: int, ok: bool, detail: str) -> None:
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} — {detail}")


def failures(report):
    return [r.to_json() for r in report.counterexamples]


def test_criterion_01_bipartite_iff_zero_qmin(cache):
    report = verify_bipartite(range(2, 9), cache=cache, workers=WORKERS)
    counts = report.counts()
    report_line(1, report.status is Status.PASS, f"{counts} over connected n<=8")
    assert counts["PASS"] == 12112
    assert report.status is Status.PASS, failures(report)[:5]


def test_criterion_02_qmin_below_min_degree(cache):
    report = verify_lemma26(range(2, 9), cache=cache, workers=WORKERS, margin=1e-9)
    report_line(2, report.status is Status.PASS, str(report.counts()))
    assert report.counts()["PASS"] == 12112
    assert report.status is Status.PASS, failures(report)[:5]


def test_criterion_03_edge_interlacing():
    report = verify_lemma21(samples=500, n_max=10, tol=1e-8)
    report_line(3, report.status is Status.PASS, str(report.counts()))
    assert report.counts()["PASS"] == 500
    assert report.status is Status.PASS, failures(report)[:5]


def _closed_form_grid():
    for n in range(1, 31):
        yield FamilySpec("Path", {"n": n})
    for n in range(3, 31):
        yield FamilySpec("Cycle", {"n": n})
    for k in range(0, 13):
        for n in range(k + 4, 21):
            yield FamilySpec("C3Star", {"k": k, "n": n})
    for n in range(3, 21):
        for alpha in range(0, 10):
            if script_h3_valid(n, alpha):
                yield FamilySpec("ScriptH3", {"n": n, "alpha": alpha})
    for g in range(3, 14):
        for k in range(1, g + 1):
            for n in range(g + k, g + k + 3):
                yield FamilySpec("FGraph", {"g": g, "k": k, "n": n})
    for eps in range(4, 16):
        for k in range(0, min(6, eps - 2) + 1):
            yield FamilySpec("H2", {"eps": eps, "k": k})


def test_criterion_04_closed_form_domination_numbers():
    bad = []
    points = 0
    for spec in _closed_form_grid():
        points += 1
        if closed_form_gamma(spec) != gamma(make(spec)[0]):
            bad.append(spec.to_json())
    relocations = verify_transform_lemma("Thm3.5", eps_max=15, k_max=6)
    sunlike = verify_transform_lemma("Lemma3.7", g_max=13)
    ok = not bad and relocations.status is Status.PASS and sunlike.status is Status.PASS
    report_line(4, ok, f"{points} formula points, relocations {relocations.counts()}, sunlike {sunlike.counts()}")
    assert not bad, bad[:5]
    assert relocations.status is Status.PASS, failures(relocations)[:5]
    assert sunlike.status is Status.PASS, failures(sunlike)[:5]


def test_criterion_05_structured_sets_and_half_order(cache):
    structured = verify_lemma28(range(3, 9), cache=cache, workers=WORKERS)
    half = verify_lemma210(range(2, 9), cache=cache, workers=WORKERS)
    ok = structured.status is Status.PASS and half.status is Status.PASS
    report_line(5, ok, f"structured {structured.counts()}, half-order {half.counts()}")
    assert structured.status is Status.PASS, failures(structured)[:5]
    assert half.status is Status.PASS, failures(half)[:5]


def test_criterion_06_transform_sweeps():
    reports = {
        "Thm3.4": verify_transform_lemma("Thm3.4"),
        "Lemma3.3": verify_transform_lemma("Lemma3.3", gs=(5, 7, 9), n_max=12),
        "Lemma3.8": verify_transform_lemma("Lemma3.8", gs=(5, 7, 9), n_max=13),
        "Thm3.9": verify_transform_lemma("Thm3.9", n_max=25),
    }
    bad = {name: failures(r) for name, r in reports.items() if r.status is not Status.PASS}
    detail = ", ".join(f"{name} {r.counts()}" for name, r in reports.items())
    report_line(6, not bad, detail)
    assert not bad, {name: (len(v), v[:2]) for name, v in bad.items()}


THEOREM_RANGES = [
    ("Thm4.4", range(5, 12)),
    ("Thm4.7", range(5, 12)),
    ("Thm4.8", range(4, 12)),
    ("Thm4.10", range(5, 12)),
    ("Thm5.1", range(4, 9)),
    ("Thm5.2", range(4, 9)),
    ("Thm5.3", range(4, 9)),
    ("Thm5.4", range(4, 9)),
]


def test_criterion_07_extremal_minimizers(cache):
    reports = {name: verify_theorem(name, list(ns), margin=MARGIN, cache=cache, workers=WORKERS) for name, ns in THEOREM_RANGES}
    bad = {}
    for name, r in reports.items():
        # the stated claim is what is accepted; alternative readings are reported alongside
        stated = [rec for rec in r.records if "alpha=" not in rec.lemma]
        broken = [rec.to_json() for rec in stated if rec.status is not Status.PASS]
        if broken:
            bad[name] = broken
    report_line(7, not bad, ", ".join(f"{name} {r.counts()}" for name, r in reports.items()))
    assert not bad, {name: (len(v), v[:3]) for name, v in bad.items()}


def test_criterion_08_cycle_rewiring_lowers_qmin():
    report = verify_transform_lemma("Lemma4.11", n_max=25, margin=MARGIN)
    report_line(8, report.status is Status.PASS, str(report.counts()))
    assert report.counts()["PASS"] == 11
    assert report.status is Status.PASS, failures(report)[:5]


def test_criterion_09_eigenvector_structure(cache):
    report = verify_eigvec_structure(range(3, 10), cache=cache, workers=WORKERS)
    counts = report.counts()
    report_line(9, counts["FAIL"] == 0, f"{counts} (INCONCLUSIVE = non-simple least eigenvalue)")
    assert counts["PASS"] > 0
    assert counts["FAIL"] == 0, failures(report)[:5]


def test_criterion_10_conjecture_explorer(cache):
    report = explore_conjecture(range(4, 9), False, MARGIN, cache, WORKERS)
    counts = report.counts()
    found = [r.graph6 for r in report.counterexamples]
    verdict = "no counterexample" if not found else f"counterexamples {found}"
    # either outcome is a successful run; the outcome itself is recorded
    report_line(10, True, f"completed, {counts}, {verdict}")
    assert report.records
