"""Acceptance criteria, one test and one printed PASS/FAIL line each.

Every comparison is between exact integers: identities compare coefficients
exactly, congruences compare residues, spot values compare integers.
"""

import subprocess
import sys
import time
from pathlib import Path

import pytest

from qcong.dsl import check, evaluate, parse, parse_expr
from qcong.harness import crosscheck, load_catalog, scan_congruences
from qcong.oracle import count_spt_omega, count_sptbar_omega, oracle_value
from qcong.special import (
    f_value,
    p_nu_series,
    p_omega_series,
    sptbarw_odd_series,
    sptw_odd_series,
)


@pytest.fixture(scope="module")
def catalog():
    return load_catalog()


def _run(catalog, plan):
    """Check ``[(name, N)]``; return (failure descriptions, seconds)."""
    t0 = time.perf_counter()
    failures = []
    for name, N in plan:
        stmt = catalog.get(name)
        res = check(stmt, N, catalog.bindings)
        if not res.passed:
            failures.append(f"{name} at n={res.first_fail_index}: "
                            f"{res.lhs_coeff} != {res.rhs_coeff}")
    return failures, time.perf_counter() - t0


def _verdict(report_line, k, what, failures, seconds):
    status = "PASS" if not failures else "FAIL"
    tail = "" if not failures else "  [" + "; ".join(failures) + "]"
    report_line(f"{status} criterion {k}: {what} ({seconds:.1f} s){tail}")
    assert not failures


def test_criterion_1_foundations(catalog, report_line):
    names = ["euler-pentagonal", "jacobi", "binomial", "phi-product", "psi-product"]
    failures, secs = _run(catalog, [(n, 500) for n in names])
    _verdict(report_line, 1, "pentagonal, Jacobi, E1^5 = E5 mod 5, phi and psi to 500 terms",
             failures, secs)


def test_criterion_2_lemmas(catalog, report_line):
    names = ["E1", "1byE1", "phi-5dissect", "E1-6", "xy2", "x2-by-y", "y3-by-x", "x3y",
             "A-4qB", "A-qB", "A-5qB", "k2"]
    failures, secs = _run(catalog, [(n, 300) for n in names])
    _verdict(report_line, 2, f"{len(names)} lemma identities exact to 300 terms", failures, secs)


def test_criterion_3_base_generating_functions(catalog, report_line):
    names = ["gen-nu-2n", "gen-om-8n4", "gen-nu-10n8", "gen-spt-om-2n1", "gen-overspt-om-2n1"]
    failures, secs = _run(catalog, [(n, 300) for n in names])
    t0 = time.perf_counter()
    checked = 0
    for family, max_n in (("pomega", 40), ("pnu", 40), ("sptomega", 35), ("sptbaromega", 31)):
        rep = crosscheck(family, max_n)
        checked += len(rep.rows)
        failures += [f"{family}({r.n}): oracle {r.oracle} != series {r.series}"
                     for r in rep.mismatches]
    secs += time.perf_counter() - t0
    _verdict(report_line, 3, f"5 base identities to 300 terms, {checked} oracle values match",
             failures, secs)


def test_criterion_4_main_theorems(catalog, report_line):
    plan = [("gen-nu-50n8-main", 200), ("gen-om-40n12-main", 200),
            ("gen-spt-10n3-main", 300), ("gen-spt-50n23-main", 150),
            ("gen-over-spt-10n5-main", 300), ("gen-over-spt-50n25-main", 150)]
    for name, _ in plan:
        assert catalog.get(name).kind == "identity"
    failures, secs = _run(catalog, plan)
    _verdict(report_line, 4, "six main generating functions exact at 200/200/300/150/300/150",
             failures, secs)


# (name, n_max, modulus): every n in 0..n_max is checked.
CONGRUENCES = [
    ("cong-om-40n28", 500, 5), ("cong-om-40n36", 500, 5),
    ("spt-om-5n3", 500, 5), ("spt-om-10n7", 500, 5), ("spt-om-10n9", 500, 5),
    ("cong10n3", 500, 5), ("spt-nu-10n8", 500, 5),
    ("cong50n23", 200, 25), ("cong250n73", 100, 125), ("cong1250n573", 50, 625),
    ("p-nu-250n208", 100, 25), ("p-nu-6250n5208", 20, 125),
    ("p-omega-inf-k0", 50, 5), ("p-omega-inf-k1", 50, 5), ("p-omega-inf-k2", 50, 5),
    ("spt-gencong-l1-k1", 20, 5), ("spt-gencong-l2-k1", 20, 25),
    ("spt-gencong-l3-k1", 20, 125),
    ("spt-cor2-mod5-3", 50, 25), ("spt-cor2-mod5-7", 50, 25),
    ("spt-cor2-mod125-3", 10, 625), ("spt-cor2-mod125-7", 10, 625),
]


def _gencong_k0(ell):
    # Both sides are sbar(5^(ell-1) (10n+5)), read off the odd dissection.
    a = 5 ** ell
    side = f"AP({a},{(a - 1) // 2}; SPTBARW_ODD)"
    return parse(f"cong spt-gencong-l{ell}-k0: {side} == {side} (mod {5 ** ell})")


def test_criterion_5_congruence_families(catalog, report_line):
    failures = []
    for name, n_max, M in CONGRUENCES:
        stmt = catalog.get(name)
        assert (stmt.kind, stmt.modulus) == ("congruence", M), name
    found, secs = _run(catalog, [(name, n_max + 1) for name, n_max, _ in CONGRUENCES])
    failures += found
    for ell in (1, 2, 3):
        stmt = _gencong_k0(ell)
        if stmt.lhs != stmt.rhs or not check(stmt, 21).passed:
            failures.append(f"spt-gencong k=0, l={ell}")
    _verdict(report_line, 5, f"{len(CONGRUENCES) + 3} congruence instances, "
             "no violating coefficient", failures, secs)


def test_criterion_6_spot_values(catalog, report_line):
    t0 = time.perf_counter()

    def rhs_constant(name):
        stmt = catalog.get(name)
        return evaluate(stmt.rhs, 1, catalog.bindings).coeff(0)

    spt = sptw_odd_series(12)
    sptb = sptbarw_odd_series(13)
    observed = {
        "p_nu(8)": [p_nu_series(9).coeff(8), oracle_value("pnu", 8), rhs_constant("gen-nu-10n8")],
        "p_omega(12)": [p_omega_series(13).coeff(12), oracle_value("pomega", 12),
                        rhs_constant("gen-om-40n12-main")],
        "spt_omega(3)": [spt.coeff(1), count_spt_omega(3)],
        "spt_omega(23)": [spt.coeff(11), count_spt_omega(23), rhs_constant("gen-spt-50n23-main")],
        "sptbar_omega(5)": [sptb.coeff(2), count_sptbar_omega(5),
                            rhs_constant("gen-over-spt-10n5-main")],
        "sptbar_omega(25)": [sptb.coeff(12), count_sptbar_omega(25),
                             rhs_constant("gen-over-spt-50n25-main")],
        "f(25)": [f_value(25), evaluate(parse_expr("AP(25,4; AP(2,0; PNU))"), 1).coeff(0)],
    }
    expected = {"p_nu(8)": 5, "p_omega(12)": 36, "spt_omega(3)": 5, "spt_omega(23)": 1275,
                "sptbar_omega(5)": 18, "sptbar_omega(25)": 8327, "f(25)": 5}
    failures = [f"{k}: got {observed[k]}, want {v}" for k, v in expected.items()
                if any(x != v for x in observed[k])]
    _verdict(report_line, 6, f"{len(expected)} spot values, each from 2 or 3 independent routes",
             failures, time.perf_counter() - t0)


def test_criterion_7_scanner(report_line):
    t0 = time.perf_counter()
    failures = []
    res = scan_congruences("1/E1", 5, 6, 500)
    refining = [(A, B) for A in range(1, 7) for B in range(A) if A % 5 == 0 and B % 5 == 4]
    if res.pairs() != refining:
        failures.append(f"1/E1 mod 5 reported {res.pairs()}, want {refining}")
    if [h.witnesses for h in res.hits] != [100]:
        failures.append(f"witnesses {[h.witnesses for h in res.hits]}, want [100]")
    res = scan_congruences("POMEGA", 5, 40, 2000)
    for pair in ((40, 28), (40, 36)):
        if pair not in res.pairs():
            failures.append(f"POMEGA mod 5 missing {pair}")
    _verdict(report_line, 7, "scanner recovers 5n+4 for p(n) and 40n+28, 40n+36 for p_omega",
             failures, time.perf_counter() - t0)


PROPERTY_TESTS = [
    "test_series.py::test_add_and_mul_commute",
    "test_series.py::test_associativity",
    "test_series.py::test_distributivity",
    "test_series.py::test_dissection_completeness",
    "test_series.py::test_reduction_commutes_with_ring_ops",
    "test_series.py::test_reduction_commutes_with_reindexing",
    "test_dsl.py::test_unparse_round_trip",
    "test_dsl.py::test_statement_round_trip",
    "test_harness.py::test_parallel_runs_are_deterministic",
]


def test_criterion_8_property_suites(report_line):
    here = Path(__file__).parent
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
         *[str(here / t) for t in PROPERTY_TESTS]],
        capture_output=True, text=True, cwd=here.parent)
    failures = [] if proc.returncode == 0 else [proc.stdout.strip().splitlines()[-1]]
    _verdict(report_line, 8, f"{len(PROPERTY_TESTS)} property tests (ring laws, dissection, "
             "modular commutation, round-trip, parallel determinism)",
             failures, time.perf_counter() - t0)

