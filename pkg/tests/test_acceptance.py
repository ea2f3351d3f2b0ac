"""Acceptance gate: every criterion at its stated tolerance, one line each.

Suites share the process-wide moment cache, so this module runs the whole
verification program once; expect several minutes at the default 384-bit
precision.
"""

import time
from fractions import Fraction

import mpmath as mp
import pytest

from besselmoments.config import SuiteConfig
from besselmoments.suites import run_suite

CFG = SuiteConfig()
_RESULTS = {}


def suite(name):
    if name not in _RESULTS:
        t0 = time.time()
        certs = run_suite(name, CFG)
        _RESULTS[name] = ({c.identity_id: c for c in certs}, time.time() - t0)
    return _RESULTS[name][0]


def suite_seconds(name):
    suite(name)
    return _RESULTS[name][1]


def report(num, desc, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {desc}")
    assert ok, f"criterion {num} failed: {desc}"


def certs_pass(d, prefix, expect_tol=None):
    hits = [c for i, c in d.items() if i.startswith(prefix)]
    assert hits, f"no certificates matching {prefix!r}"
    if expect_tol is not None:
        assert all(
            float(c.tolerance) <= float(expect_tol) for c in hits
        ), f"{prefix}: tolerance looser than required"
    return all(c.passed for c in hits)


def test_criterion_01_table_reproduction():
    ok = certs_pass(suite("table1"), "table1-f", "0") if True else False
    within_time = suite_seconds("table1") < 30
    report(1, "ten weight polynomials reproduced exactly, under 30 s",
           ok and within_time)


def test_criterion_02_annihilation():
    ok = certs_pass(suite("bmw-annihilation"), "bmw-annihilation-m", "0")
    within_time = suite_seconds("bmw-annihilation") < 60
    report(2, "order m+1 operators annihilate all solution monomials (m <= 7), under 60 s",
           ok and within_time)


def test_criterion_03_recurrences():
    d = suite("recurrences")
    ok = certs_pass(d, "recurrence-match-m", "0")
    ok = ok and certs_pass(d, "recurrence-residual-", "1e-30")
    report(3, "recurrences match the reference family; numeric residuals < 1e-30", ok)


def test_criterion_04_quartic_weight_identities():
    d = suite("conjecture-bbbg")
    ok = certs_pass(d, "bbbg-", "1e-25")
    report(4, "quartic-weight identities: vanishing cases and values 24, 15/2 (1e-25)", ok)


def test_criterion_05_generalized_sum_rules():
    d = suite("conjecture-bbbg")
    ok = certs_pass(d, "sum-rule-n", "1e-20")
    count = sum(1 for i in d if i.startswith("sum-rule-n"))
    report(5, f"generalized sum rules, n <= 6, all valid powers ({count} cases, 1e-20)",
           ok and count == 18)


def test_criterion_06_ode_constants():
    d = suite("vanhove-ode")
    ok = certs_pass(d, "vanhove-ode-n3", "1e-20") and certs_pass(d, "vanhove-ode-n4", "1e-20")
    count = sum(1 for i in d if i.startswith("vanhove-ode-n"))
    report(6, f"constant right-hand sides at three off-shell points ({count} cases, 1e-20)",
           ok and count == 24)


def test_criterion_07_structural_exactness():
    d = suite("vanhove-ode")
    ok = certs_pass(d, "vanhove-parity-n", "0")
    ok = ok and certs_pass(d, "vanhove-expansion-n", "0")
    ok = ok and certs_pass(d, "vanhove-intertwine-n", "0")
    ok = ok and certs_pass(suite("reflection"), "reflection-", "0")
    report(7, "parity, factored-vs-expanded, commutator, intertwining: exact", ok)


def test_criterion_08_exceptional_rules():
    d = suite("exceptional-8bessel")
    ok = certs_pass(d, "exceptional-i", "1e-25")
    ok = ok and d["exceptional-nonlinear"].passed
    ok = ok and float(d["exceptional-nonlinear"].tolerance) <= 1e-20
    report(8, "exceptional 8-factor differences (1e-25) and quadratic rule (1e-20)", ok)


def test_criterion_09_lvalues():
    d = suite("lvalues")
    ok = certs_pass(d, "lvalue-i", "1e-25")
    ok = ok and certs_pass(d, "lvalue-ratio", "1e-25")
    ok = ok and certs_pass(d, "lvalue-moment-ratio", "1e-25")
    ok = ok and certs_pass(d, "lvalue-crandall-tie", "1e-25")
    ok = ok and float(d["lvalue-period-vanishing"].tolerance) <= 1e-20
    ok = ok and d["lvalue-period-vanishing"].passed
    report(9, "L-value identities (1e-25) and period vanishing (1e-20)", ok)


def test_criterion_10_weight_integrals():
    d = suite("exceptional-8bessel")
    ok = certs_pass(d, "weight-integral-k", "1e-18")
    count = sum(1 for i in d if i.startswith("weight-integral-k"))
    report(10, "both equalities of each weight integral, k = 0,1,2 (1e-18)",
           ok and count == 6)


def test_criterion_11_determinants_and_crandall():
    ok = certs_pass(suite("determinants"), "determinant-", "1e-25")
    ok = ok and certs_pass(suite("crandall"), "crandall-shift", "1e-25")
    report(11, "moment determinants and Crandall differences (1e-25)", ok)


def test_criterion_12_modular_parametrization():
    d = suite("modular-param")
    ok = certs_pass(d, "modular-param-ray-", "1e-20")
    ok = ok and certs_pass(d, "modular-param-arc", "1e-15")
    ok = ok and certs_pass(d, "modular-param-osc-", "1e-10")
    report(12, "parametrization on the ray (1e-20), arcs (1e-15), oscillatory (1e-10)", ok)


def test_criterion_13_base_change():
    d = suite("basechange")
    ok = certs_pass(d, "basechange-z-alpha3", "1e-20")
    ok = ok and certs_pass(d, "basechange-phi", "1e-20")
    ok = ok and certs_pass(d, "basechange-chi", "1e-20")
    ok = ok and d["basechange-legendre-cubic-moment"].passed
    report(13, "cubic base change at two points and the Legendre moment (1e-20)", ok)


def test_criterion_14_random_walk_density():
    d = suite("kluyver")
    ok = (
        d["kluyver-p7-lvalue"].passed
        and float(d["kluyver-p7-lvalue"].tolerance) <= 1e-15
        and d["kluyver-p7-direct"].passed
        and float(d["kluyver-p7-direct"].tolerance) <= 1e-8
        and d["kluyver-p7-slope"].passed
        and float(d["kluyver-p7-slope"].tolerance) <= 1e-10
        and d["kluyver-p7-limit"].passed
        and float(d["kluyver-p7-limit"].tolerance) <= 1e-4
    )
    report(14, "7-step density: L-value tie (1e-15), direct (1e-8), slope (1e-10), limit (1e-4)", ok)


def test_criterion_15_asymptotics():
    d = suite("asymptotics")
    large = [c for i, c in d.items() if "large" in i]
    small = [c for i, c in d.items() if "small" in i]
    ok = all(c.passed for c in large) and all(float(c.tolerance) <= 0.1 for c in large)
    ok = ok and all(c.passed for c in small)
    report(15, "leading-order ratios at |u| = 1e6 (10%) and next-order at |u| = 1e-6", ok)


def test_criterion_16_relation_discovery():
    d = suite("pslq-discovery")
    ok = (
        d["pslq-quartic-weight"].passed
        and d["pslq-exceptional-pair"].passed
        and d["pslq-negative-control"].passed
    )
    report(16, "integer relations re-discovered at 100 digits, re-verified at 200", ok)
