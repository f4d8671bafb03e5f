"""Acceptance suite: one test per criterion, printing one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the lines
even on success).  Every comparison is an exact integer or rational equality;
there are no tolerances anywhere, except the frozen 5-sigma chi-square bound
of the sampler criterion.
"""

import random
from fractions import Fraction

import pytest

from airpockets import kernel as K
from airpockets.automata import (
    Layer,
    MODEL_LAYERS,
    ModelId,
    census_dfs,
    count_dfs,
    count_dp,
    enumerate_words,
    sample_many,
)
from airpockets.reference import DAP_LEVEL0, SKEW_LEVEL0
from airpockets.series import TruncatedSeries, make_poly
from airpockets.service.handlers import handle_verify
from airpockets.service.models import VerifyRequest
from airpockets.verify import CHI2_5SIGMA_DOF7

N_MAX = 12
ORDER = 30


def _report(num: int, description: str, failures: list):
    status = "FAIL" if failures else "PASS"
    print(f"criterion-{num:02d} [{status}] {description}")


@pytest.fixture(scope="module")
def dp_tables():
    return {model: count_dp(model, N_MAX) for model in ModelId}


@pytest.fixture(scope="module")
def rl_dfs_cells():
    return {
        (n, k, layer): count_dfs(ModelId.DAP_RL, n, k, layer)
        for n in range(N_MAX + 1)
        for k in range(N_MAX + 1)
        for layer in MODEL_LAYERS[ModelId.DAP_RL]
    }


@pytest.fixture(scope="module")
def default_verify_response():
    return handle_verify(VerifyRequest())


def test_criterion_01_dap_level0_reproduction(dp_tables):
    failures = []
    level0 = K.dap_level(0, 11)
    for n, expected in enumerate(DAP_LEVEL0):
        if level0.coeff(n) != expected:
            failures.append(("closed-form", n, expected, int(level0.coeff(n))))
        got_dfs = count_dfs(ModelId.DAP_LR, n, 0)
        if got_dfs != expected:
            failures.append(("dfs", n, expected, got_dfs))
        got_dp = dp_tables[ModelId.DAP_LR].count(n, 0)
        if got_dp != expected:
            failures.append(("dp", n, expected, got_dp))
    _report(1, "DAP level-0 series matches print and both oracles", failures)
    assert not failures


def test_criterion_02_skew_level0_reproduction():
    failures = []
    level0 = K.skew_level(0, 11)
    for n, expected in enumerate(SKEW_LEVEL0):
        if level0.coeff(n) != expected:
            failures.append((n, expected, int(level0.coeff(n))))
    _report(2, "skew level-0 series matches print", failures)
    assert not failures


def test_criterion_03_level_split_identities():
    failures = []
    s2 = K.dap_s2(ORDER)
    for k in range(11):
        lhs = K.dap_f(k, ORDER) + K.dap_g(k, ORDER)
        rhs = (s2 ** (k + 1)).mul_z_pow(k).truncate(ORDER)
        if lhs != rhs:
            failures.append(("f+g", k))
        shifted = K.dap_f(k + 1, ORDER + 1).div_z_pow(1) - K.dap_f(k, ORDER)
        if shifted != K.dap_g(k, ORDER):
            failures.append(("g-shift", k))
    _report(3, "level split f+g and shifted-f identities, k<=10 at order 30", failures)
    assert not failures


def test_criterion_04_rl_identities(dp_tables, rl_dfs_cells):
    failures = []
    if K.rl_b(0, ORDER) + 1 != K.dap_s2(ORDER):
        failures.append(("complete-paths",))
    dp = dp_tables[ModelId.DAP_RL]
    for k in range(N_MAX + 1):
        b = K.rl_b(k, N_MAX)
        for n in range(1, N_MAX + 1):
            expected = b.coeff(n)
            got_dfs = sum(
                rl_dfs_cells[(n, k, layer)]
                for layer in MODEL_LAYERS[ModelId.DAP_RL]
            )
            got_dp = dp.count(n, k)
            if got_dfs != expected or got_dp != expected:
                failures.append((n, k, int(expected), got_dfs, got_dp))
    _report(4, "right-to-left closed forms match both oracles to n=12", failures)
    assert not failures


def test_criterion_05_total_shift_identity():
    failures = []
    if K.dap_total(ORDER).mul_z_pow(2) != K.dap_g(0, ORDER + 2):
        failures.append(("total-shift",))
    _report(5, "ends-anywhere series is the down-layer series shifted by two", failures)
    assert not failures


def test_criterion_06_kernel_residuals():
    failures = []
    for family in K.KernelFamily:
        residual = K.kernel_residual(family, 50)
        if not residual.is_zero():
            failures.append((family.value,))
    _report(6, "both kernel residuals vanish identically at order 50", failures)
    assert not failures


def test_criterion_07_skew_resolution(dp_tables, default_verify_response):
    failures = []
    # both oracles agree cell-for-cell on both skew variants
    for model in (ModelId.SKEW_FIG, ModelId.SKEW_SOLVED):
        dp = dp_tables[model]
        for n in range(N_MAX + 1):
            buckets = census_dfs(model, n, n)
            for k in range(N_MAX + 1):
                for layer in MODEL_LAYERS[model]:
                    if buckets.get((k, layer), 0) != dp.count(n, k, layer):
                        failures.append(("oracle", model.value, n, k, layer.value))
    # fixed hand counts
    for model, n, expected in (
        (ModelId.SKEW_FIG, 4, 3),
        (ModelId.SKEW_SOLVED, 4, 3),
        (ModelId.SKEW_FIG, 5, 5),
        (ModelId.SKEW_SOLVED, 5, 7),
    ):
        got = count_dfs(model, n, 0)
        if got != expected:
            failures.append(("hand-count", model.value, n, expected, got))
    # exactly one automaton matches the closed forms on every cell
    matches = {}
    for model in (ModelId.SKEW_FIG, ModelId.SKEW_SOLVED):
        dp = dp_tables[model]
        matches[model] = all(
            dp.count(n, k) == K.skew_level(k, N_MAX).coeff(n)
            for n in range(N_MAX + 1)
            for k in range(n + 1)
        )
    if sorted(matches.values()) != [False, True]:
        failures.append(("resolution-count", matches))
    # and the verify command reports that same resolution
    matched = ModelId.SKEW_SOLVED if matches[ModelId.SKEW_SOLVED] else ModelId.SKEW_FIG
    reported = default_verify_response.skew_resolution
    if (matched is ModelId.SKEW_SOLVED) != (reported == "SOLVED"):
        failures.append(("verify-report", reported))
    if not default_verify_response.overall:
        failures.append(("verify-overall", False))
    _report(7, f"skew oracles agree; closed forms match exactly one variant "
               f"(reported {reported})", failures)
    assert not failures


def test_criterion_08_cross_reading_equality(rl_dfs_cells):
    failures = []
    for n in range(1, N_MAX + 1):
        lr = count_dfs(ModelId.DAP_LR, n, 0)
        rl = sum(
            rl_dfs_cells[(n, 0, layer)] for layer in MODEL_LAYERS[ModelId.DAP_RL]
        )
        if lr != rl:
            failures.append((n, lr, rl))
    _report(8, "complete-path counts agree across the two readings, n<=12", failures)
    assert not failures


def test_criterion_09_layer_difference_geometric():
    failures = []
    if K.skew_A1(ORDER) - K.skew_C1(ORDER) != TruncatedSeries.geometric(ORDER):
        failures.append(("a1-c1",))
    _report(9, "up-layer minus red-layer series is 1/(1-z) at order 30", failures)
    assert not failures


def _random_series(rng: random.Random, order: int, unit: bool) -> TruncatedSeries:
    head = [1] if unit else [Fraction(rng.randint(-9, 9), rng.randint(1, 7))]
    tail = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(order)]
    return make_poly(head + tail, order)


def test_criterion_10_series_property_suite():
    failures = []
    rng = random.Random(20260810)
    for case in range(100):
        order = rng.randint(0, ORDER)
        a = _random_series(rng, order, unit=True)
        sq = a * a
        root = sq.sqrt_unit()
        if root * root != sq or root != a:
            failures.append(("sqrt", case))
    for case in range(100):
        order = rng.randint(0, ORDER)
        a = _random_series(rng, order, unit=False)
        b = _random_series(rng, order, unit=True)
        if (a / b) * b != a:
            failures.append(("div", case))
    for case in range(100):
        order = rng.randint(0, ORDER)
        a, b, c = (_random_series(rng, order, unit=False) for _ in range(3))
        if a * b != b * a or (a * b) * c != a * (b * c):
            failures.append(("mul-laws", case))
    _report(10, "sqrt/div round trips and multiplication laws, 100 cases each", failures)
    assert not failures


def test_criterion_11_sampler():
    failures = []
    first = sample_many(ModelId.DAP_LR, 6, 0, 50, 9)
    second = sample_many(ModelId.DAP_LR, 6, 0, 50, 9)
    if [w.word() for w in first] != [w.word() for w in second]:
        failures.append(("determinism",))
    support = sorted(
        w.word() for w in enumerate_words(ModelId.DAP_LR, 6, 6) if w.end_level == 0
    )
    draws = sample_many(ModelId.DAP_LR, 6, 0, 10_000, 1)
    freq = {w: 0 for w in support}
    for pw in draws:
        word = pw.word()
        if word not in freq:
            failures.append(("support", word))
            break
        freq[word] += 1
    expected = 10_000 / len(support)
    chi2 = sum((c - expected) ** 2 / expected for c in freq.values())
    if chi2 > CHI2_5SIGMA_DOF7:
        failures.append(("chi2", chi2))
    # per-cell bound as well: each frequency within 5 sigma of uniform
    p = 1 / len(support)
    cell_sigma = (10_000 * p * (1 - p)) ** 0.5
    for word, c in freq.items():
        if abs(c - expected) > 5 * cell_sigma:
            failures.append(("cell", word, c))
    _report(11, f"sampler deterministic and uniform (chi2={chi2:.2f}, "
                f"bound {CHI2_5SIGMA_DOF7})", failures)
    assert not failures
