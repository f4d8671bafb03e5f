"""Cross-checking harness: closed forms vs. counting oracles vs. references.

:func:`run_verify` executes the full check matrix and returns a
:class:`VerifyReport`.  Overall success means every check passed and the
skew resolution is not NEITHER.  The skew resolution field answers, by
computation instead of assumption, which of the two skew automata the skew
closed forms count; the two variants provably differ from five steps on, so
exactly one is expected to match (the red-step-up variant, SOLVED).
"""

from dataclasses import dataclass
from typing import Optional

from . import kernel, reference
from .automata import (
    Layer,
    MODEL_LAYERS,
    ModelId,
    census_dfs,
    count_dfs,
    count_dp,
    enumerate_words,
    sample_many,
)
from .series import TruncatedSeries

RESIDUAL_ORDER = 50

# chi-square critical value for 7 degrees of freedom (support size 8 minus
# one) at the one-sided 5-sigma tail probability 2.8665e-7
CHI2_5SIGMA_DOF7 = 43.34073
SAMPLER_MODEL = ModelId.DAP_LR
SAMPLER_N = 6
SAMPLER_DRAWS = 10_000
SAMPLER_SEED = 1


@dataclass(frozen=True)
class Mismatch:
    """First failing cell of a check."""

    n: int
    k: Optional[int]
    expected: str
    got: str


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    parameters: dict
    status: str  # "pass" | "fail"
    detail: Optional[Mismatch] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...]
    skew_resolution: str  # FIG | SOLVED | BOTH | NEITHER
    overall: bool


def _ok(check_id: str, parameters: dict) -> CheckResult:
    return CheckResult(check_id, parameters, "pass")


def _fail(
    check_id: str, parameters: dict, n: int, k: Optional[int], expected, got
) -> CheckResult:
    return CheckResult(
        check_id, parameters, "fail", Mismatch(n, k, str(expected), str(got))
    )


def _compare_series(
    check_id: str,
    parameters: dict,
    got: TruncatedSeries,
    expected: TruncatedSeries,
    k: Optional[int] = None,
) -> Optional[CheckResult]:
    top = min(got.order, expected.order)
    for n in range(top + 1):
        if got.coeff(n) != expected.coeff(n):
            return _fail(check_id, parameters, n, k, expected.coeff(n), got.coeff(n))
    return None


def run_verify(
    order: int = 30,
    n_max: int = 12,
    corrupt_dap_s2: bool = False,
) -> VerifyReport:
    """Run every check at the given working order and oracle depth.

    ``corrupt_dap_s2`` is a negative-control hook: it perturbs the kernel
    root fed to the residual check by +z, which must make that check fail.
    """
    checks: list[CheckResult] = []
    dp = {m: count_dp(m, n_max) for m in ModelId}
    ref_top = min(n_max, reference.REFERENCE_MAX_INDEX)

    # --- closed forms vs embedded reference sequences -------------------
    checks.extend(_check_reference_series(order))
    checks.append(_check_reference_oracles(dp[ModelId.DAP_LR], ref_top))

    # --- series identities ----------------------------------------------
    checks.append(_check_f_plus_g(order))
    checks.append(_check_g_shift(order))
    checks.append(_check_total_shift(order))
    checks.append(_check_rl_complete(order))
    checks.append(_check_a1_c1(order))
    checks.append(_check_residual(kernel.KernelFamily.DAP, corrupt_dap_s2))
    checks.append(_check_residual(kernel.KernelFamily.SKEW, False))

    # --- oracle agreement, model by model --------------------------------
    # the right-to-left DFS cells are the expensive part; walk them once
    rl_cells = {
        (n, k, layer): count_dfs(ModelId.DAP_RL, n, k, layer)
        for n in range(n_max + 1)
        for k in range(n_max + 1)
        for layer in MODEL_LAYERS[ModelId.DAP_RL]
    }
    for model in ModelId:
        checks.append(_check_oracle_agreement(model, dp[model], n_max, rl_cells))

    # --- right-to-left closed forms vs both oracles -----------------------
    checks.append(_check_rl_vs_oracles(dp[ModelId.DAP_RL], n_max, rl_cells))

    # --- fixed hand counts and cross-model equality -----------------------
    checks.append(_check_skew_hand_counts())
    checks.append(_check_cross_model(n_max))

    # --- which skew automaton do the closed forms count? ------------------
    resolution, res_check = _resolve_skew(dp, n_max)
    checks.append(res_check)

    # --- sampler uniformity ------------------------------------------------
    checks.append(_check_sampler())

    overall = all(c.passed for c in checks) and resolution != "NEITHER"
    return VerifyReport(tuple(checks), resolution, overall)


def _check_reference_series(order: int) -> list[CheckResult]:
    # the embedded sequences stop at z^11 and are never extrapolated; any
    # deeper comparison in this report is against oracles and says so
    params = {"n": "0..11", "source": "embedded-reference"}
    out = []
    for name, series, ref in (
        ("dap", kernel.dap_level(0, max(order, 11)), reference.DAP_LEVEL0),
        ("skew", kernel.skew_level(0, max(order, 11)), reference.SKEW_LEVEL0),
    ):
        cid = f"{name}-level0-vs-reference"
        result = _ok(cid, params)
        for n, expected in enumerate(ref):
            if series.coeff(n) != expected:
                result = _fail(cid, params, n, 0, expected, series.coeff(n))
                break
        out.append(result)
    return out


def _check_reference_oracles(dp_table, ref_top: int) -> CheckResult:
    cid = "dap-level0-vs-oracles"
    params = {"n": f"0..{ref_top}", "source": "oracle-derived"}
    for n in range(ref_top + 1):
        expected = reference.DAP_LEVEL0[n]
        got_dfs = count_dfs(ModelId.DAP_LR, n, 0)
        if got_dfs != expected:
            return _fail(cid, params, n, 0, expected, got_dfs)
        got_dp = dp_table.count(n, 0)
        if got_dp != expected:
            return _fail(cid, params, n, 0, expected, got_dp)
    return _ok(cid, params)


def _check_f_plus_g(order: int) -> CheckResult:
    cid = "dap-level-splits-into-f-and-g"
    params = {"k": "0..10", "order": order}
    for k in range(11):
        got = kernel.dap_f(k, order) + kernel.dap_g(k, order)
        bad = _compare_series(cid, params, got, kernel.dap_level(k, order), k)
        if bad:
            return bad
    return _ok(cid, params)


def _check_g_shift(order: int) -> CheckResult:
    cid = "dap-g-from-shifted-f"
    params = {"k": "0..10", "order": order}
    for k in range(11):
        got = kernel.dap_f(k + 1, order + 1).div_z_pow(1) - kernel.dap_f(k, order)
        bad = _compare_series(cid, params, got, kernel.dap_g(k, order), k)
        if bad:
            return bad
    return _ok(cid, params)


def _check_total_shift(order: int) -> CheckResult:
    cid = "dap-total-is-shifted-g0"
    params = {"order": order}
    got = kernel.dap_total(order).mul_z_pow(2)
    return _compare_series(
        cid, params, got, kernel.dap_g(0, order + 2)
    ) or _ok(cid, params)


def _check_rl_complete(order: int) -> CheckResult:
    cid = "rl-complete-paths-match-lr"
    params = {"order": order}
    got = kernel.rl_b(0, order) + 1
    return _compare_series(cid, params, got, kernel.dap_s2(order)) or _ok(cid, params)


def _check_a1_c1(order: int) -> CheckResult:
    cid = "skew-up-minus-red-layers-geometric"
    params = {"order": order}
    got = kernel.skew_A1(order) - kernel.skew_C1(order)
    expected = TruncatedSeries.geometric(order)
    return _compare_series(cid, params, got, expected) or _ok(cid, params)


def _check_residual(family: kernel.KernelFamily, corrupt: bool) -> CheckResult:
    cid = f"kernel-residual-{family.value}"
    params = {"order": RESIDUAL_ORDER, "corrupted": corrupt}
    if corrupt:
        root = (
            kernel.dap_s2(RESIDUAL_ORDER)
            if family is kernel.KernelFamily.DAP
            else kernel.skew_s2(RESIDUAL_ORDER)
        ) + TruncatedSeries.z(RESIDUAL_ORDER)
        residual = kernel.kernel_polynomial_at(family, root, RESIDUAL_ORDER)
    else:
        residual = kernel.kernel_residual(family, RESIDUAL_ORDER)
    for n, c in enumerate(residual.coeffs):
        if c != 0:
            return _fail(cid, params, n, None, 0, c)
    return _ok(cid, params)


def _check_oracle_agreement(
    model: ModelId, dp_table, n_max: int, rl_cells: dict
) -> CheckResult:
    """count_dfs == count_dp cell for cell.

    Unit-rise models are censused in one walk per length; the right-to-left
    model needs per-cell walks because its useful level range depends on the
    target cell.
    """
    cid = f"oracle-agreement-{model.value}"
    params = {"n_max": n_max}
    if model is ModelId.DAP_RL:
        for (n, k, layer), got in rl_cells.items():
            expected = dp_table.count(n, k, layer)
            if got != expected:
                return _fail(cid, {**params, "layer": layer.value, "n": n},
                             n, k, expected, got)
        return _ok(cid, params)
    for n in range(n_max + 1):
        buckets = census_dfs(model, n, n)
        for k in range(n_max + 1):
            for layer in MODEL_LAYERS[model]:
                got = buckets.get((k, layer), 0)
                expected = dp_table.count(n, k, layer)
                if got != expected:
                    return _fail(cid, {**params, "layer": layer.value, "n": n},
                                 n, k, expected, got)
    return _ok(cid, params)


def _check_rl_vs_oracles(dp_table, n_max: int, rl_cells: dict) -> CheckResult:
    cid = "rl-closed-forms-vs-oracles"
    params = {"n": f"1..{n_max}", "k": f"0..{n_max}"}
    work = max(n_max, 1)  # the closed forms need at least one shift of headroom
    b = {k: kernel.rl_b(k, work) for k in range(n_max + 1)}
    a = {k: kernel.rl_a(k, work) for k in range(n_max + 1)}
    for k in range(n_max + 1):
        for n in range(n_max + 1):
            if n >= 1:
                expected = b[k].coeff(n)
                dfs_any = sum(
                    rl_cells[(n, k, layer)]
                    for layer in MODEL_LAYERS[ModelId.DAP_RL]
                )
                for got in (dfs_any, dp_table.count(n, k)):
                    if got != expected:
                        return _fail(cid, params, n, k, expected, got)
            # ends-with-down series: the empty word is its own n = 0 term
            expected = a[k].coeff(n)
            for got in (
                rl_cells[(n, k, Layer.AFTER_DOWN)],
                dp_table.count(n, k, Layer.AFTER_DOWN),
            ):
                if got != expected:
                    return _fail(cid, params, n, k, expected, got)
    return _ok(cid, params)


def _check_skew_hand_counts() -> CheckResult:
    cid = "skew-fixed-hand-counts"
    fixed = (
        (ModelId.SKEW_FIG, 4, 3),
        (ModelId.SKEW_SOLVED, 4, 3),
        (ModelId.SKEW_FIG, 5, 5),
        (ModelId.SKEW_SOLVED, 5, 7),
    )
    params = {"cells": "n=4,5 at level 0"}
    for model, n, expected in fixed:
        got = count_dfs(model, n, 0)
        if got != expected:
            return _fail(cid, {**params, "model": model.value}, n, 0, expected, got)
    return _ok(cid, params)


def _check_cross_model(n_max: int) -> CheckResult:
    cid = "complete-paths-equal-across-readings"
    params = {"n": f"1..{n_max}"}
    for n in range(1, n_max + 1):
        lr = count_dfs(ModelId.DAP_LR, n, 0)
        rl = count_dfs(ModelId.DAP_RL, n, 0)
        if lr != rl:
            return _fail(cid, params, n, 0, lr, rl)
    return _ok(cid, params)


def _resolve_skew(dp, n_max: int) -> tuple[str, CheckResult]:
    cid = "skew-closed-form-resolution"
    params = {"n_max": n_max}
    work = max(n_max, 1)
    level = {k: kernel.skew_level(k, work) for k in range(n_max + 1)}
    matches = {}
    first_bad = {}
    for model in (ModelId.SKEW_FIG, ModelId.SKEW_SOLVED):
        table = dp[model]
        good = True
        for n in range(n_max + 1):
            for k in range(n + 1):
                expected = level[k].coeff(n)
                got = table.count(n, k)
                if got != expected:
                    good = False
                    first_bad.setdefault(model, (n, k, expected, got))
                    break
            if not good:
                break
        matches[model] = good
    fig, solved = matches[ModelId.SKEW_FIG], matches[ModelId.SKEW_SOLVED]
    if fig and solved:
        resolution = "BOTH"
    elif fig:
        resolution = "FIG"
    elif solved:
        resolution = "SOLVED"
    else:
        resolution = "NEITHER"
    if resolution in ("FIG", "SOLVED"):
        return resolution, _ok(cid, {**params, "matched": resolution})
    n, k, expected, got = first_bad.get(
        ModelId.SKEW_SOLVED, first_bad.get(ModelId.SKEW_FIG, (0, 0, "", ""))
    )
    return resolution, _fail(
        cid, {**params, "matched": resolution}, n, k, expected, got
    )


def _check_sampler() -> CheckResult:
    cid = "sampler-uniformity"
    params = {
        "model": SAMPLER_MODEL.value,
        "n": SAMPLER_N,
        "draws": SAMPLER_DRAWS,
        "seed": SAMPLER_SEED,
    }
    support = [
        w.word()
        for w in enumerate_words(SAMPLER_MODEL, SAMPLER_N, SAMPLER_N)
        if w.end_level == 0
    ]
    draws = sample_many(SAMPLER_MODEL, SAMPLER_N, 0, SAMPLER_DRAWS, SAMPLER_SEED)
    freq = {w: 0 for w in support}
    for pw in draws:
        word = pw.word()
        if word not in freq:
            return _fail(cid, params, SAMPLER_N, 0, "word in DFS support", word)
        freq[word] += 1
    expected = SAMPLER_DRAWS / len(support)
    chi2 = sum((c - expected) ** 2 / expected for c in freq.values())
    if chi2 > CHI2_5SIGMA_DOF7:
        return _fail(
            cid, params, SAMPLER_N, 0, f"chi2 <= {CHI2_5SIGMA_DOF7}", f"{chi2:.4f}"
        )
    return _ok(cid, params)
