"""Exact enumeration toolkit for Dyck paths with air pockets."""

from .automata import (
    CountTable,
    EmptySupportError,
    Layer,
    LayerError,
    ModelId,
    PathWord,
    Step,
    StepKind,
    census_dfs,
    count_dfs,
    count_dp,
    down,
    enumerate_words,
    iter_words,
    red,
    sample_many,
    sample_uniform,
    transitions,
    up,
)
from .kernel import (
    KernelFamily,
    NonIntegralError,
    dap_f,
    dap_g,
    dap_level,
    dap_radicand,
    dap_s2,
    dap_total,
    kernel_polynomial_at,
    kernel_residual,
    rl_a,
    rl_b,
    skew_A1,
    skew_C1,
    skew_level,
    skew_radicand,
    skew_s2,
)
from .series import (
    NonUnitError,
    NotDivisibleError,
    SeriesError,
    TruncatedSeries,
    make_poly,
)
from .verify import CheckResult, Mismatch, VerifyReport, run_verify

__version__ = "0.1.0"
