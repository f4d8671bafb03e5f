"""Command handlers shared by the HTTP endpoints and the CLI's local mode.

Each handler takes a request model and returns a response model; anything a
caller got wrong (unknown k, blown resource guard, empty sampling support)
raises :class:`UsageError`, which the HTTP layer maps to a 400 and the CLI
maps to exit code 2.
"""

from dataclasses import dataclass

from .. import kernel
from ..automata import (
    EmptySupportError,
    ModelId,
    enumerate_words,
    sample_many,
)
from ..series import SeriesError
from ..verify import run_verify
from .models import (
    CheckOut,
    EnumerateRequest,
    EnumerateResponse,
    MismatchOut,
    SampleRequest,
    SampleResponse,
    SeriesRequest,
    SeriesResponse,
    VerifyRequest,
    VerifyResponse,
    WordRecord,
)


@dataclass(frozen=True)
class ServiceLimits:
    """Resource guards: enumeration is exponential in n, series work is
    quadratic in order."""

    max_order: int = 500
    max_dfs_n: int = 16
    max_sample_n: int = 500


DEFAULT_LIMITS = ServiceLimits()


class UsageError(ValueError):
    """Caller error: bad parameter combination or a resource guard hit."""


# family name -> (function of (k, order) or (order,), takes k?)
_FAMILIES = {
    "dap-f": (kernel.dap_f, True),
    "dap-g": (kernel.dap_g, True),
    "dap-level": (kernel.dap_level, True),
    "dap-total": (kernel.dap_total, False),
    "dap-s2": (kernel.dap_s2, False),
    "rl-a": (kernel.rl_a, True),
    "rl-b": (kernel.rl_b, True),
    "skew-level": (kernel.skew_level, True),
    "skew-s2": (kernel.skew_s2, False),
}


def handle_series(
    req: SeriesRequest, limits: ServiceLimits = DEFAULT_LIMITS
) -> SeriesResponse:
    if req.order > limits.max_order:
        raise UsageError(
            f"order {req.order} exceeds the configured maximum {limits.max_order}"
        )
    fn, takes_k = _FAMILIES[req.family]
    if takes_k and req.k is None:
        raise UsageError(f"family {req.family} requires a level index k")
    if not takes_k and req.k is not None:
        raise UsageError(f"family {req.family} does not take a level index k")
    try:
        series = fn(req.k, req.order) if takes_k else fn(req.order)
    except SeriesError as exc:
        raise UsageError(str(exc)) from exc
    return SeriesResponse(
        family=req.family,
        k=req.k,
        order=req.order,
        coefficients=[str(c) for c in series.coeffs],
    )


def _default_level_cap(model: ModelId, n: int, end_level) -> int:
    # the right-to-left model can overshoot its end level by the number of
    # unit down-steps still available; the others never rise above n
    if model is ModelId.DAP_RL and end_level is not None:
        return end_level + n
    return n


def handle_enumerate(
    req: EnumerateRequest, limits: ServiceLimits = DEFAULT_LIMITS
) -> EnumerateResponse:
    if req.n > limits.max_dfs_n:
        raise UsageError(
            f"n {req.n} exceeds the configured enumeration maximum {limits.max_dfs_n}"
        )
    model = ModelId(req.model)
    cap = (
        req.level_cap
        if req.level_cap is not None
        else _default_level_cap(model, req.n, req.end_level)
    )
    words = enumerate_words(model, req.n, cap)
    if req.end_level is not None:
        words = [w for w in words if w.end_level == req.end_level]
    records = [
        WordRecord(word=w.word(), end_level=w.end_level, end_layer=w.end_layer.value)
        for w in words
    ]
    return EnumerateResponse(
        model=req.model,
        n=req.n,
        end_level=req.end_level,
        level_cap=cap,
        count=len(records),
        words=records,
    )


def handle_sample(
    req: SampleRequest, limits: ServiceLimits = DEFAULT_LIMITS
) -> SampleResponse:
    if req.n > limits.max_sample_n:
        raise UsageError(
            f"n {req.n} exceeds the configured sampling maximum {limits.max_sample_n}"
        )
    model = ModelId(req.model)
    try:
        words = sample_many(model, req.n, req.end_level, req.count, req.seed)
    except EmptySupportError as exc:
        raise UsageError(str(exc)) from exc
    records = [
        WordRecord(word=w.word(), end_level=w.end_level, end_layer=w.end_layer.value)
        for w in words
    ]
    return SampleResponse(
        model=req.model,
        n=req.n,
        end_level=req.end_level,
        count=req.count,
        seed=req.seed,
        words=records,
    )


def handle_verify(
    req: VerifyRequest, limits: ServiceLimits = DEFAULT_LIMITS
) -> VerifyResponse:
    if req.order > limits.max_order:
        raise UsageError(
            f"order {req.order} exceeds the configured maximum {limits.max_order}"
        )
    if req.n_max > limits.max_dfs_n:
        raise UsageError(
            f"n_max {req.n_max} exceeds the configured enumeration maximum "
            f"{limits.max_dfs_n}"
        )
    report = run_verify(
        order=req.order, n_max=req.n_max, corrupt_dap_s2=req.corrupt_dap_s2
    )
    checks = [
        CheckOut(
            check_id=c.check_id,
            parameters={k: v for k, v in c.parameters.items()},
            status=c.status,
            detail=None
            if c.detail is None
            else MismatchOut(
                n=c.detail.n,
                k=c.detail.k,
                expected=c.detail.expected,
                got=c.detail.got,
            ),
        )
        for c in report.checks
    ]
    return VerifyResponse(
        order=req.order,
        n_max=req.n_max,
        checks=checks,
        skew_resolution=report.skew_resolution,
        overall=report.overall,
    )
