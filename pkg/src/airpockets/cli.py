"""Command-line client for the airpockets service.

The CLI only marshals arguments into the service request models, obtains a
response, and renders it.  By default the handlers run in-process (no server
needed); with ``--url`` the same requests go over HTTP to a running
``airpockets serve`` instance.

Exit codes: 0 success, 1 verification failure, 2 usage or resource error.
"""

import argparse
import json
import sys

import httpx
from pydantic import ValidationError

from .service.handlers import (
    ServiceLimits,
    UsageError,
    handle_enumerate,
    handle_sample,
    handle_series,
    handle_verify,
)
from .service.models import (
    EnumerateRequest,
    EnumerateResponse,
    SampleRequest,
    SampleResponse,
    SeriesRequest,
    SeriesResponse,
    VerifyRequest,
    VerifyResponse,
)

_FAMILIES = [
    "dap-f",
    "dap-g",
    "dap-level",
    "dap-total",
    "dap-s2",
    "rl-a",
    "rl-b",
    "skew-level",
    "skew-s2",
]
_MODELS = ["dap-lr", "dap-rl", "skew-fig", "skew-solved"]

_ENDPOINTS = {
    "series": ("/series", handle_series, SeriesResponse),
    "enumerate": ("/enumerate", handle_enumerate, EnumerateResponse),
    "sample": ("/sample", handle_sample, SampleResponse),
    "verify": ("/verify", handle_verify, VerifyResponse),
}


def _make_client(url: str) -> httpx.Client:
    return httpx.Client(base_url=url, timeout=300.0)


def _execute(command: str, request, url, limits: ServiceLimits):
    """Run a request locally or against a remote service; returns the
    response model or raises UsageError."""
    path, handler, response_model = _ENDPOINTS[command]
    if url is None:
        return handler(request, limits)
    try:
        with _make_client(url) as client:
            resp = client.post(path, json=request.model_dump(mode="json"))
    except httpx.HTTPError as exc:
        raise UsageError(f"request to {url} failed: {exc}") from exc
    if resp.status_code == 400:
        raise UsageError(resp.json().get("detail", resp.text))
    if resp.status_code == 422:
        raise UsageError(f"invalid request: {resp.text}")
    if resp.status_code != 200:
        raise UsageError(f"service error {resp.status_code}: {resp.text}")
    return response_model.model_validate(resp.json())


# --- rendering -------------------------------------------------------------


def _render_json(command: str, request, response) -> str:
    envelope = {
        "command": command,
        "parameters": request.model_dump(mode="json"),
        "results": response.model_dump(mode="json"),
    }
    return json.dumps(envelope, indent=2)


def _word_label(word: str) -> str:
    return word if word else "(empty)"


def _render_series(response: SeriesResponse, fmt: str) -> str:
    if fmt == "text":
        return ",".join(response.coefficients)
    lines = ["n,coefficient"]
    lines += [f"{n},{c}" for n, c in enumerate(response.coefficients)]
    return "\n".join(lines)


def _render_words(words, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(
            f"{_word_label(w.word)}\tend_level={w.end_level}\tlayer={w.end_layer}"
            for w in words
        )
    lines = ["word,end_level,end_layer"]
    lines += [f"{w.word},{w.end_level},{w.end_layer}" for w in words]
    return "\n".join(lines)


def _render_verify(response: VerifyResponse, fmt: str) -> str:
    if fmt == "text":
        lines = []
        for c in response.checks:
            params = " ".join(f"{k}={v}" for k, v in c.parameters.items())
            lines.append(f"[{c.status.upper():4}] {c.check_id} {params}".rstrip())
            if c.detail is not None:
                d = c.detail
                lines.append(
                    f"        first mismatch: n={d.n} k={d.k} "
                    f"expected={d.expected} got={d.got}"
                )
        passed = sum(1 for c in response.checks if c.status == "pass")
        lines.append(f"skew resolution: {response.skew_resolution}")
        lines.append(
            f"overall: {'pass' if response.overall else 'FAIL'} "
            f"({passed}/{len(response.checks)} checks)"
        )
        return "\n".join(lines)
    lines = ["check_id,status,detail"]
    for c in response.checks:
        detail = ""
        if c.detail is not None:
            d = c.detail
            detail = f"n={d.n};k={d.k};expected={d.expected};got={d.got}"
        lines.append(f"{c.check_id},{c.status},{detail}")
    lines.append(f"skew_resolution,{response.skew_resolution},")
    lines.append(f"overall,{'pass' if response.overall else 'fail'},")
    return "\n".join(lines)


def _render(command: str, request, response, fmt: str) -> str:
    if fmt == "json":
        return _render_json(command, request, response)
    if command == "series":
        return _render_series(response, fmt)
    if command in ("enumerate", "sample"):
        return _render_words(response.words, fmt)
    return _render_verify(response, fmt)


# --- argument parsing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="airpockets",
        description=(
            "Exact series, enumeration, sampling and verification for Dyck "
            "paths with air pockets."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["text", "json", "csv"], default="text",
        help="output rendering (default text)",
    )
    common.add_argument(
        "--url", default=None,
        help="base URL of a running service; default runs in-process",
    )

    p = sub.add_parser(
        "series", parents=[common],
        help="print coefficients 0..order of a closed-form series",
    )
    p.add_argument("family", choices=_FAMILIES)
    p.add_argument("--k", type=int, default=None, help="end level, where the family takes one")
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--max-order", type=int, default=ServiceLimits.max_order,
                   help="resource guard for local runs")

    p = sub.add_parser(
        "enumerate", parents=[common],
        help="list all n-step words of a model",
    )
    p.add_argument("--model", choices=_MODELS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--end-level", type=int, default=None)
    p.add_argument("--level-cap", type=int, default=None,
                   help="maximum level walked (default: n; for dap-rl with "
                        "--end-level: end level + n)")
    p.add_argument("--max-n", type=int, default=ServiceLimits.max_dfs_n,
                   help="resource guard for local runs")

    p = sub.add_parser(
        "sample", parents=[common],
        help="draw words uniformly over (n steps, end level)",
    )
    p.add_argument("--model", choices=_MODELS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--end-level", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser(
        "verify", parents=[common],
        help="run the full cross-verification matrix",
    )
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--corrupt-dap-s2", action="store_true",
                   help="negative-control hook: feed a perturbed kernel root "
                        "to the residual check (must fail)")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--max-order", type=int, default=ServiceLimits.max_order)
    p.add_argument("--max-n", type=int, default=ServiceLimits.max_dfs_n)

    return parser


def _build_request(args):
    if args.command == "series":
        return SeriesRequest(family=args.family, k=args.k, order=args.order)
    if args.command == "enumerate":
        return EnumerateRequest(
            model=args.model, n=args.n,
            end_level=args.end_level, level_cap=args.level_cap,
        )
    if args.command == "sample":
        return SampleRequest(
            model=args.model, n=args.n, end_level=args.end_level,
            count=args.count, seed=args.seed,
        )
    return VerifyRequest(
        order=args.order, n_max=args.n_max, corrupt_dap_s2=args.corrupt_dap_s2
    )


def _limits_from(args) -> ServiceLimits:
    return ServiceLimits(
        max_order=getattr(args, "max_order", ServiceLimits.max_order),
        max_dfs_n=getattr(args, "max_n", ServiceLimits.max_dfs_n),
    )


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import create_app

        uvicorn.run(create_app(_limits_from(args)), host=args.host, port=args.port)
        return 0

    try:
        request = _build_request(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        response = _execute(args.command, request, args.url, _limits_from(args))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(_render(args.command, request, response, args.format))
    if args.command == "verify" and not response.overall:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
