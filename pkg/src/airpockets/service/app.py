"""FastAPI application exposing the toolkit over HTTP.

Run it with ``airpockets serve`` or ``uvicorn airpockets.service.app:app``.
All endpoints are stateless POSTs; resource-guard violations come back as
HTTP 400, schema violations as 422.
"""

from fastapi import FastAPI, HTTPException

from .handlers import (
    DEFAULT_LIMITS,
    ServiceLimits,
    UsageError,
    handle_enumerate,
    handle_sample,
    handle_series,
    handle_verify,
)
from .models import (
    EnumerateRequest,
    EnumerateResponse,
    SampleRequest,
    SampleResponse,
    SeriesRequest,
    SeriesResponse,
    VerifyRequest,
    VerifyResponse,
)


def create_app(limits: ServiceLimits = DEFAULT_LIMITS) -> FastAPI:
    app = FastAPI(
        title="airpockets",
        description=(
            "Exact enumeration of Dyck paths with air pockets: closed-form "
            "coefficient series, exhaustive and recursive counting oracles, "
            "uniform sampling, and the full cross-verification matrix."
        ),
        version="0.1.0",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/series", response_model=SeriesResponse)
    def series(req: SeriesRequest) -> SeriesResponse:
        try:
            return handle_series(req, limits)
        except UsageError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/enumerate", response_model=EnumerateResponse)
    def enumerate_paths(req: EnumerateRequest) -> EnumerateResponse:
        try:
            return handle_enumerate(req, limits)
        except UsageError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/sample", response_model=SampleResponse)
    def sample(req: SampleRequest) -> SampleResponse:
        try:
            return handle_sample(req, limits)
        except UsageError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        try:
            return handle_verify(req, limits)
        except UsageError as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    return app


app = create_app()
