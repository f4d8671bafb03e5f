"""Request and response schemas for the service endpoints.

Counting values (series coefficients, table counts, check expectations) are
serialized as decimal strings: they grow without bound and would overflow
fixed-width integers in downstream consumers.  Structural quantities such as
step counts, levels, orders, and seeds stay plain integers.
"""

from typing import Literal, Optional, Union

from pydantic import BaseModel, Field

FamilyName = Literal[
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

ModelName = Literal["dap-lr", "dap-rl", "skew-fig", "skew-solved"]

OutputFormat = Literal["text", "json", "csv"]


class SeriesRequest(BaseModel):
    family: FamilyName
    k: Optional[int] = Field(default=None, ge=0)
    order: int = Field(default=30, ge=0)


class SeriesResponse(BaseModel):
    family: str
    k: Optional[int]
    order: int
    coefficients: list[str]


class WordRecord(BaseModel):
    word: str
    end_level: int
    end_layer: str


class EnumerateRequest(BaseModel):
    model: ModelName
    n: int = Field(ge=0)
    end_level: Optional[int] = Field(default=None, ge=0)
    level_cap: Optional[int] = Field(default=None, ge=0)


class EnumerateResponse(BaseModel):
    model: str
    n: int
    end_level: Optional[int]
    level_cap: int
    count: int
    words: list[WordRecord]


class SampleRequest(BaseModel):
    model: ModelName
    n: int = Field(ge=0)
    end_level: int = Field(ge=0)
    count: int = Field(default=1, ge=1)
    seed: int = Field(default=0, ge=0, le=2**64 - 1)


class SampleResponse(BaseModel):
    model: str
    n: int
    end_level: int
    count: int
    seed: int
    words: list[WordRecord]


class VerifyRequest(BaseModel):
    order: int = Field(default=30, ge=1)
    n_max: int = Field(default=12, ge=0)
    corrupt_dap_s2: bool = False


class MismatchOut(BaseModel):
    n: int
    k: Optional[int]
    expected: str
    got: str


class CheckOut(BaseModel):
    check_id: str
    parameters: dict[str, Union[int, str, bool]]
    status: Literal["pass", "fail"]
    detail: Optional[MismatchOut] = None


class VerifyResponse(BaseModel):
    order: int
    n_max: int
    checks: list[CheckOut]
    skew_resolution: Literal["FIG", "SOLVED", "BOTH", "NEITHER"]
    overall: bool
