from .app import app, create_app
from .handlers import (
    DEFAULT_LIMITS,
    ServiceLimits,
    UsageError,
    handle_enumerate,
    handle_sample,
    handle_series,
    handle_verify,
)

__all__ = [
    "app",
    "create_app",
    "DEFAULT_LIMITS",
    "ServiceLimits",
    "UsageError",
    "handle_enumerate",
    "handle_sample",
    "handle_series",
    "handle_verify",
]
