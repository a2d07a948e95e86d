"""Fixed-point engine for Boolean networks driven by a positive feedback vertex set."""

from .errors import BoolFixError, ErrorCode

__all__ = ["BoolFixError", "ErrorCode"]
