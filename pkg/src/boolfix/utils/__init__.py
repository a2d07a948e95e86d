"""Utility package for general-purpose helpers.

Only the environment helpers are re-exported here; ``config`` imports them
while the engine modules are still loading. Serializers live in
``boolfix.utils.serializers``.
"""

from .env import get_env_bool, get_env_int

__all__ = [
    "get_env_bool",
    "get_env_int",
]
