"""Optional debug-mode assertions.

The reduction rules and kernelizers carry structural invariants that are
expensive to re-check on every call.  They are verified only while debug
assertions are enabled (the CLI flag --debug-assert, or tests).
"""

from __future__ import annotations

from .errors import InvariantError

_enabled = False


def set_debug_assertions(on: bool) -> None:
    global _enabled
    _enabled = bool(on)


def debug_assertions_enabled() -> bool:
    return _enabled


def debug_check(condition: bool, message: str) -> None:
    """Raise InvariantError if debug assertions are on and condition fails."""
    if _enabled and not condition:
        raise InvariantError(message)
