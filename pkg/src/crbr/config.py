from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Guardrails for the exponential parts of the engine."""

    max_vars: int = 24
    max_base: int = 20

    @classmethod
    def from_env(cls, max_vars: int | None = None, max_base: int | None = None) -> "Limits":
        """Explicit values win, then ``CRBR_MAX_VARS`` / ``CRBR_MAX_BASE``, then defaults."""
        if max_vars is None:
            max_vars = int(os.environ.get("CRBR_MAX_VARS", cls.max_vars))
        if max_base is None:
            max_base = int(os.environ.get("CRBR_MAX_BASE", cls.max_base))
        return cls(max_vars=max_vars, max_base=max_base)
