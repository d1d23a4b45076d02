from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    """Outcome of an identity check; truthy iff the identity held."""

    ok: bool
    identity: str
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        status = "ok" if self.ok else "FAILED"
        return f"{self.identity}: {status}" + (f" ({self.detail})" if self.detail else "")
