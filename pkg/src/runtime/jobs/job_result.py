from dataclasses import dataclass
from typing import Generic, TypeVar

T = TypeVar("T")


@dataclass
class JobResult(Generic[T]):
    ok: bool
    value: T | None
    error: str
    # CLI flag whose value caused the failure; None for numerical failures
    flag: str | None = None

    @classmethod
    def success(cls, value: T) -> "JobResult[T]":
        return cls(ok=True, value=value, error="")

    @classmethod
    def failure(cls, error: str, flag: str | None = None) -> "JobResult[T]":
        return cls(ok=False, value=None, error=error, flag=flag)
