"""
Wall-time budget shared by the exponential engines.
"""

import time
from typing import Optional

from app import config
from .validation.validators import BudgetExceededError


class Deadline:
    """
    Raises `BudgetExceededError` from `check()` once `budget_ms` has elapsed.
    A budget of 0 never expires.
    """

    def __init__(self, budget_ms: Optional[int] = None):
        self.budget_ms = config.BUDGET_MS if budget_ms is None else budget_ms
        self.started = time.monotonic()

    def expired(self) -> bool:
        if self.budget_ms <= 0:
            return False
        return (time.monotonic() - self.started) * 1000.0 > self.budget_ms

    def check(self, what: str = "run") -> None:
        if self.expired():
            raise BudgetExceededError(f"{what} exceeded the wall-time budget of {self.budget_ms} ms")
