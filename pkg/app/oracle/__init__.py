"""
Brute-force exact solver, the ground truth for every other engine.

- **OracleService**: exact MECS optimum and witness by exhaustive search,
  plus the exact chromatic index.
"""

from .oracle_service import OracleService

__all__ = ["OracleService"]
