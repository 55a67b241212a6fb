"""Exception types shared across the engine."""

from typing import Any


class OracleCapError(ValueError):
    """A brute-force oracle or enumeration was asked to exceed its size cap."""


class PremiseError(ValueError):
    """A closed form or multiplicity formula was used outside its premise."""


class InvariantBreach(RuntimeError):
    """A mathematically guaranteed fact failed at run time.

    Attributes:
        witness: Data needed to replay the failure (graph6, theta, vertices).
    """

    def __init__(self, message: str, witness: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.witness = witness or {}
