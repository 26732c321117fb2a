# conjectures/schemas.py
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.schemas import IntSet


class PrimeFinding(BaseModel):
    """One n of the first-odd-primes scan"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    n: int = Field(ge=1, description="Number of odd primes")
    primes: IntSet = Field(description="The first n odd primes")
    L: int = Field(description="Sum of the primes")
    is_complete: bool
    L_is_prime: bool
    omega_L: int = Field(ge=0, description="Distinct prime divisors of L")
    holds: bool = Field(description="complete, or L prime, or omega(L) = 2")

    @model_validator(mode='after')
    def _check_holds(self):
        if self.holds != (self.is_complete or self.L_is_prime or self.omega_L == 2):
            raise ValueError("holds must follow from the three flags")
        return self


class ScanSummary(BaseModel):
    """Closing record of a scan"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    scanned: int = Field(ge=0)
    holds: int = Field(ge=0)
    violations: List[int] = Field(default_factory=list, description="Inputs whose finding does not hold, ascending")


class ExtensionResult(BaseModel):
    """Positive integers added to a set to make it complete"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    base: IntSet
    added: IntSet = Field(description="New positive integers, disjoint from base; empty if base is complete")
    combined_complete: bool
    search_bound: int = Field(ge=1)

    @model_validator(mode='after')
    def _check_added(self):
        if set(self.base.elements) & set(self.added.elements):
            raise ValueError("added elements must be disjoint from base")
        if any(value < 1 for value in self.added.elements):
            raise ValueError("added elements must be positive")
        return self


class GeometricFinding(BaseModel):
    """A complete set {r, r^2, ..., r^n}"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    r: int
    n: int = Field(ge=2)
    total: int = Field(description="Sum of the powers")
    witness: int = Field(description="product / sum, exact")


class TranslateFinding(BaseModel):
    """Smallest positive shift s keeping a complete set complete"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    base: IntSet
    s: Optional[int] = Field(default=None, ge=1, description="Smallest s, absent when none below the bound")
    translated: Optional[IntSet] = None
    witness: Optional[int] = None
    search_bound: int = Field(ge=1)
