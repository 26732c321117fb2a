# core/schemas.py
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1


class IntSet(BaseModel):
    """Canonical finite set of distinct integers, ascending"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    elements: Tuple[int, ...] = Field(description="Strictly increasing signed 64-bit integers")

    @model_validator(mode='after')
    def _check_canonical(self):
        for value in self.elements:
            if not INT64_MIN <= value <= INT64_MAX:
                raise ValueError(f"element {value} outside the signed 64-bit range")
        for left, right in zip(self.elements, self.elements[1:]):
            if left >= right:
                raise ValueError(f"elements not strictly increasing at {left}, {right}")
        return self

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, value) -> bool:
        return value in self.elements

    def as_list(self):
        return list(self.elements)

    def __str__(self) -> str:
        return '{' + ','.join(str(v) for v in self.elements) + '}'


class Certificate(BaseModel):
    """Completeness witness: product = witness * sum"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    set: IntSet = Field(description="The certified set")
    sum: int = Field(description="Sum of the elements")
    witness: Optional[int] = Field(default=None, description="The multiplier b, exact; absent when not complete")
    residue: Optional[int] = Field(default=None, ge=0, description="Product mod |sum|; absent when sum is 0")

    @property
    def complete(self) -> bool:
        return self.witness is not None

    @model_validator(mode='after')
    def _check_consistency(self):
        if self.sum != 0:
            if self.residue is None:
                raise ValueError("residue required when sum is nonzero")
            if (self.residue == 0) != (self.witness is not None):
                raise ValueError("residue must be 0 exactly when a witness is present")
        elif self.residue is not None:
            raise ValueError("residue must be absent when sum is 0")
        return self


class NormalFormResult(BaseModel):
    """Translated-and-scaled copy of a set starting at 0 with coprime gaps"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    original: IntSet = Field(description="Input set")
    d: int = Field(gt=0, description="gcd of the differences a_i - a_0")
    normalized: IntSet = Field(description="{(a_i - a_0) / d}, starts at 0")

    def reconstruct(self) -> Tuple[int, ...]:
        base = self.original.elements[0]
        return tuple(base + self.d * value for value in self.normalized.elements)
