# algebra/schemas.py
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.schemas import IntSet


class TheoremId(str, Enum):
    """Closure statements the checkers evaluate"""
    PRODSET = 'prodset'
    UNION_T = 'union_t'
    ZERO_SUM_AUGMENT = 'zero_sum_augment'
    SCALED_DIFFERENCE = 'scaled_difference'
    SUMSET2 = 'sumset2'
    SCALAR = 'scalar'
    HOMOGENEOUS_AP = 'homogeneous_ap'


class MultisetAggregate(BaseModel):
    """Sum and product residue over all index combinations, with multiplicity"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    count: int = Field(ge=0, description="Number of multiset members")
    total: int = Field(description="Sum over all members with multiplicity")
    product_residue: Optional[int] = Field(default=None, ge=0, description="Product mod |total|; absent when total is 0")
    product_is_zero: bool = Field(description="Whether some member is 0")

    @model_validator(mode='after')
    def _check_residue(self):
        if self.total != 0:
            if self.product_residue is None or self.product_residue >= abs(self.total):
                raise ValueError("product_residue must lie in [0, |total|) when total is nonzero")
        elif self.product_residue is not None:
            raise ValueError("product_residue must be absent when total is 0")
        return self

    @property
    def divisible(self) -> bool:
        """Multiset completeness: product is a multiple of total"""
        if self.total == 0:
            return self.product_is_zero
        return self.product_residue == 0


class TheoremReport(BaseModel):
    """Side-condition check plus re-verified completeness of the constructed object"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    theorem_id: TheoremId
    condition_met: bool = Field(description="Whether the side condition holds")
    condition_detail: str = Field(description="Human-readable account of the check")
    parameter: Optional[Tuple[int, ...]] = Field(
        default=None, description="Witnessing parameter: (t,), (q,), or a 1-based index pair (i, j)"
    )
    constructed: Optional[IntSet] = Field(default=None, description="Constructed set (deduplicated)")
    multiset: Optional[MultisetAggregate] = Field(default=None, description="Multiset quantities used by the proof")
    constructed_complete: bool = Field(description="Re-verified conclusion")
    set_complete: Optional[bool] = Field(
        default=None, description="Completeness of the deduplicated set, when it differs in kind from the conclusion"
    )
    witness: Optional[int] = Field(default=None, description="Exact witness of the constructed set, when complete")


class HomogeneousAP(BaseModel):
    """{d, 2d, ..., nd}"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    d: int = Field(description="Common value, nonzero")
    n: int = Field(ge=1, description="Length")

    @model_validator(mode='after')
    def _check_d(self):
        if self.d == 0:
            raise ValueError("d must be nonzero")
        return self

    def materialize(self) -> Tuple[int, ...]:
        return tuple(self.d * k for k in range(1, self.n + 1))
