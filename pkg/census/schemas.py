# census/schemas.py
from enum import Enum
from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CensusReport(BaseModel):
    """Exact count of complete subsets of {1..N} with size >= min_size"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    n: int = Field(ge=1, description="Upper end of the base interval {1..N}")
    min_size: int = Field(ge=1, description="Smallest subset size counted")
    total: int = Field(ge=0, description="Exact number of complete subsets counted")
    by_size: Dict[int, int] = Field(description="Subset size -> count, sizes min_size..N")
    ap_lower_bound: int = Field(ge=0, description="Odd-length homogeneous AP count")
    ap_shortfall: int = Field(description="total - ap_lower_bound: complete sets the AP bound misses")
    singletons_included: bool = Field(description="Whether the trivially complete singletons are counted")
    worker_count: int = Field(ge=1, description="Workers used")
    elapsed_ms: float = Field(ge=0.0, description="Wall time of the enumeration")

    @model_validator(mode='after')
    def _check_total(self):
        if sum(self.by_size.values()) != self.total:
            raise ValueError("total must equal the sum of the per-size histogram")
        return self


class GrowthFlavor(str, Enum):
    EXACT = 'exact'
    AP_BOUND = 'ap_bound'


class GrowthRow(BaseModel):
    """One N of the growth table with its normalised ratios"""
    model_config = ConfigDict(extra='forbid', frozen=True)

    n: int = Field(ge=1)
    count_or_bound: int = Field(ge=0, description="Exact census total or AP lower bound")
    flavor: GrowthFlavor
    nlogn: float = Field(description="N ln N")
    nloglog: Optional[float] = Field(default=None, description="N ln N ln ln N; absent for N < 3")
    ratio_lower: Optional[float] = Field(default=None, description="value / (N ln N); absent for N < 3")
    ratio_upper: Optional[float] = Field(default=None, description="value / (N ln N ln ln N); absent for N < 3")
