from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from poroshock.core.exceptions import InvalidStateError

REGIONS = ("D0", "D1", "D2", "D3")


@dataclass(frozen=True, eq=False)
class PerturbationDiag:
    """Perturbation phi on the traveling grid xi with its antiderivative and regions."""

    t: float
    xi: np.ndarray
    phi: np.ndarray
    phi_xi: np.ndarray
    Phi: np.ndarray
    masks: Dict[str, np.ndarray]
    q: int
    b1_by_region: Dict[str, float] = field(default_factory=dict)

    @property
    def mass(self) -> float:
        return float(self.Phi[-1])


@dataclass
class DecaySeries:
    """Norm records (t, ||phi||_1, ||phi||_2, ||phi||_inf, ||Phi||_2, ||Phi||_H1, ||Phi||_p ...)."""

    moments: Sequence[int] = (2, 4, 8)
    records: List[Dict[str, float]] = field(default_factory=list)

    @property
    def columns(self) -> List[str]:
        return ["t", "l1_phi", "l2_phi", "linf_phi", "l2_Phi", "h1_Phi"] + [f"lp_Phi_{p}" for p in self.moments]

    def append(self, record: Dict[str, float]) -> None:
        if self.records and not record["t"] > self.records[-1]["t"]:
            raise InvalidStateError(f"Decay records must be strictly increasing in t, got {record['t']}")
        if any(record[c] < 0.0 for c in self.columns if c != "t"):
            raise InvalidStateError(f"Negative norm in record at t={record['t']}")
        self.records.append(record)

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.records, columns=self.columns)

    def column(self, name: str) -> np.ndarray:
        return np.array([r[name] for r in self.records], dtype=float)

    @property
    def times(self) -> np.ndarray:
        return self.column("t")

    def __len__(self) -> int:
        return len(self.records)


def region_counts(masks: Dict[str, np.ndarray]) -> Dict[str, int]:
    return {name: int(np.count_nonzero(masks[name])) for name in REGIONS}


def optional_float(value: Optional[float]) -> Optional[float]:
    if value is None or not np.isfinite(value):
        return None
    return float(value)
