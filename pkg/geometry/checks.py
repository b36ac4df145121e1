"""
Identity reports: named exact checks with a counterexample witness
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

import numpy as np

from algebra.rational import format_rational
from utils.logger import Logger

logger = Logger.get_logger()


@dataclass(frozen=True)
class Witness:
    """First failing index tuple (1-based frame indices) and the exact residual lhs - rhs"""

    index: Tuple[int, ...]
    residual: Fraction
    detail: str = ""

    def describe(self) -> str:
        parts = []
        if self.index:
            parts.append(f"at ({','.join(str(i) for i in self.index)})")
        if self.residual:
            parts.append(f"residual {format_rational(self.residual)}")
        text = " ".join(parts)
        if self.detail:
            return f"{text}: {self.detail}" if text else self.detail
        return text


@dataclass(frozen=True)
class IdentityReport:
    identity_name: str
    witness: Optional[Witness] = None

    @property
    def passed(self) -> bool:
        return self.witness is None

    def describe(self) -> str:
        if self.passed:
            return f"{self.identity_name}: pass"
        return f"{self.identity_name}: FAIL {self.witness.describe()}"


def passing(name: str) -> IdentityReport:
    return IdentityReport(name)


def failing(name: str, index=(), residual=Fraction(0), detail: str = "") -> IdentityReport:
    report = IdentityReport(name, Witness(tuple(index), Fraction(residual), detail))
    logger.debug(report.describe())
    return report


def vanishes(name: str, residual: np.ndarray) -> IdentityReport:
    """Pass iff every component is zero; otherwise report the first nonzero one in C order"""
    residual = np.asarray(residual, dtype=object)
    for index in np.ndindex(residual.shape):
        value = residual[index]
        if value != 0:
            return failing(name, tuple(i + 1 for i in index), value)
    return passing(name)


def compare(name: str, lhs: np.ndarray, rhs: np.ndarray) -> IdentityReport:
    """Componentwise exact equality lhs == rhs"""
    return vanishes(name, np.asarray(lhs, dtype=object) - np.asarray(rhs, dtype=object))


def first_failure(name: str, reports: Iterable[IdentityReport]) -> IdentityReport:
    """Combine several reports under one name, keeping the first witness"""
    for report in reports:
        if not report.passed:
            witness = report.witness
            detail = f"{report.identity_name}" + (f"; {witness.detail}" if witness.detail else "")
            return IdentityReport(name, Witness(witness.index, witness.residual, detail))
    return passing(name)
