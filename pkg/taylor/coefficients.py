# taylor/coefficients.py - Discrete and continuous Taylor coefficient sets
import logging
from dataclasses import dataclass

import numpy as np

from clifford.algebra import EvenNumber

logger = logging.getLogger(__name__)

MODES = ('discrete', 'continuous')


@dataclass(frozen=True)
class TaylorCoefficients:
    """
    Coefficients of one Taylor decomposition

    Attributes:
        mode: 'discrete' (index n = 1..N, complex values) or 'continuous'
            (index p >= 0, EvenNumber values)
        index: the n or p grid
        values: complex array, or EvenNumber of arrays matching index
    """

    mode: str
    index: np.ndarray
    values: object

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"Mode must be one of {MODES}, got '{self.mode}'")
        index = np.asarray(self.index)
        if self.mode == 'discrete' and np.any(index < 1):
            raise ValueError("Discrete coefficients are indexed from n = 1")
        if self.mode == 'continuous' and np.any(index < 0):
            raise ValueError("Continuous coefficients live on p >= 0")
        size = len(self.values.a1) if isinstance(self.values, EvenNumber) else len(self.values)
        if size != len(index):
            raise ValueError(f"{size} values for {len(index)} indices")
        object.__setattr__(self, 'index', index)

    def __len__(self):
        return len(self.index)

    @property
    def components(self):
        """(re, im) for discrete coefficients, (p1, p2) for continuous ones"""
        if isinstance(self.values, EvenNumber):
            return np.asarray(self.values.a1, dtype=float), np.asarray(self.values.a2, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        return values.real, values.imag

    def rows(self):
        """(index, first component, second component) per coefficient"""
        first, second = self.components
        return [(float(i), float(x), float(y)) for i, x, y in zip(self.index, first, second)]

    def decay_ratio(self):
        """Mean ratio of successive coefficient magnitudes over the nonzero tail"""
        first, second = self.components
        magnitudes = np.hypot(first, second)
        magnitudes = magnitudes[magnitudes > 1e-300]
        if len(magnitudes) < 2:
            return 0.0
        ratio = float(np.exp(np.mean(np.diff(np.log(magnitudes)))))
        logger.debug(f"{self.mode} coefficients: mean decay ratio {ratio:.4f}")
        return ratio
