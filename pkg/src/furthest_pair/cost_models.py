"""Operation-count formulas.

M1-M8 are the published complexity bounds of eight literature diameter
algorithms, evaluated with every big-O constant set to 1.  BF, A1 and GREEDY
count the operations of the algorithms implemented in this package.  The
numbers are a hardware-independent cost proxy, not runtime predictions.

All logarithms are base 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import InvalidInput


class CostMethod(str, Enum):
    M1 = "M1"  # Imanparast, Hashemi & Mohades 2016
    M2 = "M2"  # Agarwal, Matousek & Suri 1992
    M3 = "M3"  # Yao 1982
    M4 = "M4"  # Egecioglu & Kalantari 1989
    M5 = "M5"  # Finocchiaro & Pellegrini 2002
    M6 = "M6"  # Agarwal, Har-Peled & Varadarajan 2005
    M7 = "M7"  # Chan 2002
    M8 = "M8"  # Har-Peled 2001
    BF = "BF"
    A1 = "A1"
    GREEDY = "GREEDY"  # A2, A3, A4: one n*d scan per iteration


LITERATURE = tuple(CostMethod(f"M{i}") for i in range(1, 9))


@dataclass(frozen=True)
class CostInputs:
    n: int
    d: int
    epsilon: float = 0.5
    m: Optional[int] = None
    iterations: Optional[int] = None
    beam_width: int = 20

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise InvalidInput(f"n and d must be positive, got n={self.n}, d={self.d}")
        if not 0 < self.epsilon <= 1:
            raise InvalidInput(f"epsilon must lie in (0, 1], got {self.epsilon}")
        if self.m is not None and not 1 <= self.m <= self.n:
            raise InvalidInput(f"m must satisfy 1 <= m <= n, got m={self.m}, n={self.n}")
        if self.iterations is not None and self.iterations < 1:
            raise InvalidInput(f"iterations must be positive, got {self.iterations}")

    @property
    def m_resolved(self) -> int:
        # n/2 rounded half-up, at least 1
        return self.m if self.m is not None else max(1, (self.n + 1) // 2)


def alpha(d: int) -> float:
    """Yao's exponent reduction, 2^-(d+1)."""
    return 2.0 ** -(d + 1)


def _pow(base: float, exp: float) -> float:
    # astronomically large bounds saturate instead of raising
    try:
        return base ** exp
    except OverflowError:
        return math.inf


def predicted_ops(method, inputs: CostInputs) -> float:
    method = CostMethod(method)
    n, d, eps = inputs.n, inputs.d, inputs.epsilon
    lg = math.log2(n)
    inv = 1.0 / eps
    if method is CostMethod.M1:
        return n + _pow(inv, d - 2)
    if method is CostMethod.M2:
        return n * _pow(eps, (1 - d) / 2) * lg
    if method is CostMethod.M3:
        a = alpha(d)
        return n ** (2 - a) * lg ** (1 - a)
    if method is CostMethod.M4:
        return float(n * inputs.m_resolved)
    if method is CostMethod.M5:
        return d * n * lg + float(n) * n
    if method is CostMethod.M6:
        return n + _pow(inv, d - 1.5)
    if method is CostMethod.M7:
        return n + _pow(inv, 3 * (d - 1) / 2)
    if method is CostMethod.M8:
        return (n + _pow(inv, 3 * (d - 1) / 2)) * math.log2(inv)
    if method is CostMethod.BF:
        return float(d * (n * (n - 1) // 2))
    if method is CostMethod.A1:
        return n * d + 2 * n * lg + d * lg * lg
    if inputs.iterations is None:
        raise InvalidInput("GREEDY cost needs the observed iteration count")
    return float(inputs.iterations * n * d)
