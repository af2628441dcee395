"""Signed reals stored as (sign, natural log of magnitude).

Quantities such as ``x**0.999`` at ``x = exp(exp(30.5))`` overflow any
float, but their logarithms are ordinary doubles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

_NEG_INF = float("-inf")


@total_ordering
@dataclass(frozen=True)
class LogValue:
    log: float  # log|value|; -inf for zero
    sign: int = 1  # -1, 0 or +1

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"bad sign {self.sign}")
        if math.isnan(self.log):
            raise ValueError("log magnitude is NaN")
        if self.sign == 0 and self.log != _NEG_INF:
            object.__setattr__(self, "log", _NEG_INF)
        if self.log == _NEG_INF and self.sign != 0:
            object.__setattr__(self, "sign", 0)

    @classmethod
    def zero(cls) -> LogValue:
        return cls(_NEG_INF, 0)

    @classmethod
    def exp(cls, log: float) -> LogValue:
        """The positive number ``e**log``."""
        return cls(float(log), 1)

    @classmethod
    def of(cls, x) -> LogValue:
        if isinstance(x, LogValue):
            return x
        x = float(x)
        if x == 0:
            return cls.zero()
        return cls(math.log(abs(x)), 1 if x > 0 else -1)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def to_float(self) -> float:
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.log)
        except OverflowError:
            return self.sign * math.inf

    __float__ = to_float

    def __neg__(self):
        return LogValue(self.log, -self.sign)

    def __abs__(self):
        return LogValue(self.log, abs(self.sign))

    def __mul__(self, other):
        other = LogValue.of(other)
        if self.sign == 0 or other.sign == 0:
            return LogValue.zero()
        return LogValue(self.log + other.log, self.sign * other.sign)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = LogValue.of(other)
        if other.sign == 0:
            raise ZeroDivisionError("LogValue division by zero")
        if self.sign == 0:
            return LogValue.zero()
        return LogValue(self.log - other.log, self.sign * other.sign)

    def __rtruediv__(self, other):
        return LogValue.of(other) / self

    def __pow__(self, p):
        if self.sign < 0:
            raise ValueError("real power of a negative LogValue")
        if self.sign == 0:
            if p > 0:
                return LogValue.zero()
            raise ZeroDivisionError("0 to a nonpositive power")
        return LogValue(self.log * float(p), 1)

    def __add__(self, other):
        other = LogValue.of(other)
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        big, small = (self, other) if self.log >= other.log else (other, self)
        d = small.log - big.log  # <= 0
        if big.sign == small.sign:
            return LogValue(big.log + math.log1p(math.exp(d)), big.sign)
        if d == 0:
            return LogValue.zero()
        return LogValue(big.log + math.log1p(-math.exp(d)), big.sign)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-LogValue.of(other))

    def __rsub__(self, other):
        return LogValue.of(other) - self

    def __eq__(self, other):
        if not isinstance(other, (LogValue, int, float)):
            return NotImplemented
        other = LogValue.of(other)
        return self.sign == other.sign and (self.sign == 0 or self.log == other.log)

    def __hash__(self):
        return hash((self.log, self.sign))

    def __lt__(self, other):
        other = LogValue.of(other)
        if self.sign != other.sign:
            return self.sign < other.sign
        if self.sign == 0:
            return False
        return self.log < other.log if self.sign > 0 else self.log > other.log

    def ln(self) -> float:
        """Natural log of a positive value."""
        if self.sign <= 0:
            raise ValueError("log of a nonpositive LogValue")
        return self.log

    def __repr__(self):
        s = {1: "", -1: "-", 0: "0"}[self.sign]
        return "LogValue(0)" if self.sign == 0 else f"LogValue({s}e^{self.log:.12g})"

    def to_json(self):
        return {"sign": self.sign, "log": None if self.sign == 0 else self.log}


def logsumexp(values) -> LogValue:
    total = LogValue.zero()
    for v in values:
        total = total + LogValue.of(v)
    return total
