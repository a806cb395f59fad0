"""Log-domain representation of non-negative reals.

Walk counts, the susceptibility and the upper incomplete gamma function all
overflow or underflow double precision long before n reaches interesting
sizes, so every exponentially scaled quantity in this package is carried as
its natural logarithm.  -inf encodes an exact zero.  NaN is never allowed in
or out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["LogValue"]

_NEG_INF = float("-inf")


@dataclass(frozen=True, order=True)
class LogValue:
    """A non-negative real number stored as its natural logarithm.

    Ordering and equality compare the logs, which matches the ordering of
    the represented values.
    """

    log: float

    def __post_init__(self) -> None:
        if math.isnan(self.log):
            raise ValueError("LogValue cannot hold NaN")

    @classmethod
    def from_value(cls, value: float) -> "LogValue":
        """Wrap a plain non-negative float."""
        if math.isnan(value) or value < 0:
            raise ValueError(f"LogValue requires a non-negative real, got {value!r}")
        if value == 0:
            return cls(_NEG_INF)
        return cls(math.log(value))

    @classmethod
    def zero(cls) -> "LogValue":
        return cls(_NEG_INF)

    @classmethod
    def one(cls) -> "LogValue":
        return cls(0.0)

    @property
    def value(self) -> float:
        """The represented quantity; saturates to inf above double range."""
        if self.log == _NEG_INF:
            return 0.0
        try:
            return math.exp(self.log)
        except OverflowError:
            return float("inf")

    def is_zero(self) -> bool:
        return self.log == _NEG_INF

    def __mul__(self, other: "LogValue") -> "LogValue":
        if self.is_zero() or other.is_zero():
            return LogValue(_NEG_INF)
        return LogValue(self.log + other.log)

    def __truediv__(self, other: "LogValue") -> "LogValue":
        if other.is_zero():
            raise ZeroDivisionError("division by a zero LogValue")
        if self.is_zero():
            return LogValue(_NEG_INF)
        return LogValue(self.log - other.log)

    def __add__(self, other: "LogValue") -> "LogValue":
        # logaddexp, written out so -inf passes through without producing NaN.
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        hi, lo = (self.log, other.log) if self.log >= other.log else (other.log, self.log)
        if hi == float("inf"):
            return LogValue(hi)
        return LogValue(hi + math.log1p(math.exp(lo - hi)))

    def minus(self, other: "LogValue") -> "LogValue":
        """Log-domain subtraction with a sign guard.

        Raises ValueError when ``other`` exceeds ``self``: the result of a
        subtraction must stay non-negative to remain representable.
        """
        if other.is_zero():
            return self
        if other.log > self.log:
            raise ValueError(
                f"log-domain subtraction would be negative: {self.log} - {other.log}"
            )
        if other.log == self.log:
            return LogValue(_NEG_INF)
        diff = math.exp(other.log - self.log)
        if diff >= 1.0:
            return LogValue(_NEG_INF)
        return LogValue(self.log + math.log1p(-diff))

    def __sub__(self, other: "LogValue") -> "LogValue":
        return self.minus(other)
