"""Extended real numbers: the reals together with +inf and -inf.

Payoff values and computed extrema live in this type.  Plain ints and
floats mix freely in comparisons and arithmetic.  The one hard error is
adding opposite infinities, which float arithmetic would silently turn
into nan; here it raises :class:`ExtRealArithmeticError`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering

from .errors import ExtRealArithmeticError

__all__ = ["ExtReal", "POS_INF", "NEG_INF", "as_extreal"]


@total_ordering
@dataclass(frozen=True, slots=True)
class ExtReal:
    """A finite real, +infinity, or -infinity.  Never nan."""

    value: float

    def __post_init__(self) -> None:
        v = float(self.value)
        if math.isnan(v):
            raise ExtRealArithmeticError("extended real cannot be nan")
        object.__setattr__(self, "value", v)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.value)

    @property
    def is_pos_inf(self) -> bool:
        return self.value == math.inf

    @property
    def is_neg_inf(self) -> bool:
        return self.value == -math.inf

    def __float__(self) -> float:
        return self.value

    def __neg__(self) -> "ExtReal":
        return ExtReal(-self.value)

    def __add__(self, other: "ExtReal | int | float") -> "ExtReal":
        a, b = self.value, _coerce(other)
        if math.isinf(a) and math.isinf(b) and a != b:
            raise ExtRealArithmeticError("(+inf) + (-inf) is undefined")
        return ExtReal(a + b)

    __radd__ = __add__

    def __sub__(self, other: "ExtReal | int | float") -> "ExtReal":
        return self + ExtReal(-_coerce(other))

    def __rsub__(self, other: "ExtReal | int | float") -> "ExtReal":
        return ExtReal(_coerce(other)) + (-self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExtReal):
            return self.value == other.value
        if isinstance(other, (int, float)):
            return self.value == other
        return NotImplemented

    def __lt__(self, other: object) -> bool:
        if isinstance(other, ExtReal):
            return self.value < other.value
        if isinstance(other, (int, float)):
            return self.value < other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        if self.is_pos_inf:
            return "ExtReal(+inf)"
        if self.is_neg_inf:
            return "ExtReal(-inf)"
        return f"ExtReal({self.value!r})"

    def __str__(self) -> str:
        if self.is_pos_inf:
            return "+inf"
        if self.is_neg_inf:
            return "-inf"
        return repr(self.value)


POS_INF = ExtReal(math.inf)
NEG_INF = ExtReal(-math.inf)


def _coerce(x: "ExtReal | int | float") -> float:
    if isinstance(x, ExtReal):
        return x.value
    v = float(x)
    if math.isnan(v):
        raise ExtRealArithmeticError("extended real cannot be nan")
    return v


def as_extreal(x: "ExtReal | int | float") -> ExtReal:
    """Coerce a number to :class:`ExtReal`, rejecting nan."""
    if isinstance(x, ExtReal):
        return x
    return ExtReal(float(x))
