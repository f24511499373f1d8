"""Extended non-negative reals: exact rationals, error-tracked floats and +inf.

Norm values live in [0, inf].  Whenever every step of a computation stays
inside the rationals the result is kept exact; otherwise it degrades to a
binary64 value carrying a conservative relative error bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import gmpy2

# Relative error charged to every floating point operation.
OP_EPS = 1e-12

INF = math.inf

def as_fraction(x) -> Fraction:
    """Parse ``x`` (int, Fraction, ``"p/q"`` string) into a Fraction.

    Floats are refused so that no binary rounding sneaks into exact data.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected a rational, got {type(x).__name__}")


@dataclass(frozen=True)
class ExtReal:
    """A value in [0, inf].

    ``kind`` is one of ``"exact"`` (``value`` is a Fraction), ``"approx"``
    (``value`` is a float, ``error`` its relative error bound) or ``"inf"``.
    """

    kind: str
    value: Union[Fraction, float, None] = None
    error: float = 0.0

    # -- constructors -------------------------------------------------
    @staticmethod
    def exact(x) -> "ExtReal":
        x = as_fraction(x)
        if x < 0:
            raise ValueError(f"negative value {x}")
        return ExtReal("exact", x)

    @staticmethod
    def approx(x: float, error: float = OP_EPS) -> "ExtReal":
        if math.isinf(x):
            return POS_INF
        if math.isnan(x):
            raise ValueError("NaN is not an extended real")
        return ExtReal("approx", max(float(x), 0.0), float(error))

    @staticmethod
    def coerce(x) -> "ExtReal":
        if isinstance(x, ExtReal):
            return x
        if isinstance(x, float):
            if math.isinf(x):
                return POS_INF
            return ExtReal.approx(x, 0.0)
        return ExtReal.exact(x)

    # -- predicates ---------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    @property
    def is_finite(self) -> bool:
        return self.kind != "inf"

    @property
    def is_zero(self) -> bool:
        return self.kind != "inf" and self.value == 0

    def __float__(self) -> float:
        if self.kind == "inf":
            return INF
        return float(self.value)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "ExtReal":
        other = ExtReal.coerce(other)
        if not (self.is_finite and other.is_finite):
            return POS_INF
        if self.is_exact and other.is_exact:
            return ExtReal("exact", self.value + other.value)
        a, b = float(self), float(other)
        total = a + b
        if total == 0:
            return ExtReal.approx(0.0, 0.0)
        err = (a * self.error + b * other.error) / total + OP_EPS
        return ExtReal.approx(total, err)

    __radd__ = __add__

    def __mul__(self, other) -> "ExtReal":
        other = ExtReal.coerce(other)
        if self.is_zero or other.is_zero:
            # 0 * inf = 0, the measure-theoretic convention
            return ZERO
        if not (self.is_finite and other.is_finite):
            return POS_INF
        if self.is_exact and other.is_exact:
            return ExtReal("exact", self.value * other.value)
        return ExtReal.approx(float(self) * float(other), self.error + other.error + OP_EPS)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ExtReal":
        other = ExtReal.coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero extended real")
        if not other.is_finite:
            if not self.is_finite:
                raise ValueError("inf / inf is undefined")
            return ZERO
        if not self.is_finite:
            return POS_INF
        if self.is_exact and other.is_exact:
            return ExtReal("exact", self.value / other.value)
        return ExtReal.approx(float(self) / float(other), self.error + other.error + OP_EPS)

    def __sub__(self, other) -> "ExtReal":
        """Difference, which must be non-negative up to rounding."""
        other = ExtReal.coerce(other)
        if not other.is_finite:
            raise ValueError("cannot subtract infinity")
        if not self.is_finite:
            return POS_INF
        if self.is_exact and other.is_exact:
            d = self.value - other.value
            if d < 0:
                raise ValueError("negative difference")
            return ExtReal("exact", d)
        a, b = float(self), float(other)
        d = a - b
        abs_err = a * self.error + b * other.error
        if d < -abs_err * 2 - 1e-300:
            raise ValueError("negative difference")
        d = max(d, 0.0)
        return ExtReal.approx(d, abs_err / d + OP_EPS if d > 0 else 0.0)

    def __pow__(self, exponent) -> "ExtReal":
        exponent = as_fraction(exponent)
        if not self.is_finite:
            if exponent > 0:
                return POS_INF
            if exponent == 0:
                return ONE
            return ZERO
        if self.is_exact:
            return rpow(self.value, exponent)
        if self.value == 0:
            if exponent < 0:
                return POS_INF
            return ONE if exponent == 0 else ExtReal.approx(0.0, 0.0)
        return ExtReal.approx(float(self) ** float(exponent),
                              abs(float(exponent)) * self.error + OP_EPS)

    # -- comparisons --------------------------------------------------
    def __lt__(self, other) -> bool:
        other = ExtReal.coerce(other)
        if not other.is_finite:
            return self.is_finite
        if not self.is_finite:
            return False
        if self.is_exact and other.is_exact:
            return self.value < other.value
        return float(self) < float(other)

    def __le__(self, other) -> bool:
        other = ExtReal.coerce(other)
        return not other < self

    def __gt__(self, other) -> bool:
        return ExtReal.coerce(other) < self

    def __ge__(self, other) -> bool:
        return ExtReal.coerce(other) <= self

    def leq(self, other, rtol: float = 1e-9) -> bool:
        """``self <= other``; exact when both are exact, with slack ``1 + rtol`` otherwise."""
        other = ExtReal.coerce(other)
        if not other.is_finite:
            return True
        if not self.is_finite:
            return False
        if self.is_exact and other.is_exact:
            return self.value <= other.value
        return float(self) <= float(other) * (1 + rtol)

    def close(self, other, rtol: float = 1e-9) -> bool:
        other = ExtReal.coerce(other)
        return self.leq(other, rtol) and other.leq(self, rtol)

    def __repr__(self) -> str:
        if self.kind == "inf":
            return "ExtReal(inf)"
        if self.kind == "exact":
            return f"ExtReal({self.value})"
        return f"ExtReal(~{self.value!r} ±{self.error:.1e})"

    def to_json(self) -> dict:
        if self.kind == "inf":
            return {"kind": "infinite"}
        if self.kind == "exact":
            return {"kind": "exact", "value": fraction_str(self.value)}
        return {"kind": "approx", "value": repr(float(self.value)), "error_bound": self.error}


ZERO = ExtReal("exact", Fraction(0))
ONE = ExtReal("exact", Fraction(1))
POS_INF = ExtReal("inf")


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def ext_sum(values: Iterable) -> ExtReal:
    exact, rest = [], ZERO
    for v in values:
        v = ExtReal.coerce(v)
        if v.is_exact:
            exact.append(v.value)
        else:
            rest = rest + v
    if not exact:
        return rest
    # one reduction over the common denominator instead of one per term
    den = math.lcm(*(x.denominator for x in exact))
    num = sum(x.numerator * (den // x.denominator) for x in exact)
    return ExtReal("exact", Fraction(num, den)) + rest


def ext_max(values: Iterable) -> ExtReal:
    best = ZERO
    for v in values:
        v = ExtReal.coerce(v)
        if v > best:
            best = v
    return best


def _exact_root(n: int, k: int):
    root, is_exact = gmpy2.iroot(gmpy2.mpz(n), k)
    return int(root) if is_exact else None


def rpow(x, exponent) -> ExtReal:
    """``x ** exponent`` for rational ``x >= 0``; exact whenever the result is rational."""
    x = as_fraction(x)
    exponent = as_fraction(exponent)
    if x < 0:
        raise ValueError("rpow needs a non-negative base")
    if x == 0:
        if exponent > 0:
            return ZERO
        if exponent == 0:
            return ONE
        return POS_INF
    if exponent.denominator == 1:
        return ExtReal("exact", x ** exponent.numerator)
    k = exponent.denominator
    num = _exact_root(x.numerator, k)
    den = _exact_root(x.denominator, k) if num is not None else None
    if num is not None and den is not None:
        return ExtReal("exact", Fraction(num, den) ** exponent.numerator)
    log_x = math.log(x.numerator) - math.log(x.denominator)
    y = float(exponent) * log_x
    if y > 709.0:
        raise OverflowError(f"{x}**{exponent} exceeds binary64 range")
    return ExtReal.approx(math.exp(y), OP_EPS * (1 + abs(y)))
