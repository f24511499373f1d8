"""Exact calculus of non-negative piecewise-power functions on [0, inf).

A function is a sorted tuple of disjoint half-open pieces ``[a, b)`` each
carrying ``c * t**alpha`` with rational ``a, b, c, alpha`` (``b`` may be
``math.inf``).  The function vanishes off its pieces.  Step functions are the
case ``alpha == 0`` everywhere and are handled entirely in exact arithmetic.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

from .errors import (NegativeCoefficient, NotMonotone, OverlappingPieces,
                     UnsupportedCombination)
from .extreal import (INF, POS_INF, ZERO, ExtReal, as_fraction, ext_max,
                      ext_sum, rpow)

Endpoint = Union[Fraction, float]  # float only for math.inf


def as_endpoint(x) -> Endpoint:
    if isinstance(x, float) and math.isinf(x) and x > 0:
        return INF
    if isinstance(x, str) and x.strip().lower() in ("inf", "+inf", "infinity"):
        return INF
    return as_fraction(x)


@dataclass(frozen=True)
class Piece:
    a: Fraction
    b: Endpoint
    c: Fraction
    alpha: Fraction = Fraction(0)

    @property
    def length(self) -> ExtReal:
        return POS_INF if self.b == INF else ExtReal("exact", self.b - self.a)

    def value_at(self, t: Fraction) -> ExtReal:
        if self.alpha == 0:
            return ExtReal("exact", self.c)
        return self.c * rpow(t, self.alpha)

    def sup(self) -> ExtReal:
        """Supremum of the piece over ``[a, b)``."""
        if self.alpha == 0 or self.c == 0:
            return ExtReal("exact", self.c)
        if self.alpha < 0:
            return self.c * rpow(self.a, self.alpha)
        if self.b == INF:
            return POS_INF
        return self.c * rpow(self.b, self.alpha)

    def right_limit(self) -> ExtReal:
        """Limit of the piece as ``t`` increases to ``b``."""
        if self.alpha == 0 or self.c == 0:
            return ExtReal("exact", self.c)
        if self.b == INF:
            return ZERO if self.alpha < 0 else POS_INF
        return self.c * rpow(self.b, self.alpha)

    def clip(self, lo: Endpoint, hi: Endpoint) -> Optional["Piece"]:
        a, b = max(self.a, lo), min(self.b, hi)
        if not a < b:
            return None
        return Piece(a, b, self.c, self.alpha)


class PPF:
    """Immutable piecewise-power function.  Build through :func:`normalize`."""

    __slots__ = ("pieces", "_starts")

    def __init__(self, pieces: Sequence[Piece] = ()):
        object.__setattr__(self, "pieces", tuple(pieces))
        object.__setattr__(self, "_starts", [p.a for p in self.pieces])

    def __setattr__(self, name, value):
        raise AttributeError("PPF is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, PPF) and self.pieces == other.pieces

    def __hash__(self) -> int:
        return hash(self.pieces)

    def __reduce__(self):
        return (type(self), (self.pieces,))

    def __iter__(self) -> Iterator[Piece]:
        return iter(self.pieces)

    def __len__(self) -> int:
        return len(self.pieces)

    def __repr__(self) -> str:
        parts = []
        for p in self.pieces:
            term = f"{p.c}" if p.alpha == 0 else f"{p.c}*t^({p.alpha})"
            parts.append(f"{term}@[{p.a},{'inf' if p.b == INF else p.b})")
        return f"{type(self).__name__}({' + '.join(parts) or '0'})"

    def __call__(self, t) -> ExtReal:
        return evaluate(self, t)

    @property
    def is_step(self) -> bool:
        return all(p.alpha == 0 for p in self.pieces)

    @property
    def is_zero(self) -> bool:
        return not self.pieces

    def breakpoints(self) -> list:
        pts = set()
        for p in self.pieces:
            pts.add(p.a)
            if p.b != INF:
                pts.add(p.b)
        return sorted(pts)

    def piece_at(self, t) -> Optional[Piece]:
        i = bisect.bisect_right(self._starts, t) - 1
        if i >= 0 and t < self.pieces[i].b:
            return self.pieces[i]
        return None


StepFunction = PPF


class MonotoneProfile(PPF):
    """A PPF certified non-increasing on [0, inf) (starting at 0, no gaps)."""

    __slots__ = ()

    def __init__(self, pieces: Sequence[Piece] = ()):
        super().__init__(pieces)
        if not _is_nonincreasing(self.pieces, from_zero=True):
            raise NotMonotone(f"not a non-increasing profile: {PPF(pieces)!r}")

    @classmethod
    def _trusted(cls, pieces: Sequence[Piece]) -> "MonotoneProfile":
        """Skip validation for pieces that are non-increasing by construction."""
        obj = PPF.__new__(cls)
        PPF.__init__(obj, pieces)
        return obj


# -- construction ---------------------------------------------------------

def _coerce_piece(raw) -> Piece:
    if isinstance(raw, Piece):
        return raw
    if isinstance(raw, dict):
        return Piece(as_fraction(raw["a"]), as_endpoint(raw["b"]),
                     as_fraction(raw["c"]), as_fraction(raw.get("alpha", 0)))
    if len(raw) == 3:
        a, b, c = raw
        alpha = 0
    else:
        a, b, c, alpha = raw
    return Piece(as_fraction(a), as_endpoint(b), as_fraction(c), as_fraction(alpha))


def normalize(raw_pieces: Iterable = ()) -> PPF:
    """Sort, validate and canonicalise raw pieces.

    Zero pieces are dropped and touching pieces with equal ``(c, alpha)`` are
    merged, so two equal functions always have equal piece tuples.
    """
    pieces = []
    for raw in raw_pieces:
        p = _coerce_piece(raw)
        if p.c < 0:
            raise NegativeCoefficient(f"negative coefficient {p.c}")
        if p.a < 0 or not p.a < p.b:
            raise ValueError(f"bad interval [{p.a}, {p.b})")
        if p.c == 0:
            continue
        pieces.append(p)
    pieces.sort(key=lambda p: p.a)
    out: list = []
    for p in pieces:
        if out and out[-1].b > p.a:
            raise OverlappingPieces(f"[{out[-1].a},{out[-1].b}) overlaps [{p.a},{p.b})")
        if out and out[-1].b == p.a and out[-1].c == p.c and out[-1].alpha == p.alpha:
            out[-1] = Piece(out[-1].a, p.b, p.c, p.alpha)
        else:
            out.append(p)
    return PPF(out)


def step_function(blocks: Iterable) -> PPF:
    """``step_function([(a, b, c), ...])`` with all exponents zero."""
    return normalize((a, b, c, 0) for a, b, c in blocks)


def indicator(a, b, height=1) -> PPF:
    return normalize([(a, b, height, 0)])


def profile(raw_pieces: Iterable) -> MonotoneProfile:
    return MonotoneProfile(normalize(raw_pieces).pieces)


# -- monotonicity ---------------------------------------------------------

def _cmp_power(c1, x1, e1, c2, x2, e2) -> int:
    """Exact sign of ``c1*x1**e1 - c2*x2**e2`` for positive rationals."""
    v1, v2 = c1 * rpow(x1, e1), c2 * rpow(x2, e2)
    if v1.is_exact and v2.is_exact:
        return (v1.value > v2.value) - (v1.value < v2.value)
    # raise both sides to a common power that clears the exponent denominators
    lcm = e1.denominator * e2.denominator // math.gcd(e1.denominator, e2.denominator)
    w1 = c1 ** lcm * x1 ** int(e1 * lcm)
    w2 = c2 ** lcm * x2 ** int(e2 * lcm)
    return (w1 > w2) - (w1 < w2)


def _limit_ge_start(prev: Piece, nxt: Piece) -> bool:
    """Is the left limit of ``prev`` at its right end >= the value of ``nxt`` at its start?"""
    if nxt.alpha < 0 and nxt.a == 0:
        return False
    if prev.b == INF:
        return False
    if prev.alpha == 0 and nxt.alpha == 0:
        return prev.c >= nxt.c
    return _cmp_power(prev.c, prev.b, prev.alpha, nxt.c, nxt.a, nxt.alpha) >= 0


def _is_nonincreasing(pieces: Sequence[Piece], from_zero: bool) -> bool:
    if not pieces:
        return True
    if from_zero and pieces[0].a != 0:
        return False
    for i, p in enumerate(pieces):
        if p.alpha > 0:
            return False
        if i and (pieces[i - 1].b != p.a or not _limit_ge_start(pieces[i - 1], p)):
            return False
    return True


def is_nonincreasing(f: PPF) -> bool:
    """True iff ``f`` is non-increasing on [0, inf) (support must start at 0)."""
    return _is_nonincreasing(f.pieces, from_zero=True)


def monotone_offset(f: PPF) -> Fraction:
    """Length ``L`` of the leading zero gap of a function non-increasing on ``[L, inf)``.

    Raises NotMonotone when ``f`` is not of that shape.
    """
    if f.is_zero:
        return Fraction(0)
    if not _is_nonincreasing(f.pieces, from_zero=False):
        raise NotMonotone(f"{f!r} is not non-increasing on its support")
    return f.pieces[0].a


def as_profile(f: PPF) -> MonotoneProfile:
    """``f*`` for step functions; non-increasing inputs pass through unchanged."""
    if isinstance(f, MonotoneProfile):
        return f
    if is_nonincreasing(f):
        return MonotoneProfile(f.pieces)
    if f.is_step:
        return rearrange_step(f)
    raise NotMonotone("symbolic rearrangement is only available for step functions")


# -- evaluation -----------------------------------------------------------

def evaluate(f: PPF, t) -> ExtReal:
    """``f(t)`` with the right-continuous convention at breakpoints."""
    t = as_fraction(t)
    if t < 0:
        raise ValueError("t must be non-negative")
    p = f.piece_at(t)
    if p is None:
        return ZERO
    return p.value_at(t)


def sup_value(f: PPF) -> ExtReal:
    return ext_max(p.sup() for p in f.pieces)


def _ext(x) -> ExtReal:
    return POS_INF if x == INF else ExtReal.coerce(x)


def _ext_min(x: ExtReal, y: ExtReal) -> ExtReal:
    return x if x <= y else y


def _ext_max(x: ExtReal, y: ExtReal) -> ExtReal:
    return x if x >= y else y


def _span(lo: ExtReal, hi: ExtReal) -> ExtReal:
    return hi - lo if lo < hi else ZERO


def distribution(f: PPF, s) -> ExtReal:
    """``mu_f(s) = |{t : f(t) > s}|``, exact whenever the level crossings are rational."""
    s = as_fraction(s)
    if s < 0:
        raise ValueError("s must be non-negative")
    parts = []
    step_total = Fraction(0)
    for p in f.pieces:
        if p.alpha == 0:
            if p.c > s:
                if p.b == INF:
                    return POS_INF
                step_total += p.b - p.a
            continue
        a, b = ExtReal("exact", p.a), _ext(p.b)
        if s == 0:
            parts.append(_span(a, b))
            continue
        # crossing point of c*t**alpha = s
        cross = rpow(s / p.c, 1 / p.alpha)
        if p.alpha < 0:
            parts.append(_span(a, _ext_min(b, cross)))
        else:
            parts.append(_span(_ext_max(a, cross), b))
    return ExtReal("exact", step_total) + ext_sum(parts)


def rearrange_step(f: PPF) -> MonotoneProfile:
    """Non-increasing rearrangement of a step function, exactly."""
    if not f.is_step:
        raise UnsupportedCombination("rearrange_step needs a step function")
    levels: dict = {}
    for p in f.pieces:
        if p.b == INF or levels.get(p.c) == INF:
            levels[p.c] = INF
        else:
            levels[p.c] = levels.get(p.c, Fraction(0)) + (p.b - p.a)
    out = []
    start = Fraction(0)
    for value in sorted(levels, reverse=True):
        length = levels[value]
        if length == INF:
            out.append(Piece(start, INF, value))
            break
        out.append(Piece(start, start + length, value))
        start += length
    return MonotoneProfile._trusted(out)


def rearrange_eval(f: PPF, t, tol: float = 1e-12) -> ExtReal:
    """``f*(t) = inf{s >= 0 : mu_f(s) <= t}``.

    Step functions and already non-increasing inputs are answered exactly;
    anything else falls back to bisection on the distribution function.
    """
    t = as_fraction(t)
    if t <= 0:
        raise ValueError("t must be positive")
    if f.is_step:
        return evaluate(rearrange_step(f), t)
    if is_nonincreasing(f):
        return evaluate(f, t)

    def small_enough(s: float) -> bool:
        return float(distribution(f, Fraction(s))) <= float(t)

    if small_enough(0.0):
        return ZERO
    top = sup_value(f)
    if top.is_finite:
        hi = float(top) * (1 + 1e-9) + 1e-300
    else:
        hi = 1.0
        while not small_enough(hi):
            hi *= 2.0
            if hi > 1e300:
                return POS_INF
    lo = 0.0
    while hi - lo > tol * hi:
        mid = 0.5 * (lo + hi)
        if small_enough(mid):
            hi = mid
        else:
            lo = mid
    return ExtReal.approx(0.5 * (lo + hi), tol)


# -- integration ----------------------------------------------------------

def _log_ratio(hi: Fraction, lo: Fraction) -> float:
    """``log(hi/lo)`` for ``0 < lo < hi`` without cancellation when the ratio is near 1."""
    ratio = hi / lo
    if ratio < 2:
        return math.log1p(float(ratio - 1))
    return math.log(ratio.numerator) - math.log(ratio.denominator)


def power_integral(alpha, lo, hi) -> ExtReal:
    """``int_lo^hi t**alpha dt`` for ``0 <= lo < hi <= inf``, +inf when divergent."""
    alpha = as_fraction(alpha)
    lo = as_fraction(lo)
    if hi != INF:
        hi = as_fraction(hi)
    if not lo < hi:
        return ZERO
    if alpha == 0 and hi != INF:
        return ExtReal("exact", hi - lo)
    e = alpha + 1
    if hi == INF:
        if e >= 0:
            return POS_INF
        return rpow(lo, e) / ExtReal("exact", -e)
    if lo == 0 and e <= 0:
        return POS_INF
    if e == 0:
        return ExtReal.approx(_log_ratio(hi, lo))
    top, bottom = rpow(hi, e), rpow(lo, e)
    if top.is_exact and bottom.is_exact:
        return ExtReal("exact", (top.value - bottom.value) / e)
    if lo == 0:
        return top / ExtReal("exact", e)
    # lo**e * expm1(e*log(hi/lo)) / e avoids cancellation for narrow intervals
    val = float(bottom) * math.expm1(float(e) * _log_ratio(hi, lo)) / float(e)
    return ExtReal.approx(abs(val), bottom.error + 1e-12)


def piece_integral(p: Piece, lo=None, hi=None) -> ExtReal:
    """``int c*t**alpha`` over the piece clipped to ``[lo, hi)``."""
    lo = p.a if lo is None else max(p.a, lo)
    hi = p.b if hi is None else min(p.b, hi)
    if not lo < hi:
        return ZERO
    return ExtReal("exact", p.c) * power_integral(p.alpha, lo, hi)


def integral(f: PPF) -> ExtReal:
    return ext_sum(piece_integral(p) for p in f.pieces)


def partial_integral(g: PPF, t) -> ExtReal:
    """``int_0^t g``; ``t`` may be ``math.inf``."""
    t = as_endpoint(t)
    return ext_sum(piece_integral(p, hi=t) for p in g.pieces if p.a < t)


# -- transformations ------------------------------------------------------

def restrict(f: PPF, lo=0, hi=INF) -> PPF:
    """``f * chi_[lo, hi)``."""
    lo, hi = as_fraction(lo), as_endpoint(hi)
    return PPF([q for q in (p.clip(lo, hi) for p in f.pieces) if q is not None])


def dilate(f: PPF, t) -> PPF:
    """``(D_t f)(s) = f(t*s)``."""
    t = as_fraction(t)
    if t <= 0:
        raise ValueError("dilation factor must be positive")
    out = []
    for p in f.pieces:
        factor = rpow(t, p.alpha)
        if not factor.is_exact:
            raise UnsupportedCombination(f"{t}**{p.alpha} is irrational")
        out.append(Piece(p.a / t, INF if p.b == INF else p.b / t, p.c * factor.value, p.alpha))
    return normalize(out)


def common_refinement(f: PPF, g: PPF) -> Iterator[Tuple[Fraction, Endpoint, Optional[Piece], Optional[Piece]]]:
    """Elementary intervals of the common refinement with the pieces covering them."""
    pts = sorted(set(f.breakpoints()) | set(g.breakpoints()))
    if any(p.b == INF for p in f.pieces) or any(p.b == INF for p in g.pieces):
        pts.append(INF)
    for lo, hi in zip(pts, pts[1:]):
        pf, pg = f.piece_at(lo), g.piece_at(lo)
        if pf is not None or pg is not None:
            yield lo, hi, pf, pg


def add(f: PPF, g: PPF) -> PPF:
    out = []
    for lo, hi, pf, pg in common_refinement(f, g):
        if pf is None or pg is None:
            p = pf or pg
            out.append(Piece(lo, hi, p.c, p.alpha))
        elif pf.alpha == pg.alpha:
            out.append(Piece(lo, hi, pf.c + pg.c, pf.alpha))
        else:
            raise UnsupportedCombination("sum of pieces with different exponents")
    return normalize(out)


def scale(f: PPF, k) -> PPF:
    k = as_fraction(k)
    if k < 0:
        raise NegativeCoefficient("negative scale factor")
    return normalize(Piece(p.a, p.b, p.c * k, p.alpha) for p in f.pieces)


def min_with_const(f: PPF, v) -> PPF:
    """``min{f, v}``; power pieces must cross the level ``v`` at a rational point."""
    v = as_fraction(v)
    out = []
    for p in f.pieces:
        if p.alpha == 0:
            out.append(Piece(p.a, p.b, min(p.c, v), 0))
            continue
        cross = rpow(v / p.c, 1 / p.alpha) if v > 0 else (POS_INF if p.alpha < 0 else ZERO)
        if not (cross.is_exact or not cross.is_finite):
            raise UnsupportedCombination("irrational crossing of the level")
        x = INF if not cross.is_finite else cross.value
        # alpha < 0: above v before x; alpha > 0: above v after x
        first, second = (Piece(p.a, p.b, v, 0), p) if p.alpha < 0 else (p, Piece(p.a, p.b, v, 0))
        for q in (first.clip(p.a, x), second.clip(x, p.b)):
            if q is not None:
                out.append(q)
    return normalize(out)


def subtract_const_clamped(f: PPF, v) -> PPF:
    """``max{f - v, 0}`` (step pieces, or power pieces lying entirely below ``v``)."""
    v = as_fraction(v)
    out = []
    for p in f.pieces:
        if p.alpha == 0:
            out.append(Piece(p.a, p.b, max(p.c - v, Fraction(0)), 0))
        elif p.sup() <= ExtReal("exact", v):
            continue
        else:
            raise UnsupportedCombination("f - v leaves the piecewise-power class")
    return normalize(out)


def equimeasurable(f: PPF, g: PPF) -> bool:
    return rearrange_step(f) == rearrange_step(g)
