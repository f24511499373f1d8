"""Lebesgue and Lorentz functionals, dual exponents and component order."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from scipy import integrate

from .errors import InvalidSpec, NotMonotone, NotNormable
from .extreal import INF, ONE, POS_INF, ExtReal, as_fraction, ext_max, ext_sum, rpow
from .stepfn import (PPF, Piece, as_profile, monotone_offset, power_integral,
                     sup_value)

Exponent = Union[Fraction, float]  # float only for math.inf


def exponent(x) -> Exponent:
    """Parse a positive exponent; ``"inf"`` and ``math.inf`` give infinity."""
    if x == INF or (isinstance(x, str) and x.strip().lower() in ("inf", "infinity")):
        return INF
    x = as_fraction(x)
    if x <= 0:
        raise InvalidSpec(f"exponent must be positive, got {x}")
    return x


def exponent_str(p: Exponent) -> str:
    if p == INF:
        return "inf"
    return str(p.numerator) if p.denominator == 1 else f"{p.numerator}/{p.denominator}"


def reciprocal(p: Exponent) -> Fraction:
    return Fraction(0) if p == INF else 1 / p


@dataclass(frozen=True)
class Lebesgue:
    p: Exponent

    def __post_init__(self):
        object.__setattr__(self, "p", exponent(self.p))

    def __str__(self) -> str:
        return f"L:{exponent_str(self.p)}"


@dataclass(frozen=True)
class Lorentz:
    p: Exponent
    q: Exponent

    def __post_init__(self):
        object.__setattr__(self, "p", exponent(self.p))
        object.__setattr__(self, "q", exponent(self.q))
        if self.p == INF and self.q != INF:
            raise InvalidSpec("Lorentz(inf, q) with finite q is the trivial space")

    def __str__(self) -> str:
        return f"Lorentz:{exponent_str(self.p)}:{exponent_str(self.q)}"


NormSpec = Union[Lebesgue, Lorentz]


def _lebesgue_power_sum(p: Fraction, g: PPF) -> ExtReal:
    """``int g**p`` for any piecewise-power function."""
    return ext_sum(rpow(piece.c, p) * power_integral(piece.alpha * p, piece.a, piece.b)
                   for piece in g.pieces)


def _shifted_piece_integral(piece: Piece, offset: Fraction, p: Fraction, q: Fraction) -> ExtReal:
    """``int_a^b (t - L)**(q/p - 1) * (c t**alpha)**q dt`` for a piece of a gapped profile."""
    weight = q / p - 1
    cq = rpow(piece.c, q)
    if piece.alpha == 0:
        hi = INF if piece.b == INF else piece.b - offset
        return cq * power_integral(weight, piece.a - offset, hi)
    if offset == 0:
        return cq * power_integral(weight + piece.alpha * q, piece.a, piece.b)
    # no closed form (incomplete beta); adaptive quadrature
    w, e, L = float(weight), float(piece.alpha * q), float(offset)
    hi = math.inf if piece.b == INF else float(piece.b)
    val, err = integrate.quad(lambda t: (t - L) ** w * t ** e, float(piece.a), hi, limit=200)
    if not math.isfinite(val):
        return POS_INF
    return cq * ExtReal.approx(val, err / val + 1e-12 if val > 0 else 0.0)


def _lorentz_sup(piece: Piece, offset: Fraction, p: Exponent) -> ExtReal:
    """``sup (t - L)**(1/p) * c * t**alpha`` over the piece."""
    r = reciprocal(p)
    c = ExtReal("exact", piece.c)
    if piece.alpha == 0:
        if piece.b == INF:
            return POS_INF if r > 0 else c
        return c * rpow(piece.b - offset, r)
    e = r + piece.alpha
    if offset == 0:
        if e > 0:
            return POS_INF if piece.b == INF else c * rpow(piece.b, e)
        if e < 0:
            return c * rpow(piece.a, e)
        return c
    L = float(offset)

    def h(t: float) -> float:
        return (t - L) ** float(r) * t ** float(piece.alpha)

    candidates = [h(float(piece.a))]
    if piece.b == INF:
        candidates.append(math.inf if e > 0 else (0.0 if e < 0 else 1.0))
    else:
        candidates.append(h(float(piece.b)))
    if e != 0:
        crit = float(piece.alpha) * L / float(e)
        if float(piece.a) < crit < float(piece.b):
            candidates.append(h(crit))
    return c * ExtReal.approx(max(candidates), 1e-12)


def norm_eval(spec: NormSpec, g: PPF) -> ExtReal:
    """Evaluate a Lebesgue or Lorentz functional.

    Lebesgue functionals accept any piecewise-power function.  Lorentz ones
    need ``g`` non-increasing on its support; a leading zero gap ``[0, L)`` is
    allowed and is removed (``g*(t) = g(t + L)``) before integrating.
    """
    if isinstance(spec, Lebesgue):
        if spec.p == INF:
            return sup_value(g)
        heights = {piece.c for piece in g.pieces}
        if len(heights) == 1:
            # |c h|_p = c |h|_p keeps c out of the root, so c**p need not be rational
            mass = ext_sum(power_integral(pc.alpha * spec.p, pc.a, pc.b) for pc in g.pieces)
            return ExtReal("exact", heights.pop()) * mass ** (1 / spec.p)
        return _lebesgue_power_sum(spec.p, g) ** (1 / spec.p)
    if isinstance(spec, Lorentz):
        if spec.p == INF:
            return sup_value(g)
        offset = monotone_offset(g)
        if spec.q == INF:
            return ext_max(_lorentz_sup(piece, offset, spec.p) for piece in g.pieces)
        total = ext_sum(_shifted_piece_integral(piece, offset, spec.p, spec.q) for piece in g.pieces)
        return total ** (1 / spec.q)
    raise InvalidSpec(f"unsupported norm spec {spec!r}")


def norm_of(spec: NormSpec, f: PPF) -> ExtReal:
    """Rearrange (when needed) and evaluate.

    Lebesgue values are computed twice, on ``f`` and on ``f*``, and must agree.
    """
    if isinstance(spec, Lebesgue):
        direct = norm_eval(spec, f)
        try:
            star = as_profile(f)
        except NotMonotone:
            return direct
        rearranged = norm_eval(spec, star)
        if not direct.close(rearranged, 1e-9):
            raise ArithmeticError(f"rearrangement invariance broken: {direct} vs {rearranged}")
        return rearranged
    return norm_eval(spec, as_profile(f))


def dual_exponent(p: Exponent) -> Exponent:
    """Hölder conjugate: ``1/p + 1/p' = 1``."""
    p = exponent(p)
    if p == INF:
        return Fraction(1)
    if p < 1:
        raise NotNormable(f"L^{p} has a trivial associate space")
    if p == 1:
        return INF
    return p / (p - 1)


def _indices(spec: NormSpec):
    if isinstance(spec, Lebesgue):
        return spec.p, spec.p
    return spec.p, spec.q


def local_stronger(a: NormSpec, b: NormSpec) -> bool:
    """Does finiteness of the local component of ``a`` force that of ``b``?"""
    if isinstance(a, Lebesgue) and isinstance(b, Lebesgue):
        return a.p >= b.p
    (pa, qa), (pb, qb) = _indices(a), _indices(b)
    if pa != pb:
        return pa > pb
    # equal primary index: Lorentz nesting in the secondary index
    return qa <= qb


def global_stronger(a: NormSpec, b: NormSpec) -> bool:
    """Does finiteness of the global component of ``a`` force that of ``b``?"""
    if isinstance(a, Lebesgue) and isinstance(b, Lebesgue):
        return a.p <= b.p
    (pa, qa), (pb, qb) = _indices(a), _indices(b)
    if pa != pb:
        return pa < pb
    return qa <= qb


def concavity_modulus(spec: NormSpec) -> Optional[ExtReal]:
    """Least ``C`` with ``|f+g| <= C(|f| + |g|)``, where known in closed form."""
    if isinstance(spec, Lebesgue):
        if spec.p == INF or spec.p >= 1:
            return ONE
        return rpow(2, 1 / spec.p - 1)
    if spec.p == INF or (1 <= spec.q <= spec.p):
        return ONE
    return None


def unit_p5_constant(spec: NormSpec) -> Optional[ExtReal]:
    """Smallest ``C`` with ``int_0^1 g <= C |g chi_[0,1]|`` (P5 on [0,1]), if known.

    For Lebesgue ``p >= 1`` Hölder gives 1; ``p < 1`` has no such constant.
    """
    if isinstance(spec, Lebesgue):
        return ONE if spec.p >= 1 else None
    if spec.p == spec.q:
        return unit_p5_constant(Lebesgue(spec.p))
    return None


def dilation_norm(spec: NormSpec, t) -> ExtReal:
    """``|D_t|`` on ``L^p``, which is ``t**(-1/p)``."""
    if not isinstance(spec, Lebesgue):
        raise InvalidSpec("closed-form dilation norm only for Lebesgue spaces")
    return rpow(as_fraction(t), -reciprocal(spec.p))
