"""Wiener-Luxemburg quasinorms, the Wiener amalgam norm and the integrable norm."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from .errors import InvalidSpec, UnsupportedCombination
from .extreal import INF, ONE, POS_INF, ZERO, ExtReal, ext_max, ext_sum, rpow
from .norms import (Exponent, Lebesgue, Lorentz, NormSpec, concavity_modulus,
                    dilation_norm, exponent, exponent_str, norm_eval, norm_of,
                    reciprocal, unit_p5_constant)
from .stepfn import PPF, as_profile, evaluate, partial_integral, restrict


@dataclass(frozen=True)
class WL:
    """``|f*chi_[0,1]|_local + |f*chi_(1,inf)|_global``."""

    local: NormSpec
    global_: NormSpec

    def __str__(self) -> str:
        return f"WL:{self.local}:{self.global_}"


@dataclass(frozen=True)
class Wiener:
    """``l^q`` sum over unit cells ``[n, n+1)`` of local ``L^p`` norms."""

    p: Exponent
    q: Exponent

    def __post_init__(self):
        for name in ("p", "q"):
            value = exponent(getattr(self, name))
            if value < 1:
                raise InvalidSpec("Wiener amalgam exponents must be >= 1")
            object.__setattr__(self, name, value)

    def __str__(self) -> str:
        return f"W:{exponent_str(self.p)}:{exponent_str(self.q)}"


@dataclass(frozen=True)
class Integrable:
    """``max{|f|_inner, |f|_WL(L^1, L^inf)}``."""

    inner: Union[NormSpec, WL]

    def __post_init__(self):
        if not isinstance(self.inner, (Lebesgue, Lorentz, WL)):
            raise InvalidSpec("the integrable norm wraps a simple or WL spec")

    def __str__(self) -> str:
        return f"Int:{self.inner}"


SpaceSpec = Union[Lebesgue, Lorentz, WL, Wiener, Integrable]


def wl_components(local: NormSpec, global_: NormSpec, f: PPF) -> Tuple[ExtReal, ExtReal]:
    """Local and global components of the WL quasinorm of ``f``."""
    star = as_profile(f)
    head = norm_eval(local, restrict(star, 0, 1))
    tail = norm_eval(global_, restrict(star, 1, INF))
    return head, tail


def wl_norm(local: NormSpec, global_: NormSpec, f: PPF) -> ExtReal:
    head, tail = wl_components(local, global_, f)
    return head + tail


def _cell_contents(p: Exponent, f: PPF):
    """Per-cell ``int |f|^p`` (or sup for ``p = inf``) for a step function.

    Returns ``(cells, runs, tail)``: a dict of partially covered cells, a list
    of ``(count, height)`` runs of fully covered cells and the height of an
    unbounded final piece (or None).
    """
    cells: dict = {}
    runs = []
    tail = None

    def put(n: int, height: Fraction, length: Fraction):
        if p == INF:
            cells[n] = ext_max([cells.get(n, ZERO), ExtReal("exact", height)])
        else:
            cells[n] = cells.get(n, ZERO) + rpow(height, p) * ExtReal("exact", length)

    for piece in f.pieces:
        if piece.alpha != 0:
            raise UnsupportedCombination("Wiener norm is implemented for step functions")
        a, b, c = piece.a, piece.b, piece.c
        first_full = math.ceil(a)
        if first_full > a:
            put(math.floor(a), c, min(b, Fraction(first_full)) - a)
        if b == INF:
            tail = c
            continue
        last_full = math.floor(b)
        if last_full > first_full:
            runs.append((last_full - first_full, c))
        if last_full >= first_full and b > last_full:
            put(last_full, c, b - last_full)
    return cells, runs, tail


def wiener_norm(p, q, f: PPF) -> ExtReal:
    """``|f|_W(L^p, l^q)`` for a step function."""
    spec = Wiener(p, q)
    p, q = spec.p, spec.q
    cells, runs, tail = _cell_contents(p, f)
    if q == INF:
        cell_norms = [v if p == INF else v ** (1 / p) for v in cells.values()]
        heights = [ExtReal("exact", c) for _, c in runs]
        if tail is not None:
            heights.append(ExtReal("exact", tail))
        return ext_max(cell_norms + heights)
    if tail is not None:
        return POS_INF
    # |cell|_p**q straight from the cell content keeps rational results exact
    total = ext_sum(v ** q if p == INF else v ** (q / p) for v in cells.values())
    total = total + ext_sum(ExtReal("exact", count) * rpow(c, q) for count, c in runs)
    return total ** (1 / q)


def rearranged_wiener(p, q, f: PPF) -> ExtReal:
    """``|f*|_W(L^p, l^q)``."""
    return wiener_norm(p, q, as_profile(f))


def integrable_norm(inner, f: PPF) -> ExtReal:
    """``max{|f|_inner, int_0^1 f* + f*(1)}``.

    The ``L^inf`` tail of ``WL(L^1, L^inf)`` is ``f*(1)`` because ``f*`` is
    right-continuous.
    """
    Integrable(inner)
    star = as_profile(f)
    local_part = partial_integral(star, 1) + evaluate(star, 1)
    return ext_max([space_norm(inner, f), local_part])


def tia_modulus_bound(p, q) -> ExtReal:
    """``2**(1/p + 1/q)``, the quasi-triangle constant of ``f -> |f*|_W(L^p, l^q)``."""
    spec = Wiener(p, q)
    return rpow(2, reciprocal(spec.p) + reciprocal(spec.q))


def space_norm(spec: SpaceSpec, f: PPF) -> ExtReal:
    """Evaluate any supported functional on ``f``."""
    if isinstance(spec, (Lebesgue, Lorentz)):
        return norm_of(spec, f)
    if isinstance(spec, WL):
        return wl_norm(spec.local, spec.global_, f)
    if isinstance(spec, Wiener):
        return wiener_norm(spec.p, spec.q, f)
    if isinstance(spec, Integrable):
        return integrable_norm(spec.inner, f)
    raise InvalidSpec(f"unsupported spec {spec!r}")


# -- constants read off the proofs ------------------------------------------

def wiener_equivalence_chain(p, q, f: PPF):
    """Both estimates relating ``|f|_WL(L^p,L^q)`` and ``|f*|_W(L^p,l^q)``.

    Returns ``(lower, upper)`` where each is a tuple ``(lhs, rhs)`` that must
    satisfy ``lhs <= rhs``:

    * lower: ``|f|_WL <= 2 |f*|_W``
    * upper: ``|f*|_W**q <= 2 |f* chi_[0,1)|_p**q + int_1^inf (f*)**q``; for
      ``q = inf`` the sum becomes a max: ``|f*|_W <= max{|f* chi_[0,1)|_p, f*(1)}``.
    """
    spec = Wiener(p, q)
    p, q = spec.p, spec.q
    star = as_profile(f)
    rw = wiener_norm(p, q, star)
    wl = wl_norm(Lebesgue(p), Lebesgue(q), star)
    lower = (wl, ExtReal("exact", 2) * rw)
    head = norm_eval(Lebesgue(p), restrict(star, 0, 1))
    if q == INF:
        upper = (rw, ext_max([head, evaluate(star, 1)]))
    else:
        tail_q = norm_eval(Lebesgue(q), restrict(star, 1, INF)) ** q
        upper = (rw ** q, ExtReal("exact", 2) * head ** q + tail_q)
    return lower, upper


def wl_triangle_constant(local: Lebesgue, global_: Lebesgue) -> ExtReal:
    """Quasi-triangle constant of ``WL(L^p, L^q)`` assembled via ``D_{1/2}``.

    ``max(C_A, C_B) * (|D_1/2|_A + |D_1/2|_B * max{1, |chi_(1/2,1)|_B / |chi_(0,1/2)|_A})``.
    """
    if not (isinstance(local, Lebesgue) and isinstance(global_, Lebesgue)):
        raise InvalidSpec("closed-form constant only for Lebesgue components")
    half = Fraction(1, 2)
    ratio = rpow(half, reciprocal(global_.p)) / rpow(half, reciprocal(local.p))
    modulus = ext_max([concavity_modulus(local), concavity_modulus(global_)])
    return modulus * (dilation_norm(local, half)
                      + dilation_norm(global_, half) * ext_max([ONE, ratio]))


def wl_p5_constant(local: NormSpec, measure) -> ExtReal:
    """``C_E`` with ``int_E f <= C_E |f|_WL`` for sets of the given measure.

    Follows the Hardy-Littlewood split ``int_0^|E| f* <= max(1, |E|) int_0^1 f*``
    and needs the local component to control ``int_0^1`` (P5 on [0, 1]).
    """
    unit = unit_p5_constant(local)
    if unit is None:
        raise InvalidSpec(f"{local} has no P5 constant on [0, 1]")
    return ext_max([ONE, ExtReal.coerce(measure)]) * unit


def wl_dilation_bound(local: Lebesgue, global_: Lebesgue, t) -> ExtReal:
    """Upper bound for ``|D_t f|_WL / |f|_WL`` with Lebesgue components ``p, q >= 1``.

    For ``t <= 1``: ``max{t^(-1/p) (1 + t^(-1/q) (1-t)^(1/q)), t^(-1/q)}``;
    for ``t > 1``: ``max{t^(-1/p) (1 + (t-1)^(1/p)), t^(-1/q)}``.
    """
    t = Fraction(t)
    if not (isinstance(local, Lebesgue) and isinstance(global_, Lebesgue)) \
            or local.p < 1 or global_.p < 1:
        raise InvalidSpec("dilation bound needs Lebesgue components with p >= 1")
    rp, rq = reciprocal(local.p), reciprocal(global_.p)
    tail = rpow(t, -rq)
    if t <= 1:
        head = rpow(t, -rp) * (ONE + rpow(t, -rq) * rpow(1 - t, rq))
    else:
        head = rpow(t, -rp) * (ONE + rpow(t - 1, rp))
    return ext_max([head, tail])
