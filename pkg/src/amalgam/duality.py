"""Pairings, Hölder checks and lower bounds for associate norms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .amalgams import SpaceSpec, space_norm, wl_norm
from .errors import AmalgamError, EmptyCandidates, InvalidSpec, NotNormable
from .extreal import INF, ExtReal, ext_max, ext_sum
from .norms import Lebesgue, dual_exponent, norm_of
from .stepfn import (PPF, MonotoneProfile, as_profile, common_refinement,
                     power_integral, profile)


def raw_pairing(f: PPF, g: PPF) -> ExtReal:
    """``int f g`` over the common refinement of both partitions."""
    terms = []
    for lo, hi, pf, pg in common_refinement(f, g):
        if pf is None or pg is None:
            continue
        terms.append(ExtReal("exact", pf.c * pg.c) * power_integral(pf.alpha + pg.alpha, lo, hi))
    return ext_sum(terms)


def rearranged_pairing(f: PPF, g: PPF) -> ExtReal:
    """``int f* g*``."""
    return raw_pairing(as_profile(f), as_profile(g))


@dataclass(frozen=True)
class PairingReport:
    spec: str
    lhs: ExtReal
    rhs: ExtReal
    passed: bool

    def to_json(self) -> dict:
        return {"spec": self.spec, "lhs": self.lhs.to_json(), "rhs": self.rhs.to_json(),
                "pass": self.passed}


def holder_check(spec: Lebesgue, f: PPF, g: PPF, rtol: float = 1e-9) -> PairingReport:
    """``int f g <= |f|_p |g|_p'``."""
    if not isinstance(spec, Lebesgue):
        raise InvalidSpec("Hölder check is implemented for Lebesgue norms")
    conj = Lebesgue(dual_exponent(spec.p))
    lhs = raw_pairing(f, g)
    rhs = norm_of(spec, f) * norm_of(conj, g)
    return PairingReport(str(spec), lhs, rhs, lhs.leq(rhs, rtol))


def wl_duality_check(p, q, f: PPF, g: PPF, rtol: float = 1e-9) -> PairingReport:
    """``int f* g* <= |f|_WL(L^p', L^q') |g|_WL(L^p, L^q)``."""
    local, global_ = Lebesgue(p), Lebesgue(q)
    if local.p < 1 or global_.p < 1:
        raise NotNormable("WL duality pairing needs p, q >= 1")
    lhs = rearranged_pairing(f, g)
    rhs = wl_norm(Lebesgue(dual_exponent(local.p)), Lebesgue(dual_exponent(global_.p)), f) \
        * wl_norm(local, global_, g)
    return PairingReport(f"WL:{local}:{global_}", lhs, rhs, lhs.leq(rhs, rtol))


def integrable_holder_check(p, f: PPF, g: PPF, rtol: float = 1e-9) -> PairingReport:
    """Hölder for the integrable norm of ``L^p``, ``p >= 1``.

    The associate of ``(L^p)_i`` is normed by the sum ``L^p' + WL(L^inf, L^1)``,
    whose norm is at most the smaller of the two summand norms, so
    ``int f g <= min{|f|_p', |f|_WL(L^inf, L^1)} * max{|g|_p, |g|_WL(L^1, L^inf)}``.
    """
    from .amalgams import integrable_norm

    inner = Lebesgue(p)
    if inner.p < 1:
        raise NotNormable("integrable Hölder check needs p >= 1")
    lhs = raw_pairing(f, g)
    dual_bound = min(norm_of(Lebesgue(dual_exponent(inner.p)), f),
                     wl_norm(Lebesgue(INF), Lebesgue(1), f))
    rhs = dual_bound * integrable_norm(inner, g)
    return PairingReport(f"Int:{inner}", lhs, rhs, lhs.leq(rhs, rtol))


@dataclass(frozen=True)
class CandidateSet:
    """Test functions for the associate supremum, with their norms precomputed."""

    spec: SpaceSpec
    candidates: Tuple[Tuple[MonotoneProfile, ExtReal], ...]

    @classmethod
    def build(cls, spec: SpaceSpec, profiles: Iterable[PPF]) -> "CandidateSet":
        kept = []
        for g in profiles:
            try:
                value = space_norm(spec, g)
            except AmalgamError:
                continue
            if value.is_finite and not value.is_zero:
                kept.append((as_profile(g), value))
        return cls(spec, tuple(kept))

    def __len__(self) -> int:
        return len(self.candidates)


def default_profiles() -> list:
    """Indicators ``chi_[0, 2^k)``, ``|k| <= 10``, plus power profiles.

    Power profiles are ``t^-b chi_[0,1)`` and ``chi_[0,1) + t^-b chi_[1,inf)``
    for ``b`` in ``{1/8, ..., 15/8}``; the ones with infinite norm are dropped
    when the set is built.
    """
    out = [profile([(0, Fraction(2) ** k, 1)]) for k in range(-10, 11)]
    for j in range(1, 16):
        beta = Fraction(j, 8)
        if beta < 1:
            out.append(profile([(0, 1, 1, -beta)]))
        out.append(profile([(0, 1, 1), (1, INF, 1, -beta)]))
    return out


def default_candidates(spec: SpaceSpec) -> CandidateSet:
    return CandidateSet.build(spec, default_profiles())


def associate_lower_bound(spec: SpaceSpec, f: PPF,
                          candidates: Optional[CandidateSet] = None) -> ExtReal:
    """``max_g int f* g* / |g|`` over the candidates: a lower bound for ``|f|_X'``."""
    if candidates is None:
        candidates = default_candidates(spec)
    if not len(candidates):
        raise EmptyCandidates("no candidate with finite positive norm")
    star = as_profile(f)
    return ext_max(raw_pairing(star, g) / value for g, value in candidates.candidates)
