"""Witness functions and counterexample families with certified series bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .amalgams import wiener_norm, wl_norm
from .errors import IndicesNotApplicable, UnsupportedIndices
from .extreal import INF, ONE, POS_INF, ZERO, ExtReal, fraction_str, rpow
from .norms import Lebesgue, exponent, exponent_str, norm_eval
from .stepfn import PPF, integral, normalize, power_integral, profile, restrict

RTOL = 1e-9


# -- series certificates ----------------------------------------------------

@dataclass(frozen=True)
class SeriesCertificate:
    """Integral-test verdict on ``sum_{n >= 1} n^-s``.

    ``bound`` is an upper bound for the full series when convergent and the
    lower bound ``int_1^(N+1) x^-s dx`` for the ``N``-th partial sum otherwise.
    """

    s: Fraction
    N: int
    convergent: bool
    partial_sum: ExtReal
    bound: ExtReal
    method: str = "integral-test"

    def valid(self) -> bool:
        if self.convergent:
            return self.partial_sum.leq(self.bound) and self.bound.is_finite
        return self.bound.leq(self.partial_sum)

    def to_json(self) -> dict:
        return {"exponent": fraction_str(self.s), "N": self.N, "method": self.method,
                "verdict": "convergent" if self.convergent else "divergent",
                "partial_sum": self.partial_sum.to_json(),
                ("upper_bound" if self.convergent else "lower_bound"): self.bound.to_json()}


def _partial_pseries(s: Fraction, N: int) -> ExtReal:
    if s == 0:
        return ExtReal("exact", Fraction(N))
    fs = float(s)
    # fsum is correctly rounded; each term carries one rounding of pow
    return ExtReal.approx(math.fsum(n ** -fs for n in range(1, N + 1)), 1e-12)


def pseries_certificate(s, N: int) -> SeriesCertificate:
    s = Fraction(s)
    if N < 2:
        raise ValueError("N must be at least 2")
    if s < 0:
        raise ValueError("exponent must be non-negative")
    partial = _partial_pseries(s, N)
    if s > 1:
        tail = rpow(N, 1 - s) / ExtReal("exact", s - 1)
        return SeriesCertificate(s, N, True, partial, partial + tail)
    return SeriesCertificate(s, N, False, partial, power_integral(-s, 1, N + 1))


def geometric_certificate(N: int) -> SeriesCertificate:
    """``sum_{n >= 0} 2^-n = 2``, exactly."""
    partial = ExtReal("exact", 2 - Fraction(1, 2 ** N))
    return SeriesCertificate(Fraction(0), N, True, partial, ExtReal("exact", 2), "geometric")


# -- bundles ----------------------------------------------------------------

@dataclass(frozen=True)
class Side:
    """One side of a witness: a quantity with its value and how it is backed."""

    label: str
    value: ExtReal
    closed_form: Optional[ExtReal] = None
    certificate: Optional[SeriesCertificate] = None
    reason: str = ""

    def check(self) -> bool:
        if self.certificate is not None:
            if not self.certificate.valid():
                return False
            if self.certificate.convergent != self.value.is_finite:
                return False
        if self.closed_form is not None:
            if self.closed_form.is_finite != self.value.is_finite:
                return False
            if self.value.is_finite and not self.value.close(self.closed_form, RTOL):
                return False
        return self.closed_form is not None or self.certificate is not None

    def to_json(self) -> dict:
        out = {"label": self.label, "value": self.value.to_json()}
        if self.closed_form is not None:
            out["closed_form"] = self.closed_form.to_json()
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class WitnessBundle:
    name: str
    params: Dict[str, str]
    function: PPF
    finite: Tuple[Side, ...]
    infinite: Tuple[Side, ...]
    note: str
    truncation: Dict[str, ExtReal] = field(default_factory=dict)
    cross_checks: Tuple[Tuple[str, bool], ...] = ()

    def verify(self) -> bool:
        return (all(s.value.is_finite and s.check() for s in self.finite)
                and all(not s.value.is_finite and s.check() for s in self.infinite)
                and all(ok for _, ok in self.cross_checks))

    def to_json(self) -> dict:
        from .formats import function_to_json

        return {"name": self.name, "params": dict(self.params), "note": self.note,
                "function": function_to_json(self.function),
                "finite": [s.to_json() for s in self.finite],
                "infinite": [s.to_json() for s in self.infinite],
                "truncation": {k: v.to_json() for k, v in self.truncation.items()},
                "cross_checks": {k: ok for k, ok in self.cross_checks},
                "verified": self.verify()}


def _midpoint(lo, hi) -> Fraction:
    return (Fraction(lo) + Fraction(hi)) / 2


def _dyadic(x: ExtReal) -> Fraction:
    """``x`` as a dyadic rational: kept when already dyadic, else its binary64 value.

    Truncations are cross-checks only; dyadic data keeps the common
    denominators of their exact sums small.
    """
    if x.is_exact and x.value.denominator & (x.value.denominator - 1) == 0:
        return x.value
    return Fraction(float(x))


# -- embedding-failure witnesses --------------------------------------------

def tem_local_witness(pA, pB) -> WitnessBundle:
    """A profile on ``(0,1)`` in ``L^pA`` but not in ``L^pB``, for ``pA < pB``.

    ``f = t^(-1/pB)`` gives ``|f|_pA = (pB/(pB-pA))^(1/pA)``.  For ``pB = inf``
    the unbounded profile ``t^(-1/(2 pA))`` is used, with ``|f|_pA = 2^(1/pA)``.
    """
    pA, pB = exponent(pA), exponent(pB)
    if not pA < pB:
        raise UnsupportedIndices(f"local component L^{exponent_str(pA)} is not weaker "
                                 f"than L^{exponent_str(pB)}")
    if pB == INF:
        beta = 1 / (2 * pA)
        closed = rpow(2, 1 / pA)
    else:
        beta = 1 / pB
        closed = rpow(pB / (pB - pA), 1 / pA)
    f = profile([(0, 1, 1, -beta)])
    finite = Side(f"L:{exponent_str(pA)} on [0,1]", norm_eval(Lebesgue(pA), f), closed)
    reason = ("unbounded near 0" if pB == INF
              else f"integrand t^-1 of the L^{exponent_str(pB)} norm is not integrable at 0")
    infinite = Side(f"L:{exponent_str(pB)} on [0,1]", norm_eval(Lebesgue(pB), f), POS_INF, reason=reason)
    return WitnessBundle("tem-local", {"pA": exponent_str(pA), "pB": exponent_str(pB)}, f,
                         (finite,), (infinite,),
                         f"f(t) = t^(-{fraction_str(beta)}) on (0,1)")


def tem_global_witness(qB, qC) -> WitnessBundle:
    """``f = chi_[0,1) + t^(-1/qC) chi_[1,inf)``: tail in ``L^qB`` but not ``L^qC``, ``qB > qC``."""
    qB, qC = exponent(qB), exponent(qC)
    if qC == INF or not qB > qC:
        raise UnsupportedIndices(f"global component L^{exponent_str(qB)} is not weaker "
                                 f"than L^{exponent_str(qC)}")
    gamma = 1 / qC
    f = profile([(0, 1, 1), (1, INF, 1, -gamma)])
    tail = restrict(f, 1, INF)
    closed = ONE if qB == INF else rpow(qB / qC - 1, -1 / qB)
    finite = Side(f"L:{exponent_str(qB)} on (1,inf)", norm_eval(Lebesgue(qB), tail), closed)
    infinite = Side(f"L:{exponent_str(qC)} on (1,inf)", norm_eval(Lebesgue(qC), tail), POS_INF,
                    reason=f"integrand t^-1 of the L^{exponent_str(qC)} norm is not integrable at inf")
    checks = (("f*(1) = 1", f(Fraction(1)) == ONE),)
    return WitnessBundle("tem-global", {"qB": exponent_str(qB), "qC": exponent_str(qC)}, f,
                         (finite,), (infinite,),
                         f"f = chi_[0,1) + t^(-{fraction_str(gamma)}) chi_[1,inf)",
                         cross_checks=checks)


# -- Wiener amalgam families -------------------------------------------------

def _wiener_exponents(p, q) -> Tuple:
    p, q = exponent(p), exponent(q)
    if p < 1 or q < 1:
        raise IndicesNotApplicable("Wiener amalgam exponents must be >= 1")
    return p, q


def _inside(name: str, x, lo, hi=None) -> Fraction:
    x = Fraction(x)
    if not (lo < x and (hi is None or x < hi)):
        upper = "inf" if hi is None else fraction_str(Fraction(hi))
        raise IndicesNotApplicable(f"{name} = {fraction_str(x)} is outside ({fraction_str(Fraction(lo))}, {upper})")
    return x


def rwnbfs_p4_family(p, q, N: int = 10_000, a=None) -> WitnessBundle:
    """A set of finite measure whose indicator has infinite ``W(L^p, l^q)`` norm, ``q < p``.

    ``E = U_{n >= 1} [n, n + n^-a)`` with ``a = (1 + p/q)/2``: ``lambda(E) = sum n^-a``
    converges while ``|chi_E|_W^q = sum n^(-a q/p)`` diverges.  For ``p = inf``
    the blocks are ``[n, n + 2^-n)``, ``n >= 0``.  Any ``a`` in ``(1, p/q)`` may be
    passed instead of the midpoint.
    """
    p, q = _wiener_exponents(p, q)
    if not q < p:
        raise IndicesNotApplicable("the P4 family needs q < p")
    params = {"p": exponent_str(p), "q": exponent_str(q), "N": str(N)}
    label = f"|chi_E|_W:{exponent_str(p)}:{exponent_str(q)}"
    if p == INF:
        E = normalize((n, n + Fraction(1, 2 ** n), 1) for n in range(N + 1))
        measure = geometric_certificate(N)
        diverge = pseries_certificate(0, N)
        params["a"] = "n/a"
        note = "E = union of [n, n + 2^-n), n >= 0; every cell has sup-norm 1"
        norm_label = label + "^q (sum of cell sup-norms^q)"
        extra_cells = ONE  # the n = 0 block is not counted by the series
    else:
        a = (1 + p / q) / 2 if a is None else _inside("a", a, 1, p / q)
        params["a"] = fraction_str(a)
        lengths = [_dyadic(rpow(n, -a)) for n in range(1, N + 1)]
        E = normalize((n, n + length, 1) for n, length in zip(range(1, N + 1), lengths))
        measure = pseries_certificate(a, N)
        diverge = pseries_certificate(a * q / p, N)
        note = f"E = union of [n, n + n^-{fraction_str(a)}), n >= 1"
        norm_label = label + "^q"
        extra_cells = ZERO
    truncated_measure = integral(E)
    truncated_norm_q = wiener_norm(p, q, E) ** q
    checks = (
        ("truncated measure <= measure bound", truncated_measure.leq(measure.bound)),
        ("truncated norm^q matches partial sum",
         truncated_norm_q.close(diverge.partial_sum + extra_cells, 1e-6)),
    )
    return WitnessBundle(
        "rwnbfs-p4", params, E,
        (Side("lambda(E)", measure.bound, certificate=measure),),
        (Side(norm_label, POS_INF, certificate=diverge),),
        note,
        truncation={"lambda(E_N)": truncated_measure, "|chi_E_N|_W": truncated_norm_q ** (1 / q)},
        cross_checks=checks)


def rwnbfs_p5_family(p, q, N: int = 10_000, a=None, b=None) -> WitnessBundle:
    """A function in ``W(L^p, l^q)`` not integrable over a set of finite measure, ``p < q``.

    ``f = sum n^((b-a)/p) chi_[n, n + n^-b)`` on ``E = U [n, n + n^-b)`` with
    ``a = (p/q + 1)/2`` and ``b`` the midpoint of ``(1, (p-a)/(p-1))`` (``b = 2``
    for ``p = 1``).  For ``q = inf`` the heights are ``n^(b/p)`` so every cell
    has norm 1, with ``b`` the midpoint of ``(1, p/(p-1))``.  Explicit ``a`` and
    ``b`` inside these ranges override the midpoints.
    """
    p, q = _wiener_exponents(p, q)
    if p == INF or not p < q:
        raise IndicesNotApplicable("the P5 family needs p < q")
    if q == INF:
        a = Fraction(0)
        b_hi = None if p == 1 else p / (p - 1)
    else:
        a = (p / q + 1) / 2 if a is None else _inside("a", a, p / q, 1)
        b_hi = None if p == 1 else (p - a) / (p - 1)
    if b is None:
        b = Fraction(2) if b_hi is None else _midpoint(1, b_hi)
    else:
        b = _inside("b", b, 1, b_hi)
    # q = inf drops the a-term so every cell has norm exactly 1
    height_exp = (b - a) / p
    params = {"p": exponent_str(p), "q": exponent_str(q), "N": str(N),
              "a": fraction_str(a) if q != INF else "n/a", "b": fraction_str(b)}
    rows = [(n, _dyadic(rpow(n, -b)), _dyadic(rpow(n, height_exp))) for n in range(1, N + 1)]
    f = normalize((n, n + length, h) for n, length, h in rows)
    E = normalize((n, n + length, 1) for n, length, _ in rows)

    measure = pseries_certificate(b, N)
    integral_cert = pseries_certificate(b - height_exp, N)
    label = f"W:{exponent_str(p)}:{exponent_str(q)}"
    if q == INF:
        norm_side = Side(f"|f|_{label}", ONE, closed_form=ONE, reason="every cell has L^p norm 1")
        truncated_norm = wiener_norm(p, q, f)
        norm_ok = truncated_norm.close(ONE, 1e-6)
    else:
        norm_cert = pseries_certificate(a * q / p, N)
        norm_side = Side(f"|f|_{label}^q", norm_cert.bound, certificate=norm_cert)
        truncated_norm = wiener_norm(p, q, f)
        norm_ok = (truncated_norm ** q).close(norm_cert.partial_sum, 1e-6)
    truncated_integral = integral(f)
    truncated_measure = integral(E)
    checks = (
        ("truncated measure <= measure bound", truncated_measure.leq(measure.bound)),
        ("truncated norm matches partial sum", norm_ok),
        ("truncated integral matches partial sum",
         truncated_integral.close(integral_cert.partial_sum, 1e-6)),
    )
    return WitnessBundle(
        "rwnbfs-p5", params, f,
        (Side("lambda(E)", measure.bound, certificate=measure), norm_side),
        (Side("int_E f", POS_INF, certificate=integral_cert),),
        f"f = sum n^{fraction_str(height_exp)} chi_[n, n + n^-{fraction_str(b)}), n >= 1",
        truncation={"lambda(E_N)": truncated_measure, "int_E_N f": truncated_integral,
                    "|f_N|_W": truncated_norm},
        cross_checks=checks)


# -- HLP family ---------------------------------------------------------------

@dataclass(frozen=True)
class ChlpFamily:
    """``f_N = chi_[0,N)/N`` against ``g = chi_[0,1)`` in ``WL(L^1, L^p)``."""

    p: Fraction
    N: int
    f: PPF
    g: PPF
    dominated: bool
    ratio: ExtReal
    closed_form: ExtReal

    def verify(self) -> bool:
        return self.dominated and self.ratio.close(self.closed_form, RTOL)

    def to_json(self) -> dict:
        from .formats import function_to_json

        return {"name": "chlp", "params": {"p": fraction_str(self.p), "N": str(self.N)},
                "note": "f_N = chi_[0,N)/N, g = chi_[0,1), spec WL:L:1:L:p",
                "f": function_to_json(self.f), "g": function_to_json(self.g),
                "dominated": self.dominated, "ratio": self.ratio.to_json(),
                "closed_form": self.closed_form.to_json(), "verified": self.verify()}


def chlp_family(p, N: int) -> ChlpFamily:
    """Ratio ``1/N + (N-1)^(1/p)/N``, unbounded in ``N`` when ``p < 1``."""
    from .laws import hlp_compare

    p = exponent(p)
    if p == INF:
        raise IndicesNotApplicable("chlp needs a finite global index")
    if N < 1:
        raise ValueError("N must be positive")
    f = normalize([(0, N, Fraction(1, N))])
    g = normalize([(0, 1, 1)])
    local, global_ = Lebesgue(1), Lebesgue(p)
    ratio = wl_norm(local, global_, f) / wl_norm(local, global_, g)
    closed = ExtReal("exact", Fraction(1, N)) + rpow(N - 1, 1 / p) / ExtReal("exact", N)
    return ChlpFamily(p, N, f, g, hlp_compare(f, g), ratio, closed)


def local_integrability_witness(p) -> WitnessBundle:
    """For ``p < 1``: a profile on ``(0,1)`` in ``L^p`` but not integrable.

    ``f = t^-b`` with ``b`` the midpoint of ``(1, 1/p)`` has
    ``|f|_p = (1/(1 - b p))^(1/p)`` and ``int_0^1 f = inf``.
    """
    p = exponent(p)
    if p == INF or p >= 1:
        raise UnsupportedIndices("L^p with p >= 1 controls the integral over [0,1]")
    beta = _midpoint(1, 1 / p)
    f = profile([(0, 1, 1, -beta)])
    closed = rpow(1 / (1 - beta * p), 1 / p)
    finite = Side(f"L:{exponent_str(p)} on [0,1]", norm_eval(Lebesgue(p), f), closed)
    infinite = Side("L:1 on [0,1]", norm_eval(Lebesgue(1), f), POS_INF,
                    reason=f"t^-{fraction_str(beta)} is not integrable at 0")
    return WitnessBundle("local-integrability", {"p": exponent_str(p)}, f, (finite,), (infinite,),
                         f"f(t) = t^(-{fraction_str(beta)}) on (0,1)")
