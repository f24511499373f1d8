"""Property suites producing machine-readable reports."""

from __future__ import annotations

import bisect
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .amalgams import (WL, Integrable, SpaceSpec, Wiener, space_norm, wiener_equivalence_chain,
                       wl_dilation_bound, wl_norm, wl_p5_constant, wl_triangle_constant)
from .cases import RandomCaseConfig, power_cases, step_cases, step_pairs
from .duality import (holder_check, integrable_holder_check, raw_pairing, rearranged_pairing,
                      wl_duality_check)
from .errors import (DominationFailed, InvalidSpec, NotNormable, UnsupportedCombination,
                     WitnessUnavailable)
from .extreal import INF, ONE, ZERO, ExtReal, ext_max, rpow
from .norms import (Lebesgue, Lorentz, NormSpec, concavity_modulus, dual_exponent,
                    global_stronger, local_stronger, norm_eval, norm_of, reciprocal,
                    unit_p5_constant)
from .stepfn import (PPF, add, as_profile, dilate, distribution, evaluate, indicator, integral,
                     is_nonincreasing, min_with_const, normalize, partial_integral,
                     rearrange_step, restrict, scale, subtract_const_clamped)
from .witnesses import (WitnessBundle, chlp_family, local_integrability_witness,
                        rwnbfs_p4_family, rwnbfs_p5_family, tem_global_witness,
                        tem_local_witness)

RTOL = 1e-9


# -- reports ------------------------------------------------------------------

@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a suite.  ``verdict`` is ``"pass"`` exactly when there are no failures.

    ``findings`` holds everything the suite established that is not a
    pass/fail check, such as certified counterexamples it was asked to find.
    """

    suite: str
    cases: int
    failures: Tuple[dict, ...] = ()
    observed_constant: float = 0.0
    findings: Dict[str, object] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: "PropertyReport") -> "PropertyReport":
        findings = dict(self.findings)
        findings.update(other.findings)
        return PropertyReport(self.suite, self.cases + other.cases,
                              self.failures + other.failures,
                              max(self.observed_constant, other.observed_constant), findings)

    def to_json(self) -> dict:
        return {"suite": self.suite, "cases": self.cases, "failures": list(self.failures),
                "observed_constant": self.observed_constant, "verdict": self.verdict,
                "findings": self.findings}


@dataclass(frozen=True)
class CaseResult:
    ok: bool
    constant: float = 0.0
    detail: Optional[dict] = None


def _serialize(*fs: PPF) -> List[dict]:
    from .formats import function_to_json
    return [function_to_json(f) for f in fs]


def _fail(label: str, *fs: PPF, **extra) -> dict:
    out = {"check": label, "inputs": _serialize(*fs)}
    out.update({k: str(v) for k, v in extra.items()})
    return out


def _ratio(num: ExtReal, den: ExtReal) -> float:
    if den.is_zero or not den.is_finite or not num.is_finite:
        return 0.0
    return float(num) / float(den)


def _run(suite: str, check: Callable, items: Sequence, workers: int = 1,
         findings: Optional[dict] = None) -> PropertyReport:
    """Apply ``check`` to every item, optionally in worker processes (order preserved)."""
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(check, items, chunksize=max(1, len(items) // (4 * workers))))
    else:
        results = [check(item) for item in items]
    failures = tuple(r.detail for r in results if not r.ok)
    constant = max((r.constant for r in results), default=0.0)
    return PropertyReport(suite, len(items), failures, constant, dict(findings or {}))


def _leq(lhs: ExtReal, rhs: ExtReal, rtol: float = RTOL) -> bool:
    return lhs.leq(rhs, rtol)


# -- Hardy-Littlewood-Pólya relation -----------------------------------------

def hlp_compare(f: PPF, g: PPF) -> bool:
    """``int_0^t f* <= int_0^t g*`` for every ``t``, decided exactly for step functions.

    Both sides are concave and piecewise linear, so it is enough to compare at
    the merged breakpoints and then the final slopes.
    """
    if not (f.is_step and g.is_step):
        raise UnsupportedCombination("hlp_compare needs step functions")
    fs, gs = as_profile(f), as_profile(g)
    points = sorted(set(fs.breakpoints()) | set(gs.breakpoints()))
    for t in points:
        if not partial_integral(fs, t) <= partial_integral(gs, t):
            return False
    last = points[-1] if points else Fraction(0)
    return evaluate(fs, last) <= evaluate(gs, last)


# -- rearrangement ------------------------------------------------------------

class _LevelTable:
    """``mu_f`` of a finite step function from its sorted levels and suffix sums of their measures."""

    def __init__(self, f: PPF):
        measure: Dict[Fraction, Fraction] = {}
        for p in f.pieces:
            measure[p.c] = measure.get(p.c, Fraction(0)) + (p.b - p.a)
        self.levels = sorted(measure)
        self.above = [Fraction(0)] * (len(self.levels) + 1)
        for i in range(len(self.levels) - 1, -1, -1):
            self.above[i] = self.above[i + 1] + measure[self.levels[i]]

    def mu(self, s: Fraction) -> Fraction:
        return self.above[bisect.bisect_right(self.levels, s)]

    def inverse(self, t: Fraction) -> Fraction:
        """``inf {s >= 0 : mu_f(s) <= t}``; the infimum sits at 0 or at a level."""
        for s in [Fraction(0)] + self.levels:
            if self.mu(s) <= t:
                return s
        raise AssertionError("mu_f vanishes above the top level")


def _check_rearrangement(seed: int, item) -> CaseResult:
    index, f = item
    star = rearrange_step(f)
    if not is_nonincreasing(star) or rearrange_step(star) != star:
        return CaseResult(False, detail=_fail("monotone and idempotent", f))
    levels = sorted({p.c for p in f.pieces})
    svals = {Fraction(0)} | set(levels) | {levels[-1] + 1}
    svals |= {(x + y) / 2 for x, y in zip(levels, levels[1:])}
    rng = random.Random(f"{seed}:levels:{index}")
    top = int(levels[-1]) + 2
    while len(svals) < 50:
        svals.add(Fraction(rng.randint(0, 64 * top), 64))
    table = _LevelTable(f)
    for s in sorted(svals)[:50]:
        oracle = table.mu(s)
        if distribution(f, s) != ExtReal("exact", oracle) or distribution(star, s) != ExtReal("exact", oracle):
            return CaseResult(False, detail=_fail("distribution", f, s=s))
    grid = sorted(set(f.breakpoints()) | set(star.breakpoints()))
    grid += [(x + y) / 2 for x, y in zip(grid, grid[1:])] + [grid[-1] + 1]
    for t in grid:
        if evaluate(star, t) != ExtReal("exact", table.inverse(t)):
            return CaseResult(False, detail=_fail("generalized inverse", f, t=t))
    return CaseResult(True, 1.0)


def rearrangement_suite(cfg: RandomCaseConfig, workers: int = 1) -> PropertyReport:
    items = list(enumerate(step_cases(cfg, salt=1)))
    return _run("rearrangement", partial(_check_rearrangement, cfg.seed), items, workers)


def _check_hardy_littlewood(pair) -> CaseResult:
    f, g = pair
    raw, rearranged = raw_pairing(f, g), rearranged_pairing(f, g)
    return CaseResult(raw <= rearranged, _ratio(raw, rearranged),
                      None if raw <= rearranged else _fail("int fg <= int f*g*", f, g))


def hardy_littlewood_suite(cfg: RandomCaseConfig, workers: int = 1) -> PropertyReport:
    return _run("hardy-littlewood", _check_hardy_littlewood, list(step_pairs(cfg, salt=2)), workers)


# -- amalgam sandwich and equivalence ------------------------------------------

def _check_remark_sandwich(spec: NormSpec, modulus: ExtReal, f: PPF) -> CaseResult:
    plain = norm_of(spec, f)
    amalgam = wl_norm(spec, spec, f)
    ok = _leq(plain, amalgam) and _leq(amalgam, ExtReal("exact", 2) * modulus * plain)
    return CaseResult(ok, _ratio(amalgam, plain),
                      None if ok else _fail("|f|_A <= |f|_WL(A,A) <= 2 C_A |f|_A", f,
                                            plain=plain, amalgam=amalgam))


def remark_sandwich_suite(spec: NormSpec, cfg: RandomCaseConfig, workers: int = 1) -> PropertyReport:
    """``|f|_A <= |f|_WL(A,A) <= 2 C_A |f|_A`` with ``C_A`` the modulus of concavity."""
    modulus = concavity_modulus(spec)
    if modulus is None:
        raise InvalidSpec(f"no known modulus of concavity for {spec}")
    items = list(step_cases(cfg, salt=3))
    return _run(f"remark-sandwich[{spec}]", partial(_check_remark_sandwich, spec, modulus), items,
                workers, {"modulus": modulus.to_json()})


WIENER_GRID = tuple((p, q) for p in (1, Fraction(3, 2), 2, INF) for q in (1, Fraction(3, 2), 2, INF))


def _check_wiener_equivalence(grid, f: PPF) -> CaseResult:
    worst = 0.0
    for p, q in grid:
        (wl, lower_rhs), (upper_lhs, upper_rhs) = wiener_equivalence_chain(p, q, f)
        if not (_leq(wl, lower_rhs) and _leq(upper_lhs, upper_rhs)):
            return CaseResult(False, detail=_fail("Wiener equivalence chain", f, p=p, q=q))
        worst = max(worst, _ratio(wl, lower_rhs), _ratio(upper_lhs, upper_rhs))
    return CaseResult(True, worst)


def wiener_equivalence_suite(cfg: RandomCaseConfig, grid=WIENER_GRID, workers: int = 1) -> PropertyReport:
    """Both estimates between ``|f|_WL(L^p,L^q)`` and ``|f*|_W(L^p,l^q)`` for every ``(p, q)``."""
    items = list(step_cases(cfg, salt=4))
    return _run("wiener-equivalence", partial(_check_wiener_equivalence, tuple(grid)), items, workers)


# -- HLP ------------------------------------------------------------------------

def hlp_suite(spec: SpaceSpec, family: Iterable[Tuple[PPF, PPF]], threshold: float = 10.0) -> PropertyReport:
    """Largest ``|f_N| / |g|`` over a dominated family.

    Every pair must satisfy :func:`hlp_compare`; a ratio above ``threshold``
    is reported as a violation of the HLP principle in ``findings``.
    """
    ratios = []
    for f, g in family:
        if not hlp_compare(f, g):
            raise DominationFailed("a family pair is not dominated")
        ratios.append(_ratio(space_norm(spec, f), space_norm(spec, g)))
    worst = max(ratios, default=0.0)
    findings = {"spec": str(spec), "threshold": threshold, "ratios": ratios,
                "hlp_violated": worst > threshold}
    return PropertyReport(f"hlp[{spec}]", len(ratios), (), worst, findings)


def chlp_pairs(p, sizes: Iterable[int] = (1, 2, 10, 100, 1000, 10_000)) -> List[Tuple[PPF, PPF]]:
    out = []
    for N in sizes:
        fam = chlp_family(p, N)
        out.append((fam.f, fam.g))
    return out


# -- embeddings -------------------------------------------------------------------

def _check_embedding(source: WL, target: WL, f: PPF) -> CaseResult:
    a = wl_norm(source.local, source.global_, f)
    if not a.is_finite:
        return CaseResult(True)
    c = wl_norm(target.local, target.global_, f)
    ok = c.is_finite
    return CaseResult(ok, _ratio(c, a), None if ok else _fail(f"{source} -> {target}", f))


def _lebesgue_index(spec: NormSpec, role: str):
    if not isinstance(spec, Lebesgue):
        raise WitnessUnavailable(f"no constructive witness for {role} component {spec}")
    return spec.p


def embedding_witnesses(source: WL, target: WL) -> List[WitnessBundle]:
    out = []
    if not local_stronger(source.local, target.local):
        out.append(tem_local_witness(_lebesgue_index(source.local, "local"),
                                     _lebesgue_index(target.local, "local")))
    if not global_stronger(source.global_, target.global_):
        out.append(tem_global_witness(_lebesgue_index(source.global_, "global"),
                                      _lebesgue_index(target.global_, "global")))
    return out


def embedding_suite(source: WL, target: WL, cfg: RandomCaseConfig, workers: int = 1) -> PropertyReport:
    """Does ``WL(A,B)`` embed in ``WL(C,D)`` as the component order predicts?

    Predicted embeddings are sampled; predicted failures must be certified by
    a witness finite in the source and infinite in the target.
    """
    predicted = local_stronger(source.local, target.local) and \
        global_stronger(source.global_, target.global_)
    name = f"embedding[{source} -> {target}]"
    if predicted:
        items = list(step_cases(cfg, salt=5)) + power_cases(cfg, salt=5)
        return _run(name, partial(_check_embedding, source, target), items, workers,
                    {"predicted": True})
    failures, bundles = [], []
    for bundle in embedding_witnesses(source, target):
        w = bundle.function
        src = wl_norm(source.local, source.global_, w)
        dst = wl_norm(target.local, target.global_, w)
        bundles.append(bundle.to_json())
        if not (bundle.verify() and src.is_finite and not dst.is_finite):
            failures.append(_fail("witness certificate", w, source=src, target=dst))
    return PropertyReport(name, len(bundles), tuple(failures), 0.0,
                          {"predicted": False, "witnesses": bundles})


# -- sum / intersection sandwich -------------------------------------------------

def displayed_decomposition(star: PPF, v: Fraction) -> Tuple[PPF, PPF]:
    """``(f* - v) chi_[0,1)`` and ``v chi_[0,1) + f* chi_[1,inf)``, built piece by piece."""
    g = normalize((p.a, min(p.b, Fraction(1)), p.c - v) for p in star.pieces if p.a < 1)
    h = normalize([(0, 1, v)] + [(q.a, q.b, q.c, q.alpha)
                                 for q in (p.clip(Fraction(1), INF) for p in star.pieces) if q])
    return g, h


def _check_decomposition(A: Lebesgue, B: Lebesgue, constant: ExtReal, f: PPF) -> CaseResult:
    star = as_profile(f)
    v = evaluate(star, 1).value
    g = subtract_const_clamped(star, v)
    h = min_with_const(star, v)
    want_g, want_h = displayed_decomposition(star, v)
    if as_profile(g) != want_g or as_profile(h) != want_h or add(g, h) != star:
        return CaseResult(False, detail=_fail("decomposition identity", f))
    wl = wl_norm(A, B, f)
    bound_sum = norm_of(A, f), norm_of(B, f)
    if not _leq(wl, ExtReal("exact", 2) * ext_max(bound_sum)):
        return CaseResult(False, detail=_fail("|f|_WL <= 2 max(|f|_A, |f|_B)", f))
    split = norm_of(A, g) + norm_of(B, h)
    if not _leq(split, constant * wl):
        return CaseResult(False, detail=_fail("|g|_A + |h|_B <= C |f|_WL", f, split=split, wl=wl))
    return CaseResult(True, _ratio(split, wl))


def sandwich_suite(A: Lebesgue, B: Lebesgue, cfg: RandomCaseConfig, workers: int = 1) -> PropertyReport:
    """``A cap B -> WL(A,B) -> A + B`` through the explicit split at ``v = f*(1)``.

    The split norm is bounded by ``(1 + |chi_[0,1)|_B * C) |f|_WL`` where ``C``
    is the constant in ``int_0^1 f* <= C |f* chi_[0,1]|_A``.
    """
    for spec in (A, B):
        if not isinstance(spec, Lebesgue) or spec.p < 1:
            raise NotNormable("sandwich suite needs Lebesgue components with p >= 1")
    constant = ONE + norm_of(B, indicator(0, 1)) * unit_p5_constant(A)
    items = list(step_cases(cfg, salt=6))
    return _run(f"sandwich[{A}, {B}]", partial(_check_decomposition, A, B, constant), items,
                workers, {"constant": constant.to_json()})


# -- extremal components ----------------------------------------------------------

def _check_extremal(A: NormSpec, unit: Optional[ExtReal], f: PPF) -> CaseResult:
    star = as_profile(f)
    head = norm_of(A, restrict(star, 0, 1)) if star.pieces else ZERO
    top = evaluate(star, 0)
    if not _leq(head, top * norm_of(A, indicator(0, 1))):
        return CaseResult(False, detail=_fail("|f* chi|_A <= f*(0) |chi|_A", f))
    local_integral = partial_integral(star, 1)
    if unit is not None and not _leq(local_integral, unit * head):
        return CaseResult(False, detail=_fail("int_0^1 f* <= C |f* chi|_A", f))
    if not evaluate(star, 1) <= local_integral:
        return CaseResult(False, detail=_fail("f*(1) <= int_0^1 f*", f))
    return CaseResult(True, _ratio(local_integral, head))


def extremal_suite(A: NormSpec, cfg: RandomCaseConfig, workers: int = 1) -> PropertyReport:
    """``L^inf`` is the strongest and ``L^1`` the weakest local component relative to ``A``.

    When ``A`` cannot control ``int_0^1`` (Lebesgue ``p < 1``) the embedding
    into the ``L^1`` local component fails; a witness certifies it.
    """
    unit = unit_p5_constant(A)
    findings: dict = {"controls_local_integral": unit is not None}
    witness_ok = True
    if unit is None and isinstance(A, Lebesgue):
        bundle = local_integrability_witness(A.p)
        findings["witness"] = bundle.to_json()
        witness_ok = bundle.verify()
    items = list(step_cases(cfg, salt=7))
    report = _run(f"extremal[{A}]", partial(_check_extremal, A, unit), items, workers, findings)
    if not witness_ok:
        report = report.merge(PropertyReport(report.suite, 0, ({"check": "witness"},)))
    return report


# -- dilation ------------------------------------------------------------------------

def _check_dilation(spec: SpaceSpec, t: Fraction, bound: Optional[ExtReal], f: PPF) -> CaseResult:
    if isinstance(spec, Lebesgue):
        # the Lebesgue functional needs no rearrangement, so test the law on f itself
        base, dilated = norm_eval(spec, f), norm_eval(spec, dilate(f, t))
    else:
        base, dilated = space_norm(spec, f), space_norm(spec, dilate(f, t))
    ratio = _ratio(dilated, base)
    if isinstance(spec, Lebesgue):
        ok = dilated.close(rpow(t, -reciprocal(spec.p)) * base, RTOL)
    elif bound is not None:
        ok = _leq(dilated, bound * base)
    else:
        ok = dilated.is_finite
    return CaseResult(ok, ratio, None if ok else _fail("dilation", f, t=t))


def dilation_suite(spec: SpaceSpec, t, cfg: RandomCaseConfig, workers: int = 1) -> PropertyReport:
    """``|D_t f| / |f|``: the exact scaling law for ``L^p``, a bound for ``WL`` of ``L^p`` spaces."""
    t = Fraction(t)
    bound = None
    if isinstance(spec, WL) and all(isinstance(s, Lebesgue) and s.p >= 1
                                    for s in (spec.local, spec.global_)):
        bound = wl_dilation_bound(spec.local, spec.global_, t)
    items = list(step_cases(cfg, salt=8))
    findings = {"t": str(t), "bound": bound.to_json() if bound is not None else None}
    return _run(f"dilation[{spec}, t={t}]", partial(_check_dilation, spec, t, bound), items,
                workers, findings)


# -- duality ---------------------------------------------------------------------------

def _check_duality(p, q, pair) -> CaseResult:
    f, g = pair
    reports = [wl_duality_check(p, q, f, g), holder_check(Lebesgue(p), f, g),
               integrable_holder_check(p, f, g)]
    worst = max(_ratio(r.lhs, r.rhs) for r in reports)
    for r in reports:
        if not r.passed:
            return CaseResult(False, worst, _fail(f"pairing bound {r.spec}", f, g))
    return CaseResult(True, worst)


def duality_suite(p, q, cfg: RandomCaseConfig, workers: int = 1) -> PropertyReport:
    """Pairing bounds for ``WL(L^p, L^q)``, ``L^p`` and the integrable norm of ``L^p``."""
    items = list(step_pairs(cfg, salt=9))
    return _run(f"duality[{Lebesgue(p)}, {Lebesgue(q)}]", partial(_check_duality, p, q), items, workers)


# -- axioms -------------------------------------------------------------------------------

def _triangle_bound(spec: SpaceSpec) -> Optional[ExtReal]:
    if isinstance(spec, (Lebesgue, Lorentz)):
        return concavity_modulus(spec)
    if isinstance(spec, Wiener):
        return ONE
    if isinstance(spec, WL) and all(isinstance(s, Lebesgue) for s in (spec.local, spec.global_)):
        return wl_triangle_constant(spec.local, spec.global_)
    if isinstance(spec, Integrable):
        inner = _triangle_bound(spec.inner)
        return None if inner is None else ext_max([ONE, inner])
    return None


def _p5_constant(spec: SpaceSpec, E: PPF) -> Optional[ExtReal]:
    """``C_E`` with ``int_E f <= C_E |f|``, or None when not available."""
    measure = integral(E)
    if isinstance(spec, Lebesgue):
        return norm_of(Lebesgue(dual_exponent(spec.p)), E) if spec.p >= 1 else None
    if isinstance(spec, WL):
        if unit_p5_constant(spec.local) is None:
            return None
        return wl_p5_constant(spec.local, measure)
    if isinstance(spec, Integrable):
        return ext_max([ONE, measure])
    if isinstance(spec, Wiener):
        # bounded sets only: Hölder in each touched cell, then in l^q
        cells = len({n for p in E.pieces for n in range(math.floor(p.a), math.ceil(p.b))})
        return rpow(cells, 1 - reciprocal(spec.q))
    return None


def _check_axioms(spec: SpaceSpec, triangle: Optional[ExtReal], item) -> CaseResult:
    f, g, k = item
    nf, ng = space_norm(spec, f), space_norm(spec, g)
    both = add(f, g)
    nboth = space_norm(spec, both)
    if not _leq(nf, nboth):
        return CaseResult(False, detail=_fail("P2 lattice", f, g))
    if not space_norm(spec, scale(f, k)).close(ExtReal("exact", k) * nf, RTOL):
        return CaseResult(False, detail=_fail("homogeneity", f, k=k))
    # Fatou along the two canonical increasing sequences
    top = max(p.c for p in f.pieces)
    for seq in ([min_with_const(f, n) for n in range(1, math.ceil(top) + 2)],
                [restrict(f, 0, n) for n in range(1, math.ceil(float(f.pieces[-1].b)) + 2)]):
        values = [space_norm(spec, h) for h in seq]
        if any(not _leq(x, y) for x, y in zip(values, values[1:])) or not values[-1].close(nf, RTOL):
            return CaseResult(False, detail=_fail("P3 Fatou", f))
    E = normalize((p.a, p.b, 1) for p in g.pieces)
    if not space_norm(spec, E).is_finite:
        return CaseResult(False, detail=_fail("P4", E))
    c5 = _p5_constant(spec, E)
    if c5 is not None and not _leq(raw_pairing(f, E), c5 * nf):
        return CaseResult(False, detail=_fail("P5", f, E))
    modulus = _ratio(nboth, nf + ng)
    if triangle is not None and not _leq(nboth, triangle * (nf + ng)):
        return CaseResult(False, modulus, _fail("triangle", f, g))
    return CaseResult(True, modulus)


def axiom_suite(spec: SpaceSpec, cfg: RandomCaseConfig, workers: int = 1,
                family_size: int = 2000) -> PropertyReport:
    """Lattice, homogeneity, Fatou, P4, P5 and the (quasi-)triangle inequality.

    ``observed_constant`` is the largest ``|f+g| / (|f| + |g|)`` seen.  For
    Wiener amalgams with ``p != q`` the failing axiom is certified through the
    corresponding family, which is recorded in ``findings``.
    """
    triangle = _triangle_bound(spec)
    rng = cfg.rng(10)
    items = [(f, g, Fraction(rng.randint(1, 20), rng.randint(1, 8)))
             for f, g in step_pairs(cfg, salt=10)]
    findings: dict = {"triangle_bound": triangle.to_json() if triangle is not None else None}
    failures = []
    if isinstance(spec, Wiener) and spec.p != spec.q:
        family = rwnbfs_p4_family if spec.q < spec.p else rwnbfs_p5_family
        bundle = family(spec.p, spec.q, family_size)
        findings["failing_axiom"] = "P4" if spec.q < spec.p else "P5"
        findings["witness"] = bundle.to_json()
        if not bundle.verify():
            failures.append({"check": "witness certificate"})
    report = _run(f"axioms[{spec}]", partial(_check_axioms, spec, triangle), items, workers, findings)
    return report.merge(PropertyReport(report.suite, 0, tuple(failures)))


# -- counterexample families --------------------------------------------------------

def wiener_counterexample_suite(p, q, N: int = 10_000) -> PropertyReport:
    """Certify the failing axiom of ``W(L^p, l^q)`` for ``p != q``."""
    spec = Wiener(p, q)
    if spec.p == spec.q:
        return PropertyReport(f"wiener-counterexamples[{spec}]", 0, (),
                              0.0, {"failing_axiom": None})
    family = rwnbfs_p4_family if spec.q < spec.p else rwnbfs_p5_family
    bundle = family(spec.p, spec.q, N)
    failures = () if bundle.verify() else ({"check": "witness certificate"},)
    return PropertyReport(f"wiener-counterexamples[{spec}]", 1, failures, 0.0,
                          {"failing_axiom": "P4" if spec.q < spec.p else "P5",
                           "witness": bundle.to_json()})


# -- registry ---------------------------------------------------------------------------

def _one(specs: Sequence[SpaceSpec], default: SpaceSpec, kinds) -> SpaceSpec:
    spec = specs[0] if specs else default
    if not isinstance(spec, kinds):
        raise InvalidSpec(f"this suite does not take {spec}")
    return spec


def _lebesgue_pair(spec: WL) -> Tuple:
    if not all(isinstance(s, Lebesgue) for s in (spec.local, spec.global_)):
        raise InvalidSpec(f"{spec} needs Lebesgue components")
    return spec.local.p, spec.global_.p


def _hlp_entry(cfg, specs, workers, t, N):
    spec = _one(specs, WL(Lebesgue(1), Lebesgue(Fraction(1, 2))), (Lebesgue, Lorentz, WL, Integrable))
    index = spec.global_.p if isinstance(spec, WL) and isinstance(spec.global_, Lebesgue) else Fraction(1, 2)
    return hlp_suite(spec, chlp_pairs(index))


def _embedding_entry(cfg, specs, workers, t, N):
    if len(specs) != 2 or not all(isinstance(s, WL) for s in specs):
        raise InvalidSpec("the embedding suite takes two WL specs: source and target")
    return embedding_suite(specs[0], specs[1], cfg, workers)


def _sandwich_entry(cfg, specs, workers, t, N):
    spec = _one(specs, WL(Lebesgue(2), Lebesgue(1)), WL)
    return sandwich_suite(spec.local, spec.global_, cfg, workers)


def _duality_entry(cfg, specs, workers, t, N):
    p, q = _lebesgue_pair(_one(specs, WL(Lebesgue(1), Lebesgue(2)), WL))
    return duality_suite(p, q, cfg, workers)


def _wiener_entry(cfg, specs, workers, t, N):
    spec = _one(specs, Wiener(2, 1), Wiener)
    return wiener_counterexample_suite(spec.p, spec.q, N)


SUITES: Dict[str, Callable] = {
    "rearrangement": lambda cfg, specs, workers, t, N: rearrangement_suite(cfg, workers),
    "hardy-littlewood": lambda cfg, specs, workers, t, N: hardy_littlewood_suite(cfg, workers),
    "remark-sandwich": lambda cfg, specs, workers, t, N: remark_sandwich_suite(
        _one(specs, Lebesgue(1), (Lebesgue, Lorentz)), cfg, workers),
    "wiener-equivalence": lambda cfg, specs, workers, t, N: wiener_equivalence_suite(cfg, workers=workers),
    "hlp": _hlp_entry,
    "embedding": _embedding_entry,
    "sandwich": _sandwich_entry,
    "extremal": lambda cfg, specs, workers, t, N: extremal_suite(
        _one(specs, Lebesgue(2), (Lebesgue, Lorentz)), cfg, workers),
    "dilation": lambda cfg, specs, workers, t, N: dilation_suite(
        _one(specs, Lebesgue(2), (Lebesgue, Lorentz, WL, Wiener, Integrable)), t, cfg, workers),
    "duality": _duality_entry,
    "axioms": lambda cfg, specs, workers, t, N: axiom_suite(
        _one(specs, Lebesgue(2), (Lebesgue, Lorentz, WL, Wiener, Integrable)), cfg, workers),
    "wiener-counterexamples": _wiener_entry,
}


def run_suite(name: str, cfg: RandomCaseConfig, specs: Sequence[SpaceSpec] = (),
              workers: int = 1, t=2, N: int = 10_000) -> PropertyReport:
    try:
        entry = SUITES[name]
    except KeyError:
        raise InvalidSpec(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}") from None
    return entry(cfg, list(specs), workers, Fraction(t), N)
