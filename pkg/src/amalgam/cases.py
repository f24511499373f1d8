"""Seeded random inputs for the property suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List

from .stepfn import PPF, MonotoneProfile, normalize, profile


@dataclass(frozen=True)
class RandomCaseConfig:
    seed: int = 0
    cases: int = 1000
    max_pieces: int = 12
    num_cap: int = 20
    den_cap: int = 8

    def rng(self, salt: int = 0) -> random.Random:
        # string seeds hash deterministically across runs
        return random.Random(f"{self.seed}:{salt}")


def random_rational(rng: random.Random, cfg: RandomCaseConfig, positive: bool = True) -> Fraction:
    lo = 1 if positive else 0
    return Fraction(rng.randint(lo, cfg.num_cap), rng.randint(1, cfg.den_cap))


def random_step(rng: random.Random, cfg: RandomCaseConfig) -> PPF:
    """Up to ``max_pieces`` blocks with rational gaps, lengths and heights."""
    pieces = []
    t = Fraction(0)
    for _ in range(rng.randint(1, cfg.max_pieces)):
        if rng.random() < 0.3:
            t += Fraction(rng.randint(1, cfg.num_cap), rng.randint(1, cfg.den_cap))
        length = Fraction(rng.randint(1, cfg.num_cap), rng.randint(1, cfg.den_cap))
        pieces.append((t, t + length, random_rational(rng, cfg)))
        t += length
    return normalize(pieces)


def step_cases(cfg: RandomCaseConfig, salt: int = 0) -> Iterator[PPF]:
    rng = cfg.rng(salt)
    for _ in range(cfg.cases):
        yield random_step(rng, cfg)


def step_pairs(cfg: RandomCaseConfig, salt: int = 0) -> Iterator[tuple]:
    rng = cfg.rng(salt)
    for _ in range(cfg.cases):
        yield random_step(rng, cfg), random_step(rng, cfg)


def power_profile(beta: Fraction, gamma: Fraction, height: Fraction = Fraction(1)) -> MonotoneProfile:
    """``height * (t^-beta chi_(0,1) + t^-gamma chi_[1,inf))``."""
    head = (0, 1, height, -beta) if beta else (0, 1, height)
    tail = (1, "inf", height, -gamma) if gamma else (1, "inf", height)
    return profile([head, tail])


def power_cases(cfg: RandomCaseConfig, salt: int = 0) -> List[MonotoneProfile]:
    """A handful of power profiles with exponents on the grid ``j/8``."""
    rng = cfg.rng(salt)
    out = []
    for _ in range(min(cfg.cases, 32)):
        beta = Fraction(rng.randint(0, 15), 8)
        gamma = Fraction(rng.randint(1, 24), 8)
        out.append(power_profile(beta, gamma, random_rational(rng, cfg)))
    return out
