"""Independent numeric checks: quadrature, Monte Carlo, operator closure.

This module is the correctness yardstick for the closed-form measures and
the solver's brute-force tests; nothing here sits on a production hot path.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

import numpy as np
from scipy.integrate import quad

from .connectives import conj, disj, kagg, naf, negate
from .errors import AggregationTie, ClosureTooLarge, QuadratureFailure
from .measures import density, uncertainty_degree
from .truthspace import FuzzyTruth

DEFAULT_SEED = 1729


def integrate_density_mean(x: FuzzyTruth, tol: float = 1e-8) -> float:
    """Adaptive quadrature of v * density(x, v) over [0, 1]."""
    if uncertainty_degree(x) <= 0.0:
        raise ValueError("point values have a Dirac density; no quadrature")
    breakpoints = sorted({p for p in x.params if 0.0 < p < 1.0})
    value, errest = quad(
        lambda v: v * density(x, v),
        0.0,
        1.0,
        points=breakpoints or None,
        limit=200,
        epsabs=tol,
        epsrel=0.0,
    )
    if errest > tol:
        raise QuadratureFailure(f"error estimate {errest} above {tol}")
    return value


def _segments(x: FuzzyTruth):
    """Clipped support, density height and the three piece masses."""
    a, b, c, d = x.params
    h = 1.0 / uncertainty_degree(x)
    lo, hi = max(0.0, a), min(1.0, d)
    m1 = h * ((b - a) ** 2 - (lo - a) ** 2) / (2.0 * (b - a)) if b > lo else 0.0
    m2 = h * (c - b)
    m3 = h * ((d - c) ** 2 - (d - hi) ** 2) / (2.0 * (d - c)) if hi > c else 0.0
    return lo, hi, h, m1, m2, m3


def sample_density(x: FuzzyTruth, n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw n variates by closed-form inversion of the piecewise CDF."""
    a, b, c, d = x.params
    lo, hi, h, m1, m2, m3 = _segments(x)
    u = rng.random(n) * (m1 + m2 + m3)
    v = np.empty(n)
    in1 = u < m1
    in2 = ~in1 & (u < m1 + m2)
    in3 = ~(in1 | in2)
    if in1.any():
        v[in1] = a + np.sqrt((lo - a) ** 2 + 2.0 * (b - a) * u[in1] / h)
    if in2.any():
        v[in2] = b + (u[in2] - m1) / h
    if in3.any():
        radicand = (d - c) ** 2 - 2.0 * (d - c) * (u[in3] - m1 - m2) / h
        v[in3] = d - np.sqrt(np.maximum(radicand, 0.0))
    return np.clip(v, lo, hi)


class ProbEstimate(NamedTuple):
    estimate: float
    stderr: float
    samples: int


def prob_leq(
    x: FuzzyTruth, y: FuzzyTruth, samples: int = 100_000, seed: int = DEFAULT_SEED
) -> ProbEstimate:
    """Monte Carlo estimate of Prob(actual(x) <= actual(y)) for independent draws."""
    if samples < 10_000:
        raise ValueError("need at least 10^4 samples")
    if uncertainty_degree(x) <= 0.0 or uncertainty_degree(y) <= 0.0:
        raise ValueError("both operands need a non-degenerate density")
    rng = np.random.default_rng(seed)
    xs = sample_density(x, samples, rng)
    ys = sample_density(y, samples, rng)
    p = float(np.mean(xs <= ys))
    return ProbEstimate(p, float(np.sqrt(p * (1.0 - p) / samples)), samples)


def _key(x: FuzzyTruth) -> tuple:
    return tuple(round(p, 9) for p in x.params) + (x.truncated,)


def closure_enumerate(
    weights, depth: int, *, cap: int = 100_000
) -> tuple[FuzzyTruth, ...]:
    """Close a value set under the five connectives up to operator depth.

    Aggregation ties are skipped (that pair simply has no combination).
    Raises ClosureTooLarge past ``cap`` values.
    """
    if depth > 4:
        raise ValueError("depth must be at most 4")
    values: dict[tuple, FuzzyTruth] = {}
    for w in weights:
        values.setdefault(_key(w), w)
    for _ in range(depth):
        current = list(values.values())
        added = False
        for v in current:
            for produced in (negate(v), naf(v)):
                if values.setdefault(_key(produced), produced) is produced:
                    added = True
        for v, w in itertools.product(current, current):
            produced = [conj(v, w), disj(v, w)]
            try:
                produced.append(kagg(v, w))
            except AggregationTie:
                pass
            for p in produced:
                if values.setdefault(_key(p), p) is p:
                    added = True
            if len(values) > cap:
                raise ClosureTooLarge(f"closure exceeded {cap} values")
        if not added:
            break
    return tuple(values.values())
