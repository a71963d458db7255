"""Floating evaluation: nested zeta limits, polylogarithms, rate fitting.

Exact rational evaluation lives in :mod:`mzvkit.finite_sums`; this module
holds everything floating: limits of nested sums via the Euler-Maclaurin
engine, the nested polylogarithm power series, float twins of the chain DP
for large N (where exact rationals are hopeless), and the log-rate fitter
that turns O(N^-1 log^a N) claims into checkable statements.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import euler_maclaurin as em
from .algebra import Index, LinComb, Word, as_index, index_of_word
from .errors import DomainError
from .finite_sums import ConstraintChain, RArgs

EULER_GAMMA = 0.5772156649015328606065120900824024

MIN_TOL = 1e-12
DEFAULT_MZV_TOL = 1e-7
DEFAULT_LI_TOL = 1e-9


@dataclass(frozen=True)
class Real:
    """A floating value with an absolute error estimate (not a certificate)."""

    value: float
    error_bound: float

    def __post_init__(self) -> None:
        if self.error_bound < 0 or not math.isfinite(self.error_bound):
            raise ValueError("error bound must be finite and non-negative")

    def __float__(self) -> float:
        return self.value

    def serialize(self) -> dict[str, str]:
        return {"value": repr(self.value), "errorBound": repr(self.error_bound)}


@functools.lru_cache(maxsize=None)
def _limit_with_error(parts: tuple[int, ...], tier: int) -> tuple[float, float]:
    split = 1 << (16 + 2 * tier)
    coarse = em.nested_sum_limit(parts, split=split >> 1)
    fine = em.nested_sum_limit(parts, split=split)
    err = 4.0 * abs(float(fine - coarse)) + 1e-15 * (1.0 + abs(float(fine)))
    return float(fine), err


def mzv(k: Index | Iterable[int], tol: float = DEFAULT_MZV_TOL) -> Real:
    """Multiple zeta value of an admissible index, |error| <= tol expected."""
    k = as_index(k)
    if not k.admissible:
        raise DomainError(f"index ({k}) is not admissible; the nested series diverges")
    if tol < MIN_TOL:
        raise DomainError(f"tolerance {tol} is below the supported precision {MIN_TOL}")
    if not k.parts:
        return Real(1.0, 0.0)
    value, err = _limit_with_error(k.parts, 0)
    if err > tol:
        value, err = _limit_with_error(k.parts, 1)
    if err > tol:
        raise RuntimeError(f"could not reach tolerance {tol} for index ({k}); estimate {err:.3e}")
    return Real(value, err)


def euler_gamma() -> Real:
    return Real(float(EULER_GAMMA), 4e-16)


def li_value(k: Index | Iterable[int], z: float, tol: float = DEFAULT_LI_TOL) -> Real:
    """Nested polylogarithm via its power series, truncated by a geometric tail bound."""
    k = as_index(k)
    if not (0.0 < z < 1.0):
        raise DomainError("z must lie strictly between 0 and 1")
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    if not k.parts:
        return Real(1.0, 0.0)
    parts = k.parts
    depth = len(parts)
    carries = [0.0] * (depth - 1)
    total = 0.0
    inner_peak = 1.0
    chunk = 1 << 14
    lo = 1
    terms_used = 0
    while True:
        n = np.arange(lo, lo + chunk, dtype=np.float64)
        g = np.ones_like(n)
        for i, part in enumerate(parts[:-1]):
            term = g * n ** float(-part)
            csum = np.cumsum(term)
            g = carries[i] + csum - term
            carries[i] += float(csum[-1])
        total += float(np.sum(z ** n * g * n ** float(-parts[-1])))
        if depth > 1:
            inner_peak = max(inner_peak, float(g[-1]))
        lo += chunk
        terms_used += chunk
        # crude but safe: inner prefix sums grow logarithmically, the factor 4
        # dominates that growth over the remaining effective range
        tail = (z ** lo) / (1.0 - z) * max(inner_peak, 1.0) * 4.0
        if tail < tol / 2.0:
            break
        if terms_used > 1 << 27:
            raise RuntimeError(f"series for z={z} did not reach tolerance {tol}")
    err = tail + 1e-14 * (1.0 + abs(total))
    return Real(total, err)


def eval_reg_polynomial(p, t: float, tol: float = DEFAULT_LI_TOL) -> Real:
    """Evaluate an H0-coefficient polynomial at a real point, coefficients by mzv."""
    weight_mass = 0.0
    for i, c in enumerate(p.coeffs):
        if not c.in_h0:
            raise DomainError("polynomial coefficients must be supported in H0")
        weight_mass += sum(abs(float(q)) for _, q in c.items()) * max(1.0, abs(t)) ** i
    per_tol = max(MIN_TOL, tol / (2.0 * max(weight_mass, 1.0)))
    value = 0.0
    err = 0.0
    for i, c in enumerate(p.coeffs):
        scale = t ** i
        for w, q in c.items():
            zeta = mzv(index_of_word(w), per_tol)
            value += float(q) * zeta.value * scale
            err += abs(float(q)) * zeta.error_bound * abs(scale)
    err += 1e-15 * (1.0 + abs(value))
    return Real(value, err)


# ---------------------------------------------------------------------------
# floating twins of the exact chain DP (for N far beyond exact-rational reach)

def chain_value_f(chain: ConstraintChain, N: int) -> float:
    if N < 1:
        raise DomainError("N must be a positive integer")
    if not chain.steps:
        return 1.0
    if N == 1:
        return 0.0
    n = np.arange(1, N, dtype=np.float64)
    rev = np.float64(N) - n
    values: np.ndarray | None = None
    for step in chain.steps:
        w = rev ** float(-step.a) * n ** float(-step.b)
        if values is None:
            values = w
            continue
        csum = np.cumsum(values)
        prefix = np.concatenate(([0.0], csum[:-1])) if step.strict else csum
        values = w * prefix
    assert values is not None
    return float(values.sum())


def zeta_lt_f(k: Index | Iterable[int], N: int) -> float:
    return chain_value_f(ConstraintChain.plain(as_index(k)), N)


def zeta_flat_f(k: Index | Iterable[int], N: int) -> float:
    return chain_value_f(ConstraintChain.flat(as_index(k)), N)


def zeta_natural_f(k: Index | Iterable[int], N: int) -> float:
    return chain_value_f(ConstraintChain.natural(as_index(k)), N)


def r_value_f(args: RArgs, N: int) -> float:
    if N < 2:
        raise DomainError("R values require N >= 2")
    return chain_value_f(ConstraintChain.from_rargs(args), N)


@functools.lru_cache(maxsize=None)
def _word_value_f(w: Word, N: int, variant: str) -> float:
    k = index_of_word(w)
    if variant == "plain":
        return zeta_lt_f(k, N)
    if variant == "flat":
        return zeta_flat_f(k, N)
    if variant == "natural":
        return zeta_natural_f(k, N)
    raise DomainError(f"unknown variant {variant!r}")


def zn_apply_f(x: LinComb, N: int, variant: str = "plain") -> float:
    if not x.in_h1:
        raise DomainError("zn_apply requires support in H1")
    return sum(float(c) * _word_value_f(w, N, variant) for w, c in x.items())


def harmonic_number_f(n: int) -> float:
    """H_n as float64 (n up to a few 10^7)."""
    if n < 0:
        raise DomainError("harmonic numbers need n >= 0")
    if n == 0:
        return 0.0
    return float(np.sum(1.0 / np.arange(1, n + 1, dtype=np.float64)))


# ---------------------------------------------------------------------------
# log-rate fitting

@dataclass(frozen=True)
class RateFit:
    """Outcome of normalizing residuals by N / log^a N over a tail window."""

    observations: tuple[tuple[float, float], ...]
    fitted_log_exponent: int | None
    bounded_constant: float | None
    ok: bool
    a_max: int
    slack: float

    def to_dict(self) -> dict:
        return {
            "observations": [[n, r] for n, r in self.observations],
            "fittedLogExponent": self.fitted_log_exponent,
            "boundedConstant": self.bounded_constant,
            "ok": self.ok,
            "aMax": self.a_max,
            "slack": self.slack,
        }


def fit_log_rate(
    obs: Sequence[tuple[float, float]],
    *,
    a_max: int = 6,
    slack: float = 1.25,
) -> RateFit:
    """Find the smallest integer a with residual * N / log^a N bounded.

    The normalized sequence must stay within ``slack`` of its running minimum
    over the tail half of the observations (geometric N schedules expected).
    A failure flag, not an exception, reports that no exponent qualifies.
    """
    points = tuple((float(n), abs(float(r))) for n, r in obs)
    if len(points) < 5:
        raise DomainError("rate fitting needs at least 5 observations")
    ns = [n for n, _ in points]
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise DomainError("N values must be strictly increasing")
    if ns[0] < 2:
        raise DomainError("N values must be at least 2")
    if any(not math.isfinite(r) for _, r in points):
        raise DomainError("residuals must be finite")

    tail = points[len(points) // 2 :]
    for a in range(a_max + 1):
        ys = [r * n / math.log(n) ** a for n, r in tail]
        running = ys[0]
        good = True
        for y in ys[1:]:
            if y > slack * running:
                good = False
                break
            running = min(running, y)
        if good:
            return RateFit(points, a, max(ys), True, a_max, slack)
    return RateFit(points, None, None, False, a_max, slack)
