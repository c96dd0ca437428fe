"""Closed-form girth bounds and the scalar inequalities they rest on.

All logarithms are base 2 and all arithmetic is binary64. The inequalities
checked here have enormous slack at the constants involved, so floating
point is adequate; powers of two are additionally checked exactly.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .errors import DomainError, HypothesisViolated

SHEN_ADDITIVE = 73
THEORY_C_N_PLUS_K = 1e9
THEORY_C_MAIN = 1e11


@dataclass(frozen=True)
class BoundTable:
    """Bounds for given ``(n, k)``. Entries involving ``log k`` are None for k = 1."""

    n: int
    k: int
    aharoni: int
    shen: int
    bs_exact: Optional[float]
    bs_cor: Optional[float]
    res_one: Optional[float]
    cor_one: Optional[float]

    def to_dict(self) -> dict:
        return asdict(self)


def sparse_girth_bound(n: int, k: int) -> float:
    """Girth bound for a simple graph with n vertices and n + k edges."""
    lk = math.log2(k)
    return 2 * (n + k) / (3 * k) * (lk + math.log2(lk) + 4)


def sparse_girth_bound_cor(n: int, k: int) -> float:
    return 14 * (n + k) * math.log2(k) / (3 * k)


def bound_table(n: int, k: int) -> BoundTable:
    if n < 1 or k < 1:
        raise DomainError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    aharoni = -(-n // k)
    if k == 1:
        return BoundTable(n, k, aharoni, aharoni + SHEN_ADDITIVE, None, None, None, None)
    lk = math.log2(k)
    return BoundTable(
        n=n,
        k=k,
        aharoni=aharoni,
        shen=aharoni + SHEN_ADDITIVE,
        bs_exact=sparse_girth_bound(n, k),
        bs_cor=sparse_girth_bound_cor(n, k),
        res_one=n * lk**2 / (10 * k**1.5) + 14 * lk,
        cor_one=n * lk**2 / (5 * k**1.5),
    )


# scalar lemmas --------------------------------------------------------------

@dataclass
class LemmaResult:
    name: str
    statement: str
    passed: bool
    first_failure: Optional[int] = None
    exact_checks: int = 0


@dataclass
class LemmaReport:
    k_lo: int
    k_hi: int
    lemmas: List[LemmaResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(l.passed for l in self.lemmas)

    def to_dict(self) -> dict:
        return {"k_lo": self.k_lo, "k_hi": self.k_hi, "passed": self.passed,
                "lemmas": [asdict(l) for l in self.lemmas]}


def _first_false(ks: np.ndarray, ok: np.ndarray) -> Optional[int]:
    bad = np.flatnonzero(~ok)
    return int(ks[bad[0]]) if bad.size else None


def check_scalar_lemmas(k_lo: int, k_hi: int, c: float = THEORY_C_N_PLUS_K) -> LemmaReport:
    """Evaluate the four scalar inequalities at every integer k in [k_lo, k_hi]."""
    if not 2 <= k_lo <= k_hi:
        raise DomainError(f"need 2 <= k_lo <= k_hi, got {k_lo}, {k_hi}")
    ks = np.arange(k_lo, k_hi + 1, dtype=np.float64)
    lk = np.log2(ks)
    report = LemmaReport(k_lo, k_hi)

    def add(name, statement, ok, exact):
        first = _first_false(ks, ok)
        exact_ok = all(exact)
        report.lemmas.append(
            LemmaResult(name, statement, first is None and exact_ok, first, len(exact))
        )

    # exact spot checks at powers of two, where the logs are integers
    js = [j for j in range(1, 64) if k_lo <= 2**j <= k_hi]

    # log log k + 4 <= 6 log k; exact at k = 2^(2^i)
    exact = [i + 4 <= 6 * 2**i for i in range(0, 7) if k_lo <= 2 ** (2**i) <= k_hi]
    add("loglog", "log log k + 4 <= 6 log k", np.log2(lk) + 4 <= 6 * lk, exact)

    # (log k)^2 <= 5 sqrt(k); exact at k = 2^(2i)
    exact = [(2 * i) ** 2 <= 5 * 2**i for i in range(1, 32) if 2 * i in js]
    add("logsq", "(log k)^2 <= 5 sqrt(k)", lk**2 <= 5 * np.sqrt(ks), exact)

    # 5 k^(1/9) > log k; exact at k = 2^(9i)
    exact = [5 * 2**i > 9 * i for i in range(1, 8) if 9 * i in js]
    add("ninth", "5 k^(1/9) > log k", 5 * ks ** (1 / 9) > lk, exact)

    # 560 <= k^(sqrt(c)/(1120 ln 2) - 1/2) log k, compared in log space
    expo = math.sqrt(c) / (1120 * math.log(2)) - 0.5
    with np.errstate(divide="ignore"):
        rhs = expo * lk + np.log2(lk)
    add("hitting", "560 <= k^(sqrt(c)/(1120 ln 2) - 1/2) log k", math.log2(560) <= rhs, [])
    return report


# variance claim -------------------------------------------------------------

@dataclass
class VarianceReport:
    k: int
    r: float
    c: float
    t: float
    alpha: float
    x: float
    max_ratio: float
    argmax_y: float
    ratio_at_x: float
    max_ratio_from_x: float
    passed: bool

    def to_dict(self) -> dict:
        return asdict(self)


def variance_f(y, t: float, k: float):
    """Upper bound on Var(E) as a function of the survival probability root y."""
    return t * y**2 * (1 - y**2) + (t / 50 + 16 * k) * t * (y**3 - y**4)


def variance_rhs(y, t: float, k: float, r: float):
    return t**2 * (y**2 - 0.01) ** 2 * k / (2 * r)


def variance_bound_check(k: int, r: float, c: float = THEORY_C_MAIN, samples: int = 1000) -> VarianceReport:
    """Compare ``f(y)`` against ``t^2 (y^2 - 1/100)^2 k / (2r)``.

    Sampled at ``samples`` evenly spaced points of ``[1 - 400/c, 1)`` plus the
    point ``y = (r - 4k)/r``. ``passed`` means the largest ratio is <= 1.
    ``max_ratio_from_x`` restricts the sweep to ``y >= (r - 4k)/r``.
    """
    if samples < 1:
        raise DomainError("samples must be >= 1")
    t = c * k
    if not t / 100 < r:
        raise HypothesisViolated(f"t/100 = {t / 100:g} is not below r = {r:g}")
    alpha = 1 - 400 / c
    x = (r - 4 * k) / r
    ys = np.append(np.linspace(alpha, 1.0, samples, endpoint=False), x)
    ratio = variance_f(ys, t, k) / variance_rhs(ys, t, k, r)
    i = int(np.argmax(ratio))
    tail = ratio[ys >= x]
    return VarianceReport(
        k=k, r=float(r), c=float(c), t=t, alpha=alpha, x=x,
        max_ratio=float(ratio[i]), argmax_y=float(ys[i]),
        ratio_at_x=float(ratio[-1]), max_ratio_from_x=float(tail.max()),
        passed=bool(ratio[i] <= 1.0),
    )


# concentration --------------------------------------------------------------

def chernoff_tails(mean: float, eps: float) -> Tuple[float, float]:
    """Chernoff bounds ``(P[X <= (1-eps)mean], P[X >= (1+eps)mean])`` for a
    sum of independent indicators."""
    if not mean > 0 or not eps > 0:
        raise DomainError(f"need mean > 0 and eps > 0, got {mean}, {eps}")
    return math.exp(-eps**2 * mean / 2), math.exp(-eps**2 * mean / (2 + eps))


def wilson_interval(successes: int, trials: int, z: float = 2.5758293035489004) -> Tuple[float, float]:
    """Wilson score interval; the default z gives two-sided 99% coverage."""
    if trials <= 0:
        raise DomainError("trials must be positive")
    p = successes / trials
    denom = 1 + z**2 / trials
    centre = (p + z**2 / (2 * trials)) / denom
    half = z * math.sqrt(p * (1 - p) / trials + z**2 / (4 * trials**2)) / denom
    return centre - half, centre + half

