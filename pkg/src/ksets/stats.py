"""Survey estimators: exact binomials, coupon-collector class-count MLE,
and Bernoulli confidence bounds from the inverse regularized incomplete
beta function.

All non-integer work runs in arbitrary-precision decimal floating point
(mpmath) with the working precision passed per call; the coupon inequality
involves subtraction of almost-equal logarithms and silently gives wrong
answers below 35 significant digits, so that floor is enforced.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

import mpmath as mp

MIN_DIGITS = 35
DEFAULT_DIGITS = 100
COUPON_CAP = 10**30


class PrecisionError(ValueError):
    """Working precision below the supported floor."""


class ConvergenceError(ArithmeticError):
    """An iterative evaluation failed to converge within its cap."""


def _check_digits(digits: int) -> None:
    if digits < MIN_DIGITS:
        raise PrecisionError(
            f"{digits} significant digits requested; coupon and beta "
            f"computations need at least {MIN_DIGITS}"
        )


def binomial(n: int, k: int) -> int:
    """Exact C(n, k)."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    return comb(n, k)


@dataclass(frozen=True)
class CouponEstimate:
    """MLE of the total class count from a with-replacement sample.

    ``classes`` is None when the likelihood keeps growing past the search
    cap (always the case when every sample was distinct), which the text
    form reports as unbounded.
    """

    samples: int
    distinct: int
    classes: int | None
    cap: int = COUPON_CAP

    @property
    def unbounded(self) -> bool:
        return self.classes is None

    def __str__(self) -> str:
        if self.classes is None:
            return f"unbounded (no maximum below {self.cap:.1e})"
        return str(self.classes)


def coupon_mle(
    samples: int, distinct: int, digits: int = DEFAULT_DIGITS
) -> CouponEstimate:
    """Smallest j >= c with (j+1)/(j+1-c) * (j/(j+1))^n < 1.

    The likelihood of seeing c distinct classes in n draws from j classes
    is unimodal in j, so the first j where the likelihood ratio drops below
    one is the maximum; binary search finds it.  Evaluated in log form at
    the requested precision.
    """
    _check_digits(digits)
    n, c = samples, distinct
    if not 1 <= c <= n:
        raise ValueError(f"need 1 <= distinct <= samples, got c={c}, n={n}")
    if c == n:
        # every draw distinct: the ratio is >= 1 for all j
        return CouponEstimate(n, c, None)

    with mp.workdps(digits):

        def drops(j: int) -> bool:
            # log((j+1)/(j+1-c)) + n*log(j/(j+1)) < 0, via log1p for the
            # near-cancelling large-j regime
            lhs = mp.log1p(mp.mpf(c) / (j + 1 - c)) - n * mp.log1p(
                mp.mpf(1) / j
            )
            return lhs < 0

        if not drops(COUPON_CAP):
            return CouponEstimate(n, c, None)
        lo, hi = c, COUPON_CAP
        while lo < hi:
            mid = (lo + hi) // 2
            if drops(mid):
                hi = mid
            else:
                lo = mid + 1
    return CouponEstimate(n, c, lo)


def _beta_cf(a, b, x, digits: int):
    """Continued fraction for the incomplete beta tail (Lentz iteration)."""
    eps = mp.mpf(10) ** (-(digits - 5))
    tiny = mp.mpf(10) ** (-(4 * digits))
    qab, qap, qam = a + b, a + 1, a - 1
    c = mp.mpf(1)
    d = 1 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1 / d
    h = d
    for m in range(1, 20000):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1 / d
        delta = d * c
        h *= delta
        if abs(delta - 1) < eps:
            return h
    raise ConvergenceError(
        f"incomplete beta continued fraction did not converge "
        f"(a={a}, b={b}, x={x})"
    )


def reg_inc_beta(x, a, b, digits: int = DEFAULT_DIGITS):
    """I_x(a, b), the regularized incomplete beta function."""
    _check_digits(digits)
    with mp.workdps(digits):
        x = mp.mpf(x)
        a = mp.mpf(a)
        b = mp.mpf(b)
        if x <= 0:
            return mp.mpf(0)
        if x >= 1:
            return mp.mpf(1)
        front = mp.exp(
            a * mp.log(x)
            + b * mp.log1p(-x)
            - mp.log(a)
            - mp.log(mp.beta(a, b))
        )
        # symmetry switch keeps the continued fraction in its fast region
        if x < a / (a + b):
            return front * _beta_cf(a, b, x, digits)
        front_sym = mp.exp(
            b * mp.log1p(-x)
            + a * mp.log(x)
            - mp.log(b)
            - mp.log(mp.beta(a, b))
        )
        return 1 - front_sym * _beta_cf(b, a, 1 - x, digits)


def reg_inc_beta_inv(p, a, b, digits: int = DEFAULT_DIGITS):
    """x with I_x(a, b) = p, by bracketing bisection plus Newton polish.

    Raises ConvergenceError (never returns a silent bad value) when the
    underlying continued fraction fails.
    """
    _check_digits(digits)
    with mp.workdps(digits):
        p = mp.mpf(p)
        a = mp.mpf(a)
        b = mp.mpf(b)
        if not 0 < p < 1:
            raise ValueError("p must lie strictly between 0 and 1")
        if a <= 0 or b <= 0:
            raise ValueError("shape parameters must be positive")
        lo, hi = mp.mpf(0), mp.mpf(1)
        x = a / (a + b)
        for _ in range(max(digits * 4, 200)):
            fx = reg_inc_beta(x, a, b, digits) - p
            if fx > 0:
                hi = x
            else:
                lo = x
            # Newton step from the beta density, clamped to the bracket
            logpdf = (
                (a - 1) * mp.log(x)
                + (b - 1) * mp.log1p(-x)
                - mp.log(mp.beta(a, b))
            )
            step = fx * mp.exp(-logpdf)
            nx = x - step
            if not lo < nx < hi:
                nx = (lo + hi) / 2
            if abs(nx - x) <= abs(x) * mp.mpf(10) ** (-(digits - 5)):
                return nx
            x = nx
        return x


@dataclass(frozen=True)
class ConfidenceInterval:
    lower: mp.mpf
    upper: mp.mpf
    point: mp.mpf
    level: float


def confidence_bounds(
    population,
    samples: int,
    hits: int,
    level: float = 0.95,
    digits: int = DEFAULT_DIGITS,
) -> ConfidenceInterval:
    """Bounds on the number of successes in a size-``population`` space
    from ``hits`` successes in ``samples`` with-replacement draws.

    lower = K * Iinv((1-L)/2; m+1, n-m+1) and upper with (1+L)/2; the lower
    bound is reported as 0 when nothing was observed.  A ``population``
    that is itself an estimate is propagated verbatim, with no extra
    uncertainty.
    """
    _check_digits(digits)
    n, m = samples, hits
    if not 0 <= m <= n or n < 1:
        raise ValueError(f"need 0 <= hits <= samples, got m={m}, n={n}")
    if not 0 < level < 1:
        raise ValueError("confidence level must lie strictly in (0, 1)")
    with mp.workdps(digits):
        k = mp.mpf(population)
        if k <= 0:
            raise ValueError("population must be positive")
        # decimal re-read so a float level like 0.95 means exactly 0.95
        lv = mp.mpf(str(level))
        if m == 0:
            lower = mp.mpf(0)
        else:
            lower = k * reg_inc_beta_inv(
                (1 - lv) / 2, m + 1, n - m + 1, digits
            )
        upper = k * reg_inc_beta_inv(
            (1 + lv) / 2, m + 1, n - m + 1, digits
        )
        return ConfidenceInterval(lower, upper, k * m / n, level)


# One row of survey output per edge count b: how many b-edge subsets exist,
# how many survive each estimate stage, and what was actually observed.
_INT_FIELDS = ("edges", "criticals_odd", "criticals_even")
_BIG_FIELDS = ("total",)
_REAL_FIELDS = ("unconnected", "non_isomorphic", "ks", "min_crit", "max_crit")


@dataclass(frozen=True)
class SurveyRecord:
    edges: int
    total: int                    # exact C(75, b)
    unconnected: float | None = None
    non_isomorphic: float | None = None
    ks: float | None = None
    criticals_odd: int = 0
    criticals_even: int = 0
    min_crit: float = 0.0
    max_crit: float | None = None

    def __post_init__(self) -> None:
        if self.max_crit is not None and self.min_crit > self.max_crit:
            raise ValueError(
                f"min_crit {self.min_crit} exceeds max_crit {self.max_crit}"
            )
        observed = self.criticals_odd + self.criticals_even
        if self.max_crit is not None and observed > self.max_crit:
            raise ValueError(
                f"{observed} observed criticals exceed the estimated "
                f"maximum {self.max_crit}"
            )

    def to_json(self) -> str:
        """One JSON object; exact integers serialized as strings."""
        out: dict = {}
        for f in _INT_FIELDS:
            out[f] = getattr(self, f)
        for f in _BIG_FIELDS:
            out[f] = str(getattr(self, f))
        for f in _REAL_FIELDS:
            v = getattr(self, f)
            if v is not None:
                out[f] = float(v)
        return json.dumps(out, sort_keys=True)

    @staticmethod
    def from_json(line: str) -> "SurveyRecord":
        raw: Mapping = json.loads(line)
        kwargs: dict = {}
        for f in _INT_FIELDS:
            if f in raw:
                kwargs[f] = int(raw[f])
        for f in _BIG_FIELDS:
            kwargs[f] = int(raw[f])
        for f in _REAL_FIELDS:
            if raw.get(f) is not None:
                kwargs[f] = float(raw[f])
        return SurveyRecord(**kwargs)


def survey_aggregate(records: Iterable[SurveyRecord]) -> tuple[str, dict]:
    """Render per-edge-count survey rows as a text table plus plot data.

    Returns (table text, plot dict of per-series lists keyed by name).
    Exactly one record per edge count is allowed.
    """
    by_edges: dict[int, SurveyRecord] = {}
    for r in records:
        if r.edges in by_edges:
            raise ValueError(f"duplicate record for {r.edges} edges")
        by_edges[r.edges] = r
    rows = [by_edges[b] for b in sorted(by_edges)]

    def cell(v) -> str:
        if v is None:
            return "-"
        if isinstance(v, int):
            return str(v)
        return f"{v:.4g}"

    header = (
        "edges",
        "total",
        "unconnected",
        "non-isomorphic",
        "ks",
        "crit-odd",
        "crit-even",
        "min-crit",
        "max-crit",
    )
    lines = ["\t".join(header)]
    for r in rows:
        lines.append(
            "\t".join(
                cell(v)
                for v in (
                    r.edges,
                    r.total,
                    r.unconnected,
                    r.non_isomorphic,
                    r.ks,
                    r.criticals_odd,
                    r.criticals_even,
                    r.min_crit,
                    r.max_crit,
                )
            )
        )
    plot = {
        "edges": [r.edges for r in rows],
        "total": [float(r.total) for r in rows],
        "non_isomorphic": [r.non_isomorphic for r in rows],
        "ks": [r.ks for r in rows],
        "observed_criticals": [
            r.criticals_odd + r.criticals_even for r in rows
        ],
        "min_crit": [r.min_crit for r in rows],
        "max_crit": [r.max_crit for r in rows],
    }
    return "\n".join(lines) + "\n", plot


def estimate_record(
    edges: int,
    samples: int,
    ks_hits: int,
    distinct_classes: int | None = None,
    crit_samples: int | None = None,
    criticals_odd: int = 0,
    criticals_even: int = 0,
    level: float = 0.95,
    digits: int = DEFAULT_DIGITS,
) -> SurveyRecord:
    """Build a SurveyRecord from raw sample counts.

    The KS estimate scales the exact subset total by the sampled KS
    proportion; critical min/max bounds treat the KS estimate as the
    population and the criticality checks as Bernoulli trials.
    """
    total = binomial(75, edges)
    ks = None
    if samples:
        ks = float(mp.mpf(total) * ks_hits / samples)
    non_iso = None
    if distinct_classes is not None:
        est = coupon_mle(samples, distinct_classes, digits)
        non_iso = None if est.unbounded else float(est.classes)
    min_crit, max_crit = 0.0, None
    if crit_samples and ks:
        ci = confidence_bounds(
            ks, crit_samples, criticals_odd + criticals_even, level, digits
        )
        min_crit, max_crit = float(ci.lower), float(ci.upper)
    return SurveyRecord(
        edges=edges,
        total=total,
        non_isomorphic=non_iso,
        ks=ks,
        criticals_odd=criticals_odd,
        criticals_even=criticals_even,
        min_crit=min_crit,
        max_crit=max_crit,
    )
