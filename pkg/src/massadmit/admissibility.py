"""Admissibility certificates for 4-tuples (d, l, k, j).

A tuple is certified admissible when the Euler class ``e_{k,j}`` is not in
the configuration-space ideal of R_{d,l,k}.  The criterion is sufficient
only, so a failed check is reported as *inconclusive*, never as
non-admissible.  Tuples are always ordered (d, l, k, j).
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .dickson import binary_split, euler_class
from .errors import BudgetExceeded, NotFound, VerificationError
from .f2poly import Monomial
from .index import DEFAULT_BUDGET, escape_threshold, membership_fast, membership_oracle

log = logging.getLogger(__name__)

# (d, l, k, j) rows of the comparison table with the classical problem
TABLE1 = (
    (8, 3, 2, 4),
    (9, 3, 3, 3),
    (11, 8, 2, 7),
    (17, 14, 2, 15),
    (23, 11, 2, 15),
    (47, 23, 2, 31),
)


class Verdict(str, Enum):
    CERTIFIED = "certified-admissible"
    INCONCLUSIVE = "inconclusive"
    INAPPLICABLE = "inapplicable"


METHODS = ("fast", "oracle", "both")


@dataclass(frozen=True)
class Tuple4:
    d: int
    ell: int
    k: int
    j: int

    def __post_init__(self):
        for name in ("d", "ell", "k", "j"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")

    def applicability(self) -> str | None:
        """Reason the criterion does not apply, or None."""
        if self.ell >= self.d:
            return "criterion needs l <= d-1 (l = d is the classical problem)"
        if self.k > self.ell:
            return "k > l: a k-arrangement equipartition needs k <= l"
        return None


@dataclass(frozen=True)
class Bounds:
    ramos_lower: int
    mvz_upper: int
    theorem2_bound: int


@dataclass(frozen=True)
class AdmissibilityReport:
    tuple: Tuple4
    verdict: Verdict
    method: str
    witness: Monomial | None
    bounds: Bounds
    elapsed: float = field(compare=False)
    note: str = ""
    degraded: bool = False

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED


def ramos_lower(j: int, k: int) -> int:
    """``ceil((2**k - 1) * j / k)``."""
    _positive(j=j, k=k)
    return -(-(2**k - 1) * j // k)


def mvz_upper(j: int, k: int) -> int:
    _positive(j=j, k=k)
    return j + (2 ** (k - 1) - 1) * 2 ** (j.bit_length() - 1)


def theorem2_bound(k: int, j: int) -> int:
    """``2**(t+k-1) + r`` where ``j = 2**t + r``, ``0 <= r < 2**t``."""
    _positive(j=j, k=k)
    t, r = binary_split(j)
    return 2 ** (t + k - 1) + r


def _positive(**kw):
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be at least 1")


def bounds(k: int, j: int) -> Bounds:
    return Bounds(ramos_lower(j, k), mvz_upper(j, k), theorem2_bound(k, j))


def check(t: Tuple4, method: str = "fast", budget: int | None = DEFAULT_BUDGET) -> AdmissibilityReport:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    start = time.perf_counter()
    b = bounds(t.k, t.j)
    reason = t.applicability()
    if reason is not None:
        return AdmissibilityReport(t, Verdict.INAPPLICABLE, method, None, b,
                                   time.perf_counter() - start, reason)
    e = euler_class(t.k, t.j)
    witness = None
    note = ""
    degraded = False
    if method in ("fast", "both"):
        fast = membership_fast(e, t.d)
        member = fast.member
        witness = fast.witness
    if method in ("oracle", "both"):
        try:
            oracle = membership_oracle(e, t.d, t.ell, t.k, budget)
        except BudgetExceeded as exc:
            log.warning("oracle budget exceeded for %s; using the fast path", t)
            fast = membership_fast(e, t.d)
            member, witness = fast.member, fast.witness
            note = f"oracle skipped: {exc}"
            degraded = True
        else:
            if method == "both" and oracle.member != member:
                raise VerificationError(f"membership engines disagree on {t}")
            member = oracle.member
            if method == "oracle":
                witness = None
    verdict = Verdict.INCONCLUSIVE if member else Verdict.CERTIFIED
    return AdmissibilityReport(t, verdict, method, witness, b, time.perf_counter() - start,
                               note, degraded)


def _check_args(args):
    return check(*args)


def check_many(tuples: Iterable[Tuple4], method: str = "fast", budget: int | None = DEFAULT_BUDGET,
               workers: int | None = None) -> list[AdmissibilityReport]:
    """Check several tuples, optionally across processes; output sorted by tuple."""
    jobs = [(t, method, budget) for t in tuples]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_check_args, jobs))
    else:
        reports = [_check_args(a) for a in jobs]
    return sorted(reports, key=lambda r: (r.tuple.d, r.tuple.ell, r.tuple.k, r.tuple.j))


def search_min_d(k: int, j: int, d_max: int, with_oracle: bool = False,
                 budget: int | None = DEFAULT_BUDGET) -> int:
    """Least ``d <= d_max`` at which the fast path certifies (k, j).

    With ``with_oracle`` the answer is confirmed by the oracle at ``l = k``
    whenever that is a valid subspace dimension.
    """
    _positive(k=k, j=j, d_max=d_max)
    d = escape_threshold(euler_class(k, j))
    if d > d_max:
        raise NotFound(f"no d <= {d_max} certifies k={k}, j={j}")
    if with_oracle and k <= d - 1:
        e = euler_class(k, j)
        if membership_oracle(e, d, k, k, budget).member:
            raise VerificationError(f"oracle rejects d={d} for k={k}, j={j}")
        if d - 1 > k and not membership_oracle(e, d - 1, k, k, budget).member:
            raise VerificationError(f"oracle certifies d={d - 1} below the fast threshold")
    return d


def table1(method: str = "fast", workers: int | None = None) -> list[AdmissibilityReport]:
    return check_many((Tuple4(*row) for row in TABLE1), method, workers=workers)


__all__ = [
    "Tuple4", "Verdict", "Bounds", "AdmissibilityReport", "TABLE1", "METHODS", "check",
    "check_many", "ramos_lower", "mvz_upper", "theorem2_bound", "bounds", "search_min_d", "table1",
]
