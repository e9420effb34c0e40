"""Finiteness criteria for two-exponent families, and bounded violation searches.

For a pair of exponents (d, e) the two-parameter family is integral exactly
when both of these hold over (Q/Z) prime to p:

    W_p(d, e, x, y) = V(x) + V(y) + V(y-(d+e)x) + V(ex-y) + V(-ex) >= 3/2
                                                  for all x, y != 0, and
    V(x) + V(-(d+e)x) >= 1/2                      for all x != 0.

The binomial analogue bounds V(x) + V(y) + V(-dx-ey) below by 1/2 for (x, y)
not both zero.  Point evaluations are exact rationals; the searches run on
per-level digit-sum tables (a class with denominator dividing p^r - 1 has
V = digitsum/(r(p-1)) directly on its numerator), so every comparison is an
integer comparison and the reported first witness is deterministic:
r ascending, then x numerator, then y numerator, with the one-variable check
preceding the y scan at each x.  Classes already covered at a divisor level
s | r are not re-tested.

A violation certifies non-integrality; a bounded pass is evidence only, never
a proof of finiteness.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .qz import QzClass, _as_prime_int, kubert_v, mult_order

__all__ = [
    "BELYI_PAIR_BOUND",
    "MONOMIAL_BOUND",
    "BINOMIAL_BOUND",
    "ExponentPair",
    "SearchResult",
    "WITNESS_TABLE",
    "WitnessReport",
    "belyi_monomial_side",
    "belyi_search",
    "binomial_check",
    "binomial_search",
    "default_max_r",
    "verify_witness_table",
    "w_value",
]

BELYI_PAIR_BOUND = Fraction(3, 2)
MONOMIAL_BOUND = Fraction(1, 2)
BINOMIAL_BOUND = Fraction(1, 2)

DEFAULT_GRID_LIMIT = 10**8
GRID_ENV_VAR = "MONODROMY_MAX_GRID"


@dataclass(frozen=True)
class ExponentPair:
    """The (d, e) exponent pair under test."""

    d: int
    e: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.e < 1:
            raise ValueError("exponents must be positive")

    def reversed(self) -> "ExponentPair":
        return ExponentPair(self.e, self.d)

    def __iter__(self):
        return iter((self.d, self.e))

    def __str__(self) -> str:
        return f"({self.d},{self.e})"


def _as_pair(pair) -> ExponentPair:
    if isinstance(pair, ExponentPair):
        return pair
    d, e = pair
    return ExponentPair(int(d), int(e))


@dataclass(frozen=True)
class WitnessReport:
    """A (pair, x, y, value) record certifying a criterion violation or pass."""

    p: int
    pair: ExponentPair
    criterion: str  # "belyi-pair" | "belyi-monomial" | "binomial"
    x: QzClass
    y: QzClass | None
    w_value: Fraction
    bound: Fraction

    @property
    def verdict(self) -> str:
        return "violation" if self.w_value < self.bound else "pass"

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "d": self.pair.d,
            "e": self.pair.e,
            "criterion": self.criterion,
            "x": str(self.x),
            "y": None if self.y is None else str(self.y),
            "w": str(self.w_value),
            "bound": str(self.bound),
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class SearchResult:
    p: int
    pair: ExponentPair
    criterion: str
    max_r: int
    violation: WitnessReport | None
    violations_total: int = 0

    @property
    def found(self) -> bool:
        return self.violation is not None

    @property
    def verdict(self) -> str:
        return "violation" if self.found else f"no_violation_up_to_max_r={self.max_r}"

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "d": self.pair.d,
            "e": self.pair.e,
            "criterion": self.criterion,
            "max_r": self.max_r,
            "verdict": "violation" if self.found else "no_violation_up_to_max_r",
            "witness": self.violation.as_dict() if self.violation else None,
            "violations_total": self.violations_total,
        }


def w_value(p: int, pair, x, y) -> Fraction:
    """W_p(d,e,x,y) = V(x)+V(y)+V(y-(d+e)x)+V(ex-y)+V(-ex), exact."""
    p = _as_prime_int(p)
    pair = _as_pair(pair)
    x = x if isinstance(x, QzClass) else QzClass.parse(str(x))
    y = y if isinstance(y, QzClass) else QzClass.parse(str(y))
    d, e = pair.d, pair.e
    ex = x.scale(e)
    return (
        kubert_v(p, x)
        + kubert_v(p, y)
        + kubert_v(p, y - x.scale(d + e))
        + kubert_v(p, ex - y)
        + kubert_v(p, -ex)
    )


def belyi_monomial_side(p: int, pair, x) -> Fraction:
    """V(x) + V(-(d+e)x) for x != 0 (the one-variable side of the criterion)."""
    p = _as_prime_int(p)
    pair = _as_pair(pair)
    x = x if isinstance(x, QzClass) else QzClass.parse(str(x))
    if x.is_zero():
        raise ValueError("x must be nonzero")
    return kubert_v(p, x) + kubert_v(p, x.scale(-(pair.d + pair.e)))


def binomial_check(p: int, pair, x, y) -> Fraction:
    """V(x) + V(y) + V(-dx-ey) for (x, y) not both zero."""
    p = _as_prime_int(p)
    pair = _as_pair(pair)
    x = x if isinstance(x, QzClass) else QzClass.parse(str(x))
    y = y if isinstance(y, QzClass) else QzClass.parse(str(y))
    if x.is_zero() and y.is_zero():
        raise ValueError("(x, y) must not both be zero")
    return (
        kubert_v(p, x)
        + kubert_v(p, y)
        + kubert_v(p, x.scale(-pair.d) - y.scale(pair.e))
    )


def default_max_r(p: int, grid_limit: int | None = None) -> int:
    """Largest r with (p^r - 1)^2 within the search cost guard.

    The guard defaults to 10^8 grid points and may be overridden with the
    MONODROMY_MAX_GRID environment variable (p=2 -> r<=13, p=3 -> r<=8,
    p=5 -> r<=5, p=7 -> r<=4 at the default).
    """
    p = _as_prime_int(p)
    if grid_limit is None:
        grid_limit = int(os.environ.get(GRID_ENV_VAR, DEFAULT_GRID_LIMIT))
    r = 1
    while (p ** (r + 1) - 1) ** 2 <= grid_limit:
        r += 1
    return r


@lru_cache(maxsize=32)
def _level_tables(p: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    """Digit sums and first-appearance levels of numerators mod p^r - 1.

    Returns (D, lev) with D[i] = digitsum_p(i) and lev[i] the smallest s
    such that the class i/(p^r - 1) has denominator dividing p^s - 1;
    behaves as a read-through cache of pure data.
    """
    m = p**r - 1
    idx = np.arange(m, dtype=np.int64)
    D = np.zeros(m, dtype=np.int16)
    t = idx.copy()
    while t.any():
        D += (t % p).astype(np.int16)
        t //= p
    dens = m // np.gcd(idx, m)
    dens[0] = 1
    uniq, inverse = np.unique(dens, return_inverse=True)
    orders = np.array([mult_order(p, int(den)) for den in uniq], dtype=np.int16)
    lev = orders[inverse]
    return D, lev


def _first_true(mask: np.ndarray) -> int | None:
    j = int(np.argmax(mask))
    return j if mask[j] else None


def belyi_search(p: int, pair, max_r: int | None = None, stop_early: bool = True) -> SearchResult:
    """Bounded exhaustive search for a violation of either Belyi inequality.

    Enumerates classes with denominator dividing p^r - 1 for r <= max_r
    (default per the cost guard), deduplicating classes already seen at
    divisor levels.  Rejects pairs with both exponents divisible by p.
    With stop_early=False the whole range is swept and violations are
    counted; the reported witness is still the first one in search order.
    """
    p = _as_prime_int(p)
    pair = _as_pair(pair)
    d, e = pair.d, pair.e
    if d % p == 0 and e % p == 0:
        raise ValueError(f"d={d} and e={e} are both multiples of p={p}")
    if max_r is None:
        max_r = default_max_r(p)
    if max_r < 1:
        raise ValueError("max_r must be >= 1")

    K = d + e
    first: WitnessReport | None = None
    total = 0

    for r in range(1, max_r + 1):
        m = p**r - 1
        if m <= 1:
            continue
        D, lev = _level_tables(p, r)
        idx = np.arange(m, dtype=np.int64)
        new_class = lev == np.int16(r)
        if not new_class.any():
            continue
        one_sum = D + D[(-K * idx) % m]
        one_viol = (2 * one_sum < r * (p - 1)) & new_class
        one_viol[0] = False

        E = D[(-idx) % m]
        pair_level_mask = {
            int(v): (np.lcm(lev, np.int16(v)) == r) for v in np.unique(lev)
        }
        threshold = 3 * r * (p - 1)

        for i in range(1, m):
            if one_viol[i]:
                x = QzClass(i, m)
                rep = WitnessReport(
                    p, pair, "belyi-monomial", x, None,
                    belyi_monomial_side(p, pair, x), MONOMIAL_BOUND,
                )
                total += 1
                if first is None:
                    first = rep
                if stop_early:
                    return SearchResult(p, pair, "belyi", max_r, first, total)
            jmask = pair_level_mask[int(lev[i])]
            t3 = np.roll(D, (K * i) % m)      # D[(j - (d+e)i) % m]
            t4 = np.roll(E, (e * i) % m)      # D[((e*i - j)) % m]
            const = int(D[i]) + int(D[(-e * i) % m])
            s = D + t3 + t4
            viol = (2 * (s + const) < threshold) & jmask
            viol[0] = False
            if viol.any():
                j = _first_true(viol)
                x, y = QzClass(i, m), QzClass(j, m)
                w = w_value(p, pair, x, y)
                rep = WitnessReport(p, pair, "belyi-pair", x, y, w, BELYI_PAIR_BOUND)
                total += int(viol.sum())
                if first is None:
                    first = rep
                if stop_early:
                    return SearchResult(p, pair, "belyi", max_r, first, total)
    return SearchResult(p, pair, "belyi", max_r, first, total)


def binomial_search(p: int, pair, max_r: int | None = None, stop_early: bool = True) -> SearchResult:
    """Bounded exhaustive search for V(x)+V(y)+V(-dx-ey) < 1/2, (x,y) != (0,0)."""
    p = _as_prime_int(p)
    pair = _as_pair(pair)
    d, e = pair.d, pair.e
    if max_r is None:
        max_r = default_max_r(p)
    if max_r < 1:
        raise ValueError("max_r must be >= 1")

    first: WitnessReport | None = None
    total = 0

    for r in range(1, max_r + 1):
        m = p**r - 1
        if m <= 1:
            continue
        D, lev = _level_tables(p, r)
        idx = np.arange(m, dtype=np.int64)
        neg_e_idx = (-e * idx) % m  # index of -e*j, shifted per row below
        pair_level_mask = {
            int(v): (np.lcm(lev, np.int16(v)) == r) for v in np.unique(lev)
        }
        threshold = r * (p - 1)

        for i in range(0, m):
            jmask = pair_level_mask[int(lev[i])]
            t3_idx = (neg_e_idx - (d * i) % m) % m
            s = D[i] + D + D[t3_idx]
            viol = (2 * s < threshold) & jmask
            if i == 0:
                viol[0] = False
            if viol.any():
                j = _first_true(viol)
                x, y = QzClass(i, m), QzClass(j, m)
                w = binomial_check(p, pair, x, y)
                rep = WitnessReport(p, pair, "binomial", x, y, w, BINOMIAL_BOUND)
                total += int(viol.sum())
                if first is None:
                    first = rep
                if stop_early:
                    return SearchResult(p, pair, "binomial", max_r, first, total)
    return SearchResult(p, pair, "binomial", max_r, first, total)


# The W values quoted in the classification's case-by-case elimination,
# one row per quoted fraction: (p, d, e, x, y, W, proof item).
WITNESS_TABLE: tuple[tuple[int, int, int, str, str, str, int], ...] = (
    (3, 7, 21, "1/8", "1/2", "5/4", 1),
    (2, 13, 4, "19/255", "4/15", "11/8", 2),
    (3, 7, 3, "11/80", "3/8", "11/8", 2),
    (2, 5, 3, "1/7", "1/7", "4/3", 4),
    (2, 5, 6, "1/7", "4/7", "4/3", 4),
    (2, 171, 34, "1/7", "2/7", "4/3", 4),
    (2, 3, 10, "3/31", "8/31", "7/5", 4),
    (2, 5, 8, "3/31", "8/31", "7/5", 4),
    (2, 9, 4, "3/31", "8/31", "7/5", 4),
    (2, 9, 2, "3/31", "2/31", "7/5", 4),
    (2, 33, 172, "5/31", "2/31", "7/5", 4),
    (2, 9, 11, "5/63", "37/63", "4/3", 4),
    (2, 9, 13, "3/63", "3/63", "4/3", 4),
    (2, 9, 34, "3/63", "3/63", "4/3", 4),
    (2, 11, 2, "5/63", "2/63", "4/3", 4),
    (2, 9, 17, "3/31", "16/31", "7/5", 4),
    (2, 9, 48, "3/31", "16/31", "7/5", 4),
    (2, 9, 43, "3/31", "1/31", "7/5", 4),
    (2, 205, 36, "1/31", "1/31", "7/5", 4),
    (2, 11, 13, "1/15", "9/15", "5/4", 4),
    (2, 11, 57, "1/15", "8/15", "5/4", 4),
    (2, 13, 44, "1/15", "12/15", "5/4", 4),
    (2, 13, 228, "1/15", "1/15", "5/4", 4),
    (2, 33, 208, "1/15", "1/15", "5/4", 4),
    (2, 65, 176, "1/15", "1/15", "5/4", 4),
    (2, 129, 3, "5/31", "9/31", "7/5", 9),
    (2, 5, 12, "19/127", "69/127", "10/7", 10),
    (2, 1, 10, "3/31", "2/31", "7/5", 19),
    (3, 5, 7, "1/8", "1/2", "5/4", 21),
    (3, 10, 63, "1/8", "1/8", "5/4", 21),
    (3, 28, 45, "1/8", "1/8", "5/4", 21),
    (3, 61, 12, "1/8", "1/8", "5/4", 21),
    (3, 2, 5, "4/26", "2/26", "4/3", 21),
    (3, 4, 10, "2/26", "2/26", "4/3", 21),
    (3, 4, 6, "11/80", "3/8", "11/8", 23),
    (3, 2, 12, "2/13", "2/13", "4/3", 29),
    (5, 1, 6, "7/24", "1/24", "11/8", 34),
    (5, 2, 5, "7/24", "1/24", "11/8", 34),
    (5, 6, 7, "1/4", "1/4", "5/4", 34),
    (5, 6, 15, "1/4", "1/4", "5/4", 34),
    (5, 3, 7, "1/4", "1/2", "5/4", 34),
    (7, 2, 2, "1/3", "1/3", "4/3", 37),
)


def verify_witness_table(rows=None) -> list[dict]:
    """Evaluate every witness row exactly; returns one result dict per row."""
    results = []
    for p, d, e, xs, ys, exp, item in (rows if rows is not None else WITNESS_TABLE):
        expected = Fraction(exp)
        computed = w_value(p, (d, e), QzClass.parse(xs), QzClass.parse(ys))
        results.append(
            {
                "p": p,
                "d": d,
                "e": e,
                "x": xs,
                "y": ys,
                "item": item,
                "expected": str(expected),
                "computed": str(computed),
                "ok": computed == expected,
            }
        )
    return results
