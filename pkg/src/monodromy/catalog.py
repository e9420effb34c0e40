"""Symbolic catalogs of exponent pairs: candidate families, the final
integrality classification, and the binomial classification.

Three theorem-shaped lists are encoded as data, each entry keeping its
1-based index so reports can cite "final item 7" directly:

* ``candidates`` - 37 families of pairs (A, B) such that A, B and A+B are
  all FM-exponents (two generic families, per-prime parametric families and
  sporadic lists);
* ``final`` - the 14 families whose two-parameter local systems are
  actually integral;
* ``binomial`` - the 9 cases of the binomial classification, matched on
  prime-to-p parts.

Membership checks always test both orientations of a pair; enumeration
emits the orientation as printed in the source lists.  ``fm_pair_scan`` is
the brute-force counterpart of the candidate list, and
``quotient_lemma_oracle`` brute-forces the exponential-quotient equations
used throughout the case analysis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .criteria import ExponentPair, SearchResult, _as_pair, belyi_search, default_max_r
from .fm_exponents import classify_fm_exponent, fm_exponent_set, prime_to_p_part
from .qz import _as_prime_int

__all__ = [
    "CrosscheckReport",
    "CrosscheckRow",
    "FamilyId",
    "Membership",
    "PairClassification",
    "THEOREMS",
    "classify_binomial",
    "classify_pair",
    "crosscheck",
    "enumerate_family",
    "family_ids",
    "fm_pair_scan",
    "quotient_lemma_oracle",
    "write_catalog",
]

CANDIDATES = "candidates"
FINAL = "final"
BINOMIAL = "binomial"
THEOREMS = (CANDIDATES, FINAL, BINOMIAL)


@dataclass(frozen=True)
class FamilyId:
    theorem: str
    index: int
    p_constraint: str = ""


@dataclass(frozen=True)
class Membership:
    family: FamilyId
    params: tuple[tuple[str, int], ...]
    reversed: bool

    def params_dict(self) -> dict:
        return dict(self.params)


@dataclass(frozen=True)
class PairClassification:
    pair: ExponentPair
    p: int
    reduced_pair: ExponentPair
    stripped_p_power: int
    memberships: tuple[Membership, ...]

    @property
    def is_member(self) -> bool:
        return bool(self.memberships)


def _pk(**kw) -> tuple[tuple[str, int], ...]:
    return tuple(sorted(kw.items()))


# ---------------------------------------------------------------------------
# family generators

def _odd_multiples(b: int) -> Iterator[int]:
    a = b
    while True:
        yield a
        a += 2 * b


def _single_param(make, start: int = 0, step: int = 1, names=("a",)):
    """Family from one integer parameter, values monotone in the parameter."""

    def gen(p: int, bound: int):
        a = start
        while True:
            pair = make(p, a)
            if pair is None:
                a += step
                continue
            A, B = pair
            if max(A, B) > bound:
                return
            yield A, B, _pk(**{names[0]: a})
            a += step

    return gen


def _gen_cand_1(p: int, bound: int):
    # ((p^a+1)/(p^b+1), p^b*(p^a+1)/(p^b+1)), b >= 1, a an odd multiple of b
    b = 1
    while p**b <= bound:
        for a in _odd_multiples(b):
            A = (p**a + 1) // (p**b + 1)
            B = p**b * A
            if max(A, B) > bound:
                break
            yield A, B, _pk(a=a, b=b)
        b += 1


def _gen_cand_2(p: int, bound: int):
    # ((p^(a+2b)+1)/(p^b+1), p^b*(p^a+1)/(p^b+1)), b >= 1, a an odd multiple of b
    b = 1
    while (p ** (3 * b) + 1) // (p**b + 1) <= bound:
        for a in _odd_multiples(b):
            A = (p ** (a + 2 * b) + 1) // (p**b + 1)
            B = p**b * ((p**a + 1) // (p**b + 1))
            if max(A, B) > bound:
                break
            yield A, B, _pk(a=a, b=b)
        b += 1


def _gen_cand_6(p: int, bound: int):
    # ((p^a+1)/(p^b+1), same), b >= 1, a an odd multiple of b; a=b gives (1,1)
    b = 1
    while True:
        if b > 1 and (p ** (3 * b) + 1) // (p**b + 1) > bound:
            return
        for a in _odd_multiples(b):
            A = (p**a + 1) // (p**b + 1)
            if A > bound:
                break
            yield A, A, _pk(a=a, b=b)
        b += 1


def _sporadic(pairs: tuple[tuple[int, int], ...]):
    def gen(p: int, bound: int):
        for A, B in pairs:
            if max(A, B) <= bound:
                yield A, B, _pk()

    return gen


# The one pair derived in the candidate theorem's type-(1,1) analysis but
# missing from its printed item-4 list; 3, 5 and 43 are all FM-exponents
# for p=2, so the scan-vs-catalog cross-check requires it.
SPORADIC_CANDIDATES_P2: tuple[tuple[int, int], ...] = (
    (3, 10), (3, 40), (5, 6), (5, 8), (5, 17), (5, 52),
    (9, 2), (9, 4), (9, 11), (9, 13), (9, 17), (9, 34), (9, 43), (9, 48),
    (11, 2), (11, 13), (11, 57), (13, 44), (13, 228), (17, 26), (17, 40),
    (33, 10), (33, 24), (33, 172), (33, 208), (65, 176), (171, 34), (205, 36),
)

SPORADIC_CANDIDATES_P3: tuple[tuple[int, int], ...] = (
    (2, 5), (4, 3), (4, 10), (5, 7), (10, 63), (28, 45), (61, 12),
)

SPORADIC_CANDIDATES_P5: tuple[tuple[int, int], ...] = (
    (1, 6), (2, 5), (3, 7), (6, 7), (6, 15),
)


@dataclass(frozen=True)
class _Family:
    index: int
    constraint: str
    p_ok: Callable[[int], bool]
    gen: Callable[[int, int], Iterable[tuple[int, int, tuple]]]


def _fam(index, constraint, p_ok, gen) -> _Family:
    return _Family(index, constraint, p_ok, gen)


_ANY = ("p>=2", lambda p: True)
_GE3 = ("p>=3", lambda p: p >= 3)


def _eq(q: int):
    return (f"p={q}", lambda p, q=q: p == q)


_CANDIDATE_FAMILIES: tuple[_Family, ...] = (
    _fam(1, *_ANY, _gen_cand_1),
    _fam(2, *_ANY, _gen_cand_2),
    _fam(3, *_GE3, _single_param(lambda p, a: ((p**a + 1) // 2,) * 2)),
    _fam(4, *_eq(2), _sporadic(SPORADIC_CANDIDATES_P2)),
    _fam(5, *_eq(2), _single_param(lambda p, a: (2**a + 1, 2**a + 1), start=1)),
    _fam(6, *_eq(2), _gen_cand_6),
    _fam(7, *_eq(2), _single_param(lambda p, a: (1, 2**a + 1), start=1)),
    _fam(8, *_eq(2), _single_param(lambda p, a: (2**a + 1, 2**a), start=1)),
    _fam(9, *_eq(2), _single_param(lambda p, a: (3, 2**a + 1), start=1)),
    _fam(10, *_eq(2), _single_param(lambda p, a: (2**a + 1, 3 * 2**a), start=1)),
    _fam(11, *_eq(2), _single_param(
        lambda p, a: (2**a + 1, (2 ** (3 * a) + 1) // (2**a + 1)), start=1)),
    _fam(12, *_eq(2), _single_param(
        lambda p, a: ((2 ** (3 * a) + 1) // (2**a + 1), 2**a * (2**a + 1)), start=1)),
    _fam(13, *_eq(2), _single_param(
        lambda p, a: (2**a + 1, (2**a + 1) // 3), start=1, step=2)),
    _fam(14, *_eq(2), _single_param(
        lambda p, a: (1, (2**a + 1) // 3), start=1, step=2)),
    _fam(15, *_eq(2), _single_param(
        lambda p, a: ((2**a + 1) // 3, 2**a), start=1, step=2)),
    _fam(16, *_eq(2), _single_param(
        lambda p, a: (3, (2 ** (2 * a) + 1) // 5), start=1, step=2)),
    _fam(17, *_eq(2), _single_param(
        lambda p, a: ((2 ** (2 * a) + 1) // 5, 3 * 2 ** (2 * a)), start=1, step=2)),
    _fam(18, *_eq(2), _single_param(
        lambda p, a: (5, (2**a + 1) // 3), start=1, step=2)),
    _fam(19, *_eq(2), _single_param(
        lambda p, a: ((2**a + 1) // 3, 5 * 2**a), start=1, step=2)),
    _fam(20, *_eq(2), _single_param(
        lambda p, a: ((2 ** (3 * a) + 1) // 9, (2 ** (3 * a) + 1) // 3), start=1, step=2)),
    _fam(21, *_eq(2), _single_param(
        lambda p, a: ((2 ** (3 * a) + 1) // 9, 2 * (2 ** (3 * a) + 1) // 9), start=1, step=2)),
    _fam(22, *_eq(3), _sporadic(SPORADIC_CANDIDATES_P3)),
    _fam(23, *_eq(3), _single_param(lambda p, a: (2, 3**a + 1))),
    _fam(24, *_eq(3), _single_param(lambda p, a: (3**a + 1, 2 * 3**a))),
    _fam(25, *_eq(3), _single_param(lambda p, a: (3**a + 1, (3**a + 1) // 2))),
    _fam(26, *_eq(3), _single_param(lambda p, a: (1, (3**a + 1) // 2))),
    _fam(27, *_eq(3), _single_param(lambda p, a: ((3**a + 1) // 2, 3**a))),
    _fam(28, *_eq(3), _single_param(lambda p, a: (4, (3**a + 1) // 2))),
    _fam(29, *_eq(3), _single_param(lambda p, a: ((3**a + 1) // 2, 4 * 3**a))),
    _fam(30, *_eq(3), _single_param(
        lambda p, a: ((3**a + 1) // 2, (3**a + 1) // 4), start=1, step=2)),
    _fam(31, *_eq(3), _single_param(
        lambda p, a: ((3**a + 1) // 4, (3**a + 1) // 4), start=1, step=2)),
    _fam(32, *_eq(3), _single_param(
        lambda p, a: (2, (3**a + 1) // 4), start=1, step=2)),
    _fam(33, *_eq(3), _single_param(
        lambda p, a: ((3**a + 1) // 4, 2 * 3**a), start=1, step=2)),
    _fam(34, *_eq(5), _sporadic(SPORADIC_CANDIDATES_P5)),
    _fam(35, *_eq(5), _single_param(lambda p, a: (2, (5**a + 1) // 2))),
    _fam(36, *_eq(5), _single_param(lambda p, a: ((5**a + 1) // 2, 2 * 5**a))),
    _fam(37, *_eq(7), _sporadic(((2, 2),))),
)


def _gen_final_4(p: int, bound: int):
    # ((2^a+1)/(2^b+1), same), b >= 1, a an odd multiple of b
    yield from _gen_cand_6(p, bound)


_FINAL_FAMILIES: tuple[_Family, ...] = (
    _fam(1, *_ANY, _single_param(lambda p, a: (1, p**a))),
    _fam(2, *_eq(2), _sporadic(((1, 12),))),
    _fam(3, *_eq(2), _single_param(lambda p, a: (2**a + 1, 2**a + 1), start=1)),
    _fam(4, *_eq(2), _gen_final_4),
    _fam(5, *_eq(2), _single_param(lambda p, a: (1, 2**a + 1), start=1)),
    _fam(6, *_eq(2), _single_param(lambda p, a: (2**a + 1, 2**a), start=1)),
    _fam(7, *_eq(2), _single_param(
        lambda p, a: (2**a + 1, (2**a + 1) // 3), start=1, step=2)),
    _fam(8, *_eq(2), _single_param(
        lambda p, a: (1, (2**a + 1) // 3), start=1, step=2)),
    _fam(9, *_eq(2), _single_param(
        lambda p, a: ((2**a + 1) // 3, 2**a), start=1, step=2)),
    _fam(10, *_eq(3), _sporadic(((1, 4), (1, 6), (2, 2), (4, 3)))),
    _fam(11, *_eq(3), _single_param(lambda p, a: (3**a + 1, (3**a + 1) // 2))),
    _fam(12, *_eq(3), _single_param(lambda p, a: (1, (3**a + 1) // 2))),
    _fam(13, *_eq(3), _single_param(lambda p, a: ((3**a + 1) // 2, 3**a))),
    _fam(14, *_eq(5), _sporadic(((2, 1),))),
)


# ---------------------------------------------------------------------------
# binomial classification (matched on prime-to-p parts)

def _p_power_exponent(p: int, n: int) -> int | None:
    """a with n == p^a, else None."""
    if n < 1:
        return None
    a = 0
    while n % p == 0:
        n //= p
        a += 1
    return a if n == 1 else None


def _coprime_fm_exponents(p: int, bound: int) -> list[int]:
    return [n for n in sorted(fm_exponent_set(p, bound)) if n % p != 0]


def _gen_bin_1(p: int, bound: int):
    yield 1, 1, _pk()


def _gen_bin_2(p: int, bound: int):
    for e in _coprime_fm_exponents(p, bound):
        yield 1, e, _pk()


def _gen_bin_3(p: int, bound: int):
    for d in _coprime_fm_exponents(p, bound):
        yield d, 1, _pk()


def _gen_bin_4(p: int, bound: int):
    lo = 1 if p == 2 else 0
    a = lo
    while p**a + 1 <= bound:
        b = lo
        while p**b + 1 <= bound:
            yield p**a + 1, p**b + 1, _pk(a=a, b=b)
            b += 1
        a += 1


def _quotients_upto(p: int, a: int, bound: int, min_exp: int) -> list[tuple[int, int]]:
    out = []
    b = min_exp
    while True:
        q = (p ** (a * b) + 1) // (p**a + 1)
        if q > bound:
            return out
        out.append((q, b))
        b += 2


def _gen_bin_5(p: int, bound: int):
    # same a on both sides; b, c odd and > 1
    a = 1
    while (p ** (3 * a) + 1) // (p**a + 1) <= bound:
        qs = _quotients_upto(p, a, bound, 3)
        for qd, b in qs:
            for qe, c in qs:
                yield qd, qe, _pk(a=a, b=b, c=c)
        a += 1


def _gen_bin_6(p: int, bound: int):
    a = 0
    while (p**a + 1) // 2 <= bound:
        b = 0
        while (p**b + 1) // 2 <= bound:
            yield (p**a + 1) // 2, (p**b + 1) // 2, _pk(a=a, b=b)
            b += 1
        a += 1


_BINOMIAL_FAMILIES: tuple[_Family, ...] = (
    _fam(1, *_ANY, _gen_bin_1),
    _fam(2, *_ANY, _gen_bin_2),
    _fam(3, *_ANY, _gen_bin_3),
    _fam(4, *_ANY, _gen_bin_4),
    _fam(5, *_ANY, _gen_bin_5),
    _fam(6, *_GE3, _gen_bin_6),
    _fam(7, *_eq(2), _sporadic(((13, 3),))),
    _fam(8, *_eq(3), _sporadic(((7, 4), (7, 2), (5, 4), (5, 2)))),
    _fam(9, *_eq(5), _sporadic(((3, 2), (7, 7)))),
)

_REGISTRY: dict[str, tuple[_Family, ...]] = {
    CANDIDATES: _CANDIDATE_FAMILIES,
    FINAL: _FINAL_FAMILIES,
    BINOMIAL: _BINOMIAL_FAMILIES,
}


def _lookup(theorem: str, index: int) -> _Family:
    if theorem not in _REGISTRY:
        raise ValueError(f"unknown theorem selector {theorem!r}; expected one of {THEOREMS}")
    fams = _REGISTRY[theorem]
    if not 1 <= index <= len(fams):
        raise ValueError(f"{theorem} has items 1..{len(fams)}, not {index}")
    return fams[index - 1]


def family_ids(theorem: str, p: int | None = None) -> list[FamilyId]:
    """All items of a theorem's list, optionally restricted to those for p."""
    if theorem not in _REGISTRY:
        raise ValueError(f"unknown theorem selector {theorem!r}; expected one of {THEOREMS}")
    out = []
    for fam in _REGISTRY[theorem]:
        if p is None or fam.p_ok(_as_prime_int(p)):
            out.append(FamilyId(theorem, fam.index, fam.constraint))
    return out


def enumerate_family(family: FamilyId | tuple[str, int], p: int, bound: int) -> list[ExponentPair]:
    """All pairs of one family with max(A, B) <= bound, sorted, deduplicated.

    Raises ValueError when the family does not apply to p.
    """
    theorem, index = (family.theorem, family.index) if isinstance(family, FamilyId) else family
    p = _as_prime_int(p)
    if bound < 1:
        raise ValueError("bound must be >= 1")
    fam = _lookup(theorem, index)
    if not fam.p_ok(p):
        raise ValueError(f"{theorem} item {index} applies to {fam.constraint}, not p={p}")
    pairs = {ExponentPair(A, B) for A, B, _ in fam.gen(p, bound)}
    return sorted(pairs, key=lambda q: (q.d, q.e))


def _memberships(p: int, A: int, B: int, theorem: str) -> list[Membership]:
    found = []
    for fam in _REGISTRY[theorem]:
        if not fam.p_ok(p):
            continue
        fid = FamilyId(theorem, fam.index, fam.constraint)
        direct = reverse = None
        for a, b, params in fam.gen(p, max(A, B)):
            if (a, b) == (A, B) and direct is None:
                direct = params
            if (a, b) == (B, A) and reverse is None:
                reverse = params
        if direct is not None:
            found.append(Membership(fid, direct, False))
        elif reverse is not None:
            found.append(Membership(fid, reverse, True))
    return found


def classify_pair(p: int, pair, theorem: str = FINAL) -> PairClassification:
    """Memberships of (A, B) across one theorem's families, both orientations.

    A common power of p is stripped from the pair first (scaling both
    exponents by p does not change the verdict); the reduction is reported.
    """
    p = _as_prime_int(p)
    pair = _as_pair(pair)
    if theorem not in (CANDIDATES, FINAL):
        raise ValueError(f"classify_pair handles {CANDIDATES!r} and {FINAL!r}; "
                         f"use classify_binomial for {BINOMIAL!r}")
    A, B = pair.d, pair.e
    k = 0
    while A % p == 0 and B % p == 0:
        A //= p
        B //= p
        k += 1
    reduced = ExponentPair(A, B)
    members = _memberships(p, A, B, theorem)
    return PairClassification(pair, p, reduced, k, tuple(members))


def classify_binomial(p: int, pair) -> PairClassification:
    """Memberships of a binomial pair among the 9 cases, on prime-to-p parts."""
    p = _as_prime_int(p)
    pair = _as_pair(pair)
    dp = prime_to_p_part(p, pair.d)
    ep = prime_to_p_part(p, pair.e)
    reduced = ExponentPair(dp, ep)
    members = _memberships(p, dp, ep, BINOMIAL)
    return PairClassification(pair, p, reduced, 0, tuple(members))


# ---------------------------------------------------------------------------
# brute-force oracles

def fm_pair_scan(p: int, bound: int) -> list[ExponentPair]:
    """All (A, B) with A prime to p, max(A, B) <= bound, and A, B, A+B all
    FM-exponents.  Brute force against the symbolic classifier."""
    p = _as_prime_int(p)
    if bound < 2:
        raise ValueError("bound must be >= 2")
    fm = fm_exponent_set(p, 2 * bound)
    out = []
    for A in range(1, bound + 1):
        if A % p == 0 or A not in fm:
            continue
        for B in range(1, bound + 1):
            if B in fm and (A + B) in fm:
                out.append(ExponentPair(A, B))
    return out


def _canonical(pairs: Iterable[ExponentPair]) -> set[tuple[int, int]]:
    return {(min(q.d, q.e), max(q.d, q.e)) for q in pairs}


def candidate_union(p: int, bound: int) -> set[tuple[int, int]]:
    """Union of all candidate families at the bound, as unordered pairs."""
    out: set[tuple[int, int]] = set()
    for fid in family_ids(CANDIDATES, p):
        out |= _canonical(enumerate_family(fid, p, bound))
    return out


def final_union(p: int, bound: int) -> set[tuple[int, int]]:
    out: set[tuple[int, int]] = set()
    for fid in family_ids(FINAL, p):
        out |= _canonical(enumerate_family(fid, p, bound))
    return out


def quotient_lemma_oracle(p: int, max_exp: int, case: int | None = None):
    """Brute-force all solutions of the quotient equations, exponents <= max_exp.

    Cases (tuples are (m, n, a, b, c, d) for 1-3 and (m, n, a, c, d) for 4-5,
    every quotient required to be a positive integer; a, b, c, d start at 1
    when p = 2, at 0 otherwise; m, n >= 0):

        1:  p^m (p^a+1)/(p^b+1) == p^n (p^c+1)/(p^d+1)
        2:  p^m (p^a-1)/(p^b+1) == p^n (p^c-1)/(p^d+1)
        3:  p^m (p^a+1)/(p^b+1) == p^n (p^c-1)/(p^d+1)
        4:  p^m (p^a+1)         == p^n (p^c+1)/(p^d+1)
        5:  p^m (p^a+1)         == p^n (p^c-1)/(p^d+1)

    Returns the list for one case, or a {case: list} dict when case is None.
    """
    p = _as_prime_int(p)
    if max_exp < 1:
        raise ValueError("max_exp must be >= 1")
    if case is None:
        return {c: quotient_lemma_oracle(p, max_exp, c) for c in (1, 2, 3, 4, 5)}
    if case not in (1, 2, 3, 4, 5):
        raise ValueError("case must be 1..5")
    lo = 1 if p == 2 else 0
    exps = range(lo, max_exp + 1)
    pw = [p**k for k in range(max_exp + 1)]

    def plus_quotients() -> list[tuple[int, int, int]]:
        out = []
        for a in exps:
            for b in exps:
                q, r = divmod(p**a + 1, p**b + 1)
                if r == 0 and q > 0:
                    out.append((a, b, q))
        return out

    def minus_quotients() -> list[tuple[int, int, int]]:
        out = []
        for c in exps:
            for d in exps:
                q, r = divmod(p**c - 1, p**d + 1)
                if r == 0 and q > 0:
                    out.append((c, d, q))
        return out

    def plus_plain() -> list[tuple[int, int]]:
        return [(a, p**a + 1) for a in exps]

    sols: list[tuple[int, ...]] = []
    if case in (1, 2, 3):
        left = plus_quotients() if case in (1, 3) else minus_quotients()
        right = plus_quotients() if case == 1 else minus_quotients()
        for a, b, q1 in left:
            for c, d, q2 in right:
                for m in range(max_exp + 1):
                    for n in range(max_exp + 1):
                        if pw[m] * q1 == pw[n] * q2:
                            sols.append((m, n, a, b, c, d))
    else:
        right = plus_quotients() if case == 4 else minus_quotients()
        for a, q1 in plus_plain():
            for c, d, q2 in right:
                for m in range(max_exp + 1):
                    for n in range(max_exp + 1):
                        if pw[m] * q1 == pw[n] * q2:
                            sols.append((m, n, a, c, d))
    return sorted(set(sols))


# ---------------------------------------------------------------------------
# scan-vs-theorems crosscheck

@dataclass(frozen=True)
class CrosscheckRow:
    pair: tuple[int, int]
    is_final_member: bool
    families: tuple[int, ...]
    search: SearchResult | None
    status: str  # "member-pass" | "member-violated" | "violated" | "UNRESOLVED" | "resolved-on-rerun"

    def as_dict(self) -> dict:
        return {
            "A": self.pair[0],
            "B": self.pair[1],
            "final_member": self.is_final_member,
            "final_items": list(self.families),
            "status": self.status,
            "witness": (
                self.search.violation.as_dict()
                if self.search and self.search.violation
                else None
            ),
        }


@dataclass(frozen=True)
class CrosscheckReport:
    p: int
    bound: int
    max_r: int
    rows: tuple[CrosscheckRow, ...]

    @property
    def unresolved(self) -> list[CrosscheckRow]:
        return [row for row in self.rows if row.status == "UNRESOLVED"]

    @property
    def anomalies(self) -> list[CrosscheckRow]:
        return [row for row in self.rows if row.status in ("UNRESOLVED", "member-violated")]


def crosscheck(
    p: int,
    bound: int,
    max_r: int | None = None,
    search_members: bool = True,
    rerun_max_r: int | None = None,
) -> CrosscheckReport:
    """Scan FM-pairs up to the bound, split by final-family membership, and
    hunt violations for the non-members.

    Non-members should all be violated; a non-member that survives max_r is
    flagged UNRESOLVED (and retried up to rerun_max_r when given).  Members
    are searched too (unless disabled) and must not be violated.
    """
    p = _as_prime_int(p)
    if max_r is None:
        max_r = default_max_r(p)
    rows = []
    for A, B in sorted(_canonical(fm_pair_scan(p, bound))):
        cls = classify_pair(p, (A, B), FINAL)
        items = tuple(sorted(m.family.index for m in cls.memberships))
        if cls.is_member:
            if search_members:
                res = belyi_search(p, (A, B), max_r)
                status = "member-violated" if res.found else "member-pass"
            else:
                res, status = None, "member-pass"
        else:
            res = belyi_search(p, (A, B), max_r)
            if res.found:
                status = "violated"
            elif rerun_max_r is not None and rerun_max_r > max_r:
                res = belyi_search(p, (A, B), rerun_max_r)
                status = "resolved-on-rerun" if res.found else "UNRESOLVED"
            else:
                status = "UNRESOLVED"
        rows.append(CrosscheckRow((A, B), cls.is_member, items, res, status))
    return CrosscheckReport(p, bound, max_r, tuple(rows))


def write_catalog(path, primes=(2, 3, 5, 7), bound: int = 300) -> int:
    """Serialize every family's members to JSON lines; returns the row count."""
    rows = []
    for theorem in THEOREMS:
        for p in primes:
            for fid in family_ids(theorem, p):
                for pair in enumerate_family(fid, p, bound):
                    fam = _lookup(theorem, fid.index)
                    params = next(
                        (dict(pr) for a, b, pr in fam.gen(p, bound)
                         if (a, b) == (pair.d, pair.e)),
                        {},
                    )
                    rows.append(
                        {
                            "theorem": theorem,
                            "item": fid.index,
                            "p": p,
                            "A": pair.d,
                            "B": pair.e,
                            "params": params,
                            "reversed": False,
                        }
                    )
    rows.sort(key=lambda r: (r["theorem"], r["p"], r["item"], r["A"], r["B"]))
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
    return len(rows)
