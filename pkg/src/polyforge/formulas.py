"""Closed-form face counts, in exact integer arithmetic.

Binomials follow the zero-extension convention: C(n, c) = 0 whenever
c < 0, c > n or n < 0.  Every formula below is total on its stated range
under that convention.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import BadParams, RankOutOfRange
from .incidence import FVector


def binom(n: int, c: int) -> int:
    if n < 0 or c < 0 or c > n:
        return 0
    return comb(n, c)


def _require(cond: bool, msg: str):
    if not cond:
        raise BadParams(msg)


def phi(k: int, d: int, s: int) -> int:
    """Minimum number of k-faces of a d-polytope with d+s vertices."""
    _require(1 <= s <= d and 0 <= k <= d - 1, f"phi needs 1<=s<=d, 0<=k<d; got k={k} d={d} s={s}")
    return binom(d + 1, k + 1) + binom(d, k + 1) - binom(d + 1 - s, k + 1)


def zeta(k: int, d: int, s: int) -> int:
    _require(2 <= s <= d and 0 <= k <= d - 1, f"zeta needs 2<=s<=d, 0<=k<d; got k={k} d={d} s={s}")
    return phi(k, d, s) + binom(d - 1, k) - binom(d + 1 - s, k)


def _check_am(d, a, m):
    _require(2 <= a <= d and 1 <= m <= a // 2, f"need 2<=a<=d, 1<=m<=a/2; got d={d} a={a} m={m}")


def fk_dplus2_facets(k: int, d: int, a: int, m: int) -> int:
    """k-faces of the (d-a)-fold pyramid over T(m) x T(a-m)."""
    _check_am(d, a, m)
    j = k + 2
    return binom(d + 2, j) - binom(d - a + m + 1, j) - binom(d + 1 - m, j) + binom(d - a + 1, j)


def fk_dplus2_vertices(k: int, d: int, a: int, m: int) -> int:
    """k-faces of the (d-a)-fold pyramid over T(m) + T(a-m) (direct sum)."""
    _check_am(d, a, m)
    j = d - k + 1
    return binom(d + 2, j) - binom(d - a + m + 1, j) - binom(d - m + 1, j) + binom(d - a + 1, j)


def fk_pentasm(k: int, d: int) -> int:
    _require(d >= 2 and 0 <= k <= d - 1, f"pentasm needs d>=2, 0<=k<d; got k={k} d={d}")
    if k == 0:
        return 2 * d + 1
    return binom(d + 1, k + 1) + binom(d, k + 1) + binom(d - 1, k)


def fk_pentasm_pyr(k: int, d: int, s: int) -> int:
    """k-faces of the (d+1-s)-fold pyramid over the (s-1)-pentasm, counted
    face by face: apex-only faces, vertex-plus-apexes faces, and i-faces of
    the pentasm joined with k-i apexes."""
    _require(2 <= s <= d and 0 <= k <= d - 1, f"need 2<=s<=d, 0<=k<d; got k={k} d={d} s={s}")
    t = d + 1 - s
    total = binom(t, k + 1) + (2 * s - 1) * binom(t, k)
    for i in range(1, k + 1):
        total += binom(t, k - i) * (binom(s, i + 1) + binom(s - 1, i + 1) + binom(s - 2, i))
    return total


def fk_Z(k: int, d: int) -> int:
    _require(d >= 2 and 0 <= k <= d - 1, f"Z needs d>=2, 0<=k<d; got k={k} d={d}")
    if k == 0:
        return 2 * d - 1
    if k == 1:
        return d * d + d - 3
    return binom(d + 1, k + 1) + binom(d, k + 1) + binom(d - 1, k)


def fk_wedge_facet(k: int, fP: Sequence[int], fF: Sequence[int]) -> int:
    """k-faces of the wedge of P at its facet F, from the f-vectors of both."""
    fP, fF = FVector(fP), FVector(fF)
    d = fP.dim
    if fF.dim != d - 1:
        raise BadParams(f"facet f-vector has length {fF.dim}, expected {d - 1}")
    if not 0 <= k <= d + 1:
        raise RankOutOfRange(f"k={k} outside [0, {d + 1}]")
    return 2 * fP.ext(k) + fP.ext(k - 1) - fF.ext(k) - fF.ext(k - 1)


def refined_s2_bound(k: int, d: int, ell: int) -> int:
    """Lower bound on f_k for d-polytopes with d+2 vertices and >= d+ell facets."""
    _require(3 <= ell <= d and 1 <= k <= d - 2, f"need 3<=ell<=d, 1<=k<=d-2; got k={k} d={d} ell={ell}")
    return phi(k, d, 2) + binom(d - 1, k - 1) - binom(d - ell + 1, k - ell + 1)


def prop32_bound(d: int, r: int, k: int) -> int:
    """sum_{i=1}^{r} C(d+1-i, k): fewest k-faces meeting r given vertices."""
    return sum(binom(d + 1 - i, k) for i in range(1, r + 1))


@dataclass(frozen=True)
class MonotonicityCheck:
    part: str
    smaller: int
    larger: int
    strict_expected: bool

    @property
    def leq(self) -> bool:
        return self.smaller <= self.larger

    @property
    def strict(self) -> bool:
        return self.smaller < self.larger

    @property
    def consistent(self) -> bool:
        return self.leq and self.strict == self.strict_expected


def lemma23_predicates(k: int, d: int, a: int, m: int, fk=None):
    """Both monotonicity comparisons of f_k among the d-polytopes with d+2 vertices.

    Part "i" compares m with m+1 (same a); part "ii" compares a with a+1
    (same m).  Returns a pair, with None for a part whose parameters fall
    outside its range.  ``fk(k, d, a, m)`` defaults to the closed form; pass
    an enumeration-backed callable to check the constructed polytopes.
    """
    _check_am(d, a, m)
    _require(0 <= k <= d - 1, f"k={k} outside [0, {d - 1}]")
    fk = fk or fk_dplus2_vertices
    one = two = None
    if m <= a // 2 - 1:
        one = MonotonicityCheck("i", fk(k, d, a, m), fk(k, d, a, m + 1), m <= k)
    if a <= d - 1:
        two = MonotonicityCheck("ii", fk(k, d, a, m), fk(k, d, a + 1, m), a - m <= k)
    return one, two
