"""Perfect subsets of a degree slice and the perfect-number search.

A homogeneous set A of degree-d monomials is upper perfect when its upper
shadow covers the whole (d+1)-slice, lower perfect when its lower shadow
covers the whole (d-1)-slice, and perfect when both hold.  The perfect
number is the least cardinality of a perfect set; for d = 2 it has the
closed form k^2 - k (n = 2k) or k^2 (n = 2k+1).

The subset search below is shared with the f-ideal enumerator: a DFS over
slice positions in canonical order, pruned by coverage feasibility.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .errors import BudgetExceededError, InputError, InternalInconsistencyError
from .monomials import (
    MonomialSet,
    _lower_shadow_masks,
    _upper_shadow_masks,
    degree_slice,
)


def _require_homogeneous(a: MonomialSet, d: int) -> None:
    bad = [m for m in a if m.degree != d]
    if bad:
        raise InputError(
            f"set must be homogeneous of degree {d}; {bad[0].text()} has degree {bad[0].degree}"
        )


@lru_cache(maxsize=None)
def _slice_mask_set(n: int, d: int) -> frozenset[int]:
    return frozenset(degree_slice(n, d).masks())


def is_upper_perfect(a: MonomialSet, d: int) -> bool:
    """True iff the upper shadow of a equals the full (d+1)-slice."""
    if not 0 <= d <= a.n:
        raise InputError(f"degree {d} out of range 0..{a.n}")
    _require_homogeneous(a, d)
    if d == a.n:
        return True  # the (d+1)-slice is empty, nothing to cover
    return _upper_shadow_masks(a.masks(), a.n) == _slice_mask_set(a.n, d + 1)


def is_lower_perfect(a: MonomialSet, d: int) -> bool:
    """True iff the lower shadow of a equals the full (d-1)-slice.

    For d = 1 this is unsatisfiable: the unit monomial is excluded from
    lower shadows by definition, so the 0-slice can never be covered.
    """
    if not 1 <= d <= a.n:
        raise InputError(f"degree {d} out of range 1..{a.n}")
    _require_homogeneous(a, d)
    return _lower_shadow_masks(a.masks()) == _slice_mask_set(a.n, d - 1)


def is_perfect(a: MonomialSet, d: int) -> bool:
    return is_upper_perfect(a, d) and is_lower_perfect(a, d)


class _SliceSearch:
    """Precomputed coverage tables for subsets of one degree slice."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self.items: Sequence[int] = degree_slice(n, d).masks()
        up_universe = degree_slice(n, d + 1).masks() if d + 1 <= n else ()
        lo_universe = degree_slice(n, d - 1).masks() if d >= 1 else ()
        up_rank = {mk: i for i, mk in enumerate(up_universe)}
        lo_rank = {mk: i for i, mk in enumerate(lo_universe)}
        full_bits = (1 << n) - 1
        self.up_cov = []
        self.lo_cov = []
        for mk in self.items:
            u = 0
            rest = full_bits & ~mk
            while rest:
                bit = rest & -rest
                u |= 1 << up_rank[mk | bit]
                rest ^= bit
            self.up_cov.append(u)
            l = 0
            if mk.bit_count() >= 2:  # degree-1 members cover nothing below (unit excluded)
                inside = mk
                while inside:
                    bit = inside & -inside
                    l |= 1 << lo_rank[mk ^ bit]
                    inside ^= bit
            self.lo_cov.append(l)
        self.full_up = (1 << len(up_universe)) - 1
        self.full_lo = (1 << len(lo_universe)) - 1
        m = len(self.items)
        self.suffix_up = [0] * (m + 1)
        self.suffix_lo = [0] * (m + 1)
        for i in range(m - 1, -1, -1):
            self.suffix_up[i] = self.suffix_up[i + 1] | self.up_cov[i]
            self.suffix_lo[i] = self.suffix_lo[i + 1] | self.lo_cov[i]

    def iter_perfect(self, size: int, first_index: int | None = None) -> Iterator[tuple[int, ...]]:
        """Yield, in lexicographic order over slice positions, every size-subset
        whose members form a perfect set.  With first_index set, restrict to
        subsets whose least position is exactly first_index (for partitioned
        parallel runs)."""
        items, up_cov, lo_cov = self.items, self.up_cov, self.lo_cov
        full_up, full_lo = self.full_up, self.full_lo
        suffix_up, suffix_lo = self.suffix_up, self.suffix_lo
        per_up = self.n - self.d
        per_lo = self.d if self.d >= 2 else 0
        m = len(items)
        if size < 0 or size > m:
            return
        if first_index is None:
            start = [(0, size, 0, 0, ())]
        else:
            if size == 0 or first_index > m - size:
                return
            start = [
                (
                    first_index + 1,
                    size - 1,
                    up_cov[first_index],
                    lo_cov[first_index],
                    (first_index,),
                )
            ]
        stack = start
        while stack:
            pos, need, cu, cl, picked = stack.pop()
            if need == 0:
                if cu == full_up and cl == full_lo:
                    yield picked
                continue
            if m - pos < need:
                continue
            if (cu | suffix_up[pos]) != full_up or (cl | suffix_lo[pos]) != full_lo:
                continue
            if (full_up & ~cu).bit_count() > need * per_up:
                continue
            if per_lo and (full_lo & ~cl).bit_count() > need * per_lo:
                continue
            # exclude branch pushed first so the include branch pops first:
            # yields arrive in lexicographic order of position tuples
            stack.append((pos + 1, need, cu, cl, picked))
            stack.append((pos + 1, need - 1, cu | up_cov[pos], cl | lo_cov[pos], picked + (pos,)))


def iter_perfect_subsets(
    n: int, d: int, size: int, first_index: int | None = None
) -> Iterator[MonomialSet]:
    """All perfect size-subsets of the degree-d slice, canonical order."""
    search = _SliceSearch(n, d)
    for picked in search.iter_perfect(size, first_index):
        yield MonomialSet.from_masks([search.items[p] for p in picked], n)


@dataclass(frozen=True)
class PerfectNumberResult:
    n: int
    d: int
    method: str
    value: int
    witness: MonomialSet


def _brute_lower_bound(n: int, d: int) -> int:
    """Sound covering bound: each member covers d faces below and n-d above."""
    lo = -(-comb(n, d - 1) // d)
    up = -(-comb(n, d + 1) // (n - d))
    return max(1, lo, up)


def perfect_number(
    n: int, d: int = 2, method: str = "brute", max_candidates: int = 10**8
) -> PerfectNumberResult:
    """Least cardinality of a perfect subset of the degree-d slice.

    brute: ascending-cardinality lexicographic search, first witness wins
    (so the witness is the lexicographically least one at the minimum size).
    formula: the degree-2 closed form, witnessed by the staircase set.
    """
    if method == "formula":
        if d != 2:
            raise InputError("the closed form only covers degree 2")
        if n < 3:
            raise InputError("the degree-2 closed form needs n >= 3")
        if n == 3:
            # below the closed form's range; the minimum is 2, e.g. a star
            value, witness = 2, MonomialSet.from_masks([0b011, 0b101], 3)
        else:
            k, odd = divmod(n, 2)
            value = k * k if odd else k * k - k
            witness = staircase_construction(n)
        if len(witness) != value or not is_perfect(witness, 2):
            raise InternalInconsistencyError("formula witness does not match the closed form")
        return PerfectNumberResult(n, d, "formula", value, witness)
    if method != "brute":
        raise InputError(f"unknown method {method!r}")
    if not 2 <= d < n:
        raise InputError("brute search needs 2 <= d < n")
    m = comb(n, d)
    search = _SliceSearch(n, d)
    checked = 0
    for size in range(_brute_lower_bound(n, d), m + 1):
        if comb(m, size) > max_candidates - checked:
            raise BudgetExceededError(
                f"perfect-number search at cardinality {size} exceeds the candidate budget",
                candidates=checked,
            )
        checked += comb(m, size)
        for picked in search.iter_perfect(size):
            witness = MonomialSet.from_masks([search.items[p] for p in picked], n)
            return PerfectNumberResult(n, d, "brute", size, witness)
    raise InternalInconsistencyError("the full slice is perfect; search cannot exhaust")


def two_part_construction(n: int, b: Sequence[int]) -> MonomialSet:
    """All degree-2 monomials internal to b or internal to its complement.

    Symmetric in b vs complement.  Note the result is only perfect when both
    sides have at least two vertices; a singleton side is left uncovered
    below (its vertex meets no pair), and callers relying on perfectness
    must check it.
    """
    bset = set(b)
    if not all(isinstance(i, int) and 1 <= i <= n for i in bset):
        raise InputError(f"b must be a subset of 1..{n}")
    if not bset or len(bset) == n:
        raise InputError("b must be a nonempty proper subset of the vertex set")
    masks = []
    sides = [sorted(bset), sorted(set(range(1, n + 1)) - bset)]
    for side in sides:
        for idx, i in enumerate(side):
            for j in side[idx + 1 :]:
                masks.append((1 << (i - 1)) | (1 << (j - 1)))
    return MonomialSet.from_masks(masks, n)


def staircase_construction(n: int) -> MonomialSet:
    """Minimal perfect set of degree 2 built by the staircase recurrence.

    Pairs every index j with j+2, j+4, ... of the same parity; for odd n the
    last vertex is attached to every odd index.  The result equals the
    two-part set on the odd-index class and always has the minimal
    cardinality k^2 - k (n = 2k) or k^2 (n = 2k+1).  Perfectness is verified
    here, not assumed.
    """
    if n < 4:
        raise InputError("staircase construction needs n >= 4")
    even_top = n if n % 2 == 0 else n - 1
    pairs_with: dict[int, list[int]] = {j: [] for j in range(1, n + 1)}
    # unroll: top two rows pair with nothing, then each j picks up j+2 and
    # everything its partner row already had
    for j in range(even_top - 2, 0, -1):
        pairs_with[j] = [j + 2] + pairs_with[j + 2]
    if n % 2 == 1:
        for j in range(1, n, 2):
            pairs_with[j] = pairs_with[j] + [n]
    masks = []
    for j, partners in pairs_with.items():
        for p in partners:
            masks.append((1 << (j - 1)) | (1 << (p - 1)))
    out = MonomialSet.from_masks(masks, n)
    k = n // 2
    expected = k * k if n % 2 else k * k - k
    if len(out) != expected or not is_perfect(out, 2):
        raise InternalInconsistencyError("staircase output failed its perfectness check")
    return out
