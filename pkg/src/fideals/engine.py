"""Deciding, enumerating, counting and constructing f-ideals.

An ideal is an f-ideal when its facet complex and its non-face complex have
the same f-vector.  Three decision routes are computed and cross-checked on
every call:

  definition         compare the two f-vectors directly
  homogeneous        (single degree d >= 2) generators form a perfect set of
                     cardinality exactly half the degree slice
  general_degreewise for every degree l, |G_l| equals half of C(n,l) minus
                     the iterated-shadow spans of the other degree slices

Any disagreement between routes raises InternalInconsistencyError: the
routes are provably equivalent, so a mismatch is an implementation bug.
The homogeneous route is skipped for d = 1 where the lower-shadow clause
("the unit is never a shadow member") makes perfectness unsatisfiable even
though degree-1 f-ideals exist by the definition.
"""
from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, isqrt
from random import Random
from typing import Iterator

from .complexes import (
    DEFAULT_MAX_SCAN_BITS,
    FVector,
    f_vector,
    facet_complex,
    nonface_complex,
)
from .errors import BudgetExceededError, ConstructionError, InputError, InternalInconsistencyError
from .monomials import (
    Ideal,
    MonomialSet,
    _iterated_shadow_masks,
    degree_slice,
    shadow_closure,
)
from .perfect import _SliceSearch, is_lower_perfect, is_perfect, is_upper_perfect, two_part_construction

DEFAULT_MAX_CANDIDATES = 10**8


@dataclass(frozen=True)
class FIdealVerdict:
    is_f_ideal: bool
    routes: dict[str, bool]
    f_facet: FVector
    f_nonface: FVector
    failure_detail: str | None = None


@dataclass(frozen=True)
class CountResult:
    n: int
    d: int
    value: int
    method: str


def _balance_at_degree(
    n: int, slice_masks: dict[int, tuple[int, ...]], l: int
) -> tuple[int, int | Fraction]:
    lhs = len(slice_masks.get(l, ()))
    from_above: set[int] = set()
    from_below: set[int] = set()
    for d, masks in slice_masks.items():
        if d > l:
            from_above |= _iterated_shadow_masks(masks, n, "down", d - l)
        elif d < l:
            from_below |= _iterated_shadow_masks(masks, n, "up", l - d)
    numerator = comb(n, l) - len(from_above) - len(from_below)
    rhs: int | Fraction
    if numerator % 2 == 0:
        rhs = numerator // 2
    else:
        rhs = Fraction(numerator, 2)
    return lhs, rhs


def _slice_masks(ideal: Ideal) -> dict[int, tuple[int, ...]]:
    return {d: part.masks() for d, part in ideal.degree_slices().items()}


def degree_count_identity(ideal: Ideal, l: int) -> tuple[int, int | Fraction]:
    """Generator count at degree l versus its balance target.

    The target is half of: C(n,l) minus the degree-l monomials reachable by
    iterated lower shadows from higher generator slices or upper shadows
    from lower ones.  Equality at every l decides the f-ideal property.
    The target is returned exactly (a Fraction when the numerator is odd,
    which happens only for non-f-ideals; rounding would fake equalities).
    """
    if not 1 <= l <= ideal.n:
        raise InputError(f"degree {l} out of range 1..{ideal.n}")
    return _balance_at_degree(ideal.n, _slice_masks(ideal), l)


def is_f_ideal(ideal: Ideal, max_scan_bits: int = DEFAULT_MAX_SCAN_BITS) -> FIdealVerdict:
    """Decide the f-ideal property, computing every applicable route."""
    fv_facet = f_vector(facet_complex(ideal))
    fv_nonface = f_vector(nonface_complex(ideal, max_scan_bits))
    routes = {"definition": fv_facet == fv_nonface}

    general_ok = True
    first_unbalanced: tuple[int, int, int | Fraction] | None = None
    slice_masks = _slice_masks(ideal)
    for l in range(1, ideal.n + 1):
        lhs, rhs = _balance_at_degree(ideal.n, slice_masks, l)
        if lhs != rhs:
            general_ok = False
            first_unbalanced = (l, lhs, rhs)
            break
    routes["general_degreewise"] = general_ok

    homogeneous_detail = None
    if ideal.is_homogeneous() and ideal.deg >= 2:
        d = ideal.deg
        upper = is_upper_perfect(ideal.generators, d)
        lower = is_lower_perfect(ideal.generators, d)
        half_sized = 2 * len(ideal.generators) == comb(ideal.n, d)
        routes["homogeneous"] = upper and lower and half_sized
        if not routes["homogeneous"]:
            parts = []
            if not upper:
                parts.append("not upper perfect")
            if not lower:
                parts.append("not lower perfect")
            if not half_sized:
                parts.append(
                    f"|G(I)| = {len(ideal.generators)} != C({ideal.n},{d})/2"
                )
            homogeneous_detail = ", ".join(parts)

    if len(set(routes.values())) > 1:
        raise InternalInconsistencyError(
            f"f-ideal routes disagree on {ideal.text()!r} (n={ideal.n}): {routes}"
        )
    verdict = routes["definition"]
    detail = None
    if not verdict:
        if homogeneous_detail is not None:
            detail = homogeneous_detail
        elif first_unbalanced is not None:
            l, lhs, rhs = first_unbalanced
            detail = f"degree {l}: {lhs} generators, balance target {rhs}"
        else:
            detail = "f-vectors differ"
    return FIdealVerdict(verdict, routes, fv_facet, fv_nonface, detail)


def shadow_closure_identities(ideal: Ideal, max_scan_bits: int = DEFAULT_MAX_SCAN_BITS) -> bool:
    """Check the closure identities relating shadows to the two complexes.

    The downward closure of the generators must equal the nonempty common
    faces of the facet and non-face complexes, and the upward closure must
    miss both complexes entirely.  Holds for every ideal; exposed as an
    operation so it can serve as a test oracle.
    """
    gens = ideal.generators
    down = set(shadow_closure(gens, "down").masks())
    up = set(shadow_closure(gens, "up").masks())
    faces_facet = facet_complex(ideal).faces()
    faces_facet.discard(0)
    faces_nonface = nonface_complex(ideal, max_scan_bits).faces()
    faces_nonface.discard(0)
    return (
        down == (faces_facet & faces_nonface)
        and not (up & faces_facet)
        and not (up & faces_nonface)
    )


# ---------------------------------------------------------------------------
# enumeration

_worker_search_cache: dict[tuple[int, int], _SliceSearch] = {}


def _cached_search(n: int, d: int) -> _SliceSearch:
    key = (n, d)
    if key not in _worker_search_cache:
        _worker_search_cache[key] = _SliceSearch(n, d)
    return _worker_search_cache[key]


def _enumerate_partition(args: tuple[int, int, int, int]) -> list[tuple[int, ...]]:
    n, d, size, first_index = args
    search = _cached_search(n, d)
    return list(search.iter_perfect(size, first_index))


def enumerate_f_ideals(
    n: int,
    d: int,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    workers: int = 1,
) -> Iterator[Ideal]:
    """Stream every homogeneous degree-d f-ideal in canonical order.

    These are exactly the half-slice-sized perfect subsets of the degree
    slice.  An odd slice size means no candidates at all.  The candidate
    space C(C(n,d), C(n,d)/2) must fit the budget or nothing is produced.
    With workers > 1 the search is partitioned by the first chosen slice
    position and merged in order, so output is scheduling-independent.
    """
    if not 1 <= d <= n:
        raise InputError(f"degree {d} out of range 1..{n}")
    m = comb(n, d)
    if m % 2 == 1:
        return iter(())
    half = m // 2
    if comb(m, half) > max_candidates:
        raise BudgetExceededError(
            f"enumeration space C({m},{half}) = {comb(m, half)} exceeds the "
            f"candidate budget {max_candidates}",
            candidates=0,
        )
    items = degree_slice(n, d).masks()

    def build(picked: tuple[int, ...]) -> Ideal:
        return Ideal(n, MonomialSet.from_masks([items[p] for p in picked], n))

    if workers <= 1:
        def serial() -> Iterator[Ideal]:
            search = _cached_search(n, d)
            for picked in search.iter_perfect(half):
                yield build(picked)

        return serial()

    def parallel() -> Iterator[Ideal]:
        jobs = [(n, d, half, first) for first in range(0, m - half + 1)]
        with multiprocessing.Pool(workers) as pool:
            for batch in pool.imap(_enumerate_partition, jobs):
                for picked in batch:
                    yield build(picked)

    return parallel()


# ---------------------------------------------------------------------------
# closed-form counts

def count_least_perfect_f_ideals(n: int) -> CountResult:
    """Closed-form count of degree-2 f-ideals whose generators contain a
    minimum-cardinality perfect set (a balanced two-part set)."""
    if n < 4:
        raise InputError("counts are defined for n >= 4")
    k, r = divmod(n, 4)
    if r == 0:
        value = comb(4 * k, 2 * k) * comb(4 * k * k, k) // 2
    elif r == 1:
        value = comb(n, 2 * k) * comb(4 * k * k + 2 * k, k)
    else:
        value = 0
    return CountResult(n, 2, value, "formula")


def count_f_ideals_closed_form(n: int) -> CountResult:
    """Closed-form count of all degree-2 f-ideals.

    Sums, over the admissible part-size offsets i, the ways to pick a
    two-part set and fill up with extra generators.  Known boundary defect:
    at n = 4 the i = 1 term counts four sets whose singleton part is left
    uncovered below (they are not f-ideals), so the closed form gives 16
    while exhaustive enumeration gives 12.  The formula is reproduced as
    stated; the enumeration method is authoritative at n = 4.
    """
    if n < 4:
        raise InputError("counts are defined for n >= 4")
    k, r = divmod(n, 4)
    if r in (2, 3):
        return CountResult(n, 2, 0, "formula")
    if n == 5:
        return CountResult(n, 2, 72, "formula")
    if r == 0:
        value = count_least_perfect_f_ideals(n).value
        for i in range(1, isqrt(k) + 1):
            value += comb(4 * k, 2 * k - i) * comb(4 * k * k - i * i, k - i * i)
    else:
        value = 0
        i_max = (isqrt(1 + 4 * k) - 1) // 2
        for i in range(0, i_max + 1):
            value += comb(n, 2 * k - i) * comb(
                4 * k * k + 2 * k - i * i - i, k - i * i - i
            )
    return CountResult(n, 2, value, "formula")


def count_by_enumeration(
    n: int,
    d: int = 2,
    mode: str = "V",
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    workers: int = 1,
) -> CountResult:
    """Count f-ideals by exhaustive enumeration.

    mode V counts all of them; mode U counts those whose generators contain
    a balanced two-part set (checked by direct containment, independent of
    the classification machinery).
    """
    if mode not in ("U", "V"):
        raise InputError(f"unknown count mode {mode!r}")
    if mode == "U" and d != 2:
        raise InputError("mode U is defined for degree 2 only")
    value = 0
    if mode == "V":
        for _ in enumerate_f_ideals(n, d, max_candidates, workers):
            value += 1
        return CountResult(n, d, value, "enumeration")
    balanced_parts: set[frozenset[int]] = set()
    for b in combinations(range(1, n + 1), 2 * (n // 4)):
        masks = frozenset(two_part_construction(n, b).masks())
        balanced_parts.add(masks)
    for ideal in enumerate_f_ideals(n, d, max_candidates, workers):
        gens = set(ideal.generators.masks())
        if any(w <= gens for w in balanced_parts):
            value += 1
    return CountResult(n, d, value, "enumeration")


def type_class_nonempty(n: int, l: int) -> bool:
    """Whether the class of type-l degree-2 f-ideals is nonempty, by the
    closed-form inequality on the part-size offset i = 2k - l.

    Same n = 4 boundary defect as the closed-form count: the rule says the
    l = 1 class is nonempty there, but enumeration shows it is empty (the
    singleton part stays uncovered).  Reproduced as stated.
    """
    k, r = divmod(n, 4)
    if r not in (0, 1):
        raise InputError("type classes are defined for n = 4k or 4k+1")
    if not 1 <= l <= n // 2:
        raise InputError(f"type index {l} out of range 1..{n // 2}")
    i = 2 * k - l
    if r == 0:
        return i * i <= k
    return i * i + i <= k


# ---------------------------------------------------------------------------
# construction

def construct_f_ideal(n: int, b, extra: MonomialSet) -> Ideal:
    """Assemble the two-part set on b plus the given extra degree-2
    monomials into an f-ideal; the result is verified, never trusted."""
    if n % 4 not in (0, 1):
        raise InputError("construction needs n = 4k or 4k+1 (the slice must split in half)")
    base = two_part_construction(n, b)
    if extra.n != n:
        raise ConstructionError("extra set has a different ambient n")
    for m in extra:
        if m.degree != 2:
            raise ConstructionError(f"extra member {m.text()} is not degree 2")
    overlap = set(extra.masks()) & set(base.masks())
    if overlap:
        raise ConstructionError("extra overlaps the two-part set")
    need = comb(n, 2) // 2 - len(base)
    if need < 0:
        raise ConstructionError("two-part set already larger than half the slice")
    if len(extra) != need:
        raise ConstructionError(
            f"extra must have exactly {need} members to reach half the slice, got {len(extra)}"
        )
    ideal = Ideal(n, base.union(extra))
    verdict = is_f_ideal(ideal)
    if not verdict.is_f_ideal:
        raise ConstructionError(
            f"assembled set is not an f-ideal ({verdict.failure_detail})"
        )
    return ideal


def construct_f_ideal_auto(n: int, b, max_candidates: int = DEFAULT_MAX_CANDIDATES) -> Ideal:
    """Like construct_f_ideal but picks the lexicographically least valid
    extra set itself."""
    if n % 4 not in (0, 1):
        raise InputError("construction needs n = 4k or 4k+1 (the slice must split in half)")
    base = two_part_construction(n, b)
    pool = degree_slice(n, 2).difference(base)
    need = comb(n, 2) // 2 - len(base)
    if need < 0:
        raise ConstructionError("two-part set already larger than half the slice")
    if comb(len(pool), need) > max_candidates:
        raise BudgetExceededError(
            f"auto extra search space C({len(pool)},{need}) exceeds the candidate budget"
        )
    for combo in combinations(pool.members, need):
        try:
            return construct_f_ideal(n, b, MonomialSet(n, combo))
        except ConstructionError:
            continue
    raise ConstructionError("no valid extra set exists for this part choice")


def five_cycle_family() -> list[Ideal]:
    """The twelve labeled 5-cycle ideals at n = 5, canonical order.

    These are the only degree-2 f-ideals containing no two-part set."""
    ideals = []
    for a, b, c, d in permutations((2, 3, 4, 5)):
        if a > d:
            continue  # a cycle equals its reversal
        edges = [(1, a), (a, b), (b, c), (c, d), (d, 1)]
        masks = [(1 << (i - 1)) | (1 << (j - 1)) for i, j in edges]
        ideals.append(Ideal(5, MonomialSet.from_masks(masks, 5)))
    ideals.sort(key=lambda i: i.generators.masks())
    if len(ideals) != 12:
        raise InternalInconsistencyError("expected 12 labeled 5-cycles")
    for ideal in ideals:
        if not is_f_ideal(ideal).is_f_ideal:
            raise InternalInconsistencyError(f"5-cycle ideal {ideal.text()!r} failed verification")
    return ideals


# ---------------------------------------------------------------------------
# randomized corpora (seeded; used by the test suite)

def random_square_free_ideal(
    rng: Random,
    n: int,
    homogeneous_degree: int | None = None,
    max_generators: int = 8,
) -> Ideal:
    """A random ideal: either a random subset of one degree slice, or random
    supports reduced to their minimal antichain."""
    if homogeneous_degree is not None:
        slice_ = degree_slice(n, homogeneous_degree).masks()
        size = rng.randint(1, min(max_generators, len(slice_)))
        picked = rng.sample(slice_, size)
        return Ideal(n, MonomialSet.from_masks(picked, n))
    masks = set()
    for _ in range(rng.randint(1, max_generators)):
        degree = rng.randint(1, n)
        support = rng.sample(range(n), degree)
        masks.add(sum(1 << i for i in support))
    minimal = [m for m in masks if not any(o != m and o & ~m == 0 for o in masks)]
    return Ideal(n, MonomialSet.from_masks(minimal, n))
