"""Simplicial complexes attached to a square-free monomial ideal.

Two complexes matter here: the facet complex (generated by the generator
supports) and the non-face complex (all subsets of [n] containing no
generator support; the ideal is its Stanley-Reisner ideal).  The f-vector
comparison between the two is the definition of an f-ideal.

Faces are bitmasks like everywhere else in this package.  The empty face
belongs to every complex but is not counted in f-vectors (counts start at
f_0 = number of vertices present).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, InputError
from .monomials import Ideal, MonomialSet

# 2^n face scans get slow fast; anything beyond this needs an explicit budget
DEFAULT_MAX_SCAN_BITS = 22


@dataclass(frozen=True)
class FVector:
    """Face counts by dimension: counts[i] = number of faces of cardinality i+1.

    Trailing zeros are never stored, so equality of two FVectors means equal
    dimension and equal counts throughout.  An empty complex has counts ().
    """

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c <= 0 for c in self.counts):
            raise InputError("f-vector entries must be positive (trailing zeros dropped)")

    @property
    def dim(self) -> int:
        return len(self.counts) - 1

    def __iter__(self):
        return iter(self.counts)


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet representation: an antichain of faces on vertex set within [n].

    The face set is the downward closure of the facets, empty face included.
    A complex whose only face is the empty face has facets == (0,); a complex
    with no facets at all is the void complex.
    """

    n: int
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1 or self.n > 64:
            raise InputError(f"vertex count must be in 1..64, got {self.n}")
        ordered = tuple(sorted(set(self.facets)))
        if ordered != self.facets:
            object.__setattr__(self, "facets", ordered)
        for f in self.facets:
            if f < 0 or f >> self.n:
                raise InputError(f"facet {f:#x} does not fit in {self.n} vertices")
        for a in self.facets:
            for b in self.facets:
                if a != b and a & ~b == 0:
                    raise InputError("facets must form an antichain")

    def faces(self) -> set[int]:
        """Downward closure of the facets, including the empty face."""
        out = {0}
        for f in self.facets:
            # iterate submasks of f
            sub = f
            while True:
                out.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return out

    def facet_supports(self) -> list[tuple[int, ...]]:
        return [tuple(i + 1 for i in range(self.n) if f >> i & 1) for f in self.facets]

    def text(self) -> str:
        parts = []
        for sup in self.facet_supports():
            parts.append(".".join(str(i) for i in sup) if sup else "@")
        return ", ".join(parts)


def facet_complex(ideal: Ideal) -> SimplicialComplex:
    """Complex whose facets are the generator supports (an antichain already)."""
    return SimplicialComplex(ideal.n, ideal.generators.masks())


def nonface_complex(ideal: Ideal, max_scan_bits: int = DEFAULT_MAX_SCAN_BITS) -> SimplicialComplex:
    """Maximal subsets of [n] containing no generator support.

    Exhaustive scan over all 2^n subsets; refuses to run beyond
    max_scan_bits to keep runtimes bounded.
    """
    n = ideal.n
    if n > max_scan_bits:
        raise BudgetExceededError(
            f"non-face scan needs 2^{n} subset checks, over the 2^{max_scan_bits} budget"
        )
    gens = ideal.generators.masks()
    is_face = [True] * (1 << n)
    for g in gens:
        # every superset of g is a non-face; mark by supersets of g directly
        rest = ((1 << n) - 1) & ~g
        sub = rest
        while True:
            is_face[g | sub] = False
            if sub == 0:
                break
            sub = (sub - 1) & rest
    facets = []
    for s in range(1 << n):
        if not is_face[s]:
            continue
        maximal = True
        for i in range(n):
            bit = 1 << i
            if not s & bit and is_face[s | bit]:
                maximal = False
                break
        if maximal:
            facets.append(s)
    return SimplicialComplex(n, tuple(facets))


def f_vector(complex_: SimplicialComplex) -> FVector:
    faces = complex_.faces()
    faces.discard(0)
    if not faces:
        return FVector(())
    top = max(f.bit_count() for f in faces)
    counts = [0] * top
    for f in faces:
        counts[f.bit_count() - 1] += 1
    return FVector(tuple(counts))


def dimension(complex_: SimplicialComplex) -> int:
    """Largest facet cardinality minus one; -1 when no nonempty face exists."""
    if not complex_.facets:
        return -1
    return max(f.bit_count() for f in complex_.facets) - 1


def is_pure(complex_: SimplicialComplex) -> bool:
    cards = {f.bit_count() for f in complex_.facets}
    return len(cards) <= 1


def nonfaces_minimal(complex_: SimplicialComplex) -> MonomialSet:
    """Minimal non-faces of the complex, as monomials.

    For a non-face complex built from an ideal this recovers exactly the
    generating set (the Stanley-Reisner round trip).
    """
    n = complex_.n
    faces = complex_.faces()
    nonfaces = [s for s in range(1 << n) if s not in faces]
    minimal = []
    for s in nonfaces:
        reducible = False
        inside = s
        while inside:
            bit = inside & -inside
            if (s ^ bit) not in faces:
                reducible = True
                break
            inside ^= bit
        if not reducible:
            minimal.append(s)
    return MonomialSet.from_masks(minimal, n)
