"""Minimal primes, unmixedness, and the degree-2 unmixedness criterion.

For a square-free monomial ideal the minimal primes are exactly the minimal
vertex covers: variable sets meeting the support of every generator, with no
proper subset doing so.  Unmixedness (all minimal primes the same size) is
decided by two independent routes that are cross-checked on every call:
directly on the covers, and through purity of the non-face complex.
"""
from __future__ import annotations

from dataclasses import dataclass

from .complexes import DEFAULT_MAX_SCAN_BITS, is_pure, nonface_complex
from .errors import InputError, InternalInconsistencyError
from .monomials import Ideal, MonomialSet
from .perfect import is_lower_perfect


@dataclass(frozen=True)
class PrimeCover:
    """One minimal prime, carried as its variable set."""

    n: int
    mask: int

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def variables(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    def text(self) -> str:
        return ".".join(str(v) for v in self.variables())


def minimal_primes(ideal: Ideal) -> list[PrimeCover]:
    """All minimal vertex covers of the generator supports, canonical order."""
    gens = ideal.generators.masks()
    covers = [
        mask
        for mask in range(1 << ideal.n)
        if all(mask & g for g in gens)
    ]
    cover_set = set(covers)
    minimal = []
    for mask in covers:
        bits = mask
        is_minimal = True
        while bits:
            low = bits & -bits
            if mask ^ low in cover_set:
                is_minimal = False
                break
            bits ^= low
        if is_minimal:
            minimal.append(mask)
    return [PrimeCover(ideal.n, mask) for mask in sorted(minimal)]


def codimension(ideal: Ideal) -> int:
    """Size of the smallest minimal prime."""
    return min(cover.size for cover in minimal_primes(ideal))


def is_unmixed(
    ideal: Ideal,
    route: str = "both",
    max_scan_bits: int = DEFAULT_MAX_SCAN_BITS,
) -> bool:
    """Whether all minimal primes share one size.

    route picks the decision path: "covers" compares cover sizes, "purity"
    checks the non-face complex is pure, "both" runs the two and insists
    they agree.  Facets of the non-face complex are the complements of the
    minimal covers, which is why the routes must match.
    """
    if route not in ("covers", "purity", "both"):
        raise InputError(f"unknown unmixedness route {route!r}")
    by_covers = by_purity = None
    if route in ("covers", "both"):
        sizes = {cover.size for cover in minimal_primes(ideal)}
        by_covers = len(sizes) <= 1
    if route in ("purity", "both"):
        by_purity = is_pure(nonface_complex(ideal, max_scan_bits))
    if route == "covers":
        return bool(by_covers)
    if route == "purity":
        return bool(by_purity)
    if by_covers != by_purity:
        raise InternalInconsistencyError(
            f"unmixedness routes disagree on {ideal.text()!r}: "
            f"covers={by_covers}, purity={by_purity}"
        )
    return bool(by_covers)


def complement_lower_perfect(ideal: Ideal) -> bool:
    """Unmixedness test for homogeneous f-ideals: the complement of the
    generator set within its degree slice must be lower perfect.

    Degree 1 is excluded because the lower-shadow convention (the unit is
    never a member) makes lower perfectness unsatisfiable there.  The
    outcome is cross-checked against is_unmixed; disagreement would mean
    the criterion or the cover machinery is broken.
    """
    if not ideal.is_homogeneous() or ideal.deg < 2:
        raise InputError("criterion applies to homogeneous ideals of degree >= 2")
    from .engine import is_f_ideal

    if not is_f_ideal(ideal).is_f_ideal:
        raise InputError("criterion applies to f-ideals only")
    from .monomials import degree_slice

    d = ideal.deg
    complement = degree_slice(ideal.n, d).difference(ideal.generators)
    result = is_lower_perfect(complement, d)
    direct = is_unmixed(ideal)
    if result != direct:
        raise InternalInconsistencyError(
            f"unmixedness criterion disagrees with cover sizes on "
            f"{ideal.text()!r}: criterion={result}, covers={direct}"
        )
    return result
