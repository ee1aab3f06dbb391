"""Square-free monomials as support subsets of {1..n}, with shadow operators.

A square-free monomial x_{i1}···x_{ik} is identified with its support set
{i1..ik}, stored as a bitmask with index i at bit i-1.  Degree equals the
popcount.  The unit monomial (degree 0) is representable but is excluded
from lower shadows and rejected as an ideal generator.

Canonical order everywhere is ascending numeric value of the support mask;
all set-valued operations return members in that order.

Text grammar: a monomial is dot-separated variable indices ("1.2.5"), the
unit monomial is "@"; a set of monomials is comma-separated ("1.2, 2.3").
Whitespace around separators is ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError, ParseError

MAX_VARIABLES = 64  # supports fit one machine word


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > MAX_VARIABLES:
        raise InputError(f"ambient variable count must be in 1..{MAX_VARIABLES}, got {n!r}")


@dataclass(frozen=True, order=True)
class Monomial:
    """A square-free monomial in n variables, encoded by its support mask."""

    mask: int
    n: int

    def __post_init__(self) -> None:
        _check_n(self.n)
        if self.mask < 0 or self.mask >> self.n:
            raise InputError(f"support mask {self.mask:#x} does not fit in {self.n} variables")

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> "Monomial":
        _check_n(n)
        mask = 0
        for i in indices:
            if not 1 <= i <= n:
                raise InputError(f"variable index {i} out of range 1..{n}")
            if mask >> (i - 1) & 1:
                raise InputError(f"duplicate variable index {i}")
            mask |= 1 << (i - 1)
        return cls(mask, n)

    @classmethod
    def unit(cls, n: int) -> "Monomial":
        return cls(0, n)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.n) if self.mask >> i & 1)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    def divides(self, other: "Monomial") -> bool:
        return self.mask & ~other.mask == 0

    def text(self) -> str:
        if self.mask == 0:
            return "@"
        return ".".join(str(i) for i in self.support)

    def __repr__(self) -> str:
        return f"Monomial({self.text()!r}, n={self.n})"


def parse_monomial(text: str, n: int, offset: int = 0) -> Monomial:
    """Parse one monomial.  offset shifts reported error positions, for
    callers that hand over a slice of a larger string."""
    _check_n(n)
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty monomial", offset)
    pos = offset + text.index(stripped[0])
    if stripped == "@":
        return Monomial.unit(n)
    mask = 0
    cursor = pos
    for token in stripped.split("."):
        bare = token.strip()
        if not bare.isdigit():
            raise ParseError(f"expected a variable index, got {bare!r}", cursor)
        i = int(bare)
        if not 1 <= i <= n:
            raise ParseError(f"variable index {i} out of range 1..{n}", cursor)
        if mask >> (i - 1) & 1:
            raise ParseError(f"duplicate variable index {i}", cursor)
        mask |= 1 << (i - 1)
        cursor += len(token) + 1
    return Monomial(mask, n)


@dataclass(frozen=True)
class MonomialSet:
    """A duplicate-free collection of Monomials sharing one ambient n,
    stored in canonical (ascending mask) order."""

    n: int
    members: tuple[Monomial, ...] = field(default=())

    def __post_init__(self) -> None:
        _check_n(self.n)
        for m in self.members:
            if m.n != self.n:
                raise InputError(f"member {m.text()} has ambient n={m.n}, set has n={self.n}")
        masks = [m.mask for m in self.members]
        if sorted(set(masks)) != masks:
            ordered = tuple(Monomial(mk, self.n) for mk in sorted(set(masks)))
            object.__setattr__(self, "members", ordered)

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> "MonomialSet":
        return cls(n, tuple(Monomial(mk, n) for mk in sorted(set(masks))))

    def masks(self) -> tuple[int, ...]:
        return tuple(m.mask for m in self.members)

    def degrees(self) -> tuple[int, ...]:
        """Distinct member degrees, ascending."""
        return tuple(sorted({m.degree for m in self.members}))

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def restrict_degree(self, d: int) -> "MonomialSet":
        return MonomialSet(self.n, tuple(m for m in self.members if m.degree == d))

    def union(self, other: "MonomialSet") -> "MonomialSet":
        if other.n != self.n:
            raise InputError("cannot union sets with different ambient n")
        return MonomialSet.from_masks(set(self.masks()) | set(other.masks()), self.n)

    def difference(self, other: "MonomialSet") -> "MonomialSet":
        return MonomialSet.from_masks(set(self.masks()) - set(other.masks()), self.n)

    def text(self) -> str:
        return ", ".join(m.text() for m in self.members)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, m: Monomial) -> bool:
        return m.n == self.n and m.mask in set(self.masks())

    def __repr__(self) -> str:
        return f"MonomialSet({self.text()!r}, n={self.n})"


def parse_monomial_set(text: str, n: int) -> MonomialSet:
    """Parse a comma-separated monomial list; blank input is the empty set."""
    if not text.strip():
        return MonomialSet(n)
    members = []
    offset = 0
    for chunk in text.split(","):
        if not chunk.strip():
            raise ParseError("empty monomial between commas", offset)
        members.append(parse_monomial(chunk, n, offset))
        offset += len(chunk) + 1
    return MonomialSet(n, tuple(members))


def degree_slice(n: int, d: int) -> MonomialSet:
    """All C(n, d) square-free monomials of degree d, canonical order."""
    _check_n(n)
    if not 0 <= d <= n:
        raise InputError(f"degree {d} out of range 0..{n}")
    masks = [sum(1 << (i - 1) for i in combo) for combo in combinations(range(1, n + 1), d)]
    return MonomialSet.from_masks(masks, n)


def _upper_shadow_masks(masks: Iterable[int], n: int) -> set[int]:
    out: set[int] = set()
    full = (1 << n) - 1
    for mask in masks:
        rest = full & ~mask
        while rest:
            bit = rest & -rest
            out.add(mask | bit)
            rest ^= bit
    return out


def _lower_shadow_masks(masks: Iterable[int]) -> set[int]:
    out: set[int] = set()
    for mask in masks:
        if mask.bit_count() < 2:
            continue  # g/x_i would be the unit, which is excluded
        inside = mask
        while inside:
            bit = inside & -inside
            out.add(mask ^ bit)
            inside ^= bit
    return out


def upper_shadow(a: MonomialSet) -> MonomialSet:
    """All g*x_i with g in a and x_i not dividing g."""
    return MonomialSet.from_masks(_upper_shadow_masks(a.masks(), a.n), a.n)


def lower_shadow(a: MonomialSet) -> MonomialSet:
    """All proper one-step divisors g/x_i, excluding the unit monomial."""
    return MonomialSet.from_masks(_lower_shadow_masks(a.masks()), a.n)


def _iterated_shadow_masks(masks: Iterable[int], n: int, direction: str, k: int) -> set[int]:
    out = set(masks)
    for _ in range(k):
        out = _upper_shadow_masks(out, n) if direction == "up" else _lower_shadow_masks(out)
    return out


def iterated_shadow(a: MonomialSet, direction: str, k: int) -> MonomialSet:
    """k-fold composition of the chosen shadow, k >= 1."""
    if direction not in ("up", "down"):
        raise InputError(f"direction must be 'up' or 'down', got {direction!r}")
    if k < 1:
        raise InputError(f"iteration count must be >= 1, got {k}")
    return MonomialSet.from_masks(
        _iterated_shadow_masks(a.masks(), a.n, direction, k), a.n
    )


def shadow_closure(a: MonomialSet, direction: str) -> MonomialSet:
    """Union of all k-fold shadows, k >= 1.  Stabilizes within n steps
    because each step shifts degrees strictly toward 0 or n."""
    if direction not in ("up", "down"):
        raise InputError(f"direction must be 'up' or 'down', got {direction!r}")
    seen: set[int] = set()
    frontier = set(a.masks())
    while frontier:
        frontier = (
            _upper_shadow_masks(frontier, a.n)
            if direction == "up"
            else _lower_shadow_masks(frontier)
        ) - seen
        seen |= frontier
    return MonomialSet.from_masks(seen, a.n)


@dataclass(frozen=True)
class Ideal:
    """A square-free monomial ideal given by its minimal generating set.

    Generators must be nonempty, unit-free, and an antichain under
    divisibility (no generator divides another).
    """

    n: int
    generators: MonomialSet

    def __post_init__(self) -> None:
        _check_n(self.n)
        if self.generators.n != self.n:
            raise InputError("generator set has a different ambient n")
        if not self.generators.members:
            raise InputError("an ideal needs at least one generator")
        for m in self.generators:
            if m.degree == 0:
                raise InputError("the unit monomial cannot be a generator")
        gens = self.generators.members
        for a in gens:
            for b in gens:
                if a.mask != b.mask and a.divides(b):
                    raise InputError(
                        f"generators are not an antichain: {a.text()} divides {b.text()}"
                    )

    @classmethod
    def from_text(cls, text: str, n: int) -> "Ideal":
        return cls(n, parse_monomial_set(text, n))

    @property
    def deg(self) -> int:
        return max(m.degree for m in self.generators)

    @property
    def ldeg(self) -> int:
        return min(m.degree for m in self.generators)

    def is_homogeneous(self) -> bool:
        return self.generators.is_homogeneous()

    def degree_slices(self) -> dict[int, MonomialSet]:
        """Generators grouped by degree, ascending keys; empty degrees omitted."""
        return {d: self.generators.restrict_degree(d) for d in self.generators.degrees()}

    def contains(self, m: Monomial) -> bool:
        """Ideal membership: some generator divides m."""
        return any(g.divides(m) for g in self.generators)

    def text(self) -> str:
        return self.generators.text()

    def __repr__(self) -> str:
        return f"Ideal({self.text()!r}, n={self.n})"
