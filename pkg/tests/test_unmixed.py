from itertools import combinations
from random import Random

import pytest

from fideals.complexes import facet_complex
from fideals.engine import enumerate_f_ideals, is_f_ideal, random_square_free_ideal
from fideals.errors import InputError
from fideals.monomials import Ideal, MonomialSet, degree_slice
from fideals.unmixed import (
    codimension,
    complement_lower_perfect,
    is_unmixed,
    minimal_primes,
)


def brute_minimal_covers(ideal):
    """Oracle: subsets of [n] meeting every generator, minimal by inclusion."""
    full = (1 << ideal.n) - 1
    covers = [
        s
        for s in range(1, full + 1)
        if all(s & g for g in ideal.generators.masks())
    ]
    cover_set = set(covers)
    minimal = set()
    for s in covers:
        bit, rest, is_min = 1, s, True
        while rest:
            if rest & 1 and (s & ~bit) in cover_set:
                is_min = False
                break
            bit <<= 1
            rest >>= 1
        if is_min:
            minimal.add(s)
    return minimal


def test_minimal_primes_match_oracle():
    rng = Random(313)
    for _ in range(300):
        ideal = random_square_free_ideal(rng, rng.randint(1, 7))
        primes = minimal_primes(ideal)
        assert {p.mask for p in primes} == brute_minimal_covers(ideal)
        masks = [p.mask for p in primes]
        assert masks == sorted(masks)


def test_degree_three_example_has_six_primes():
    ideal = Ideal.from_text("1.2.3, 1.2.4, 1.2.5, 3.4.5, 2.3.4", 5)
    assert [p.variables() for p in minimal_primes(ideal)] == [
        (1, 3),
        (2, 3),
        (1, 4),
        (2, 4),
        (2, 5),
        (3, 4, 5),
    ]
    assert codimension(ideal) == 2
    assert is_unmixed(ideal) is False
    assert is_f_ideal(ideal).is_f_ideal
    assert complement_lower_perfect(ideal) is False


def test_five_cycle_is_unmixed():
    ideal = Ideal.from_text("1.2, 2.3, 3.4, 4.5, 1.5", 5)
    primes = minimal_primes(ideal)
    assert [p.variables() for p in primes] == [
        (1, 2, 4),
        (1, 3, 4),
        (1, 3, 5),
        (2, 3, 5),
        (2, 4, 5),
    ]
    assert all(p.size == 3 for p in primes)
    assert codimension(ideal) == 3
    assert is_unmixed(ideal) is True
    assert complement_lower_perfect(ideal) is True


def test_small_principal_and_matching():
    assert [p.variables() for p in minimal_primes(Ideal.from_text("1.2", 2))] == [
        (1,),
        (2,),
    ]
    matching = Ideal.from_text("1.2, 3.4", 4)
    assert [p.variables() for p in minimal_primes(matching)] == [
        (1, 3),
        (2, 3),
        (1, 4),
        (2, 4),
    ]
    assert is_unmixed(matching) is True
    assert codimension(matching) == 2


def test_route_equivalence_on_random_ideals():
    rng = Random(414)
    for _ in range(500):
        ideal = random_square_free_ideal(rng, rng.randint(1, 7))
        by_covers = is_unmixed(ideal, route="covers")
        by_purity = is_unmixed(ideal, route="purity")
        assert by_covers is by_purity
        assert is_unmixed(ideal, route="both") is by_covers
    with pytest.raises(InputError):
        is_unmixed(Ideal.from_text("1.2", 3), route="guess")


def test_cover_facet_duality():
    # complements of minimal covers are exactly the maximal independent
    # sets, i.e. the facets of the complement-side complex
    from fideals.complexes import nonface_complex

    rng = Random(515)
    for _ in range(200):
        ideal = random_square_free_ideal(rng, rng.randint(2, 7))
        full = (1 << ideal.n) - 1
        complements = {full ^ p.mask for p in minimal_primes(ideal)}
        assert complements == set(nonface_complex(ideal).facets)


def test_codimension_examples():
    assert codimension(Ideal.from_text("1", 3)) == 1
    assert codimension(Ideal.from_text("1.2, 1.3, 2.3", 3)) == 2
    assert codimension(Ideal.from_text("1.2, 3.4, 5.6", 6)) == 3


def test_criterion_requires_homogeneous_f_ideal():
    with pytest.raises(InputError):
        complement_lower_perfect(Ideal.from_text("1.2, 3", 4))  # mixed degrees
    with pytest.raises(InputError):
        complement_lower_perfect(Ideal.from_text("1", 2))  # degree 1
    with pytest.raises(InputError):
        complement_lower_perfect(Ideal.from_text("1.2", 4))  # not an f-ideal


def test_criterion_equals_unmixedness_on_degree_two_census():
    for n in (4, 5):
        for ideal in enumerate_f_ideals(n, 2):
            assert complement_lower_perfect(ideal) is is_unmixed(ideal)


def test_criterion_equals_unmixedness_on_degree_three_census():
    ideals = list(enumerate_f_ideals(5, 3))
    assert len(ideals) == 72
    unmixed_count = 0
    for ideal in ideals:
        criterion = complement_lower_perfect(ideal)
        assert criterion is is_unmixed(ideal)
        unmixed_count += criterion
    assert unmixed_count == 12


def test_every_degree_two_f_ideal_is_unmixed_at_small_n():
    for n in (4, 5):
        for ideal in enumerate_f_ideals(n, 2):
            assert is_unmixed(ideal) is True
            assert codimension(ideal) == n - 2


def test_purity_route_agrees_with_facet_dimensions():
    # unmixed == facet complex of the cover-complement side is pure; spot
    # check the mixed example directly
    ideal = Ideal.from_text("1.2.3, 1.2.4, 1.2.5, 3.4.5, 2.3.4", 5)
    sizes = {p.size for p in minimal_primes(ideal)}
    assert sizes == {2, 3}
    assert not is_unmixed(ideal, route="purity")
