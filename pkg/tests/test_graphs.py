from itertools import combinations

import pytest

from fideals.errors import InputError
from fideals.graphs import (
    Graph,
    check_fc,
    complement,
    detect_type,
    from_graph,
    is_bipartite,
    is_triangle_free,
    max_degree_below,
    to_graph,
)
from fideals.monomials import Ideal, MonomialSet, degree_slice, parse_monomial_set
from fideals.perfect import is_lower_perfect, is_upper_perfect


def all_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_pairs(
            [p for i, p in enumerate(pairs) if bits >> i & 1], n
        )


def brute_bipartite(g):
    # try all 2-colorings
    for coloring in range(1 << g.n):
        if all((coloring >> (i - 1) & 1) != (coloring >> (j - 1) & 1) for i, j in g.edges):
            return True
    return False


def brute_triangle_free(g):
    for a, b, c in combinations(range(1, g.n + 1), 3):
        if (
            (min(a, b), max(a, b)) in g.edges
            and (min(a, c), max(a, c)) in g.edges
            and (min(b, c), max(b, c)) in g.edges
        ):
            return False
    return True


def test_graph_validation():
    with pytest.raises(InputError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(InputError):
        Graph(3, frozenset({(2, 1)}))  # stored order must be (small, large)
    with pytest.raises(InputError):
        Graph(3, frozenset({(1, 4)}))
    g = Graph.from_pairs([(3, 1), (2, 3)], 3)
    assert g.edge_list() == [(1, 3), (2, 3)]
    assert g.degree(3) == 2
    assert g.neighbors(3) == {1, 2}


def test_monomial_graph_bridge_round_trip():
    n = 5
    slice_ = degree_slice(n, 2).masks()
    for size in (0, 1, 3, 5):
        for combo in combinations(slice_, size):
            a = MonomialSet.from_masks(combo, n)
            assert from_graph(to_graph(a)).masks() == a.masks()
    with pytest.raises(InputError):
        to_graph(parse_monomial_set("1.2.3", 4))


def test_complement_partitions_complete_graph():
    for g in all_graphs(4):
        co = complement(g)
        assert not (g.edges & co.edges)
        assert len(g.edges) + len(co.edges) == 6


def test_triangle_free_matches_oracle():
    for g in all_graphs(4):
        assert is_triangle_free(g) is brute_triangle_free(g)
    five = Graph.from_pairs([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)], 5)
    assert is_triangle_free(five)
    assert is_triangle_free(complement(five))  # the complement of C5 is C5


def test_max_degree_below():
    g = Graph.from_pairs([(1, 2), (1, 3), (1, 4)], 4)
    assert max_degree_below(g, 4)
    assert not max_degree_below(g, 3)
    assert max_degree_below(Graph.from_pairs([], 4), 1)


def test_bipartite_matches_oracle():
    for n in (3, 4, 5):
        for g in all_graphs(n):
            report = is_bipartite(g)
            assert report.bipartite is brute_bipartite(g)


def test_bipartition_structure():
    g = Graph.from_pairs([(1, 2), (3, 4)], 5)
    report = is_bipartite(g)
    assert report.bipartite
    assert report.components == (((1,), (2,)), ((3,), (4,)), ((5,), ()))
    # parts of each component 2-color its edges
    for part0, part1 in report.components:
        assert not (set(part0) & set(part1))
    assert report.odd_cycle is None


def test_odd_cycle_witness_is_valid():
    for n in (4, 5):
        for g in all_graphs(n):
            report = is_bipartite(g)
            if report.bipartite:
                continue
            cycle = report.odd_cycle
            assert cycle is not None and len(cycle) % 2 == 1
            for k, v in enumerate(cycle):
                w = cycle[(k + 1) % len(cycle)]
                assert (min(v, w), max(v, w)) in g.edges


def test_fc_conditions_on_five_cycle():
    ideal = parse_monomial_set("1.2, 2.3, 3.4, 4.5, 1.5", 5)
    report = check_fc(ideal)
    assert report.cond_degree
    assert report.cond_clique
    assert report.cond_edgecount
    assert report.cond_nonbipartite
    assert report.satisfies_fc


def test_fc_conditions_individually():
    # perfect matching at n=4: too few edges, complement bipartite
    matching = parse_monomial_set("1.2, 3.4", 4)
    report = check_fc(matching)
    assert report.cond_degree and report.cond_clique
    assert not report.cond_edgecount
    assert not report.cond_nonbipartite
    assert not report.satisfies_fc
    # half-size but complement has a triangle
    lopsided = parse_monomial_set("1.2, 1.3, 1.4, 1.5, 2.3", 5)
    report = check_fc(lopsided)
    assert report.cond_edgecount
    assert not report.cond_clique


def test_fc_characterizes_c5_members_at_n5():
    # across all half-size degree-2 sets at n=5, FC holds exactly for the
    # twelve 5-cycles
    from fideals.engine import five_cycle_family

    cycles = {ideal.generators.masks() for ideal in five_cycle_family()}
    slice_ = degree_slice(5, 2).masks()
    hits = set()
    for combo in combinations(slice_, 5):
        a = MonomialSet.from_masks(combo, 5)
        if check_fc(a).satisfies_fc:
            hits.add(a.masks())
    assert hits == cycles


def test_detect_type_on_two_part_members():
    ideal = Ideal.from_text("1.2, 1.3, 3.4", 4)  # contains W_{1,3} = {1.3, 2.4}? no: W_{1,2}
    found = detect_type(ideal)
    assert found.kind == "type_l"
    assert found.l == 2
    b, rest = found.witness
    assert sorted(b + rest) == [1, 2, 3, 4]
    w = [
        (1 << (i - 1)) | (1 << (j - 1))
        for side in (b, rest)
        for i, j in combinations(side, 2)
    ]
    assert set(w) <= set(ideal.generators.masks())


def test_detect_type_five_cycle():
    found = detect_type(Ideal.from_text("1.2, 2.3, 3.4, 4.5, 1.5", 5))
    assert found.kind == "c5_exceptional"
    assert found.l is None and found.witness is None


def test_detect_type_requires_degree_two_f_ideal():
    with pytest.raises(InputError):
        detect_type(Ideal.from_text("1.2.3, 1.2.4, 1.2.5, 3.4.5, 2.3.4", 5))
    with pytest.raises(InputError):
        detect_type(Ideal.from_text("1.2", 4))  # not an f-ideal


def test_every_n4_member_is_type_two():
    from fideals.engine import enumerate_f_ideals

    for ideal in enumerate_f_ideals(4, 2):
        found = detect_type(ideal)
        assert found.kind == "type_l" and found.l == 2


def test_n5_class_split():
    from fideals.engine import enumerate_f_ideals

    kinds = {"type_l": 0, "c5_exceptional": 0}
    for ideal in enumerate_f_ideals(5, 2):
        found = detect_type(ideal)
        kinds[found.kind] += 1
        if found.kind == "type_l":
            assert found.l == 2
    assert kinds == {"type_l": 60, "c5_exceptional": 12}


def test_graph_route_equals_shadow_route_for_perfectness():
    # degree-2 perfectness has a purely graph-theoretic reading:
    # upper perfect == complement triangle-free,
    # lower perfect == complement max degree < n-1
    n = 5
    slice_ = degree_slice(n, 2).masks()
    for bits in range(1 << len(slice_)):
        a = MonomialSet.from_masks(
            [m for i, m in enumerate(slice_) if bits >> i & 1], n
        )
        co = complement(to_graph(a))
        assert is_upper_perfect(a, 2) is is_triangle_free(co)
        assert is_lower_perfect(a, 2) is max_degree_below(co, n - 1)
