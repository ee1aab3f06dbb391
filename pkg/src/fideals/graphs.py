"""Degree-2 monomial sets as graphs, and the complement-graph tests.

A homogeneous degree-2 set corresponds to a graph on [n] (one edge per
monomial).  Perfectness translates to conditions on the complement graph:
upper perfect means triangle-free complement, lower perfect means no
complement vertex of full degree n-1.  Degree-2 f-ideals are classified by
whether the complement is bipartite (a two-part witness pair exists) or is
the 5-cycle (the single exceptional family at n = 5).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InputError, InternalInconsistencyError
from .monomials import Ideal, MonomialSet
from .perfect import two_part_construction


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        for i, j in self.edges:
            if i == j:
                raise InputError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InputError(f"edge ({i},{j}) outside vertex range 1..{self.n}")
            if i > j:
                raise InputError("edges must be stored as (small, large) pairs")

    @classmethod
    def from_pairs(cls, pairs, n: int) -> "Graph":
        return cls(n, frozenset((min(i, j), max(i, j)) for i, j in pairs))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> set[int]:
        return {j if i == v else i for i, j in self.edges if v in (i, j)}

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def to_graph(a: MonomialSet) -> Graph:
    for m in a:
        if m.degree != 2:
            raise InputError(f"graph bridge needs degree-2 monomials; {m.text()} has degree {m.degree}")
    return Graph.from_pairs((m.support for m in a), a.n)


def from_graph(g: Graph) -> MonomialSet:
    return MonomialSet.from_masks(
        ((1 << (i - 1)) | (1 << (j - 1)) for i, j in g.edges), g.n
    )


def complement(g: Graph) -> Graph:
    missing = [
        (i, j)
        for i in range(1, g.n + 1)
        for j in range(i + 1, g.n + 1)
        if (i, j) not in g.edges
    ]
    return Graph.from_pairs(missing, g.n)


def is_triangle_free(g: Graph) -> bool:
    adj = {v: g.neighbors(v) for v in range(1, g.n + 1)}
    for i, j in g.edges:
        if adj[i] & adj[j]:
            return False
    return True


def max_degree_below(g: Graph, bound: int) -> bool:
    return all(g.degree(v) < bound for v in range(1, g.n + 1))


@dataclass(frozen=True)
class BipartitionReport:
    """2-coloring data: one (part0, part1) per connected component, components
    ordered by least vertex, part0 holding that least vertex.  All global
    bipartitions arise by flipping components independently.  When the graph
    is not bipartite, odd_cycle is a witness cycle as a vertex sequence."""

    bipartite: bool
    components: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    odd_cycle: tuple[int, ...] | None


def is_bipartite(g: Graph) -> BipartitionReport:
    color: dict[int, int] = {}
    parent: dict[int, int | None] = {}
    components = []
    for root in range(1, g.n + 1):
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = [root]
        comp = {root}
        while queue:
            v = queue.pop(0)
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = color[v] ^ 1
                    parent[w] = v
                    comp.add(w)
                    queue.append(w)
                elif color[w] == color[v]:
                    # same-color edge closes an odd cycle through v and w
                    path_v, path_w = [v], [w]
                    while path_v[-1] is not None:
                        path_v.append(parent[path_v[-1]])
                    while path_w[-1] is not None:
                        path_w.append(parent[path_w[-1]])
                    path_v, path_w = path_v[:-1], path_w[:-1]
                    common = set(path_v) & set(path_w)
                    iv = next(i for i, x in enumerate(path_v) if x in common)
                    iw = next(i for i, x in enumerate(path_w) if x in common)
                    cycle = path_v[: iv + 1] + path_w[:iw][::-1]
                    return BipartitionReport(False, (), tuple(cycle))
        part0 = tuple(sorted(x for x in comp if color[x] == 0))
        part1 = tuple(sorted(x for x in comp if color[x] == 1))
        components.append((part0, part1))
    return BipartitionReport(True, tuple(components), None)


@dataclass(frozen=True)
class FCReport:
    """The four complement-graph conditions: together they characterize the
    degree-2 f-ideals that contain no two-part set (the 5-cycle family)."""

    cond_degree: bool
    cond_clique: bool
    cond_edgecount: bool
    cond_nonbipartite: bool

    @property
    def satisfies_fc(self) -> bool:
        return self.cond_degree and self.cond_clique and self.cond_edgecount and self.cond_nonbipartite


def check_fc(a: MonomialSet) -> FCReport:
    h = complement(to_graph(a))
    n = a.n
    return FCReport(
        cond_degree=max_degree_below(h, n - 1),
        # clique number exactly 2: triangle-free and at least one edge
        cond_clique=is_triangle_free(h) and len(h.edges) >= 1,
        cond_edgecount=2 * len(h.edges) == comb(n, 2),
        cond_nonbipartite=not is_bipartite(h).bipartite,
    )


@dataclass(frozen=True)
class TypeClassification:
    """kind is 'type_l' (with l and the witness part pair), 'c5_exceptional',
    or 'not_f_ideal_structure' (never produced by detect_type, which raises
    on non-f-ideals; composed reports use it as the null classification)."""

    kind: str
    l: int | None = None
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def _is_five_cycle(g: Graph) -> bool:
    if g.n != 5 or len(g.edges) != 5:
        return False
    if any(g.degree(v) != 2 for v in range(1, 6)):
        return False
    # 2-regular and connected on 5 vertices means a single 5-cycle
    seen = {1}
    stack = [1]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == 5


def detect_type(ideal: Ideal) -> TypeClassification:
    """Classify a degree-2 f-ideal by its complement graph.

    Bipartite complement: there is exactly one part pair {B, complement},
    every pair internal to a part is a generator, and l = min of the part
    sizes.  Non-bipartite complement: must be the 5-cycle family at n = 5.
    """
    if not ideal.is_homogeneous() or ideal.deg != 2:
        raise InputError("type classification is defined for homogeneous degree-2 ideals")
    from . import engine  # deferred: engine imports this module's siblings

    verdict = engine.is_f_ideal(ideal)
    if not verdict.is_f_ideal:
        raise InputError("type classification is only defined for f-ideals")
    gens = set(ideal.generators.masks())
    h = complement(to_graph(ideal.generators))
    bip = is_bipartite(h)
    if not bip.bipartite:
        if not _is_five_cycle(h):
            raise InternalInconsistencyError(
                "non-bipartite complement of an f-ideal must be the 5-cycle at n=5"
            )
        return TypeClassification("c5_exceptional")
    # compose global bipartitions: component 0 fixed, others flip freely
    n = ideal.n
    pairs: set[frozenset[frozenset[int]]] = set()
    comps = bip.components
    for bits in range(1 << max(0, len(comps) - 1)):
        b: set[int] = set(comps[0][0])
        rest: set[int] = set(comps[0][1])
        for idx, (p0, p1) in enumerate(comps[1:]):
            if bits >> idx & 1:
                b.update(p1)
                rest.update(p0)
            else:
                b.update(p0)
                rest.update(p1)
        pairs.add(frozenset((frozenset(b), frozenset(rest))))
    witnesses = []
    for pair in pairs:
        sides = sorted(pair, key=lambda s: (len(s), sorted(s)))
        b = sides[0]
        if b and len(b) < n and set(two_part_construction(n, sorted(b)).masks()) <= gens:
            witnesses.append(pair)
    if len(witnesses) != 1:
        raise InternalInconsistencyError(
            f"expected exactly one two-part witness pair, found {len(witnesses)}"
        )
    sides = sorted(witnesses[0], key=lambda s: (len(s), sorted(s)))
    b, rest = sides[0], sides[1]
    return TypeClassification(
        "type_l",
        l=min(len(b), n - len(b)),
        witness=(tuple(sorted(b)), tuple(sorted(rest))),
    )
