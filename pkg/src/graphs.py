"""
Graphs and their edge ideals.

Vertices are 1-based; vertex i corresponds to the variable t_i of the
edge ideal. Covers, induced matchings and Herzog-Hibi labelings are
found by exhaustive search behind explicit size guards.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from src.exceptions import InternalConsistencyError, SizeGuardError, ValidationError, ZeroIdealError
from src.field import PrimeField
from src.groebner import Ideal, monomial_ideal_to_ideal
from src.monomial_ideal import Monomial, MonomialIdeal, colon_by_monomial

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
VertexSet = FrozenSet[int]

COVER_GUARD = 20
MATCHING_EDGE_GUARD = 24
LABELING_GUARD = 16


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices 1..n."""

    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError("A graph needs at least one vertex", str(self.n))
        seen: Set[Edge] = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValidationError(
                    "Edge references a missing vertex", f"{{{u}, {v}}} with n={self.n}"
                )
            if u == v:
                raise ValidationError("Loops are not allowed", f"vertex {u}")
            if u > v:
                raise ValidationError("Edges must be stored as (u, v) with u < v", f"({u}, {v})")
            if (u, v) in seen:
                raise ValidationError("Duplicate edge", f"{{{u}, {v}}}")
            seen.add((u, v))

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Sequence[int]]) -> "Graph":
        normalized = []
        for edge in edges:
            if len(edge) != 2:
                raise ValidationError("An edge joins exactly two vertices", str(list(edge)))
            u, v = int(edge[0]), int(edge[1])
            normalized.append((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(normalized)))

    def neighbors(self, v: int) -> VertexSet:
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))

    @property
    def isolated_vertices(self) -> List[int]:
        touched = {v for edge in self.edges for v in edge}
        return [v for v in range(1, self.n + 1) if v not in touched]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def to_networkx(self) -> nx.Graph:
        H = nx.Graph()
        H.add_nodes_from(range(1, self.n + 1))
        H.add_edges_from(self.edges)
        return H

    def to_dict(self) -> Dict[str, Any]:
        return {"vertices": self.n, "edges": [list(e) for e in self.edges]}


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValidationError("A cycle needs at least three vertices", str(n))
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def perfect_matching_graph(r: int) -> Graph:
    """r disjoint edges {2i-1, 2i}."""
    return Graph.from_edges(2 * r, [(2 * i - 1, 2 * i) for i in range(1, r + 1)])


def whisker_graph(n: int) -> Graph:
    """Path on 1..n with a pendant vertex n+i attached to each i."""
    edges = [(i, i + 1) for i in range(1, n)] + [(i, n + i) for i in range(1, n + 1)]
    return Graph.from_edges(2 * n, edges)


def _variable_vector(n: int, vertices: Sequence[int]) -> Monomial:
    exps = [0] * n
    for v in vertices:
        exps[v - 1] = 1
    return tuple(exps)


def edge_ideal(G: Graph) -> MonomialIdeal:
    """
    The edge ideal I(G) = (t_u t_v : {u, v} an edge).

    Raises:
        ZeroIdealError: If G has no edges
    """
    if not G.edges:
        raise ZeroIdealError("A graph without edges has the zero edge ideal")
    if G.isolated_vertices:
        logger.warning(f"Graph has isolated vertices: {G.isolated_vertices}")
    return MonomialIdeal.from_monomials(G.n, [_variable_vector(G.n, e) for e in G.edges])


def edge_ideal_polynomials(G: Graph, field: PrimeField) -> Ideal:
    return monomial_ideal_to_ideal(edge_ideal(G), field)


def minimal_vertex_covers(G: Graph) -> List[VertexSet]:
    """
    Inclusion-minimal vertex covers.

    These are the complements of the maximal independent sets, which are
    the maximal cliques of the complement graph.

    Raises:
        SizeGuardError: If n exceeds the cover guard
    """
    if G.n > COVER_GUARD:
        raise SizeGuardError("Vertex cover search is limited", f"n = {G.n} > {COVER_GUARD}")
    vertices = frozenset(range(1, G.n + 1))
    complement = nx.complement(G.to_networkx())
    covers = {vertices - frozenset(clique) for clique in nx.find_cliques(complement)}
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


def is_unmixed_graph(G: Graph) -> bool:
    return len({len(c) for c in minimal_vertex_covers(G)}) == 1


def induced_matching_number(G: Graph) -> int:
    """
    Size of a largest induced matching.

    Two edges may share an induced matching iff they are at distance at
    least 3 in the line graph, so the answer is the independence number of
    the square of the line graph.

    Raises:
        SizeGuardError: If G has more edges than the guard allows
    """
    if len(G.edges) > MATCHING_EDGE_GUARD:
        raise SizeGuardError(
            "Induced matching search is limited", f"{len(G.edges)} edges > {MATCHING_EDGE_GUARD}"
        )
    if not G.edges:
        return 0
    square = nx.power(nx.line_graph(G.to_networkx()), 2)
    return max(len(clique) for clique in nx.find_cliques(nx.complement(square)))


@dataclass(frozen=True)
class HHLabeling:
    """Bipartition x_1..x_g, y_1..y_g (vertices of G) with e_i = {x_i, y_i}."""

    x: Tuple[int, ...]
    y: Tuple[int, ...]

    @property
    def g(self) -> int:
        return len(self.x)

    def violations(self, G: Graph) -> List[str]:
        problems = []
        if len(self.x) != len(self.y):
            return ["parts have different sizes"]
        if sorted(self.x + self.y) != list(range(1, G.n + 1)):
            return ["labeling does not partition the vertices"]
        g = self.g
        for i in range(g):
            if not G.has_edge(self.x[i], self.y[i]):
                problems.append(f"(a) x{i + 1}y{i + 1} is not an edge")
        for i, j in product(range(g), repeat=2):
            if G.has_edge(self.x[i], self.y[j]) and i > j:
                problems.append(f"(b) x{i + 1}y{j + 1} is an edge")
        for i in range(g):
            for j in range(i + 1, g):
                for k in range(j + 1, g):
                    if (
                        G.has_edge(self.x[i], self.y[j])
                        and G.has_edge(self.x[j], self.y[k])
                        and not G.has_edge(self.x[i], self.y[k])
                    ):
                        problems.append(f"(c) x{i + 1}y{k + 1} is missing")
        for u in self.x:
            for v in self.x:
                if u < v and G.has_edge(u, v):
                    problems.append(f"edge {{{u}, {v}}} inside the x part")
        for u in self.y:
            for v in self.y:
                if u < v and G.has_edge(u, v):
                    problems.append(f"edge {{{u}, {v}}} inside the y part")
        return problems

    def validate(self, G: Graph) -> bool:
        return not self.violations(G)

    def to_dict(self) -> Dict[str, List[int]]:
        return {"x": list(self.x), "y": list(self.y)}


def _bipartitions(G: Graph) -> Iterator[Tuple[List[int], List[int]]]:
    """All bipartitions, one per choice of side in each connected component."""
    H = G.to_networkx()
    sides = []
    for component in sorted(nx.connected_components(H), key=min):
        top, bottom = nx.bipartite.sets(H.subgraph(component))
        sides.append((sorted(top), sorted(bottom)))
    for flips in product((False, True), repeat=len(sides)):
        V1: List[int] = []
        V2: List[int] = []
        for (top, bottom), flip in zip(sides, flips):
            V1.extend(bottom if flip else top)
            V2.extend(top if flip else bottom)
        yield sorted(V1), sorted(V2)


def _perfect_matchings(G: Graph, V1: List[int], V2: List[int]) -> Iterator[Dict[int, int]]:
    def extend(
        index: int, used: FrozenSet[int], chosen: Dict[int, int]
    ) -> Iterator[Dict[int, int]]:
        if index == len(V1):
            yield dict(chosen)
            return
        x = V1[index]
        for y in sorted(G.neighbors(x)):
            if y in used:
                continue
            chosen[x] = y
            yield from extend(index + 1, used | {y}, chosen)
            del chosen[x]

    yield from extend(0, frozenset(), {})


def _labeling_from_matching(G: Graph, matching: Dict[int, int]) -> Optional[HHLabeling]:
    """Order the matched pairs so that x_i y_j edges point forward, if possible."""
    pairs = sorted(matching.items())
    relation = nx.DiGraph()
    relation.add_nodes_from(range(len(pairs)))
    for i, (x, _) in enumerate(pairs):
        for j, (_, y) in enumerate(pairs):
            if i != j and G.has_edge(x, y):
                relation.add_edge(i, j)
    if not nx.is_directed_acyclic_graph(relation):
        return None
    order = list(nx.lexicographical_topological_sort(relation))
    labeling = HHLabeling(
        tuple(pairs[i][0] for i in order), tuple(pairs[i][1] for i in order)
    )
    return labeling if labeling.validate(G) else None


def find_hh_labeling(G: Graph) -> Optional[HHLabeling]:
    """
    Search for a Herzog-Hibi labeling of a bipartite graph.

    Returns:
        Optional[HHLabeling]: A labeling satisfying (a), (b) and (c), or
        None when there is none

    Raises:
        SizeGuardError: If n exceeds the labeling guard
        ValidationError: If G is not bipartite
    """
    if G.n > LABELING_GUARD:
        raise SizeGuardError("Labeling search is limited", f"n = {G.n} > {LABELING_GUARD}")
    if not nx.is_bipartite(G.to_networkx()):
        raise ValidationError("Herzog-Hibi labelings exist only for bipartite graphs")
    if G.n % 2:
        return None
    for V1, V2 in _bipartitions(G):
        if len(V1) != len(V2):
            continue
        for matching in _perfect_matchings(G, V1, V2):
            labeling = _labeling_from_matching(G, matching)
            if labeling is not None:
                logger.debug(f"Herzog-Hibi labeling found: x={labeling.x} y={labeling.y}")
                return labeling
    return None


def cm_witness_monomial(G: Graph, labeling: HHLabeling) -> Monomial:
    """
    Monomial x^a whose colon with I(G) is the prime generated by V2.

    Starts from x_1 and repeatedly adds x_j for the smallest j with y_j
    not yet a neighbor of a chosen vertex.

    Raises:
        ValidationError: If the labeling is invalid
        InternalConsistencyError: If (I(G) : x^a) differs from the V2 prime
    """
    problems = labeling.violations(G)
    if problems:
        raise ValidationError("Invalid Herzog-Hibi labeling", "; ".join(problems))
    chosen = [0]
    covered = set(G.neighbors(labeling.x[0]))
    while not covered.issuperset(labeling.y):
        j = next(j for j, y in enumerate(labeling.y) if y not in covered)
        chosen.append(j)
        covered |= G.neighbors(labeling.x[j])

    a = _variable_vector(G.n, [labeling.x[i] for i in chosen])
    expected = MonomialIdeal.from_monomials(G.n, [_variable_vector(G.n, [y]) for y in labeling.y])
    if colon_by_monomial(edge_ideal(G), a) != expected:
        raise InternalConsistencyError("Witness colon is not the V2 prime", str(a))
    return a
