"""Brute-force graph side: build G_R from a concrete ring, derive its complement and
line graph, and read off moments, spectra and cycle counts without any closed form."""

from dataclasses import dataclass
from functools import reduce
from math import comb
from typing import Any, Iterable, Optional

import networkx as nx
import numpy as np
from loguru import logger

from uc_spectra import InternalInconsistency, exact_div
from uc_spectra.models.graph import GraphKind
from uc_spectra.models.spectrum import Spectrum
from uc_spectra.oracle.concrete import ConcreteRing, GraphTooLarge
from uc_spectra.oracle.local_rings import BaseLocalRing
from uc_spectra.settings import get_settings

FLOAT_EXACT = 2**53
INT64_EXACT = 2**63


class NotIntegral(InternalInconsistency):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph as a dense, read-only boolean adjacency matrix."""

    adjacency: np.ndarray

    def __post_init__(self):
        adjacency = np.array(self.adjacency, dtype=bool)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adjacency.shape}")
        if adjacency.diagonal().any():
            raise ValueError("graph has self-loops")
        if not np.array_equal(adjacency, adjacency.T):
            raise ValueError("adjacency is not symmetric")
        adjacency.flags.writeable = False
        object.__setattr__(self, "adjacency", adjacency)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.n else 0

    @property
    def degree(self) -> Optional[int]:
        """The common degree of a regular graph, None otherwise."""
        degrees = self.degrees
        if self.n == 0 or not (degrees == degrees[0]).all():
            return None
        return int(degrees[0])

    def same_edges(self, other: "Graph") -> bool:
        return np.array_equal(self.adjacency, other.adjacency)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((int(u), int(v)) for u, v in np.argwhere(np.triu(self.adjacency, 1)))
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph, nodelist: Optional[Iterable[Any]] = None) -> "Graph":
        nodelist = list(graph.nodes) if nodelist is None else list(nodelist)
        if not nodelist:
            return cls(np.zeros((0, 0), dtype=bool))
        return cls(nx.to_numpy_array(graph, nodelist=nodelist, weight=None) != 0)


def _factor_adjacency(factor: BaseLocalRing) -> np.ndarray:
    return factor.unit_mask()[factor.sub_table()]


def cayley_graph(ring: ConcreteRing) -> Graph:
    """x ~ y iff x - y is a unit, built one factor at a time: a difference is a unit
    exactly when each of its coordinates is."""
    adjacency = np.ones((ring.size, ring.size), dtype=bool)
    for factor, coordinate in zip(ring.factors, ring.coordinates()):
        adjacency &= _factor_adjacency(factor)[np.ix_(coordinate, coordinate)]
    graph = Graph(adjacency)
    logger.debug("built G_R for {}: {} vertices, {} edges", ring.describe(), graph.n, graph.edge_count)
    return graph


def tensor_cayley_graph(ring: ConcreteRing) -> Graph:
    """G_R rebuilt as the tensor product of the factor graphs G_{R_i}. Kronecker order
    matches the mixed-radix encoding, last factor fastest."""
    adjacency = reduce(np.kron, (_factor_adjacency(factor) for factor in ring.factors))
    return Graph(adjacency)


def edge_array(g: Graph) -> np.ndarray:
    """(edge_count, 2) array of edges u < v in lexicographic order."""
    return np.argwhere(np.triu(g.adjacency, 1))


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of g in ``edge_array`` order; two are adjacent when they
    share an endpoint."""
    edges = edge_array(g)
    if not len(edges):
        return Graph(np.zeros((0, 0), dtype=bool))
    incidence = np.zeros((len(edges), g.n), dtype=np.int32)
    rows = np.arange(len(edges))
    incidence[rows, edges[:, 0]] = 1
    incidence[rows, edges[:, 1]] = 1
    adjacency = (incidence @ incidence.T) > 0
    np.fill_diagonal(adjacency, False)
    return Graph(adjacency)


def complement(g: Graph) -> Graph:
    adjacency = ~g.adjacency
    np.fill_diagonal(adjacency, False)
    return Graph(adjacency)


def transform(g: Graph, kind: GraphKind, max_line_edges: Optional[int] = None) -> Graph:
    kind = GraphKind(kind)
    if kind == GraphKind.UNITARY:
        return g
    if kind == GraphKind.COMPLEMENT:
        return complement(g)
    max_line_edges = max_line_edges if max_line_edges is not None else get_settings().max_line_edges
    if g.edge_count > max_line_edges:
        raise GraphTooLarge(
            f"line graph would have {g.edge_count} vertices, over the limit of {max_line_edges}"
        )
    return line_graph(g)


def _matrix_power(adjacency: np.ndarray, exponent: int, dtype: Any) -> np.ndarray:
    matrix = adjacency.astype(dtype)
    result = np.identity(adjacency.shape[0], dtype=dtype)
    while exponent:
        if exponent & 1:
            result = result @ matrix
        matrix = matrix @ matrix
        exponent >>= 1
    return result


def exact_moment(g: Graph, k: int) -> int:
    """trace(A^k) computed exactly as sum_ij (A^h)_ij (A^(k-h))_ji with h = k // 2.

    Machine arithmetic is used while every intermediate fits (walk counts of length j
    are at most max_degree^j); otherwise the powers are taken over Python integers.
    """
    if k < 0:
        raise ValueError(f"moment order must be non-negative, got {k}")
    if k == 0 or g.n == 0:
        return g.n
    half, rest = k // 2, k - k // 2
    if g.max_degree**rest < FLOAT_EXACT and g.max_degree**k < INT64_EXACT:
        left = _matrix_power(g.adjacency, half, np.float64).astype(np.int64)
        right = _matrix_power(g.adjacency, rest, np.float64).astype(np.int64)
        return sum(int(row) for row in (left * right.T).sum(axis=1))
    logger.warning(
        "moment {} of a {}-vertex graph with degree {} overflows machine integers, "
        "falling back to exact object arithmetic",
        k,
        g.n,
        g.max_degree,
    )
    left = _matrix_power(g.adjacency, half, object)
    right = _matrix_power(g.adjacency, rest, object)
    return int((left * right.T).sum())


def integral_spectrum(g: Graph, tolerance: Optional[float] = None) -> Spectrum:
    """Integer spectrum of g, rounded from a symmetric eigensolve and then confirmed
    against exact moments; raises NotIntegral when either step fails."""
    if g.n == 0:
        return Spectrum.from_multiset([])
    tolerance = tolerance if tolerance is not None else get_settings().eigen_tolerance
    eigenvalues = np.linalg.eigvalsh(g.adjacency.astype(np.float64))
    rounded = np.rint(eigenvalues)
    residual = float(np.abs(eigenvalues - rounded).max())
    bound = tolerance * max(1, g.max_degree)
    logger.debug("eigensolve of {} vertices: max rounding residual {:.3e}", g.n, residual)
    if residual >= bound:
        raise NotIntegral(f"eigenvalue rounding residual {residual:.3e} exceeds {bound:.3e}")
    spectrum = Spectrum.from_values(int(value) for value in rounded)
    for k in range(len(spectrum.entries) + 2):
        expected = exact_moment(g, k)
        if spectrum.moment(k) != expected:
            raise NotIntegral(
                f"rounded spectrum gives moment {k} = {spectrum.moment(k)}, trace gives {expected}"
            )
    return spectrum


def count_cycles(g: Graph, length: int) -> int:
    if length == 3:
        return exact_div(exact_moment(g, 3), 6, "triangle count")
    if length == 4:
        paths = sum(comb(int(d), 2) for d in g.degrees)
        return exact_div(
            exact_moment(g, 4) - 2 * g.edge_count - 4 * paths, 8, "4-cycle count"
        )
    raise ValueError(f"cycle length must be 3 or 4, got {length}")


def connected_components(g: Graph) -> int:
    return nx.number_connected_components(g.to_networkx())


def is_complete_multipartite(g: Graph, part_count: int, part_size: int) -> bool:
    """True when g is K_{part_size, ..., part_size} with part_count parts: the
    complement must split into part_count disjoint cliques of part_size vertices."""
    if g.n != part_count * part_size:
        return False
    missing = complement(g).to_networkx()
    parts = list(nx.connected_components(missing))
    if len(parts) != part_count:
        return False
    return all(
        len(part) == part_size
        and missing.subgraph(part).number_of_edges() == comb(part_size, 2)
        for part in parts
    )


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in edge_array(g))
    return "\n".join(lines) + "\n"
