"""Directed and undirected graph storage plus component extraction.

Adjacency lists rather than a dense matrix: generated graphs are sparse
(expected edges scale with node count times activity times tree depth),
and the largest target sizes would not fit a dense representation
comfortably.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, TextIO

from .errors import EdgeListFormatError, ParameterError

__all__ = [
    "DirectedGraph",
    "UndirectedGraph",
    "in_degree_sequence",
    "undirected_projection",
    "giant_component",
    "write_edge_list",
    "read_edge_list",
]


class DirectedGraph:
    """Deduplicated directed edges over nodes 0..N-1; no self-loops.

    Immutable once built; out-edge lists are sorted ascending.
    """

    __slots__ = ("out_edges", "in_degree")

    def __init__(self, node_count: int, edges: Iterable[tuple[int, int]] = ()):
        if node_count < 1:
            raise ParameterError(f"node_count must be >= 1, got {node_count}")
        out: list[set[int]] = [set() for _ in range(node_count)]
        for src, dst in edges:
            if not (0 <= src < node_count and 0 <= dst < node_count):
                raise ParameterError(f"edge ({src}, {dst}) references node out of range")
            if src == dst:
                raise ParameterError(f"self-loop ({src}, {dst}) not allowed")
            out[src].add(dst)
        self._finish(out)

    @classmethod
    def from_out_sets(cls, out: list[set[int]]) -> "DirectedGraph":
        """Adopt per-node destination sets (trusted: in-range, no self-loops)."""
        g = cls.__new__(cls)
        g._finish(out)
        return g

    def _finish(self, out: list[set[int]]) -> None:
        n = len(out)
        in_deg = [0] * n
        out_lists = []
        for dsts in out:
            lst = sorted(dsts)
            out_lists.append(lst)
            for d in lst:
                in_deg[d] += 1
        self.out_edges = out_lists
        self.in_degree = in_deg

    @property
    def node_count(self) -> int:
        return len(self.out_edges)

    @property
    def edge_count(self) -> int:
        return sum(len(lst) for lst in self.out_edges)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges in (src, dst) ascending order."""
        for src, dsts in enumerate(self.out_edges):
            for dst in dsts:
                yield src, dst


class UndirectedGraph:
    """Symmetric deduplicated adjacency over nodes 0..N-1; no self-loops."""

    __slots__ = ("neighbors",)

    def __init__(self, node_count: int, edges: Iterable[tuple[int, int]] = ()):
        if node_count < 1:
            raise ParameterError(f"node_count must be >= 1, got {node_count}")
        nbr: list[set[int]] = [set() for _ in range(node_count)]
        for u, v in edges:
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise ParameterError(f"edge ({u}, {v}) references node out of range")
            if u == v:
                raise ParameterError(f"self-loop ({u}, {v}) not allowed")
            nbr[u].add(v)
            nbr[v].add(u)
        self.neighbors = [sorted(s) for s in nbr]

    @property
    def node_count(self) -> int:
        return len(self.neighbors)

    @property
    def edge_count(self) -> int:
        return sum(len(lst) for lst in self.neighbors) // 2

    def degree(self, u: int) -> int:
        return len(self.neighbors[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        for u, nbrs in enumerate(self.neighbors):
            for v in nbrs:
                if u < v:
                    yield u, v


def in_degree_sequence(g: DirectedGraph) -> list[int]:
    """Per-node in-degree, indexed by node id."""
    return list(g.in_degree)


def undirected_projection(g: DirectedGraph) -> UndirectedGraph:
    """Collapse edge directions: {i, j} present iff i->j or j->i is."""
    return UndirectedGraph(g.node_count, g.edges())


def giant_component(g: UndirectedGraph) -> tuple[list[int], UndirectedGraph]:
    """Largest connected component by node count; ties go to the one
    containing the smallest node id.

    Returns the sorted member ids and the induced subgraph with members
    relabeled to 0..len(members)-1 in that sorted order.
    """
    n = g.node_count
    label = [-1] * n
    best_members: list[int] = []
    for start in range(n):
        if label[start] != -1:
            continue
        members = [start]
        label[start] = start
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.neighbors[u]:
                if label[v] == -1:
                    label[v] = start
                    members.append(v)
                    queue.append(v)
        # Scan order makes the first maximal component the smallest-id one.
        if len(members) > len(best_members):
            best_members = members

    best_members.sort()
    index = {node: i for i, node in enumerate(best_members)}
    induced = UndirectedGraph.__new__(UndirectedGraph)
    induced.neighbors = [
        [index[v] for v in g.neighbors[node]] for node in best_members
    ]
    return best_members, induced


def write_edge_list(g: DirectedGraph, stream: TextIO) -> None:
    """Write the `# nodes=<N> edges=<E>` header then one `src,dst` line per edge."""
    stream.write(f"# nodes={g.node_count} edges={g.edge_count}\n")
    for src, dst in g.edges():
        stream.write(f"{src},{dst}\n")


def read_edge_list(stream: TextIO) -> DirectedGraph:
    """Parse a file written by :func:`write_edge_list`.

    Raises :class:`EdgeListFormatError` naming the offending line.
    """
    header = stream.readline()
    if not header.startswith("# nodes="):
        raise EdgeListFormatError(1, "expected header '# nodes=<N> edges=<E>'")
    try:
        fields = header[2:].split()
        node_count = int(fields[0].split("=", 1)[1])
        edge_count = int(fields[1].split("=", 1)[1])
    except (IndexError, ValueError):
        raise EdgeListFormatError(1, "malformed header") from None

    edges = []
    for line_no, line in enumerate(stream, start=2):
        line = line.strip()
        if not line:
            continue
        src_s, sep, dst_s = line.partition(",")
        if not sep:
            raise EdgeListFormatError(line_no, f"expected 'src,dst', got {line!r}")
        try:
            edges.append((int(src_s), int(dst_s)))
        except ValueError:
            raise EdgeListFormatError(line_no, f"non-integer node id in {line!r}") from None

    if len(edges) != edge_count:
        raise EdgeListFormatError(
            1, f"header says {edge_count} edges, file has {len(edges)}"
        )
    try:
        return DirectedGraph(node_count, edges)
    except ParameterError as exc:
        raise EdgeListFormatError(1, str(exc)) from None
