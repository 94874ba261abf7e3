"""Immutable simple-graph core: construction, traversal, and cut predicates.

Vertices are dense integer ids 0..n-1.  A matching is represented as a
plain list of (u, v) pairs with u < v; helpers below validate the shape.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable


class GraphError(ValueError):
    """Malformed graph input or a violated precondition."""


class Graph:
    """Simple undirected graph, immutable after construction.

    Build instances through build_graph(), which validates the edge list.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[frozenset[int], ...]):
        self.n = n
        self.adj = adj

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (min, max) pairs in ascending order."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbor sets packed into integer bitmasks."""
        masks = []
        for v in range(self.n):
            mask = 0
            for u in self.adj[v]:
                mask |= 1 << u
            masks.append(mask)
        return masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate an edge list and return the graph it describes.

    Raises GraphError on a self-loop, a duplicate edge, or an endpoint
    outside 0..n-1.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in adj))


def path_graph(t: int) -> Graph:
    """Path on t vertices, 0-1-...-(t-1)."""
    return build_graph(t, [(i, i + 1) for i in range(t - 1)])


def cycle_graph(k: int) -> Graph:
    """Cycle on k >= 3 vertices."""
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union with vertex ids shifted left to right."""
    n = 0
    edges: list[tuple[int, int]] = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges())
        n += g.n
    return build_graph(n, edges)


def induced_subgraph(g: Graph, subset: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Materialize g[subset] with dense ids.

    Returns (subgraph, old_ids) where old_ids[new] is the original id;
    ids are remapped in ascending order.
    """
    old_ids = tuple(sorted(set(subset)))
    if old_ids and not (0 <= old_ids[0] and old_ids[-1] < g.n):
        raise GraphError("subset vertex out of range")
    new_of = {old: new for new, old in enumerate(old_ids)}
    keep = set(old_ids)
    edges = [
        (new_of[u], new_of[v])
        for u in old_ids
        for v in g.adj[u]
        if u < v and v in keep
    ]
    return build_graph(len(old_ids), edges), old_ids


def connected_components(g: Graph, subset: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Components of g, or of g[subset], ordered by smallest member."""
    pool = set(range(g.n)) if subset is None else set(subset)
    comps: list[frozenset[int]] = []
    seen: set[int] = set()
    for start in sorted(pool):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if u in pool and u not in seen:
                    seen.add(u)
                    comp.add(u)
                    queue.append(u)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(connected_components(g)[0]) == g.n


@dataclass(frozen=True)
class BfsLevels:
    """Breadth-first distance layers from a root vertex."""

    root: int
    level_of: tuple[int, ...]
    levels: tuple[tuple[int, ...], ...]

    @property
    def h(self) -> int:
        """Index of the deepest layer."""
        return len(self.levels) - 1


def bfs_levels(g: Graph, root: int) -> BfsLevels:
    """Layer the graph by distance from root; every vertex must be reachable."""
    if not (0 <= root < g.n):
        raise GraphError(f"root {root} out of range")
    level_of = [-1] * g.n
    level_of[root] = 0
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if level_of[u] == -1:
                level_of[u] = level_of[v] + 1
                queue.append(u)
    if any(lv == -1 for lv in level_of):
        raise GraphError("graph is disconnected; every vertex must be reachable from the root")
    depth = max(level_of)
    levels: list[list[int]] = [[] for _ in range(depth + 1)]
    for v in range(g.n):
        levels[level_of[v]].append(v)
    return BfsLevels(root, tuple(level_of), tuple(tuple(lv) for lv in levels))


@dataclass(frozen=True)
class Cut:
    """A bipartition of the vertex set with its crossing edges.

    side[v] is True when v lies in the X part.  crossing lists the edges
    with one endpoint on each side, oriented (x_vertex, y_vertex) and
    sorted ascending.
    """

    side: tuple[bool, ...]
    crossing: tuple[tuple[int, int], ...]

    @property
    def x(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if s)

    @property
    def y(self) -> frozenset[int]:
        return frozenset(v for v, s in enumerate(self.side) if not s)

    def flipped(self) -> "Cut":
        """The same partition with the part labels exchanged."""
        return Cut(
            tuple(not s for s in self.side),
            tuple(sorted((v, u) for u, v in self.crossing)),
        )


def make_cut(g: Graph, x_side: Iterable[int]) -> Cut:
    """Build the cut with X = x_side; both parts must be non-empty."""
    x = set(x_side)
    if not x.issubset(range(g.n)):
        raise GraphError("cut side contains an unknown vertex")
    if not x or len(x) == g.n:
        raise GraphError("both sides of a cut must be non-empty")
    side = tuple(v in x for v in range(g.n))
    crossing = tuple(
        sorted((u, v) if side[u] else (v, u) for u, v in g.edges() if side[u] != side[v])
    )
    return Cut(side, crossing)


def _cross_degrees(g: Graph, x: set[int]) -> list[int]:
    return [sum(1 for u in g.adj[v] if (u in x) != (v in x)) for v in range(g.n)]


def check_matching_cut(g: Graph, x_side: Iterable[int]) -> tuple[Cut | None, int | None]:
    """Test whether the bipartition (x_side, rest) is a matching cut.

    Every vertex may have at most one neighbor across the cut.  Returns
    (cut, None) on success and (None, witness) on failure, where witness
    is the smallest vertex with two cross neighbors, or None when the
    failure is an empty side.
    """
    x = set(x_side)
    if not x or len(x) == g.n:
        return None, None
    for v, d in enumerate(_cross_degrees(g, x)):
        if d >= 2:
            return None, v
    return make_cut(g, x), None


def is_matching_cut(g: Graph, x_side: Iterable[int]) -> bool:
    cut, _ = check_matching_cut(g, x_side)
    return cut is not None


def check_perfect_matching_cut(g: Graph, x_side: Iterable[int]) -> tuple[Cut | None, int | None]:
    """Test whether the bipartition is a perfect matching cut.

    Every vertex must have exactly one neighbor across the cut.  Same
    return convention as check_matching_cut; the witness is the smallest
    vertex whose cross degree differs from one.
    """
    x = set(x_side)
    if not x or len(x) == g.n:
        return None, None
    for v, d in enumerate(_cross_degrees(g, x)):
        if d != 1:
            return None, v
    return make_cut(g, x), None


def is_perfect_matching_cut(g: Graph, x_side: Iterable[int]) -> bool:
    cut, _ = check_perfect_matching_cut(g, x_side)
    return cut is not None


def is_matching(edges: Iterable[tuple[int, int]]) -> bool:
    """True when no vertex is repeated across the edge list."""
    seen: set[int] = set()
    for u, v in edges:
        if u == v or u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def is_perfect_matching(g: Graph, matching: Iterable[tuple[int, int]]) -> bool:
    """True when the edges form a matching of g covering every vertex."""
    edges = list(matching)
    for u, v in edges:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of the graph")
    return is_matching(edges) and 2 * len(edges) == g.n


def is_disconnected_perfect_matching(g: Graph, matching: Iterable[tuple[int, int]]) -> bool:
    """True when the matching is perfect and removing its edges disconnects g."""
    edges = list(matching)
    if not is_perfect_matching(g, edges):
        return False
    dropped = {(min(u, v), max(u, v)) for u, v in edges}
    kept = [(u, v) for u, v in g.edges() if (u, v) not in dropped]
    return not is_connected(build_graph(g.n, kept))
