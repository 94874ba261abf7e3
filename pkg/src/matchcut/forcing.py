"""Seed-pair forcing for matching cuts.

Starting from a matched seed edge (a on the X side, b on the Y side),
rules R1..R5 grow the forced sides to a fixed point.  A and B hold the
cross-matched vertices; X and Y hold everything forced to a side.  On
graphs without chordless cycles longer than four, every free component
of a stable state attaches to exactly one side, which yields polynomial
solvers for matching cuts and for perfect matchings containing one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Cut,
    Graph,
    GraphError,
    connected_components,
    induced_subgraph,
    is_connected,
    make_cut,
)
from .matching import maximum_matching


@dataclass(frozen=True)
class ForcingState:
    """Stable outcome of rule propagation for one seed edge."""

    a: frozenset[int]
    b: frozenset[int]
    x: frozenset[int]
    y: frozenset[int]
    free: frozenset[int]


@dataclass(frozen=True)
class Refutation:
    """Proof that no matching cut separates the seed pair.

    rule names the refutation rule that fired; vertex is the free vertex
    it fired on.
    """

    rule: str
    vertex: int


def propagate(g: Graph, a: int, b: int) -> ForcingState | Refutation:
    """Run rules R1..R5 to a fixed point for the seed edge (a, b).

    R1: a free vertex adjacent to A and to B, or to A and twice to Y\\B,
        cannot be placed; likewise R2 with the sides swapped and R3 for
        two neighbors on each forced side.  R4/R5 place a vertex whose
        neighborhood pins it to X or Y; when it has exactly one neighbor
        on the opposite forced side outside the matched core, the pair
        joins A and B as matched partners.  Growth rules apply only when
        no refutation rule fires anywhere, and the lowest applicable
        vertex moves first.
    """
    if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
        raise GraphError(f"seed pair ({a}, {b}) must be an edge")
    in_a = [False] * g.n
    in_b = [False] * g.n
    side = [-1] * g.n  # 0 for X, 1 for Y
    in_a[a] = in_b[b] = True
    side[a] = 0
    side[b] = 1
    free = set(range(g.n)) - {a, b}
    # per free vertex: neighbors in A, in B, in X\A, in Y\B
    na = [0] * g.n
    nb = [0] * g.n
    nx = [0] * g.n
    ny = [0] * g.n
    for v in g.adj[a]:
        na[v] += 1
    for v in g.adj[b]:
        nb[v] += 1

    def place(v: int, s: int) -> None:
        free.discard(v)
        side[v] = s
        counter = nx if s == 0 else ny
        for u in g.adj[v]:
            if side[u] == -1:
                counter[u] += 1

    def match_pair(v: int, w: int) -> None:
        # v on the X side joins A, its unique cross partner w joins B
        in_a[v] = True
        in_b[w] = True
        for u in g.adj[v]:
            if side[u] == -1:
                nx[u] -= 1
                na[u] += 1
        for u in g.adj[w]:
            if side[u] == -1:
                ny[u] -= 1
                nb[u] += 1

    while True:
        for v in sorted(free):
            if na[v] and (nb[v] or ny[v] >= 2):
                return Refutation("R1", v)
            if nb[v] and (na[v] or nx[v] >= 2):
                return Refutation("R2", v)
            if nx[v] >= 2 and ny[v] >= 2:
                return Refutation("R3", v)
        for v in sorted(free):
            if na[v] or nx[v] >= 2:
                partner = -1
                if ny[v] == 1:
                    partner = next(
                        u for u in g.adj[v] if side[u] == 1 and not in_b[u]
                    )
                place(v, 0)
                if partner != -1:
                    match_pair(v, partner)
                break
            if nb[v] or ny[v] >= 2:
                partner = -1
                if nx[v] == 1:
                    partner = next(
                        u for u in g.adj[v] if side[u] == 0 and not in_a[u]
                    )
                place(v, 1)
                if partner != -1:
                    match_pair(partner, v)
                break
        else:
            return ForcingState(
                a=frozenset(v for v in range(g.n) if in_a[v]),
                b=frozenset(v for v in range(g.n) if in_b[v]),
                x=frozenset(v for v in range(g.n) if side[v] == 0),
                y=frozenset(v for v in range(g.n) if side[v] == 1),
                free=frozenset(free),
            )


def split_free_vertices(
    g: Graph, state: ForcingState
) -> tuple[frozenset[int] | None, frozenset[int] | None, frozenset[int] | None]:
    """Assign each free component to the side it attaches to.

    Returns (f_x, f_y, None) when every free component has neighbors on
    only one forced side, and (None, None, component) for the first
    component seeing both sides.  Components seeing both sides cannot
    occur when the graph has no chordless cycle longer than four.
    """
    if not is_connected(g):
        raise GraphError("free-side split requires a connected graph")
    f_x: set[int] = set()
    f_y: set[int] = set()
    for comp in connected_components(g, state.free):
        touches_x = any(u in state.x for v in comp for u in g.adj[v])
        touches_y = any(u in state.y for v in comp for u in g.adj[v])
        if touches_x and touches_y:
            return None, None, comp
        if touches_y:
            f_y |= comp
        else:
            # a component of a connected graph must reach a forced side
            f_x |= comp
    return frozenset(f_x), frozenset(f_y), None


def solve_mc_4chordal(g: Graph) -> Cut | None:
    """Find a matching cut, or None when no seed edge admits one.

    Complete on connected graphs without chordless cycles longer than
    four; any cut returned is a valid matching cut regardless.
    """
    if not is_connected(g):
        raise GraphError("matching-cut search requires a connected graph")
    for a, b in g.edges():
        state = propagate(g, a, b)
        if isinstance(state, Refutation):
            continue
        f_x, f_y, mixed = split_free_vertices(g, state)
        if mixed is not None:
            continue
        return make_cut(g, state.x | f_x)
    return None


def solve_dpm_4chordal(g: Graph) -> tuple[list[tuple[int, int]], Cut] | None:
    """Find a perfect matching whose removal disconnects the graph.

    Returns (matching, cut) where the cut's crossing edges all belong to
    the matching, or None.  Complete on connected graphs without
    chordless cycles longer than four.
    """
    if not is_connected(g):
        raise GraphError("disconnected-perfect-matching search requires a connected graph")
    for a, b in g.edges():
        state = propagate(g, a, b)
        if isinstance(state, Refutation):
            continue
        f_x, f_y, mixed = split_free_vertices(g, state)
        if mixed is not None:
            continue
        rest = sorted(set(range(g.n)) - state.a - state.b)
        sub, old_ids = induced_subgraph(g, rest)
        inner = maximum_matching(sub)
        if 2 * len(inner) != sub.n:
            continue
        matching = [(old_ids[u], old_ids[v]) for u, v in inner]
        for v in sorted(state.a):
            partner = sorted(u for u in g.adj[v] if u in state.b)
            # each matched-core vertex has exactly one partner across
            matching.append((min(v, partner[0]), max(v, partner[0])))
        return sorted(matching), make_cut(g, state.x | f_x)
    return None
