"""Maximum matching in general graphs by blossom shrinking.

Cubic in the vertex count, deterministic: augmenting searches are seeded
from vertices in ascending id order and neighbors scanned ascending.
"""

from __future__ import annotations

from collections import deque

from .graphs import Graph


def maximum_matching(g: Graph) -> list[tuple[int, int]]:
    """A maximum-cardinality matching as sorted (min, max) pairs."""
    n = g.n
    adj = [sorted(g.adj[v]) for v in range(n)]
    mate = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n

    def lca(a: int, b: int) -> int:
        marked = [False] * n
        v = a
        while True:
            v = base[v]
            marked[v] = True
            if mate[v] == -1:
                break
            v = parent[mate[v]]
        v = b
        while True:
            v = base[v]
            if marked[v]:
                return v
            v = parent[mate[v]]

    def mark_path(v: int, stem: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != stem:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting_path(root: int) -> int:
        for v in range(n):
            used[v] = False
            parent[v] = -1
            base[v] = v
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # odd cycle found: shrink the blossom around its stem
                    stem = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, stem, to, in_blossom)
                    mark_path(to, stem, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = stem
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for seed in range(n):
        if mate[seed] != -1:
            continue
        end = find_augmenting_path(seed)
        if end == -1:
            continue
        while end != -1:
            prev = parent[end]
            nxt = mate[prev]
            mate[end] = prev
            mate[prev] = end
            end = nxt

    return sorted((v, mate[v]) for v in range(n) if mate[v] > v)


def has_perfect_matching(g: Graph) -> bool:
    """True when a matching covers every vertex; the empty graph qualifies."""
    return 2 * len(maximum_matching(g)) == g.n
