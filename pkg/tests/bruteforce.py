"""Independent brute-force reference implementations for the test suite.

Everything here recomputes answers from first principles, sharing no
search logic with the package under test: bipartition scans instead of
pruned backtracking, subset scans instead of bitmask DFS, and explicit
enumeration instead of augmenting paths.
"""

from __future__ import annotations

from itertools import combinations, product

from matchcut import Graph, build_graph, induced_subgraph, is_connected


def cross_degrees(g: Graph, x: set[int]) -> list[int]:
    return [sum((u in x) != (v in x) for u in g.adj[v]) for v in range(g.n)]


def all_matching_cuts(g: Graph) -> list[frozenset[int]]:
    """Every matching cut as the side containing vertex 0."""
    out = []
    for bits in range(2 ** (g.n - 1)):
        x = {0} | {v for v in range(1, g.n) if bits >> (v - 1) & 1}
        if len(x) == g.n:
            continue
        if all(d <= 1 for d in cross_degrees(g, x)):
            out.append(frozenset(x))
    return out


def all_perfect_matching_cuts(g: Graph) -> list[frozenset[int]]:
    out = []
    for x in all_matching_cuts(g):
        if all(d == 1 for d in cross_degrees(g, set(x))):
            out.append(x)
    return out


def has_mc(g: Graph) -> bool:
    return bool(all_matching_cuts(g))


def has_pmc(g: Graph) -> bool:
    return bool(all_perfect_matching_cuts(g))


def perfect_matchings(g: Graph) -> list[frozenset[tuple[int, int]]]:
    """All perfect matchings, found by scanning edge subsets."""
    if g.n % 2:
        return []
    edges = list(g.edges())
    out = []
    for chosen in combinations(edges, g.n // 2):
        covered = [v for e in chosen for v in e]
        if len(set(covered)) == g.n:
            out.append(frozenset(chosen))
    return out


def removal_disconnects(g: Graph, matching) -> bool:
    dropped = {frozenset(e) for e in matching}
    kept = [e for e in g.edges() if frozenset(e) not in dropped]
    return not is_connected(build_graph(g.n, kept))


def has_dpm(g: Graph) -> bool:
    return any(removal_disconnects(g, m) for m in perfect_matchings(g))


def max_matching_size(g: Graph) -> int:
    edges = list(g.edges())
    best = 0

    def rec(idx: int, used: frozenset[int], count: int) -> None:
        nonlocal best
        best = max(best, count)
        for i in range(idx, len(edges)):
            u, v = edges[i]
            if u not in used and v not in used:
                rec(i + 1, used | {u, v}, count + 1)

    rec(0, frozenset(), 0)
    return best


def longest_induced_path(g: Graph) -> int:
    """Longest induced path in vertices, by induced-subgraph scan."""
    best = 1 if g.n else 0
    for k in range(2, g.n + 1):
        hit = False
        for sub in combinations(range(g.n), k):
            sg, _ = induced_subgraph(g, sub)
            degs = sorted(sg.degree(v) for v in range(k))
            if degs == [1, 1] + [2] * (k - 2) and is_connected(sg):
                hit = True
                break
        if hit:
            best = k
    return best


def longest_induced_cycle(g: Graph) -> int | None:
    best = None
    for k in range(3, g.n + 1):
        for sub in combinations(range(g.n), k):
            sg, _ = induced_subgraph(g, sub)
            if all(sg.degree(v) == 2 for v in range(k)) and is_connected(sg):
                best = k
                break
    return best


def solve_2sat(var_count: int, clauses) -> tuple[bool, ...] | None:
    for bits in product((False, True), repeat=var_count):
        if all(
            bits[v1] == p1 or bits[v2] == p2
            for (v1, p1), (v2, p2) in clauses
        ):
            return bits
    return None


def one_in_three_assignments(var_count: int, clauses) -> list[tuple[bool, ...]]:
    out = []
    for bits in product((False, True), repeat=var_count):
        if all(sum(bits[v] for v in c) == 1 for c in clauses):
            out.append(bits)
    return out


def is_induced_path_sequence(g: Graph, seq) -> bool:
    if len(set(seq)) != len(seq) or not seq:
        return False
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if g.has_edge(seq[i], seq[j]) != (j == i + 1):
                return False
    return True


def is_induced_cycle_sequence(g: Graph, seq) -> bool:
    k = len(seq)
    if len(set(seq)) != k or k < 3:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            expect = j == i + 1 or (i == 0 and j == k - 1)
            if g.has_edge(seq[i], seq[j]) != expect:
                return False
    return True
