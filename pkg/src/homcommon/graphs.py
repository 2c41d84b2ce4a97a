"""Finite simple graphs: family constructors, automorphisms, exact hom counts.

Vertices are contiguous integers starting at 0.  All types are immutable
values and every function is pure, so concurrent callers are safe.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

DEFAULT_WORK_BUDGET = 10**8
AUTOMORPHISM_VERTEX_BOUND = 10


class BudgetExceededError(RuntimeError):
    """An exact enumeration would exceed the configured work budget."""


def _sorted_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple labelled graph; edges are (u, v) pairs with u < v."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range or not sorted")

    @classmethod
    def from_edges(cls, vertex_count: int, edge_list) -> "Graph":
        """Build a graph accepting edge endpoints in either order."""
        return cls(vertex_count, frozenset(_sorted_edge(u, v) for u, v in edge_list))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbor_sets(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return nbrs

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self.neighbor_sets()))


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0, ..., n-1}, stored as the image sequence."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ValueError("image is not a bijection on 0..n-1")

    def apply(self, v: int) -> int:
        return self.image[v]

    def apply_set(self, s) -> frozenset[int]:
        return frozenset(self.image[v] for v in s)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: v -> self(other(v))."""
        return Permutation(tuple(self.image[other.image[v]] for v in range(len(self.image))))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.image)
        for v, w in enumerate(self.image):
            inv[w] = v
        return Permutation(tuple(inv))


FAMILY_KINDS = ("cycle", "path", "complete", "complete_minus_edge")


def make_family(kind: str, n: int) -> Graph:
    """Named graph families with canonical labels 0..n-1.

    Cycles are labelled in cyclic order, paths in path order, and
    complete_minus_edge removes the edge between the two largest labels
    (n = 4 gives the diamond).
    """
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    if n < 1:
        raise ValueError("n must be positive")
    if kind == "cycle":
        if n < 3:
            raise ValueError("cycles need n >= 3")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "complete":
        return Graph.from_edges(n, combinations(range(n), 2))
    if n < 2:
        raise ValueError("complete_minus_edge needs n >= 2")
    edges = set(combinations(range(n), 2))
    edges.discard((n - 2, n - 1))
    return Graph.from_edges(n, edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union with b's labels shifted past a's."""
    shift = a.vertex_count
    edges = set(a.edges)
    edges.update((u + shift, v + shift) for u, v in b.edges)
    return Graph.from_edges(a.vertex_count + b.vertex_count, edges)


def subgraph_on_edges(h: Graph, keep) -> Graph:
    """Spanning subgraph of h with edge set `keep`; isolated vertices stay."""
    keep = frozenset(_sorted_edge(u, v) for u, v in keep)
    if not keep <= h.edges:
        raise ValueError("keep contains edges not present in h")
    return Graph(h.vertex_count, keep)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    nbrs = g.neighbor_sets()
    seen = [False] * g.vertex_count
    out = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in nbrs[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def automorphisms(g: Graph, max_vertices: int = AUTOMORPHISM_VERTEX_BOUND) -> list[Permutation]:
    """All adjacency-preserving bijections of g, by backtracking.

    Rejects graphs above `max_vertices` since the search is factorial in
    the worst case.
    """
    n = g.vertex_count
    if n > max_vertices:
        raise BudgetExceededError(
            f"automorphism search limited to {max_vertices} vertices, got {n}")
    adj = [[False] * n for _ in range(n)]
    for u, v in g.edges:
        adj[u][v] = adj[v][u] = True
    deg = [sum(row) for row in adj]
    image = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(v: int):
        if v == n:
            found.append(Permutation(tuple(image)))
            return
        for w in range(n):
            if used[w] or deg[w] != deg[v]:
                continue
            if all(adj[v][u] == adj[w][image[u]] for u in range(v)):
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        image[v] = -1

    extend(0)
    return found


def hom_count(h: Graph, g: Graph, budget: int = DEFAULT_WORK_BUDGET) -> int:
    """Exact number of edge-preserving maps V(h) -> V(g).

    Plain backtracking over the vertices of h in descending-degree order;
    candidate sets are neighbourhood bitmask intersections and the final
    position is counted by popcount.  The budget counts visited search
    nodes and aborts runaway instances.
    """
    if h.vertex_count == 0:
        return 1
    if g.vertex_count == 0:
        return 0
    nbrs = h.neighbor_sets()
    active = [v for v in range(h.vertex_count) if nbrs[v]]
    isolated = h.vertex_count - len(active)
    free_factor = g.vertex_count**isolated
    if not active:
        return free_factor
    order = sorted(active, key=lambda v: (-len(nbrs[v]), v))
    pos_of = {v: i for i, v in enumerate(order)}
    earlier = [[pos_of[u] for u in nbrs[v] if pos_of[u] < i] for i, v in enumerate(order)]
    gmask = [0] * g.vertex_count
    for u, v in g.edges:
        gmask[u] |= 1 << v
        gmask[v] |= 1 << u
    full = (1 << g.vertex_count) - 1
    last = len(order) - 1
    assign = [0] * len(order)
    total = 0
    steps = 0

    def rec(i: int):
        nonlocal total, steps
        steps += 1
        if steps > budget:
            raise BudgetExceededError("hom_count work budget exceeded")
        cand = full
        for j in earlier[i]:
            cand &= gmask[assign[j]]
        if i == last:
            total += cand.bit_count()
            return
        m = cand
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            assign[i] = w
            rec(i + 1)

    rec(0)
    return total * free_factor


def _count_cycles(h: Graph, length: int, budget: int) -> int:
    """Unlabelled cycles of the given length, by direct DFS path enumeration."""
    if length < 3 or length > h.vertex_count:
        return 0
    nbrs = h.neighbor_sets()
    count = 0
    steps = 0
    visited = set()

    def dfs(start: int, current: int, remaining: int):
        nonlocal count, steps
        steps += 1
        if steps > budget:
            raise BudgetExceededError("cycle enumeration budget exceeded")
        if remaining == 0:
            if start in nbrs[current]:
                count += 1
            return
        for w in nbrs[current]:
            if w > start and w not in visited:
                visited.add(w)
                dfs(start, w, remaining - 1)
                visited.remove(w)

    for s in range(h.vertex_count):
        visited = {s}
        dfs(s, s, length - 1)
    # each cycle is traced once per direction
    return count // 2


def girth_and_cycle_count(h: Graph, m: int, budget: int = DEFAULT_WORK_BUDGET):
    """(girth, c_m): least cycle length present (math.inf for forests) and
    the number of unlabelled m-cycles."""
    if m < 3:
        raise ValueError("cycle length must be at least 3")
    girth: float = math.inf
    for k in range(3, h.vertex_count + 1):
        if _count_cycles(h, k, budget) > 0:
            girth = k
            break
    return girth, _count_cycles(h, m, budget)


def random_graph(n: int, seed: int, edge_probability: float = 0.5) -> Graph:
    """Seeded Erdos-Renyi style labelled graph; deterministic in seed."""
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < edge_probability]
    return Graph.from_edges(n, edges)


def all_labelled_graphs(n: int):
    """Yield every labelled graph on exactly n vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def graph_to_json(g: Graph) -> dict:
    return {"n": g.vertex_count, "edges": [list(e) for e in sorted(g.edges)]}


def graph_from_json(obj: dict) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError("graph JSON needs 'n' and 'edges' fields")
    return Graph.from_edges(int(obj["n"]), [tuple(e) for e in obj["edges"]])
