"""Gluing templates over a base graph F and their class-indexed vectors.

A template is a tree T with subsets of V(F) attached to its nodes and
edges (edge sets contained in both endpoint sets).  Gluing the induced
subgraphs F[psi(s)] along shared labels yields the generalized F-tree.
Subset classes are orbits of 2^V(F) under Aut(F); class vectors carry
exact rational coefficients on canonical class representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .graphs import Graph, automorphisms


# canonicalisation supports the same base-graph ceiling as the cone check
MAX_CLASS_VERTICES = 12


def _as_subset(f: Graph, s) -> frozenset[int]:
    out = frozenset(int(v) for v in s)
    for v in out:
        if not 0 <= v < f.vertex_count:
            raise ValueError(f"vertex {v} not in the base graph")
    return out


@lru_cache(maxsize=None)
def _canonical_table(f: Graph, max_vertices: int) -> dict[frozenset[int], tuple[int, ...]]:
    """Canonical representative (lexicographically least sorted tuple over
    Aut(f)) for every subset of V(f)."""
    perms = automorphisms(f, max_vertices)
    table: dict[frozenset[int], tuple[int, ...]] = {}
    n = f.vertex_count
    for mask in range(1 << n):
        s = frozenset(v for v in range(n) if mask >> v & 1)
        table[s] = min(tuple(sorted(p.apply_set(s))) for p in perms)
    return table


def canonical_class(f: Graph, s, max_vertices: int = MAX_CLASS_VERTICES) -> frozenset[int]:
    """Least subset (in sorted-list lexicographic order) equivalent to s
    under the automorphism group of f."""
    return frozenset(_canonical_table(f, max_vertices)[_as_subset(f, s)])


def class_count(f: Graph, max_vertices: int = MAX_CLASS_VERTICES) -> int:
    """Number of Aut(f)-orbits of subsets of V(f), the empty class included."""
    return len(set(_canonical_table(f, max_vertices).values()))


@dataclass
class ClassVector:
    """Exact rational vector indexed by canonical nonempty subset classes.

    Keys are canonical representatives stored as sorted tuples; zero
    coefficients and the empty class are never kept.
    """

    base: Graph
    coeffs: dict[tuple[int, ...], Fraction]

    def __post_init__(self):
        self.coeffs = {k: Fraction(v) for k, v in self.coeffs.items() if v != 0}
        for key in self.coeffs:
            if len(key) == 0:
                raise ValueError("the empty class cannot carry a coefficient")

    @classmethod
    def zero(cls, base: Graph) -> "ClassVector":
        return cls(base, {})

    @classmethod
    def basis(cls, base: Graph, s) -> "ClassVector":
        """The unit vector of the class of s (the zero vector for s empty)."""
        rep = tuple(sorted(canonical_class(base, s)))
        if not rep:
            return cls.zero(base)
        return cls(base, {rep: Fraction(1)})

    def _check_base(self, other: "ClassVector"):
        if self.base != other.base:
            raise ValueError("class vectors over different base graphs")

    def __add__(self, other: "ClassVector") -> "ClassVector":
        self._check_base(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return ClassVector(self.base, out)

    def __sub__(self, other: "ClassVector") -> "ClassVector":
        return self + other.scaled(Fraction(-1))

    def scaled(self, r) -> "ClassVector":
        r = Fraction(r)
        return ClassVector(self.base, {k: v * r for k, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def inner(self, other: "ClassVector") -> Fraction:
        self._check_base(other)
        return sum((v * other.coeffs.get(k, Fraction(0)) for k, v in self.coeffs.items()),
                   Fraction(0))


@dataclass(frozen=True)
class GluingTemplate:
    """Tree T plus subset assignments on nodes and edges of T.

    psi_nodes is indexed by node; psi_edges maps sorted tree edges to
    subsets with psi(st) contained in psi(s) and psi(t).
    """

    base: Graph
    tree_nodes: int
    tree_edges: frozenset[tuple[int, int]]
    psi_nodes: tuple[frozenset[int], ...]
    psi_edges: tuple[tuple[tuple[int, int], frozenset[int]], ...]

    def __post_init__(self):
        k = self.tree_nodes
        if k < 1:
            raise ValueError("template tree needs at least one node")
        if len(self.tree_edges) != k - 1:
            raise ValueError("template tree must have exactly n-1 edges")
        parent = list(range(k))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for s, t in self.tree_edges:
            if not (0 <= s < t < k):
                raise ValueError(f"tree edge ({s},{t}) out of range")
            rs, rt = find(s), find(t)
            if rs == rt:
                raise ValueError("tree edges contain a cycle")
            parent[rs] = rt
        if k > 1 and len({find(a) for a in range(k)}) != 1:
            raise ValueError("template tree is not connected")
        if len(self.psi_nodes) != k:
            raise ValueError("psi_nodes must cover every tree node")
        edge_map = dict(self.psi_edges)
        if set(edge_map) != set(self.tree_edges):
            raise ValueError("psi_edges must cover exactly the tree edges")
        for (s, t), subset in edge_map.items():
            if not subset <= (self.psi_nodes[s] & self.psi_nodes[t]):
                raise ValueError(
                    f"psi({s},{t}) must be contained in psi({s}) and psi({t})")

    @classmethod
    def make(cls, base: Graph, tree_nodes: int, tree_edges,
             psi_nodes: dict, psi_edges: dict) -> "GluingTemplate":
        """Build from mappings; missing psi entries default to the empty set."""
        edges = frozenset(tuple(sorted((int(s), int(t)))) for s, t in tree_edges)
        nodes = tuple(_as_subset(base, psi_nodes.get(i, ())) for i in range(tree_nodes))
        unknown = set(psi_nodes) - set(range(tree_nodes))
        if unknown:
            raise ValueError(f"psi_nodes refers to unknown tree nodes {sorted(unknown)}")
        edge_psis = {}
        for key, subset in psi_edges.items():
            e = tuple(sorted((int(key[0]), int(key[1]))))
            if e not in edges:
                raise ValueError(f"psi_edges refers to non-tree edge {e}")
            edge_psis[e] = _as_subset(base, subset)
        full = tuple(sorted((e, edge_psis.get(e, frozenset())) for e in edges))
        return cls(base, tree_nodes, edges, nodes, full)

    def psi_edge(self, s: int, t: int) -> frozenset[int]:
        key = tuple(sorted((s, t)))
        for e, subset in self.psi_edges:
            if e == key:
                return subset
        raise KeyError(key)


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # keep the lexicographically smaller representative
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


def build_j(t: GluingTemplate):
    """Glue the copies F[psi(s)] along the tree into the generalized F-tree.

    Identification is the transitive closure (union-find) of the per-edge
    label matchings; coincident edges merge.  Returns the glued graph and,
    per tree node, the map from original F-labels to glued vertex ids.
    """
    uf = _UnionFind()
    for s in range(t.tree_nodes):
        for v in t.psi_nodes[s]:
            uf.add((s, v))
    for (s, u), subset in t.psi_edges:
        for v in subset:
            uf.union((s, v), (u, v))
    roots = sorted({uf.find(x) for x in uf.parent})
    index = {root: i for i, root in enumerate(roots)}
    node_vertex_maps: list[dict[int, int]] = []
    for s in range(t.tree_nodes):
        node_vertex_maps.append({v: index[uf.find((s, v))] for v in t.psi_nodes[s]})
    edges = set()
    for s in range(t.tree_nodes):
        mapping = node_vertex_maps[s]
        for u, v in combinations(sorted(t.psi_nodes[s]), 2):
            if (u, v) in t.base.edges:
                a, b = mapping[u], mapping[v]
                edges.add((a, b) if a < b else (b, a))
    return Graph(len(roots), frozenset(edges)), node_vertex_maps


def z_vector(t: GluingTemplate) -> ClassVector:
    """Sum of node-class units minus edge-class units, canonicalised."""
    out = ClassVector.zero(t.base)
    for s in range(t.tree_nodes):
        out = out + ClassVector.basis(t.base, t.psi_nodes[s])
    for _, subset in t.psi_edges:
        out = out - ClassVector.basis(t.base, subset)
    return out


def x_vector(f: Graph, r1, r2, r3) -> ClassVector:
    """e(r1|r2|r3) - e(r2|r3) - e(r1|r2) + e(r2) for pairwise disjoint parts.

    May be the zero vector (always when r1 or r3 is empty).
    """
    r1, r2, r3 = _as_subset(f, r1), _as_subset(f, r2), _as_subset(f, r3)
    if r1 & r2 or r1 & r3 or r2 & r3:
        raise ValueError("r1, r2, r3 must be pairwise disjoint")
    return (ClassVector.basis(f, r1 | r2 | r3)
            - ClassVector.basis(f, r2 | r3)
            - ClassVector.basis(f, r1 | r2)
            + ClassVector.basis(f, r2))


def template_to_json(t: GluingTemplate) -> dict:
    return {
        "F": {"n": t.base.vertex_count, "edges": [list(e) for e in sorted(t.base.edges)]},
        "tree": {"nodes": t.tree_nodes, "edges": [list(e) for e in sorted(t.tree_edges)]},
        "psi_nodes": {str(i): sorted(t.psi_nodes[i]) for i in range(t.tree_nodes)},
        "psi_edges": {f"{s}-{u}": sorted(subset) for (s, u), subset in t.psi_edges},
    }


def template_from_json(obj: dict) -> GluingTemplate:
    """Parse the template JSON format; the base graph may be a family
    string such as "C5" or an inline graph object."""
    from .graphs import graph_from_json, make_family

    if not isinstance(obj, dict) or "F" not in obj or "tree" not in obj:
        raise ValueError("template JSON needs 'F' and 'tree' fields")
    raw_f = obj["F"]
    if isinstance(raw_f, str):
        kind_map = {"C": "cycle", "P": "path", "K": "complete"}
        if len(raw_f) < 2 or raw_f[0].upper() not in kind_map or not raw_f[1:].isdigit():
            raise ValueError(f"unrecognised base graph string {raw_f!r}")
        base = make_family(kind_map[raw_f[0].upper()], int(raw_f[1:]))
    else:
        base = graph_from_json(raw_f)
    tree = obj["tree"]
    psi_nodes = {int(k): v for k, v in obj.get("psi_nodes", {}).items()}
    psi_edges = {}
    for key, subset in obj.get("psi_edges", {}).items():
        s, _, u = key.partition("-")
        psi_edges[(int(s), int(u))] = subset
    try:
        nodes = int(tree["nodes"])
        edges = [tuple(e) for e in tree["edges"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed template tree: {exc}") from exc
    return GluingTemplate.make(base, nodes, edges, psi_nodes, psi_edges)
