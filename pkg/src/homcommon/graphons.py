"""Step kernels and graphons: homomorphism densities, complements, sampling.

A step kernel is a symmetric q x q block matrix together with block
measures summing to 1.  Graphons are the kernels flagged as having all
values in [0, 1].  Densities are computed as the exact finite sum over
block assignments, vectorised in chunks with compensated accumulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .graphs import DEFAULT_WORK_BUDGET, BudgetExceededError, Graph

_MEASURE_TOL = 1e-12
_CHUNK = 1 << 16


@dataclass(frozen=True)
class StepKernel:
    """Symmetric block kernel with block measures; `graphon` marks 0..1 values."""

    measures: tuple[float, ...]
    values: tuple[tuple[float, ...], ...]
    graphon: bool = False

    def __post_init__(self):
        q = len(self.measures)
        if q < 1:
            raise ValueError("need at least one block")
        if abs(math.fsum(self.measures) - 1.0) > _MEASURE_TOL:
            raise ValueError("block measures must sum to 1")
        if any(m < 0 for m in self.measures):
            raise ValueError("block measures must be non-negative")
        if len(self.values) != q or any(len(row) != q for row in self.values):
            raise ValueError("values must be a q x q matrix")
        for i in range(q):
            for j in range(q):
                if self.values[i][j] != self.values[j][i]:
                    raise ValueError("values must be symmetric")
        if self.graphon:
            for row in self.values:
                if any(v < 0.0 or v > 1.0 for v in row):
                    raise ValueError("graphon values must lie in [0, 1]")

    @property
    def block_count(self) -> int:
        return len(self.measures)


def constant_kernel(p: float) -> StepKernel:
    return StepKernel((1.0,), ((p,),), graphon=0.0 <= p <= 1.0)


def kernel_from_graph(g: Graph) -> StepKernel:
    """Encode a graph as a step kernel: one block per vertex, 0/1 values."""
    n = g.vertex_count
    if n == 0:
        raise ValueError("cannot encode the empty graph as a kernel")
    vals = [[0.0] * n for _ in range(n)]
    for u, v in g.edges:
        vals[u][v] = vals[v][u] = 1.0
    return StepKernel(tuple(1.0 / n for _ in range(n)),
                      tuple(tuple(row) for row in vals), graphon=True)


def density(h: Graph, w: StepKernel, budget: int = DEFAULT_WORK_BUDGET) -> float:
    """Homomorphism density t(h, w), summed exactly over all q^v(h) maps.

    Chunked mixed-radix enumeration; per-chunk products are pairwise-summed
    by numpy and chunk totals recombined with math.fsum, which keeps the
    rounding error far below the identity tolerances used by callers.
    """
    q = w.block_count
    n = h.vertex_count
    terms = q**n
    if terms > budget:
        raise BudgetExceededError(f"density needs {terms} terms, budget {budget}")
    if n == 0:
        return 1.0
    vals = np.asarray(w.values, dtype=np.float64)
    meas = np.asarray(w.measures, dtype=np.float64)
    edges = sorted(h.edges)
    powers = [q**v for v in range(n)]
    partials = []
    for lo in range(0, terms, _CHUNK):
        hi = min(lo + _CHUNK, terms)
        idx = np.arange(lo, hi, dtype=np.int64)
        digit = [(idx // powers[v]) % q for v in range(n)]
        term = meas[digit[0]].copy()
        for v in range(1, n):
            term *= meas[digit[v]]
        for u, v in edges:
            term *= vals[digit[u], digit[v]]
        partials.append(float(term.sum()))
    return math.fsum(partials)


def complement(w: StepKernel) -> StepKernel:
    """The graphon 1 - w; rejects kernels not marked as graphons."""
    if not w.graphon:
        raise ValueError("complement is defined for graphons only")
    vals = tuple(tuple(1.0 - x for x in row) for row in w.values)
    return StepKernel(w.measures, vals, graphon=True)


def one_minus(w: StepKernel) -> StepKernel:
    """Value-wise 1 - w for arbitrary kernels; keeps the graphon flag."""
    vals = tuple(tuple(1.0 - x for x in row) for row in w.values)
    return StepKernel(w.measures, vals, graphon=w.graphon)


def shift(w: StepKernel, c: float) -> StepKernel:
    """Kernel w - c.  Clears the graphon flag (no-op when c == 0)."""
    if c == 0:
        return w
    vals = tuple(tuple(x - c for x in row) for row in w.values)
    return StepKernel(w.measures, vals, graphon=False)


def sample_graphon(seed: int, max_blocks: int = 4) -> StepKernel:
    """Seeded random step graphon: uniform block count, Dirichlet(1) measures,
    i.i.d. uniform values mirrored across the diagonal."""
    if max_blocks < 1:
        raise ValueError("max_blocks must be at least 1")
    rng = np.random.default_rng(int(seed) % 2**64)
    q = int(rng.integers(1, max_blocks + 1))
    measures = rng.dirichlet(np.ones(q))
    raw = rng.uniform(size=(q, q))
    vals = np.triu(raw) + np.triu(raw, 1).T
    return StepKernel(tuple(float(m) for m in measures),
                      tuple(tuple(float(x) for x in row) for row in vals),
                      graphon=True)


def sample_kernel(seed: int, max_blocks: int = 4,
                  low: float = -1.0, high: float = 2.0) -> StepKernel:
    """Seeded random kernel with values in [low, high] (not a graphon in general)."""
    base = sample_graphon(seed, max_blocks)
    span = high - low
    vals = tuple(tuple(low + span * x for x in row) for row in base.values)
    graphon = low >= 0.0 and high <= 1.0
    return replace(base, values=vals, graphon=graphon)


def kernel_to_json(w: StepKernel) -> dict:
    return {"measures": list(w.measures),
            "values": [list(row) for row in w.values],
            "graphon": w.graphon}


def kernel_from_json(obj: dict) -> StepKernel:
    if not isinstance(obj, dict) or "measures" not in obj or "values" not in obj:
        raise ValueError("kernel JSON needs 'measures' and 'values' fields")
    return StepKernel(tuple(float(m) for m in obj["measures"]),
                      tuple(tuple(float(x) for x in row) for row in obj["values"]),
                      graphon=bool(obj.get("graphon", False)))
