"""Graphs attached to set partitions, Tutte evaluation, heaps and pyramids.

Three graphs on the blocks of a partition (canonical block order):

* crossing graph: an edge joins two blocks iff they cross;
* anti-interval graph: an edge iff the convex hulls of the blocks meet
  (equivalently, the pair is not an interval partition of its union);
* anti-interval digraph: hull-meeting pairs that cross keep an undirected
  edge, the remaining pairs (one block nested in the other) get a directed
  edge from the outer to the inner block.  A pair can both cross and nest
  (e.g. {1,3,5} and {2,4}); crossing takes precedence, which is what makes
  the digraph a complete invariant for the beta coefficients.

The Tutte polynomial is computed by deletion-contraction on multigraphs
(bridge -> x * contract, loop -> y * delete), memoized on a normalized
labeled edge list.  T(1,0) of a connected graph counts acyclic orientations
whose unique source is any fixed vertex; specializing to the two graphs
above it counts the crossing/interval heaps that are pyramids, i.e. heap
orders in which the block containing 1 is the only maximal element.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .limits import check_limit
from .partitions import (
    PartitionClass,
    SetPartition,
    block_nests_inside,
    blocks_cross,
    enumerate_partitions,
    hulls_intersect,
)

__all__ = [
    "MixedGraph",
    "HeapOrder",
    "crossing_graph",
    "anti_interval_graph",
    "anti_interval_digraph",
    "digraph_key",
    "tutte_eval",
    "tutte_polynomial",
    "acyclic_orientations_unique_source",
    "enumerate_pyramids",
    "count_pyramids",
    "partition_sum_identity_check",
    "graph_to_json",
    "graph_to_dot",
]


@dataclass(frozen=True)
class MixedGraph:
    """Finite multigraph with optional edge orientations.

    `undirected` holds (i, j) with i < j, `directed` holds (tail, head),
    `loops` holds vertex indices; all three are multisets stored sorted.
    """

    n: int
    undirected: tuple[tuple[int, int], ...] = ()
    directed: tuple[tuple[int, int], ...] = ()
    loops: tuple[int, ...] = ()

    def __post_init__(self):
        for i, j in self.undirected:
            if not (0 <= i < j < self.n):
                raise ValueError(f"bad undirected edge ({i},{j})")
        for i, j in self.directed:
            if not (0 <= i < self.n and 0 <= j < self.n and i != j):
                raise ValueError(f"bad directed edge ({i},{j})")
        for v in self.loops:
            if not 0 <= v < self.n:
                raise ValueError(f"bad loop at {v}")
        object.__setattr__(self, "undirected", tuple(sorted(self.undirected)))
        object.__setattr__(self, "directed", tuple(sorted(self.directed)))
        object.__setattr__(self, "loops", tuple(sorted(self.loops)))

    def all_edges_undirected(self) -> tuple[tuple[int, int], ...]:
        """Every non-loop edge with orientation dropped (multiset)."""
        return tuple(sorted(
            list(self.undirected) + [(min(i, j), max(i, j)) for i, j in self.directed]
        ))

    def num_edges(self) -> int:
        return len(self.undirected) + len(self.directed) + len(self.loops)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = [[] for _ in range(self.n)]
        for i, j in self.all_edges_undirected():
            adj[i].append(j)
            adj[j].append(i)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


# ---------------------------------------------------------------------------
# Partition-derived graphs
# ---------------------------------------------------------------------------


def crossing_graph(pi: SetPartition) -> MixedGraph:
    """Simple graph on blocks; edges join crossing pairs."""
    bs = pi.blocks
    und = [
        (i, j)
        for i in range(len(bs))
        for j in range(i + 1, len(bs))
        if blocks_cross(bs[i], bs[j])
    ]
    return MixedGraph(len(bs), tuple(und))


def anti_interval_graph(pi: SetPartition) -> MixedGraph:
    """Simple graph on blocks; edges join pairs with intersecting hulls."""
    bs = pi.blocks
    und = [
        (i, j)
        for i in range(len(bs))
        for j in range(i + 1, len(bs))
        if hulls_intersect(bs[i], bs[j])
    ]
    return MixedGraph(len(bs), tuple(und))


def anti_interval_digraph(pi: SetPartition) -> MixedGraph:
    """Anti-interval graph with nesting edges directed outer -> inner."""
    bs = pi.blocks
    und = []
    dirs = []
    for i in range(len(bs)):
        for j in range(i + 1, len(bs)):
            if not hulls_intersect(bs[i], bs[j]):
                continue
            if blocks_cross(bs[i], bs[j]):
                und.append((i, j))
            elif block_nests_inside(bs[j], bs[i]):
                dirs.append((i, j))
            else:
                dirs.append((j, i))
    return MixedGraph(len(bs), tuple(und), tuple(dirs))


def digraph_key(g: MixedGraph) -> tuple:
    """Canonical labeled key; beta coefficients are memoized on this."""
    return (g.n, g.undirected, g.directed, g.loops)


# ---------------------------------------------------------------------------
# Tutte polynomial by deletion-contraction
# ---------------------------------------------------------------------------

_TUTTE_EVAL_MEMO: dict[tuple, Fraction] = {}
_TUTTE_POLY_MEMO: dict[tuple, dict] = {}


def _normalize_edges(edges) -> tuple[tuple[int, int], ...]:
    """Sort and relabel vertices by first appearance (drops isolated ones)."""
    edges = sorted((min(u, v), max(u, v)) for u, v in edges)
    names: dict[int, int] = {}
    out = []
    for u, v in edges:
        for w in (u, v):
            if w not in names:
                names[w] = len(names)
        a, b = names[u], names[v]
        out.append((min(a, b), max(a, b)))
    return tuple(sorted(out))


def _is_bridge(edges, e) -> bool:
    u, v = e
    if u == v:
        return False
    rest = list(edges)
    rest.remove(e)
    if e in rest:  # a parallel copy keeps the endpoints connected
        return False
    adj: dict[int, list[int]] = {}
    for a, b in rest:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = {u}
    stack = [u]
    while stack:
        for w in adj.get(stack.pop(), ()):
            if w not in seen:
                if w == v:
                    return False
                seen.add(w)
                stack.append(w)
    return True


def _contract(edges, e):
    u, v = e
    rest = list(edges)
    rest.remove(e)
    return _normalize_edges(
        ((u if a == v else a), (u if b == v else b)) for a, b in rest
    )


def _delete(edges, e):
    rest = list(edges)
    rest.remove(e)
    return _normalize_edges(rest)


def _tutte(edges, x: Fraction, y: Fraction) -> Fraction:
    if not edges:
        return Fraction(1)
    key = (edges, x, y)
    hit = _TUTTE_EVAL_MEMO.get(key)
    if hit is not None:
        return hit
    e = edges[0]
    if e[0] == e[1]:
        val = y * _tutte(_delete(edges, e), x, y)
    elif _is_bridge(edges, e):
        val = x * _tutte(_contract(edges, e), x, y)
    else:
        val = _tutte(_delete(edges, e), x, y) + _tutte(_contract(edges, e), x, y)
    _TUTTE_EVAL_MEMO[key] = val
    return val


def tutte_eval(g: MixedGraph, x, y) -> Fraction:
    """T_G(x, y) by deletion-contraction; orientations are ignored."""
    edges = _normalize_edges(
        list(g.all_edges_undirected()) + [(v, v) for v in g.loops]
    )
    return _tutte(edges, Fraction(x), Fraction(y))


def _tutte_poly(edges) -> dict[tuple[int, int], int]:
    if not edges:
        return {(0, 0): 1}
    hit = _TUTTE_POLY_MEMO.get(edges)
    if hit is not None:
        return hit
    e = edges[0]
    if e[0] == e[1]:
        val = {(i, j + 1): c for (i, j), c in _tutte_poly(_delete(edges, e)).items()}
    elif _is_bridge(edges, e):
        val = {(i + 1, j): c for (i, j), c in _tutte_poly(_contract(edges, e)).items()}
    else:
        val = dict(_tutte_poly(_delete(edges, e)))
        for ij, c in _tutte_poly(_contract(edges, e)).items():
            val[ij] = val.get(ij, 0) + c
    _TUTTE_POLY_MEMO[edges] = val
    return val


def tutte_polynomial(g: MixedGraph) -> dict[tuple[int, int], int]:
    """Full coefficient table {(i, j): c} of T_G; meant for small graphs."""
    edges = _normalize_edges(
        list(g.all_edges_undirected()) + [(v, v) for v in g.loops]
    )
    return dict(_tutte_poly(edges))


# ---------------------------------------------------------------------------
# Acyclic orientations, heaps, pyramids
# ---------------------------------------------------------------------------


def _acyclic_with_unique_source(n, edges, source):
    """Yield orientations (tuples of arcs) acyclic with unique source."""
    m = len(edges)
    if any(u == v for u, v in edges):
        return  # a loop kills acyclicity outright
    for mask in range(1 << m):
        arcs = tuple(
            (u, v) if mask >> k & 1 == 0 else (v, u)
            for k, (u, v) in enumerate(edges)
        )
        indeg = [0] * n
        adj = [[] for _ in range(n)]
        for u, v in arcs:
            indeg[v] += 1
            adj[u].append(v)
        if indeg[source] != 0:
            continue
        if any(indeg[v] == 0 for v in range(n) if v != source):
            continue
        # Kahn topological check for acyclicity.
        order = [source]
        deg = indeg[:]
        head = 0
        while head < len(order):
            for w in adj[order[head]]:
                deg[w] -= 1
                if deg[w] == 0:
                    order.append(w)
            head += 1
        if len(order) == n:
            yield arcs


def acyclic_orientations_unique_source(g: MixedGraph, v: int) -> int:
    """Count acyclic orientations whose unique source is v (oracle grade).

    For a connected graph the count is T_G(1,0) and does not depend on v;
    a disconnected graph has none (returned as 0 with a warning).
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if not g.is_connected():
        warnings.warn("disconnected graph has no single-source acyclic orientation")
        return 0
    edges = list(g.all_edges_undirected()) + [(w, w) for w in g.loops]
    return sum(1 for _ in _acyclic_with_unique_source(g.n, edges, v))


@dataclass(frozen=True)
class HeapOrder:
    """A heap on the blocks of a partition, as a DAG of 'above' relations.

    `above` lists arcs (upper, lower) on canonical block indices; the
    induced partial order is the transitive closure.  Validity (every
    conflicting pair comparable, acyclicity) holds by construction for
    heaps produced here.
    """

    base: SetPartition
    above: tuple[tuple[int, int], ...] = field(default=())

    def maximal_blocks(self) -> tuple[int, ...]:
        has_in = {b for _, b in self.above}
        return tuple(
            i for i in range(self.base.num_blocks) if i not in has_in
        )

    def is_pyramid(self) -> bool:
        return self.maximal_blocks() == (0,)

    def __repr__(self):
        rel = ";".join(f"{u}>{v}" for u, v in self.above)
        return f"HeapOrder({self.base}; {rel})"


def enumerate_pyramids(pi: SetPartition, mode: str):
    """Stream the pyramids on pi: crossing heaps (mode "crossing", pi must
    be connected) or interval heaps (mode "interval", pi must be
    irreducible) whose only maximal block is the block containing 1.

    They are exactly the acyclic orientations of the crossing resp.
    anti-interval graph with unique source at the first block.
    """
    if mode == "crossing":
        if not pi.is_connected():
            raise ValueError(f"{pi} is not connected; crossing pyramids need connectivity")
        g = crossing_graph(pi)
    elif mode == "interval":
        if not pi.is_irreducible():
            raise ValueError(f"{pi} is reducible; interval pyramids need irreducibility")
        g = anti_interval_graph(pi)
    else:
        raise ValueError(f"unknown pyramid mode {mode!r}")
    for arcs in _acyclic_with_unique_source(g.n, list(g.undirected), 0):
        yield HeapOrder(pi, tuple(sorted(arcs)))


def count_pyramids(pi: SetPartition, mode: str) -> int:
    return sum(1 for _ in enumerate_pyramids(pi, mode))


# ---------------------------------------------------------------------------
# The partition sum behind the Tutte specializations
# ---------------------------------------------------------------------------


def partition_sum_identity_check(g: MixedGraph, q) -> Fraction:
    """(q-1)^(1-|V|) * sum over vertex partitions of q^(internal edges) * mu.

    Here mu(pi, 1) = (-1)^(|pi|-1) (|pi|-1)! on the full partition lattice
    of the vertex set, with the convention q^0 = 1 even for q = 0.  The
    value equals T_G(1, q) for connected G and 0 otherwise.
    """
    q = Fraction(q)
    if q == 1:
        raise ValueError("q = 1 is excluded")
    check_limit("graph-vertices", g.n)
    edges = list(g.all_edges_undirected()) + [(v, v) for v in g.loops]
    total = Fraction(0)
    for pi in enumerate_partitions(g.n, PartitionClass.ALL, limit=g.n):
        rgs = pi.rgs  # vertex v of the graph is element v+1 of [n]
        internal = sum(1 for u, v in edges if rgs[u] == rgs[v])
        if q == 0:
            power = Fraction(1) if internal == 0 else Fraction(0)
        else:
            power = q**internal
        k = pi.num_blocks
        total += power * ((-1) ** (k - 1) * factorial(k - 1))
    return total * (q - 1) ** (1 - g.n)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def graph_to_json(g: MixedGraph) -> dict:
    return {
        "n": g.n,
        "undirected": [list(e) for e in g.undirected],
        "directed": [list(e) for e in g.directed],
        "loops": list(g.loops),
    }


def graph_to_dot(g: MixedGraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for u, v in g.undirected:
        lines.append(f"  {u} -> {v} [dir=none];")
    for u, v in g.directed:
        lines.append(f"  {u} -> {v};")
    for v in g.loops:
        lines.append(f"  {v} -> {v} [dir=none];")
    lines.append("}")
    return "\n".join(lines)
