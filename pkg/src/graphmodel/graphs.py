"""Core graph representation and structural invariants.

Graphs are finite, undirected, loops allowed, no multi-edges.  Vertices are
dense integers ``0..n-1`` and relabelings are always explicit data.  Every
object is immutable, so all operations are pure functions.
"""

from __future__ import annotations

import hashlib
import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterable, Optional, Sequence

from .errors import BudgetError, InvalidInputError

# Enumeration of graphs up to isomorphism is exponential; the default budget
# keeps callers at desk scale.  The hard cap bounds canonicalization cost.
DEFAULT_ENUMERATION_BUDGET = 5
HARD_ENUMERATION_CAP = 8

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite symmetric adjacency relation; ``edges`` holds pairs ``u <= v``."""

    vertex_count: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InvalidInputError("vertex_count must be non-negative")
        for u, v in self.edges:
            if u > v:
                raise InvalidInputError(f"edge ({u},{v}) not normalized")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidInputError(
                    f"edge ({u},{v}) out of range for {self.vertex_count} vertices"
                )

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets; a loop puts a vertex in its own neighborhood."""
        neigh: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            neigh[u].add(v)
            neigh[v].add(u)
        return tuple(frozenset(s) for s in neigh)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def has_loop(self, v: int) -> bool:
        return (v, v) in self.edges

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def vertices(self) -> range:
        return range(self.vertex_count)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph({self.vertex_count}, {sorted(self.edges)})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if n < 0:
        raise InvalidInputError("vertex count must be non-negative")
    normalized = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInputError(f"edge ({u},{v}) out of range for n={n}")
        normalized.add(_normalize_edge(u, v))
    return Graph(n, frozenset(normalized))


# Small distinguished graphs used throughout: the initial object, the
# one-point graph, the terminal object (one loop), the single edge, and the
# two-loop graph with a connecting edge used by the lifting generators.
EMPTY = build_graph(0, [])
P = build_graph(1, [])
T = build_graph(1, [(0, 0)])
E = build_graph(2, [(0, 1)])
OMEGA2 = build_graph(2, [(0, 0), (1, 1), (0, 1)])


def complete_graph(k: int, loops: bool = False) -> Graph:
    edges = [(i, j) for i in range(k) for j in range(i + int(not loops), k)]
    return build_graph(k, edges)


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise InvalidInputError("cycle_graph needs at least 3 vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.vertex_count
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    return build_graph(g.vertex_count + h.vertex_count, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``vertices`` plus the old->new relabeling."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.vertex_count:
            raise InvalidInputError(f"vertex {v} out of range")
    relabel = {v: i for i, v in enumerate(vs)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u in relabel and v in relabel
    ]
    return build_graph(len(vs), edges), relabel


# ---------------------------------------------------------------------------
# Canonical forms and isomorphism


def _refine_colors(g: Graph) -> tuple[tuple, ...]:
    """Iterated neighborhood refinement; colors are isomorphism-invariant."""
    n = g.vertex_count
    colors: list[tuple] = [
        (g.has_loop(v), len(g.adjacency[v])) for v in range(n)
    ]
    for _ in range(n):
        new = [
            (colors[v], tuple(sorted(colors[w] for w in g.adjacency[v])))
            for v in range(n)
        ]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    return tuple(colors)


def _color_blocks(g: Graph) -> list[list[int]]:
    colors = _refine_colors(g)
    blocks: dict[tuple, list[int]] = {}
    for v in range(g.vertex_count):
        blocks.setdefault(colors[v], []).append(v)
    return [blocks[c] for c in sorted(blocks)]


def _block_permutations(blocks: list[list[int]]):
    """All relabelings sending block k to the k-th slice of new labels."""
    offsets = []
    pos = 0
    for b in blocks:
        offsets.append(pos)
        pos += len(b)
    n = pos
    for arrangement in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [0] * n
        for off, arranged in zip(offsets, arrangement):
            for i, old in enumerate(arranged):
                perm[old] = off + i
        yield tuple(perm)


def _apply_relabel(g: Graph, perm: Sequence[int]) -> tuple[Edge, ...]:
    return tuple(sorted(_normalize_edge(perm[u], perm[v]) for u, v in g.edges))


@lru_cache(maxsize=65536)
def _canonical_cached(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    blocks = _color_blocks(g)
    best_edges: Optional[tuple[Edge, ...]] = None
    best_perm: Optional[tuple[int, ...]] = None
    for perm in _block_permutations(blocks):
        edges = _apply_relabel(g, perm)
        if best_edges is None or edges < best_edges:
            best_edges, best_perm = edges, perm
    assert best_perm is not None
    return Graph(g.vertex_count, frozenset(best_edges or ())), best_perm


def canonical_form(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Canonical representative plus the relabeling ``old -> new`` onto it.

    Isomorphic graphs yield identical canonical graphs; the search is
    exhaustive within color-refinement blocks, which is exact at desk scale.
    """
    return _canonical_cached(g)


def is_isomorphic(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """A vertex bijection ``g -> h`` that is a graph isomorphism, or None."""
    if g.vertex_count != h.vertex_count or len(g.edges) != len(h.edges):
        return None
    cg, pg = canonical_form(g)
    ch, ph = canonical_form(h)
    if cg != ch:
        return None
    inverse_ph = [0] * h.vertex_count
    for old, new in enumerate(ph):
        inverse_ph[new] = old
    return tuple(inverse_ph[pg[v]] for v in range(g.vertex_count))


@lru_cache(maxsize=8192)
def automorphisms(g: Graph) -> tuple[tuple[int, ...], ...]:
    """All automorphisms of ``g`` (permutations preserving the edge set)."""
    target = g.sorted_edges
    return tuple(
        perm
        for perm in _block_permutations(_color_blocks(g))
        if _apply_relabel(g, perm) == target
    )


@lru_cache(maxsize=16)
def enumerate_graphs(n: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> tuple[Graph, ...]:
    """All graphs on exactly ``n`` vertices, one per isomorphism class.

    Canonical order: sorted by edge count, then by the canonical edge tuple.
    """
    if n > min(budget, HARD_ENUMERATION_CAP):
        raise BudgetError(f"enumerate_graphs(n={n}) exceeds budget {budget}")
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    seen: set[Graph] = set()
    for mask in range(1 << len(slots)):
        edges = [slots[k] for k in range(len(slots)) if mask >> k & 1]
        canon, _ = canonical_form(build_graph(n, edges))
        seen.add(canon)
    return tuple(sorted(seen, key=lambda g: (len(g.edges), g.sorted_edges)))


def graph_digest(g: Graph) -> str:
    """Short stable digest of the canonical form; used in poset output."""
    canon, _ = canonical_form(g)
    text = format_graph(canon)
    return hashlib.sha256(text.encode()).hexdigest()[:12]


# ---------------------------------------------------------------------------
# Components, furbished part, chromatic number, girths, subobjects


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Blocks of the component partition, sorted by least vertex."""
    seen = [False] * g.vertex_count
    blocks = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        block = {start}
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    block.add(w)
                    queue.append(w)
        blocks.append(frozenset(block))
    return blocks


def furbished_part(g: Graph) -> tuple[tuple[int, ...], Graph]:
    """Vertices incident to at least one edge (loops count) and their
    induced subgraph."""
    vs = tuple(v for v in range(g.vertex_count) if g.adjacency[v])
    sub, _ = induced_subgraph(g, vs)
    return vs, sub


def isolated_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.vertex_count) if not g.adjacency[v])


def chromatic_number(g: Graph) -> Optional[int]:
    """Least k with a homomorphism into the loopless complete graph K_k.

    None when the graph has a loop; no proper coloring exists then.
    """
    from .homs import find_hom  # local import to avoid a cycle

    if any(g.has_loop(v) for v in range(g.vertex_count)):
        return None
    for k in range(g.vertex_count + 1):
        if find_hom(g, complete_graph(k)) is not None:
            return k
    raise AssertionError("a loopless graph is always vertex_count-colorable")


def girths(g: Graph) -> tuple[Optional[int], Optional[int]]:
    """(girth, odd girth); a loop is a 1-cycle, absent values mean none."""
    if any(g.has_loop(v) for v in range(g.vertex_count)):
        return 1, 1
    girth = _shortest_cycle(g)
    odd = _shortest_odd_cycle(g)
    return girth, odd


def _shortest_cycle(g: Graph) -> Optional[int]:
    # BFS from every source; a non-tree scan closes a walk containing a
    # cycle, and the minimum over all sources is exact.
    best: Optional[int] = None
    n = g.vertex_count
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in g.adjacency[a]:
                if b == a:
                    continue
                if dist[b] == -1:
                    dist[b] = dist[a] + 1
                    parent[b] = a
                    queue.append(b)
                elif b != parent[a]:
                    cand = dist[a] + dist[b] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def _shortest_odd_cycle(g: Graph) -> Optional[int]:
    # Parity-layered BFS: the shortest odd closed walk is an odd cycle.
    best: Optional[int] = None
    n = g.vertex_count
    for s in range(n):
        dist = {(s, 0): 0}
        queue = deque([(s, 0)])
        while queue:
            v, p = queue.popleft()
            for w in g.adjacency[v]:
                nxt = (w, 1 - p)
                if nxt not in dist:
                    dist[nxt] = dist[(v, p)] + 1
                    queue.append(nxt)
        if (s, 1) in dist:
            cand = dist[(s, 1)]
            if best is None or cand < best:
                best = cand
    return best


DEFAULT_SUBOBJECT_BUDGET = 14


def count_subobjects(g: Graph, budget: int = DEFAULT_SUBOBJECT_BUDGET) -> int:
    """Number of subgraphs: any vertex subset with any subset of induced edges."""
    n = g.vertex_count
    if n > budget:
        raise BudgetError(f"count_subobjects on {n} vertices exceeds budget {budget}")
    total = 0
    for mask in range(1 << n):
        inside = sum(
            1
            for u, v in g.edges
            if (mask >> u & 1) and (mask >> v & 1)
        )
        total += 1 << inside
    return total


def burnside_class_count(n: int) -> int:
    """Orbit count of edge-slot subsets under S_n; an independent oracle for
    enumerate_graphs sizes."""
    slots = [(i, j) for i in range(n) for j in range(i, n)]
    index = {s: k for k, s in enumerate(slots)}
    total = 0
    for perm in itertools.permutations(range(n)):
        mapping = [index[_normalize_edge(perm[u], perm[v])] for u, v in slots]
        seen = [False] * len(slots)
        cycles = 0
        for k in range(len(slots)):
            if not seen[k]:
                cycles += 1
                j = k
                while not seen[j]:
                    seen[j] = True
                    j = mapping[j]
        total += 1 << cycles
    return total // factorial(n)


# ---------------------------------------------------------------------------
# Text format: `n <count>` then `e <u> <v>` lines, `#` comments.


def format_graph(g: Graph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str, source: str = "<string>") -> Graph:
    n: Optional[int] = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None:
                raise InvalidInputError(f"{source}:{lineno}: duplicate 'n' line")
            if len(tokens) != 2 or not tokens[1].lstrip("-").isdigit():
                raise InvalidInputError(f"{source}:{lineno}: malformed 'n' line")
            n = int(tokens[1])
            if n < 0:
                raise InvalidInputError(f"{source}:{lineno}: negative vertex count")
        elif tokens[0] == "e":
            if n is None:
                raise InvalidInputError(f"{source}:{lineno}: 'e' before 'n'")
            if len(tokens) != 3:
                raise InvalidInputError(f"{source}:{lineno}: malformed 'e' line")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError as exc:
                raise InvalidInputError(f"{source}:{lineno}: non-integer endpoint") from exc
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(
                    f"{source}:{lineno}: edge ({u},{v}) out of range for n={n}"
                )
            edges.append(_normalize_edge(u, v))
        else:
            raise InvalidInputError(f"{source}:{lineno}: unknown directive {tokens[0]!r}")
    if n is None:
        raise InvalidInputError(f"{source}: missing 'n' line")
    return build_graph(n, edges)
