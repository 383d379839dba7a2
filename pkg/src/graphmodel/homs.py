"""Graph homomorphisms: representation, constraint search, and predicates.

The search engine is a backtracker with forward checking.  ``find_hom``
assigns the most constrained vertex first (index tie-break, candidate values
ascending), so its answer is deterministic.  ``enumerate_homs`` uses static
vertex order and therefore yields maps in lexicographic order.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .errors import BudgetError, CompositionError, InvalidInputError
from .graphs import Graph

DEFAULT_SEARCH_BUDGET = 10_000_000
_BUDGET_ENV = "GRAPHMODEL_BUDGET"


def search_budget(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(_BUDGET_ENV)
    if raw is not None:
        try:
            return int(raw)
        except ValueError as exc:
            raise InvalidInputError(f"bad {_BUDGET_ENV} value: {raw!r}") from exc
    return DEFAULT_SEARCH_BUDGET


@dataclass(frozen=True)
class Hom:
    """A vertex map ``dom -> cod`` carrying every edge to an edge."""

    dom: Graph
    cod: Graph
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.dom.vertex_count:
            raise InvalidInputError("map length differs from domain size")
        for image in self.map:
            if not 0 <= image < self.cod.vertex_count:
                raise InvalidInputError(f"image {image} out of codomain range")
        for u, v in self.dom.edges:
            if not self.cod.has_edge(self.map[u], self.map[v]):
                raise InvalidInputError(
                    f"edge ({u},{v}) maps to non-edge ({self.map[u]},{self.map[v]})"
                )

    def __call__(self, v: int) -> int:
        return self.map[v]

    def image(self) -> frozenset[int]:
        return frozenset(self.map)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Hom({self.dom.vertex_count}->{self.cod.vertex_count}, {list(self.map)})"


@dataclass(frozen=True)
class HomConstraints:
    """Search constraints: a partial assignment and a post-composition pin.

    ``post_compose=(g, t)`` requires ``g`` after the result to equal ``t``.
    """

    fixed: dict[int, int] = field(default_factory=dict)
    post_compose: Optional[tuple[Hom, Hom]] = None

    def validate(self, dom: Graph, cod: Graph) -> None:
        for v, image in self.fixed.items():
            if not 0 <= v < dom.vertex_count:
                raise InvalidInputError(f"fixed vertex {v} out of domain range")
            if not 0 <= image < cod.vertex_count:
                raise InvalidInputError(f"fixed image {image} out of codomain range")
        if self.post_compose is not None:
            g, t = self.post_compose
            if g.dom is not cod and g.dom != cod:
                raise InvalidInputError("post_compose map must start at the codomain")
            if t.dom != dom or t.cod != g.cod:
                raise InvalidInputError("post_compose target endpoints do not match")


def identity(g: Graph) -> Hom:
    return Hom(g, g, tuple(range(g.vertex_count)))


def compose(g: Hom, f: Hom) -> Hom:
    """Pointwise composition ``g after f``."""
    if f.cod != g.dom:
        raise CompositionError("cod(f) must equal dom(g)")
    return Hom(f.dom, g.cod, tuple(g.map[v] for v in f.map))


def is_identity(f: Hom) -> bool:
    return f.dom == f.cod and f.map == tuple(range(f.dom.vertex_count))


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise BudgetError(f"search exceeded {self.limit} nodes")


def _initial_domains(
    dom: Graph, cod: Graph, constraints: Optional[HomConstraints]
) -> Optional[list[set[int]]]:
    """Per-vertex candidate images after unary constraint filtering."""
    all_images = set(range(cod.vertex_count))
    domains = [set(all_images) for _ in range(dom.vertex_count)]
    for v in range(dom.vertex_count):
        if dom.has_loop(v):
            domains[v] = {c for c in domains[v] if cod.has_loop(c)}
    if constraints is not None:
        constraints.validate(dom, cod)
        for v, image in constraints.fixed.items():
            if image not in domains[v]:
                return None
            domains[v] = {image}
        if constraints.post_compose is not None:
            g, t = constraints.post_compose
            for v in range(dom.vertex_count):
                domains[v] = {c for c in domains[v] if g.map[c] == t.map[v]}
    if any(not d for d in domains) and dom.vertex_count > 0:
        return None
    return domains


def _search(
    dom: Graph,
    cod: Graph,
    domains: list[set[int]],
    budget: _Budget,
    mrv: bool,
    rng: Optional[random.Random] = None,
) -> Iterator[tuple[int, ...]]:
    n = dom.vertex_count
    assignment: list[int] = [-1] * n
    adjacency = dom.adjacency
    cod_adj = cod.adjacency

    def propagate(v: int, c: int) -> Optional[list[tuple[int, set[int]]]]:
        # Forward-check unassigned neighbors of v against N(c); returns the
        # removed values for undo, or None on a wipeout.
        removed: list[tuple[int, set[int]]] = []
        for w in adjacency[v]:
            if w == v or assignment[w] != -1:
                continue
            allowed = cod_adj[c]
            dropped = {x for x in domains[w] if x not in allowed}
            if dropped:
                domains[w] -= dropped
                removed.append((w, dropped))
                if not domains[w]:
                    for ww, dd in removed:
                        domains[ww] |= dd
                    return None
        return removed

    def pick_vertex(depth: int) -> int:
        if not mrv:
            return depth
        best_v, best_size = -1, None
        for v in range(n):
            if assignment[v] == -1:
                size = len(domains[v])
                if best_size is None or size < best_size:
                    best_v, best_size = v, size
        return best_v

    def consistent(v: int, c: int) -> bool:
        for w in adjacency[v]:
            if w == v:
                continue
            a = assignment[w]
            if a != -1 and a not in cod_adj[c]:
                return False
        return True

    def recurse(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == n:
            yield tuple(assignment)
            return
        v = pick_vertex(depth)
        candidates = sorted(domains[v])
        if rng is not None:
            rng.shuffle(candidates)
        for c in candidates:
            budget.spend()
            if not consistent(v, c):
                continue
            assignment[v] = c
            removed = propagate(v, c)
            if removed is not None:
                yield from recurse(depth + 1)
                for w, dropped in removed:
                    domains[w] |= dropped
            assignment[v] = -1

    yield from recurse(0)


def find_hom(
    g: Graph,
    h: Graph,
    constraints: Optional[HomConstraints] = None,
    budget: Optional[int] = None,
) -> Optional[Hom]:
    """A homomorphism ``g -> h`` satisfying the constraints, or None."""
    domains = _initial_domains(g, h, constraints)
    if domains is None:
        return None
    tracker = _Budget(search_budget(budget))
    for assignment in _search(g, h, domains, tracker, mrv=True):
        return Hom(g, h, assignment)
    return None


def find_hom_random(
    g: Graph,
    h: Graph,
    rng: random.Random,
    budget: Optional[int] = None,
) -> Optional[Hom]:
    """Like find_hom but with rng-shuffled value order; used for sampling."""
    domains = _initial_domains(g, h, None)
    if domains is None:
        return None
    tracker = _Budget(search_budget(budget))
    for assignment in _search(g, h, domains, tracker, mrv=True, rng=rng):
        return Hom(g, h, assignment)
    return None


def enumerate_homs(
    g: Graph,
    h: Graph,
    constraints: Optional[HomConstraints] = None,
    budget: Optional[int] = None,
) -> list[Hom]:
    """All homomorphisms ``g -> h`` in lexicographic map order."""
    domains = _initial_domains(g, h, constraints)
    if domains is None:
        return []
    tracker = _Budget(search_budget(budget))
    return [
        Hom(g, h, assignment)
        for assignment in _search(g, h, domains, tracker, mrv=False)
    ]


def hom_exists(g: Graph, h: Graph, budget: Optional[int] = None) -> bool:
    return find_hom(g, h, budget=budget) is not None


# ---------------------------------------------------------------------------
# Structural predicates


def is_injective(f: Hom) -> bool:
    return len(set(f.map)) == f.dom.vertex_count


def is_surjective(f: Hom) -> bool:
    return len(set(f.map)) == f.cod.vertex_count


def is_edge_surjective(f: Hom) -> bool:
    """Every edge and loop of the codomain has a preimage edge; equivalently
    every map from the single edge into the codomain factors through f."""
    covered = {
        tuple(sorted((f.map[u], f.map[v]))) for u, v in f.dom.edges
    }
    return all(e in covered for e in f.cod.edges)


def is_nonloop_edge_surjective(f: Hom) -> bool:
    covered = {
        tuple(sorted((f.map[u], f.map[v]))) for u, v in f.dom.edges
    }
    return all(e in covered for e in f.cod.edges if e[0] != e[1])


def covers_loops_strictly(f: Hom) -> bool:
    """Every looped codomain vertex has a looped preimage vertex."""
    looped_images = {
        f.map[v] for v in range(f.dom.vertex_count) if f.dom.has_loop(v)
    }
    return all(
        w in looped_images for w in range(f.cod.vertex_count) if f.cod.has_loop(w)
    )


def find_section_witness(f: Hom, budget: Optional[int] = None) -> Optional[Hom]:
    """s with ``f . s = identity(cod f)``, certifying f is a retraction."""
    target = identity(f.cod)
    return find_hom(
        f.cod, f.dom, HomConstraints(post_compose=(f, target)), budget=budget
    )


def find_retraction_witness(f: Hom, budget: Optional[int] = None) -> Optional[Hom]:
    """r with ``r . f = identity(dom f)``, certifying f is a section."""
    fixed: dict[int, int] = {}
    for v in range(f.dom.vertex_count):
        image = f.map[v]
        if image in fixed and fixed[image] != v:
            return None
        fixed[image] = v
    return find_hom(f.cod, f.dom, HomConstraints(fixed=fixed), budget=budget)


def is_retraction(f: Hom, budget: Optional[int] = None) -> bool:
    return find_section_witness(f, budget=budget) is not None


def is_section(f: Hom, budget: Optional[int] = None) -> bool:
    return find_retraction_witness(f, budget=budget) is not None


def is_edge_reflecting(f: Hom) -> bool:
    """Image edges pull back: an edge between image values forces an edge
    between every pair of their preimages (loops included)."""
    for x in range(f.dom.vertex_count):
        for y in range(x, f.dom.vertex_count):
            if f.cod.has_edge(f.map[x], f.map[y]) and not f.dom.has_edge(x, y):
                return False
    return True


def is_isomorphism(f: Hom) -> bool:
    return is_injective(f) and is_surjective(f) and is_edge_reflecting(f)


def has_cross_edge(f: Hom) -> bool:
    """True when some codomain edge joins the image to its complement."""
    image = set(f.map)
    return any(
        (u in image) != (v in image)
        for u, v in f.cod.edges
    )


def component_map(f: Hom) -> list[int]:
    """Index of the codomain component receiving each domain component."""
    from .graphs import connected_components

    dom_blocks = connected_components(f.dom)
    cod_blocks = connected_components(f.cod)
    locate = {}
    for j, block in enumerate(cod_blocks):
        for v in block:
            locate[v] = j
    return [locate[f.map[min(block)]] for block in dom_blocks]


def is_component_bijective(f: Hom) -> bool:
    """Does f induce a bijection between the component sets?"""
    from .graphs import connected_components

    mapping = component_map(f)
    return (
        len(mapping) == len(connected_components(f.cod))
        and len(set(mapping)) == len(mapping)
    )


def restricts_to_furbished_iso(f: Hom) -> bool:
    """Is the restriction of f between furbished parts an isomorphism?"""
    from .graphs import furbished_part

    dom_vs, dom_sub = furbished_part(f.dom)
    cod_vs, cod_sub = furbished_part(f.cod)
    if len(dom_vs) != len(cod_vs):
        return False
    cod_index = {v: i for i, v in enumerate(cod_vs)}
    # furbished vertices land on furbished vertices, so the lookup is total
    restricted = tuple(cod_index[f.map[v]] for v in dom_vs)
    if len(set(restricted)) != len(restricted):
        return False
    return is_edge_reflecting(Hom(dom_sub, cod_sub, restricted))


@dataclass(frozen=True)
class HomFlags:
    injective: bool
    surjective: bool
    edge_surjective: bool
    retraction: bool
    section: bool
    isomorphism: bool


def classify_hom(f: Hom, budget: Optional[int] = None) -> HomFlags:
    return HomFlags(
        injective=is_injective(f),
        surjective=is_surjective(f),
        edge_surjective=is_edge_surjective(f),
        retraction=is_retraction(f, budget=budget),
        section=is_section(f, budget=budget),
        isomorphism=is_isomorphism(f),
    )


# ---------------------------------------------------------------------------
# Text format: `m <v0> <v1> ...` with domain and codomain supplied separately.


def format_hom(f: Hom) -> str:
    return "m " + " ".join(str(v) for v in f.map) + "\n" if f.map else "m\n"


def parse_hom(text: str, dom: Graph, cod: Graph, source: str = "<string>") -> Hom:
    values: Optional[list[int]] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] != "m":
            raise InvalidInputError(f"{source}:{lineno}: unknown directive {tokens[0]!r}")
        if values is not None:
            raise InvalidInputError(f"{source}:{lineno}: duplicate 'm' line")
        try:
            values = [int(t) for t in tokens[1:]]
        except ValueError as exc:
            raise InvalidInputError(f"{source}:{lineno}: non-integer image") from exc
    if values is None:
        raise InvalidInputError(f"{source}: missing 'm' line")
    if len(values) != dom.vertex_count:
        raise InvalidInputError(
            f"{source}: expected {dom.vertex_count} images, got {len(values)}"
        )
    return Hom(dom, cod, tuple(values))
