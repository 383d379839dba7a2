"""Cores, idempotent endomorphism powers, the homomorphism quasi-order, the
core poset, and antichain discovery.

A graph is a core exactly when it has no homomorphism to a proper subgraph,
so core computation repeatedly searches for an endomorphism missing one
vertex, passes to an idempotent power, and restricts to its image.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import InvalidInputError
from .graphs import (
    Graph,
    build_graph,
    canonical_form,
    chromatic_number,
    induced_subgraph,
)
from .homs import Hom, compose, find_hom, hom_exists, identity


# The smallest convenient triangle-free graph of chromatic number four;
# eleven vertices: a five-cycle, its five shadows, and an apex.
GROTZSCH = build_graph(
    11,
    [(i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, (i + 1) % 5) for i in range(5)]
    + [(5 + i, (i - 1) % 5) for i in range(5)]
    + [(10, 5 + i) for i in range(5)],
)


def idempotent_power(f: Hom) -> Hom:
    """The least power of an endomorphism that is idempotent.

    Exists for every endomorphism of a finite graph; the exponent never
    exceeds n * |I|! where I is the eventual image.
    """
    if f.dom != f.cod:
        raise InvalidInputError("idempotent_power requires an endomorphism")
    power = f
    while compose(power, power) != power:
        power = compose(power, f)
    return power


def _proper_retract_step(g: Graph, order: Sequence[int], budget=None) -> Optional[Hom]:
    """An idempotent endomorphism of g with a proper image, or None."""
    for v in order:
        rest = [w for w in range(g.vertex_count) if w != v]
        sub, _ = induced_subgraph(g, rest)
        inner = find_hom(g, sub, budget=budget)
        if inner is not None:
            inclusion = Hom(sub, g, tuple(rest))
            return idempotent_power(compose(inclusion, inner))
    return None


@dataclass(frozen=True)
class CoreResult:
    core: Graph
    retraction: Hom
    section: Hom


def core(g: Graph, reverse_order: bool = False, budget=None) -> CoreResult:
    """The smallest retract of g, canonical, with its witnessing maps.

    ``retraction . section`` is the identity of the core; ``reverse_order``
    flips the vertex-deletion order, giving an independent run for the
    uniqueness-up-to-isomorphism check.
    """
    current = g
    retraction = identity(g)
    section = identity(g)
    while True:
        order = range(current.vertex_count)
        if reverse_order:
            order = reversed(order)
        power = _proper_retract_step(current, list(order), budget=budget)
        if power is None:
            break
        image = sorted(set(power.map))
        sub, relabel = induced_subgraph(current, image)
        onto = Hom(current, sub, tuple(relabel[power.map[v]] for v in range(current.vertex_count)))
        include = Hom(sub, current, tuple(image))
        retraction = compose(onto, retraction)
        section = compose(section, include)
        current = sub
    canon, relabel_map = canonical_form(current)
    to_canon = Hom(current, canon, relabel_map)
    inverse = [0] * current.vertex_count
    for old, new in enumerate(relabel_map):
        inverse[new] = old
    from_canon = Hom(canon, current, tuple(inverse))
    return CoreResult(
        core=canon,
        retraction=compose(to_canon, retraction),
        section=compose(section, from_canon),
    )


def is_core(g: Graph, budget=None) -> bool:
    """No homomorphism into any single-vertex-deleted subgraph exists."""
    for v in range(g.vertex_count):
        rest = [w for w in range(g.vertex_count) if w != v]
        sub, _ = induced_subgraph(g, rest)
        if find_hom(g, sub, budget=budget) is not None:
            return False
    return True


class HomOrder(Enum):
    GREATER = "greater"
    LESS = "less"
    EQUIVALENT = "equivalent"
    INCOMPARABLE = "incomparable"


def hom_order(g: Graph, h: Graph, budget=None) -> HomOrder:
    """Position of g against h in the quasi-order ``g >= h iff hom(g,h)``."""
    forward = hom_exists(g, h, budget=budget)
    backward = hom_exists(h, g, budget=budget)
    if forward and backward:
        return HomOrder.EQUIVALENT
    if forward:
        return HomOrder.GREATER
    if backward:
        return HomOrder.LESS
    return HomOrder.INCOMPARABLE


@dataclass(frozen=True)
class CorePoset:
    """Canonical cores with the hom-existence relation restricted to them."""

    elements: tuple[Graph, ...]
    relation: frozenset[tuple[int, int]]

    def leq(self, i: int, j: int) -> bool:
        return (i, j) in self.relation


def core_poset(corpus: Sequence[Graph], budget=None) -> CorePoset:
    cores: list[Graph] = []
    seen: set[Graph] = set()
    for g in corpus:
        c = core(g, budget=budget).core
        if c not in seen:
            seen.add(c)
            cores.append(c)
    cores.sort(key=lambda g: (g.vertex_count, len(g.edges), g.sorted_edges))
    relation = frozenset(
        (i, j)
        for i, gi in enumerate(cores)
        for j, gj in enumerate(cores)
        if hom_exists(gi, gj, budget=budget)
    )
    return CorePoset(tuple(cores), relation)


def find_antichain(
    corpus: Sequence[Graph], k: int, budget=None
) -> Optional[list[Graph]]:
    """k pairwise hom-incomparable graphs of chromatic number >= 3, or None."""
    candidates = [
        g
        for g in corpus
        if (chromatic_number(g) or 0) >= 3
    ]
    comparable = [
        [
            i != j
            and (
                hom_exists(candidates[i], candidates[j], budget=budget)
                or hom_exists(candidates[j], candidates[i], budget=budget)
            )
            for j in range(len(candidates))
        ]
        for i in range(len(candidates))
    ]

    chosen: list[int] = []

    def extend(start: int) -> bool:
        if len(chosen) == k:
            return True
        for i in range(start, len(candidates)):
            if all(not comparable[i][j] for j in chosen):
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return [candidates[i] for i in chosen]
    return None
