"""Finite limits and colimits: products, coproducts, (co)equalizers, and the
pullbacks/pushouts and (co)pairings derived from them.

Vertex orderings are fixed (product is row-major in the first factor,
coproduct puts the left summand first, coequalizer classes are represented
by their least vertex) so every construction is reproducible.
"""

from __future__ import annotations

from .errors import InvalidInputError
from .graphs import Graph, build_graph
from .homs import Hom


def product(g: Graph, h: Graph) -> tuple[Graph, Hom, Hom]:
    """Categorical product: pairs, with an edge iff both coordinates have one."""
    nh = h.vertex_count
    n = g.vertex_count * nh

    def idx(a: int, b: int) -> int:
        return a * nh + b

    edges = []
    for a1 in range(g.vertex_count):
        for a2 in range(a1, g.vertex_count):
            if not g.has_edge(a1, a2):
                continue
            for b1 in range(nh):
                for b2 in range(nh):
                    if h.has_edge(b1, b2):
                        edges.append((idx(a1, b1), idx(a2, b2)))
    prod = build_graph(n, edges)
    p1 = Hom(prod, g, tuple(v // nh for v in range(n)))
    p2 = Hom(prod, h, tuple(v % nh for v in range(n)))
    return prod, p1, p2


def coproduct(g: Graph, h: Graph) -> tuple[Graph, Hom, Hom]:
    """Disjoint union with canonical injections, left summand first."""
    shift = g.vertex_count
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    cop = build_graph(shift + h.vertex_count, edges)
    i1 = Hom(g, cop, tuple(range(shift)))
    i2 = Hom(h, cop, tuple(range(shift, cop.vertex_count)))
    return cop, i1, i2


def _require_parallel(f: Hom, g: Hom) -> None:
    if f.dom != g.dom or f.cod != g.cod:
        raise InvalidInputError("maps must be parallel (same domain and codomain)")


def equalizer(f: Hom, g: Hom) -> tuple[Graph, Hom]:
    """Induced subgraph on the vertices where f and g agree, with inclusion."""
    _require_parallel(f, g)
    agree = [v for v in range(f.dom.vertex_count) if f.map[v] == g.map[v]]
    relabel = {v: i for i, v in enumerate(agree)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in f.dom.edges
        if u in relabel and v in relabel
    ]
    eq = build_graph(len(agree), edges)
    return eq, Hom(eq, f.dom, tuple(agree))


def coequalizer(f: Hom, g: Hom) -> tuple[Graph, Hom]:
    """Quotient of the codomain by the equivalence closure of f(x) ~ g(x).

    Identifying two adjacent vertices turns their edge into a loop.
    """
    _require_parallel(f, g)
    n = f.cod.vertex_count
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            # keep the least vertex as representative
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb

    for x in range(f.dom.vertex_count):
        union(f.map[x], g.map[x])

    reps = sorted({find(v) for v in range(n)})
    index = {r: i for i, r in enumerate(reps)}
    projection = tuple(index[find(v)] for v in range(n))
    edges = [(projection[u], projection[v]) for u, v in f.cod.edges]
    quotient = build_graph(len(reps), edges)
    return quotient, Hom(f.cod, quotient, projection)


def pairing(f: Hom, g: Hom) -> Hom:
    """The mediating map into product(cod f, cod g)."""
    if f.dom != g.dom:
        raise InvalidInputError("pairing requires a common domain")
    prod, _, _ = product(f.cod, g.cod)
    nh = g.cod.vertex_count
    return Hom(f.dom, prod, tuple(f.map[v] * nh + g.map[v] for v in range(f.dom.vertex_count)))


def copairing(f: Hom, g: Hom) -> Hom:
    """The mediating map out of coproduct(dom f, dom g)."""
    if f.cod != g.cod:
        raise InvalidInputError("copairing requires a common codomain")
    cop, _, _ = coproduct(f.dom, g.dom)
    return Hom(cop, f.cod, tuple(f.map) + tuple(g.map))


def pullback(f: Hom, g: Hom) -> tuple[Graph, Hom, Hom]:
    """Pullback of the cospan ``f: A -> C <- B :g`` via product + equalizer."""
    if f.cod != g.cod:
        raise InvalidInputError("pullback requires a common codomain")
    from .homs import compose

    prod, p1, p2 = product(f.dom, g.dom)
    eq, incl = equalizer(compose(f, p1), compose(g, p2))
    return eq, compose(p1, incl), compose(p2, incl)


def pushout(f: Hom, g: Hom) -> tuple[Graph, Hom, Hom]:
    """Pushout of the span ``A <- C -> B`` via coproduct + coequalizer."""
    if f.dom != g.dom:
        raise InvalidInputError("pushout requires a common domain")
    from .homs import compose

    cop, i1, i2 = coproduct(f.cod, g.cod)
    quot, proj = coequalizer(compose(i1, f), compose(i2, g))
    return quot, compose(proj, i1), compose(proj, i2)
