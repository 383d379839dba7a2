"""Model structures on finite graphs: the three trivial ones, the
connected-components structure, the furbished structure, the core
structure, and the family parametrized by downward-closed sets, each with
constructive factorizations, plus the axiom verification harness.

Every factorization is re-classified before being returned, so a structure
can never hand back pieces that do not carry the advertised classes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional, Sequence

from .errors import (
    FactorizationSoundnessError,
    InvalidInputError,
    UnsupportedStructureError,
)
from .graphs import (
    EMPTY,
    T,
    Graph,
    automorphisms,
    build_graph,
    canonical_form,
    connected_components,
    enumerate_graphs,
    furbished_part,
    induced_subgraph,
    isolated_vertices,
)
from .homs import (
    Hom,
    HomConstraints,
    compose,
    enumerate_homs,
    find_hom,
    find_hom_random,
    has_cross_edge,
    hom_exists,
    identity,
    is_component_bijective,
    is_edge_reflecting,
    is_injective,
    is_isomorphism,
    is_retraction,
    is_section,
    is_surjective,
    restricts_to_furbished_iso,
)
from .lifting import Square, find_failing_square
from .limits import coproduct, copairing, product

DEFAULT_VERIFY_SEED = 1729


@dataclass(frozen=True)
class ClassificationFlags:
    we: bool
    cof: bool
    fib: bool

    @property
    def acof(self) -> bool:
        return self.we and self.cof

    @property
    def afib(self) -> bool:
        return self.we and self.fib


class DownwardClosedSet:
    """The class of graphs below a generating set in the hom quasi-order.

    Membership: some generator admits a homomorphism into the graph.  The
    class is downward closed by composition.  Results are cached per
    canonical form, so membership is isomorphism-invariant by construction.
    """

    def __init__(self, generators: Sequence[Graph]):
        self.generators = tuple(generators)
        self._cache: dict[Graph, bool] = {}

    def member(self, g: Graph) -> bool:
        canon, _ = canonical_form(g)
        if canon not in self._cache:
            self._cache[canon] = any(
                hom_exists(gen, canon) for gen in self.generators
            )
        return self._cache[canon]


@dataclass(frozen=True)
class ModelStructure:
    name: str
    is_we: Callable[[Hom], bool]
    is_cof: Callable[[Hom], bool]
    is_fib: Callable[[Hom], bool]
    factor_cof_afib: Callable[[Hom], tuple[Hom, Hom]]
    factor_acof_fib: Callable[[Hom], tuple[Hom, Hom]]
    homotopy_kind: Optional[str] = None
    parameters: Optional[DownwardClosedSet] = None

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"ModelStructure({self.name!r})"


def classify_morphism(structure: ModelStructure, f: Hom) -> ClassificationFlags:
    return ClassificationFlags(
        we=structure.is_we(f),
        cof=structure.is_cof(f),
        fib=structure.is_fib(f),
    )


def factor(structure: ModelStructure, f: Hom, mode: str) -> tuple[Hom, Hom]:
    """Factor f, verifying the advertised classes before returning.

    mode 'cof-afib': first a cofibration, second an acyclic fibration.
    mode 'acof-fib': first an acyclic cofibration, second a fibration.
    """
    if mode == "cof-afib":
        first, second = structure.factor_cof_afib(f)
        ok_first = structure.is_cof(first)
        ok_second = structure.is_fib(second) and structure.is_we(second)
    elif mode == "acof-fib":
        first, second = structure.factor_acof_fib(f)
        ok_first = structure.is_cof(first) and structure.is_we(first)
        ok_second = structure.is_fib(second)
    else:
        raise InvalidInputError(f"unknown factorization mode {mode!r}")
    if compose(second, first) != f:
        raise FactorizationSoundnessError(
            f"{structure.name}: {mode} factorization does not recompose"
        )
    if not (ok_first and ok_second):
        raise FactorizationSoundnessError(
            f"{structure.name}: {mode} factorization pieces misclassify"
        )
    return first, second


# ---------------------------------------------------------------------------
# The three trivial structures


def _always(_: Hom) -> bool:
    return True


def _factor_f_then_id(f: Hom) -> tuple[Hom, Hom]:
    return f, identity(f.cod)


def _factor_id_then_f(f: Hom) -> tuple[Hom, Hom]:
    return identity(f.dom), f


def trivial_structures() -> tuple[ModelStructure, ModelStructure, ModelStructure]:
    """(all, all, iso), (all, iso, all) and (iso, all, all)."""
    t1 = ModelStructure(
        name="trivial1",
        is_we=_always,
        is_cof=_always,
        is_fib=is_isomorphism,
        factor_cof_afib=_factor_f_then_id,
        factor_acof_fib=_factor_f_then_id,
    )
    t2 = ModelStructure(
        name="trivial2",
        is_we=_always,
        is_cof=is_isomorphism,
        is_fib=_always,
        factor_cof_afib=_factor_id_then_f,
        factor_acof_fib=_factor_id_then_f,
    )
    t3 = ModelStructure(
        name="trivial3",
        is_we=is_isomorphism,
        is_cof=_always,
        is_fib=_always,
        factor_cof_afib=_factor_f_then_id,
        factor_acof_fib=_factor_id_then_f,
    )
    return t1, t2, t3


# ---------------------------------------------------------------------------
# Connected-components structure


def _component_data(f: Hom):
    dom_blocks = connected_components(f.dom)
    cod_blocks = connected_components(f.cod)
    locate = {v: j for j, block in enumerate(cod_blocks) for v in block}
    return dom_blocks, cod_blocks, locate


def _cc_is_fibration(f: Hom) -> bool:
    """Each domain component must map isomorphically onto its target
    component; components of the codomain may have empty preimage."""
    dom_blocks, cod_blocks, locate = _component_data(f)
    for block in dom_blocks:
        target = sorted(cod_blocks[locate[f.map[min(block)]]])
        sub_g, _ = induced_subgraph(f.dom, block)
        sub_h, relabel_h = induced_subgraph(f.cod, target)
        mapping = tuple(relabel_h[f.map[v]] for v in sorted(block))
        if len(set(mapping)) != len(mapping) or len(mapping) != sub_h.vertex_count:
            return False
        if not is_edge_reflecting(Hom(sub_g, sub_h, mapping)):
            return False
    return True


def _cc_factor_acof_fib(f: Hom) -> tuple[Hom, Hom]:
    # Middle object: one fresh copy of the target component per domain
    # component.  The first leg is a component bijection, the second folds
    # the copies back and adjoins the missed components.
    dom_blocks, cod_blocks, locate = _component_data(f)
    acof_map = [0] * f.dom.vertex_count
    fib_map: list[int] = []
    mid_edges: list[tuple[int, int]] = []
    offset = 0
    for block in dom_blocks:
        target = sorted(cod_blocks[locate[f.map[min(block)]]])
        sub_h, relabel_h = induced_subgraph(f.cod, target)
        mid_edges.extend((u + offset, v + offset) for u, v in sub_h.edges)
        for v in block:
            acof_map[v] = offset + relabel_h[f.map[v]]
        fib_map.extend(target)
        offset += sub_h.vertex_count
    middle = build_graph(offset, mid_edges)
    return (
        Hom(f.dom, middle, tuple(acof_map)),
        Hom(middle, f.cod, tuple(fib_map)),
    )


def cc_structure() -> ModelStructure:
    return ModelStructure(
        name="cc",
        is_we=is_component_bijective,
        is_cof=_always,
        is_fib=_cc_is_fibration,
        factor_cof_afib=_factor_f_then_id,
        factor_acof_fib=_cc_factor_acof_fib,
        homotopy_kind="cc",
    )


# ---------------------------------------------------------------------------
# Furbished structure


def _furb_is_cofibration(f: Hom) -> bool:
    """Isolated vertices must map bijectively onto isolated vertices."""
    iso_h = set(isolated_vertices(f.cod))
    images = [f.map[v] for v in isolated_vertices(f.dom)]
    return (
        all(w in iso_h for w in images)
        and len(set(images)) == len(images)
        and len(images) == len(iso_h)
    )


def _furb_factor_cof_afib(f: Hom) -> tuple[Hom, Hom]:
    # Middle object: the furbished part of the codomain plus the isolated
    # vertices of the domain, kept isolated.
    g, h = f.dom, f.cod
    furb_vs, furb_h = furbished_part(h)
    relabel = {v: i for i, v in enumerate(furb_vs)}
    iso_g = isolated_vertices(g)
    k = furb_h.vertex_count
    middle = build_graph(k + len(iso_g), furb_h.edges)
    first_map = [0] * g.vertex_count
    for v in range(g.vertex_count):
        if g.adjacency[v]:
            first_map[v] = relabel[f.map[v]]
    for i, v in enumerate(iso_g):
        first_map[v] = k + i
    second_map = list(furb_vs) + [f.map[v] for v in iso_g]
    return (
        Hom(g, middle, tuple(first_map)),
        Hom(middle, h, tuple(second_map)),
    )


def furbished_structure() -> ModelStructure:
    return ModelStructure(
        name="furbished",
        is_we=restricts_to_furbished_iso,
        is_cof=_furb_is_cofibration,
        is_fib=_always,
        factor_cof_afib=_furb_factor_cof_afib,
        factor_acof_fib=_factor_id_then_f,
        homotopy_kind="furbished",
    )


# ---------------------------------------------------------------------------
# Core structure


def _core_is_we(f: Hom) -> bool:
    return hom_exists(f.cod, f.dom)


def _core_is_cofibration(f: Hom) -> bool:
    """A canonical coproduct injection up to isomorphism."""
    return is_injective(f) and is_edge_reflecting(f) and not has_cross_edge(f)


def core_fibration_witness(f: Hom, budget=None) -> Optional[Hom]:
    """v: dom x cod -> dom with ``f . v = p2``; decides the fibrations.

    Such a witness fills any square against an acyclic cofibration, and a
    fibration must in particular fill its own comparison square, which
    yields the witness back; see the test suite for both directions.
    """
    prod, _, p2 = product(f.dom, f.cod)
    return find_hom(prod, f.dom, HomConstraints(post_compose=(f, p2)), budget=budget)


def _core_is_fibration(f: Hom) -> bool:
    return core_fibration_witness(f) is not None


def _core_factor_cof_afib(f: Hom) -> tuple[Hom, Hom]:
    _, i1, _ = coproduct(f.dom, f.cod)
    return i1, copairing(f, identity(f.cod))


def _core_factor_acof_fib(f: Hom) -> tuple[Hom, Hom]:
    prod, _, p2 = product(f.dom, f.cod)
    _, i1, _ = coproduct(f.dom, prod)
    return i1, copairing(f, p2)


def core_structure() -> ModelStructure:
    return ModelStructure(
        name="core",
        is_we=_core_is_we,
        is_cof=_core_is_cofibration,
        is_fib=_core_is_fibration,
        factor_cof_afib=_core_factor_cof_afib,
        factor_acof_fib=_core_factor_acof_fib,
        homotopy_kind="core",
    )


def core_fibration_failing_square(f: Hom) -> Optional[Square]:
    """When the witness is absent, the comparison square against the
    acyclic cofibration dom -> dom + dom x cod has no filler."""
    if _core_is_fibration(f):
        return None
    prod, _, p2 = product(f.dom, f.cod)
    _, i1, _ = coproduct(f.dom, prod)
    return Square(
        left=i1,
        right=f,
        top=identity(f.dom),
        bottom=copairing(f, p2),
    )


# ---------------------------------------------------------------------------
# Downward-closed-set structures


def mk_structure(k: DownwardClosedSet, name: str = "mk") -> ModelStructure:
    def is_we(f: Hom) -> bool:
        return is_isomorphism(f) or (k.member(f.dom) and k.member(f.cod))

    def is_fib(f: Hom) -> bool:
        return is_isomorphism(f) or not k.member(f.dom)

    def factor_acof_fib(f: Hom) -> tuple[Hom, Hom]:
        if k.member(f.dom):
            # downward closure puts the codomain in the class as well
            return f, identity(f.cod)
        return identity(f.dom), f

    return ModelStructure(
        name=name,
        is_we=is_we,
        is_cof=_always,
        is_fib=is_fib,
        factor_cof_afib=_factor_f_then_id,
        factor_acof_fib=factor_acof_fib,
        homotopy_kind="mk",
        parameters=k,
    )


def collapse_object(k: DownwardClosedSet, g: Graph) -> Graph:
    return T if k.member(g) else g


def collapse_functor(k: DownwardClosedSet, f: Hom) -> Hom:
    """The collapse of f: members of the class go to the terminal object,
    everything else is untouched."""
    if not k.member(f.cod):
        # downward closure: a member domain would force a member codomain
        return f
    dom2 = collapse_object(k, f.dom)
    return Hom(dom2, T, (0,) * dom2.vertex_count)


def homotopy_type(structure: ModelStructure, g: Graph):
    """Canonical invariant of the homotopy class of g in the structure."""
    if structure.homotopy_kind == "cc":
        return len(connected_components(g))
    if structure.homotopy_kind == "furbished":
        _, furb = furbished_part(g)
        return canonical_form(furb)[0]
    if structure.homotopy_kind == "core":
        from .cores import core

        return core(g).core
    if structure.homotopy_kind == "mk":
        assert structure.parameters is not None
        return canonical_form(collapse_object(structure.parameters, g))[0]
    raise UnsupportedStructureError(
        f"homotopy_type undefined for structure {structure.name!r}"
    )


# ---------------------------------------------------------------------------
# Axiom verification harness


@dataclass
class CheckResult:
    axiom: str
    passed: bool
    checked: int
    witness: Optional[str] = None


@dataclass
class AxiomReport:
    structure: str
    corpus_max_n: int
    checks: list[CheckResult] = field(default_factory=list)
    sampled_morphisms: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"structure {self.structure} (corpus n<={self.corpus_max_n})"]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"  {c.axiom}: {status} ({c.checked} checked)"
            if c.witness:
                line += f" witness: {c.witness}"
            out.append(line)
        if self.sampled_morphisms:
            out.append(f"  sampled n=4 morphisms: {self.sampled_morphisms}")
        out.append("RESULT: " + ("PASS" if self.passed else "FAIL"))
        return out


class _Corpus:
    """All morphisms between all small canonical graphs, with arrow-class
    representatives for isomorphism-invariant checks."""

    def __init__(self, max_n: int):
        self.max_n = max_n
        self.graphs: list[Graph] = []
        for n in range(max_n + 1):
            self.graphs.extend(enumerate_graphs(n, budget=max(5, max_n)))
        self.index = {g: i for i, g in enumerate(self.graphs)}
        self.homsets: dict[tuple[int, int], list[Hom]] = {}
        for i, g in enumerate(self.graphs):
            for j, h in enumerate(self.graphs):
                self.homsets[(i, j)] = enumerate_homs(g, h)
        self.morphisms = [f for hs in self.homsets.values() for f in hs]
        self._class_reps: Optional[list[Hom]] = None
        self._class_key_of: dict[tuple, tuple] = {}

    def arrow_class_key(self, f: Hom) -> tuple:
        """Least conjugate of f under automorphisms of both endpoints."""
        i = self.index[f.dom]
        j = self.index[f.cod]
        raw = (i, j, f.map)
        cached = self._class_key_of.get(raw)
        if cached is not None:
            return cached
        best = None
        for alpha in automorphisms(f.dom):
            inv = [0] * f.dom.vertex_count
            for old, new in enumerate(alpha):
                inv[new] = old
            for beta in automorphisms(f.cod):
                conj = tuple(beta[f.map[inv[v]]] for v in range(f.dom.vertex_count))
                if best is None or conj < best:
                    best = conj
        key = (i, j, best)
        self._class_key_of[raw] = key
        return key

    def class_representatives(self) -> list[Hom]:
        if self._class_reps is None:
            seen: set[tuple] = set()
            reps: list[Hom] = []
            for f in self.morphisms:
                key = self.arrow_class_key(f)
                if key not in seen:
                    seen.add(key)
                    reps.append(f)
            self._class_reps = reps
        return self._class_reps


@lru_cache(maxsize=4)
def _corpus(max_n: int) -> _Corpus:
    return _Corpus(max_n)


def _retract_diagrams(corpus: _Corpus) -> list[tuple[Hom, Hom]]:
    """(f, g) pairs with f a retract of g, enumerated constructively from
    section/retraction columns; g ranges over class representatives."""
    sr: dict[tuple[int, int], list[tuple[Hom, Hom]]] = {}
    for (i, j), homs in corpus.homsets.items():
        pairs: list[tuple[Hom, Hom]] = []
        for inc in homs:
            if not is_injective(inc):
                continue
            fixed = {inc.map[a]: a for a in range(inc.dom.vertex_count)}
            for retr in enumerate_homs(
                inc.cod, inc.dom, HomConstraints(fixed=fixed)
            ):
                pairs.append((inc, retr))
        sr[(i, j)] = pairs
    diagrams: list[tuple[Hom, Hom]] = []
    for g in corpus.class_representatives():
        bi = corpus.index[g.dom]
        bpi = corpus.index[g.cod]
        for ai in range(len(corpus.graphs)):
            for inc, retr in sr[(ai, bi)]:
                gi = compose(g, inc)
                for api in range(len(corpus.graphs)):
                    for inc_p, retr_p in sr[(api, bpi)]:
                        f = compose(retr_p, gi)
                        if compose(inc_p, f) != gi:
                            continue
                        if compose(f, retr) != compose(retr_p, g):
                            continue
                        diagrams.append((f, g))
    return diagrams


@lru_cache(maxsize=4)
def _retract_diagrams_cached(max_n: int) -> list[tuple[Hom, Hom]]:
    return _retract_diagrams(_corpus(max_n))


def verify_model_axioms(
    structure: ModelStructure,
    corpus_max_n: int = 3,
    sample_count: int = 200,
    sample_n: int = 4,
    seed: int = DEFAULT_VERIFY_SEED,
    budget: Optional[int] = None,
) -> AxiomReport:
    """Exhaustively check the model axioms over the small-graph corpus.

    Two-of-three and factorizations run over every corpus morphism; lifting
    squares and retract closure run over arrow-isomorphism class
    representatives, which decide those checks for the whole corpus.  When
    ``sample_count > 0``, pseudo-random morphisms between ``sample_n``-vertex
    graphs additionally exercise the factorizations at a fixed seed.
    """
    corpus = _corpus(corpus_max_n)
    report = AxiomReport(structure.name, corpus_max_n)

    flags: dict[tuple, ClassificationFlags] = {}

    def flags_of(f: Hom) -> ClassificationFlags:
        key = corpus.arrow_class_key(f)
        if key not in flags:
            flags[key] = classify_morphism(structure, f)
        return flags[key]

    # Classify everything once.
    for f in corpus.morphisms:
        flags_of(f)

    # (a) two-of-three over all composable pairs
    we_sets: dict[tuple[int, int], set[tuple[int, ...]]] = {}
    for (i, j), homs in corpus.homsets.items():
        we_sets[(i, j)] = {f.map for f in homs if flags_of(f).we}
    pairs = 0
    witness = None
    n_graphs = len(corpus.graphs)
    for j in range(n_graphs):
        lefts = [
            (i, f) for i in range(n_graphs) for f in corpus.homsets[(i, j)]
        ]
        rights = [
            (k, g) for k in range(n_graphs) for g in corpus.homsets[(j, k)]
        ]
        for k, g in rights:
            gmap = g.map
            wg = gmap in we_sets[(j, k)]
            for i, f in lefts:
                comp = tuple(gmap[v] for v in f.map)
                wf = f.map in we_sets[(i, j)]
                wgf = comp in we_sets[(i, k)]
                if (wf and wg and not wgf) or (wf and wgf and not wg) or (
                    wg and wgf and not wf
                ):
                    if witness is None:
                        witness = (
                            f"f={f.dom.vertex_count}->{f.cod.vertex_count}{f.map} "
                            f"g={g.dom.vertex_count}->{g.cod.vertex_count}{g.map}"
                        )
                pairs += 1
    report.checks.append(
        CheckResult("two-of-three", witness is None, pairs, witness)
    )

    # (b) lifting squares for both weak factorization systems
    reps = corpus.class_representatives()
    for label, left_class, right_class in (
        ("lifting (cof, afib)", lambda fl: fl.cof, lambda fl: fl.afib),
        ("lifting (acof, fib)", lambda fl: fl.acof, lambda fl: fl.fib),
    ):
        lefts = [f for f in reps if left_class(flags_of(f))]
        rights = [g for g in reps if right_class(flags_of(g))]
        checked = 0
        witness = None
        for f in lefts:
            for g in rights:
                checked += 1
                square = find_failing_square(f, g, budget=budget)
                if square is not None and witness is None:
                    witness = (
                        f"left {f.map} right {g.map} "
                        f"top {square.top.map} bottom {square.bottom.map}"
                    )
        report.checks.append(CheckResult(label, witness is None, checked, witness))

    # (c) factorizations recompose and classify
    for mode in ("cof-afib", "acof-fib"):
        witness = None
        checked = 0
        for f in reps:
            checked += 1
            try:
                factor(structure, f, mode)
            except FactorizationSoundnessError as exc:
                if witness is None:
                    witness = f"{f.map}: {exc}"
        report.checks.append(
            CheckResult(f"factorization {mode}", witness is None, checked, witness)
        )

    # (d) retract closure of we, cof and fib
    witness = None
    checked = 0
    for f, g in _retract_diagrams_cached(corpus_max_n):
        checked += 1
        fg, ff = flags_of(g), flags_of(f)
        bad = (
            (fg.we and not ff.we)
            or (fg.cof and not ff.cof)
            or (fg.fib and not ff.fib)
        )
        if bad and witness is None:
            witness = f"f={ff} g={fg} f.map={f.map} g.map={g.map}"
    report.checks.append(
        CheckResult("retract-closure", witness is None, checked, witness)
    )

    # (e) structure-specific cross-checks
    for check in _structure_hooks(structure, corpus, flags_of):
        report.checks.append(check)

    # sampled factorizations on larger graphs
    if sample_count > 0:
        rng = random.Random(seed)
        big = enumerate_graphs(sample_n, budget=max(5, sample_n))
        samples: list[Hom] = []
        attempts = 0
        while len(samples) < sample_count and attempts < sample_count * 10:
            attempts += 1
            dom = rng.choice(big)
            cod = rng.choice(big)
            f = find_hom_random(dom, cod, rng, budget=budget)
            if f is not None:
                samples.append(f)
        witness = None
        for f in samples:
            for mode in ("cof-afib", "acof-fib"):
                try:
                    factor(structure, f, mode)
                except FactorizationSoundnessError as exc:
                    if witness is None:
                        witness = f"{f.map}: {exc}"
        report.checks.append(
            CheckResult(
                f"sampled factorizations (n={sample_n}, seed={seed})",
                witness is None,
                len(samples) * 2,
                witness,
            )
        )
        report.sampled_morphisms = len(samples)
    return report


def _structure_hooks(
    structure: ModelStructure,
    corpus: _Corpus,
    flags_of: Callable[[Hom], ClassificationFlags],
) -> list[CheckResult]:
    checks: list[CheckResult] = []
    reps = corpus.class_representatives()

    if structure.name == "core":
        witness = None
        for f in reps:
            fl = flags_of(f)
            if fl.afib != is_retraction(f):
                witness = f"afib/retraction disagree at {f.map}"
                break
            if fl.acof != (fl.cof and is_section(f)):
                witness = f"acof/section disagree at {f.map}"
                break
        checks.append(
            CheckResult("afib=retraction, acof=cof&section", witness is None, len(reps), witness)
        )
        witness = None
        for g in corpus.graphs:
            to_terminal = Hom(g, T, (0,) * g.vertex_count)
            from_empty = Hom(EMPTY, g, ())
            if not structure.is_fib(to_terminal) or not structure.is_cof(from_empty):
                witness = f"object {g.vertex_count} vertices not fibrant+cofibrant"
                break
        checks.append(
            CheckResult("all objects fibrant and cofibrant", witness is None, len(corpus.graphs), witness)
        )

    if structure.homotopy_kind is not None:
        witness = None
        checked = 0
        for f in reps:
            if flags_of(f).we:
                checked += 1
                if homotopy_type(structure, f.dom) != homotopy_type(structure, f.cod):
                    witness = f"homotopy type not we-invariant at {f.map}"
                    break
        checks.append(
            CheckResult("homotopy-type we-invariance", witness is None, checked, witness)
        )
    return checks


# ---------------------------------------------------------------------------
# Structure registry used by the command line


def structure_by_name(
    name: str, generators: Optional[Sequence[Graph]] = None
) -> ModelStructure:
    t1, t2, t3 = trivial_structures()
    fixed = {
        "trivial1": t1,
        "trivial2": t2,
        "trivial3": t3,
        "cc": cc_structure(),
        "furbished": furbished_structure(),
        "core": core_structure(),
    }
    if name in fixed:
        if generators:
            raise InvalidInputError(f"structure {name!r} takes no generators")
        return fixed[name]
    if name == "mk":
        if not generators:
            raise InvalidInputError("structure 'mk' needs at least one generator graph")
        return mk_structure(DownwardClosedSet(generators))
    raise InvalidInputError(f"unknown structure {name!r}")
