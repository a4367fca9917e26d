"""Instance generators and verification campaigns.

A campaign runs one check over a scoped set of instances and collects every
failure with the instance serialised in the inline ``gaingraph v1`` form, so
any failure can be replayed with :func:`replay`.
"""

from __future__ import annotations

import random
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from . import fileformat
from .cycles import (
    classify_cycle,
    contract,
    cycle_inertia,
    disjoint_cycles,
    simple_cycles,
    theta,
)
from .gains import RationalAngle
from .graph import GainGraph, UndirectedGraph, connected_components
from .optimality import bounds, characterize, ratio_check, unicyclic_rank_bounds
from .spectral import adjacency_matrix, inertia, rank, rank_underlying
from .transform import pendant_vertices

MAX_ENUMERATION_ORDER = 8
DEFAULT_DENOMINATORS = (1, 2, 4, 8, 12)


# -- generators ---------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    edge_probability: Fraction | float = Fraction(1, 2)
    gain_denominator: int = 4
    seed: int = 0
    trials: int = 1


def _random_gain(rng: random.Random, q: int) -> RationalAngle:
    return RationalAngle(rng.randrange(q), q)


def random_gain_graph(cfg: GeneratorConfig) -> GainGraph:
    """Erdos-Renyi graph with gains drawn uniformly from the angles ``k/q``."""
    rng = random.Random(cfg.seed)
    p = float(cfg.edge_probability)
    edges = [(u, v, _random_gain(rng, cfg.gain_denominator))
             for u, v in combinations(range(cfg.n), 2) if rng.random() < p]
    return GainGraph.from_edges(range(cfg.n), edges)


def random_gains(rng: random.Random, g: UndirectedGraph, q: int) -> GainGraph:
    return GainGraph(g, {e: _random_gain(rng, q) for e in sorted(g.edges)})


def enumerate_graphs(n: int) -> Iterator[UndirectedGraph]:
    """All ``2**(n(n-1)/2)`` labelled graphs on ``0..n-1``; bit ``k`` of the mask is the ``k``-th pair."""
    if n > MAX_ENUMERATION_ORDER:
        raise ValueError(f"exhaustive enumeration supports n <= {MAX_ENUMERATION_ORDER}, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield UndirectedGraph(range(n), [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def random_tree(rng: random.Random, n: int) -> UndirectedGraph:
    labels = list(range(n))
    rng.shuffle(labels)
    return UndirectedGraph(range(n), [(labels[i], labels[rng.randrange(i)]) for i in range(1, n)])


def random_forest(rng: random.Random, n: int) -> UndirectedGraph:
    tree = random_tree(rng, n)
    keep = [e for e in sorted(tree.edges) if rng.random() < 0.8]
    return UndirectedGraph(range(n), keep)


def is_acyclic(g: UndirectedGraph) -> bool:
    return theta(g) == 0


def random_cycle_forest(rng: random.Random, n: int, q: int) -> GainGraph:
    """Pairwise disjoint cycles of orders 4, 6, 8, 10 linked by forest edges.

    Cycle gains are biased towards the Type A / Type B values so that lower-
    and upper-optimal graphs turn up often.
    """
    labels = list(range(n))
    rng.shuffle(labels)
    edges: dict[tuple[int, int], RationalAngle] = {}
    pos = 0
    blocks: list[list[int]] = []
    while pos < n:
        p = rng.choice((4, 6, 8, 10, 0, 0))
        if p and pos + p <= n:
            cyc = labels[pos:pos + p]
            for i in range(p):
                edges[(cyc[i], cyc[(i + 1) % p])] = RationalAngle(0)
            target = rng.choice((Fraction((p // 2) % 2, 2), Fraction(((p // 2) + 1) % 2, 2),
                                 Fraction(rng.randrange(q), q)))
            edges[(cyc[0], cyc[1])] = RationalAngle(target)
            blocks.append(cyc)
            pos += p
        else:
            blocks.append([labels[pos]])
            pos += 1
    # connect blocks by a random forest; a cycle block joins through one of its vertices
    for i in range(1, len(blocks)):
        if rng.random() < 0.85:
            j = rng.randrange(i)
            a, b = rng.choice(blocks[i]), rng.choice(blocks[j])
            edges[(a, b)] = _random_gain(rng, q)
    return GainGraph.from_edges(range(n), [(u, v, g) for (u, v), g in edges.items()])


# -- scopes and instances -----------------------------------------------------

@dataclass(frozen=True)
class Scope:
    """Which instances a campaign visits.

    ``n`` bounds the order; ``q`` lists gain denominators; ``trials`` is the
    number of random instances, or gain draws per graph when ``exhaustive``.
    ``family`` selects the random generator: ``"general"`` (Erdos-Renyi) or
    ``"cyclic"`` (:func:`random_cycle_forest`).
    """

    n: int = 5
    q: tuple[int, ...] = (4,)
    trials: int = 8
    seed: int = 0
    exhaustive: bool = False
    family: str = "general"
    workers: int = 1


@dataclass(frozen=True)
class Instance:
    tag: str
    phi: GainGraph
    meta: dict = field(default_factory=dict)

    def serialize(self) -> str:
        text = fileformat.serialize(self.phi, inline=True)
        if self.meta:
            text += "; # meta " + " ".join(f"{k}={v}" for k, v in sorted(self.meta.items()))
        return text


def _rng(*parts) -> random.Random:
    return random.Random(":".join(str(p) for p in parts))


def general_instances(scope: Scope) -> Iterator[Instance]:
    if scope.exhaustive:
        for order in range(0, scope.n + 1):
            for mask, g in enumerate(enumerate_graphs(order)):
                for draw in range(scope.trials):
                    rng = _rng(scope.seed, order, mask, draw)
                    yield Instance(f"{order}/{mask}/{draw}", random_gains(rng, g, rng.choice(scope.q)))
        return
    for i in range(scope.trials):
        rng = _rng(scope.seed, i)
        order = rng.randint(1, max(1, scope.n))
        q = rng.choice(scope.q)
        if scope.family == "cyclic":
            phi = random_cycle_forest(rng, order, q)
        else:
            p = rng.choice((0.15, 0.3, 0.5, 0.7))
            g = UndirectedGraph(range(order), [e for e in combinations(range(order), 2) if rng.random() < p])
            phi = random_gains(rng, g, q)
        yield Instance(f"{scope.seed}:{i}", phi)


def cycle_instances(scope: Scope) -> Iterator[Instance]:
    for p in range(3, max(3, scope.n) + 1):
        yield Instance(f"C{p}/ones", GainGraph.cycle([RationalAngle(0)] * p))
        if scope.exhaustive:
            for q in scope.q:
                for k in range(q):
                    yield Instance(f"C{p}/{k}/{q}",
                                   GainGraph.cycle([RationalAngle(k, q)] + [RationalAngle(0)] * (p - 1)))
        for i in range(scope.trials):
            rng = _rng(scope.seed, p, i)
            q = rng.choice(scope.q)
            yield Instance(f"C{p}/{scope.seed}:{i}", GainGraph.cycle([_random_gain(rng, q) for _ in range(p)]))


def pendant_instances(scope: Scope) -> Iterator[Instance]:
    def attach(tag, g, v, rng):
        m = len(g)
        host = UndirectedGraph(range(m + 1), [*g.edges, (v, m)])
        return Instance(tag, random_gains(rng, host, rng.choice(scope.q)))

    if scope.exhaustive:
        for order in range(1, max(1, scope.n - 1) + 1):
            for mask, g in enumerate(enumerate_graphs(order)):
                for v in range(order):
                    for draw in range(scope.trials):
                        yield attach(f"{order}/{mask}/{v}/{draw}", g, v, _rng(scope.seed, order, mask, v, draw))
        return
    for inst in general_instances(scope):
        rng = _rng(scope.seed, "pendant", inst.tag)
        g = inst.phi.graph
        yield attach(inst.tag, g, rng.randrange(len(g)), rng)


def tree_instances(scope: Scope) -> Iterator[Instance]:
    if scope.exhaustive:
        for order in range(1, scope.n + 1):
            for mask, g in enumerate(enumerate_graphs(order)):
                if len(g.edges) == order - 1 and len(connected_components(g)) == 1:
                    for draw in range(scope.trials):
                        rng = _rng(scope.seed, order, mask, draw)
                        yield Instance(f"{order}/{mask}/{draw}", random_gains(rng, g, rng.choice(scope.q)))
        return
    for i in range(scope.trials):
        rng = _rng(scope.seed, i)
        t = random_tree(rng, rng.randint(1, max(1, scope.n)))
        yield Instance(f"{scope.seed}:{i}", random_gains(rng, t, rng.choice(scope.q)))


def forest_instances(scope: Scope) -> Iterator[Instance]:
    if scope.exhaustive:
        for order in range(2, scope.n + 1):
            for mask, g in enumerate(enumerate_graphs(order)):
                if g.edges and is_acyclic(g):
                    yield Instance(f"{order}/{mask}", GainGraph(g))
        return
    i = 0
    produced = 0
    while produced < scope.trials:
        rng = _rng(scope.seed, i)
        i += 1
        f = random_forest(rng, rng.randint(2, max(2, scope.n)))
        if f.edges:
            produced += 1
            yield Instance(f"{scope.seed}:{i - 1}", GainGraph(f))


def unicyclic_instances(scope: Scope) -> Iterator[Instance]:
    """A gain cycle ``C_p`` (p in 3..8) glued at one vertex to a random gain graph ``H``."""
    def build(tag, rng, h_graph, v, p):
        m = len(h_graph)
        cyc = [v] + list(range(m, m + p - 1))
        g = UndirectedGraph(range(m + p - 1), [*h_graph.edges, *((cyc[i], cyc[(i + 1) % p]) for i in range(p))])
        phi = random_gains(rng, g, rng.choice(scope.q))
        meta = {"cycle": ",".join(str(c + 1) for c in cyc), "shared": v + 1}
        return Instance(tag, phi, meta)

    if scope.exhaustive:
        for order in range(1, min(scope.n, 4) + 1):
            for mask, h in enumerate(enumerate_graphs(order)):
                for v in range(order):
                    for p in range(3, 9):
                        for draw in range(scope.trials):
                            rng = _rng(scope.seed, order, mask, v, p, draw)
                            yield build(f"{order}/{mask}/{v}/{p}/{draw}", rng, h, v, p)
        return
    for i in range(scope.trials):
        rng = _rng(scope.seed, i)
        m = rng.randint(1, max(1, scope.n))
        pr = rng.choice((0.2, 0.4, 0.6))
        h = UndirectedGraph(range(m), [e for e in combinations(range(m), 2) if rng.random() < pr])
        yield build(f"{scope.seed}:{i}", rng, h, rng.randrange(m), rng.randint(3, 8))


# -- checks -------------------------------------------------------------------
# Each check returns a list of (expected, actual) mismatches; empty means pass.
# Instances outside a check's hypothesis (e.g. a non-cycle for the cycle table)
# pass vacuously, so any campaign can be pointed at any instance.

Mismatch = tuple[str, str]


def check_bounds(inst: Instance) -> list[Mismatch]:
    b = bounds(inst.phi)
    if b.in_bounds:
        return []
    return [(f"{b.lower} <= r(Phi) <= {b.upper}", f"r(Phi) = {b.r_phi}")]


def _check_characterization(inst: Instance, direction: str) -> list[Mismatch]:
    direct = bounds(inst.phi).optimal(direction)
    rep = characterize(inst.phi, direction)
    if rep.verdict == direct:
        return []
    return [(f"{direction}-optimal={direct}",
             f"structural={rep.verdict} (disjoint={rep.condition_disjoint}, types={rep.condition_types}, "
             f"crucial={rep.condition_crucial})")]


def check_char_lower(inst: Instance) -> list[Mismatch]:
    return _check_characterization(inst, "lower")


def check_char_upper(inst: Instance) -> list[Mismatch]:
    return _check_characterization(inst, "upper")


def check_cycle_table(inst: Instance) -> list[Mismatch]:
    phi = inst.phi
    g = phi.graph
    if len(g) < 3 or len(g.edges) != len(g) or any(g.degree(v) != 2 for v in g.order) \
            or len(connected_components(g)) != 1:
        return []
    cyc = _walk_cycle(g)
    p = len(cyc)
    t = classify_cycle(p, phi.cycle_gain(cyc))
    want = cycle_inertia(p, t)
    got = tuple(inertia(phi))
    return [] if got == want else [(f"Type {t}: {want}", str(got))]


def _walk_cycle(g: UndirectedGraph) -> tuple[int, ...]:
    start = g.order[0]
    walk, prev = [start], None
    while True:
        nxt = min(y for y in g.neighbors(walk[-1]) if y != prev)
        if nxt == start:
            return tuple(walk)
        prev = walk[-1]
        walk.append(nxt)


def check_pendant(inst: Instance) -> list[Mismatch]:
    phi = inst.phi
    out = []
    full = inertia(phi)
    for v in pendant_vertices(phi):
        (u,) = phi.graph.neighbors(v)
        sub = inertia(phi.delete_vertices([u, v]))
        drop = tuple(a - b for a, b in zip(full, sub))
        if drop != (1, 1, 0):
            out.append((f"drop (1, 1, 0) at pendant {v + 1}", str(drop)))
    return out


def check_tree(inst: Instance) -> list[Mismatch]:
    phi = inst.phi
    a, b = inertia(phi), inertia(phi.underlying())
    out = [] if a == b else [(str(b), str(a))]
    if len(phi):
        ea = np.linalg.eigvalsh(adjacency_matrix(phi).values)
        eb = np.linalg.eigvalsh(adjacency_matrix(phi.underlying()).values)
        if not np.allclose(ea, eb, atol=1e-9 * max(1, len(phi))):
            out.append(("equal spectra", f"max deviation {np.abs(ea - eb).max():.3g}"))
    return out


def _r(g: UndirectedGraph) -> int:
    return rank_underlying(g)


def cut_vertices(g: UndirectedGraph) -> list[int]:
    base = len(connected_components(g))
    return [v for v in g.order
            if len(connected_components(g.delete_vertices([v]))) > base - (1 if g.degree(v) == 0 else 0)]


def check_cutpoint(inst: Instance) -> list[Mismatch]:
    g = inst.phi.graph
    out = []
    r_g = _r(g)
    for v in cut_vertices(g):
        rest = g.delete_vertices([v])
        r_rest = _r(rest)
        for comp in connected_components(rest):
            g1 = g.induced(comp)
            r1, r1v = _r(g1), _r(g.induced(comp | {v}))
            if r1 == r1v - 2 and r_g != r_rest + 2:
                out.append((f"r(G) = r(G-v)+2 = {r_rest + 2} at cut vertex {v + 1}", f"r(G) = {r_g}"))
            if r1 == r1v:
                other = _r(g.delete_vertices(comp))
                if r_g != r1 + other:
                    out.append((f"r(G) = r(G1)+r(G-G1) = {r1 + other} at cut vertex {v + 1}", f"r(G) = {r_g}"))
    return out


def check_trim(inst: Instance) -> list[Mismatch]:
    t = inst.phi.graph
    if not t.edges or not is_acyclic(t):
        return []
    out = []
    r_t = _r(t)
    trimmed = t.delete_vertices(pendant_vertices(t))
    if not _r(trimmed) < r_t:
        out.append((f"r(trimmed) < {r_t}", f"r(trimmed) = {_r(trimmed)}"))
    pend = set(pendant_vertices(t))
    order = t.order
    if len(order) <= 8:
        subsets: Iterable[frozenset[int]] = (
            frozenset(w for k, w in enumerate(order) if mask >> k & 1) for mask in range(1 << len(order)))
    else:
        rng = _rng("trim", fileformat.serialize(inst.phi, inline=True))
        subsets = [frozenset(w for w in order if rng.random() < 0.5) for _ in range(64)]
    for w in subsets:
        if _r(t.delete_vertices(w)) == r_t and pend <= w:
            out.append(("a pendant vertex outside W", f"W = {sorted(x + 1 for x in w)} covers all pendants"))
            break
    return out


def check_theta(inst: Instance) -> list[Mismatch]:
    g = inst.phi.graph
    out = []
    th = theta(g)
    cycles = list(simple_cycles(g))
    for v in g.order:
        through = sum(1 for c in cycles if v in c)
        after = theta(g.delete_vertices([v]))
        if through == 0 and after != th:
            out.append((f"(a) theta(G-{v + 1}) = {th}", str(after)))
        if through >= 1 and after > th - 1:
            out.append((f"(b) theta(G-{v + 1}) <= {th - 1}", str(after)))
        if through >= 2 and after > th - 2:
            out.append((f"(c) theta(G-{v + 1}) <= {th - 2}", str(after)))
    vs = [set(c) for c in cycles]
    pairwise = all(not (a & b) for a, b in combinations(vs, 2))
    if pairwise and len(cycles) != th:
        out.append((f"(d) {th} cycles", f"{len(cycles)} cycles"))
    dc = disjoint_cycles(g)
    if dc.disjoint != pairwise:
        out.append((f"(d) disjoint={pairwise}", f"disjoint_cycles -> {dc.disjoint}"))
    elif dc.disjoint and sorted(c.vertices for c in dc.cycles) != sorted(cycles):
        out.append(("(d) same cycles as full enumeration", str([c.vertices for c in dc.cycles])))
    return out


def check_unicyclic(inst: Instance) -> list[Mismatch]:
    phi = inst.phi
    cyc = tuple(int(x) - 1 for x in str(inst.meta["cycle"]).split(","))
    v = int(inst.meta["shared"]) - 1
    p = len(cyc)
    t = classify_cycle(p, phi.cycle_gain(cyc))
    h = phi.delete_vertices(set(cyc) - {v})
    f = h.delete_vertices([v])
    r_phi, r_h, r_f = (inertia(x).rank for x in (phi, h, f))
    lo, hi = unicyclic_rank_bounds(p, t, r_h, r_f)
    if lo <= r_phi <= hi:
        return []
    return [(f"Type {t}, p={p}: r(Phi) in [{lo}, {hi}]", f"r(Phi) = {r_phi}")]


def check_contraction(inst: Instance) -> list[Mismatch]:
    phi = inst.phi
    b = bounds(phi)
    out = []
    for direction, loss in (("lower", 0), ("upper", 2)):
        if not b.optimal(direction):
            continue
        c = contract(phi)
        r_t, r_gamma = _r(c.t_graph), _r(c.gamma_graph)
        want = r_t + sum(cyc.order - loss for cyc in c.origin.values())
        if b.r_g != want:
            out.append((f"{direction}: r(G) = r(T_G) + sum = {want}", f"r(G) = {b.r_g}"))
        if r_t != r_gamma:
            out.append((f"{direction}: r(T_G) = r(Gamma_G) = {r_gamma}", f"r(T_G) = {r_t}"))
    return out


def check_ratio(inst: Instance) -> list[Mismatch]:
    if not inst.phi.edges:
        return []
    rep = ratio_check(inst.phi)
    out = []
    if not rep.in_bounds:
        out.append((f"{rep.lower} <= ratio <= {rep.upper}", f"ratio = {rep.ratio}"))
    if not rep.classification_consistent:
        out.append((f"class={rep.extremal_class}",
                    f"upper_equal={rep.upper_equal}, lower_equal={rep.lower_equal}, ratio={rep.ratio}"))
    return out


def check_exact_vs_numeric(inst: Instance) -> list[Mismatch]:
    exact = rank(inst.phi, "exact")
    numeric = rank(inst.phi, "numeric")
    out = []
    if not numeric.stable:
        out.append(("stable numeric rank", f"unstable at tau={numeric.tolerance_used:g}"))
    if exact.inertia != numeric.inertia:
        out.append((f"exact {tuple(exact.inertia)}", f"numeric {tuple(numeric.inertia)}"))
    return out


@dataclass(frozen=True)
class Campaign:
    name: str
    description: str
    instances: Callable[[Scope], Iterator[Instance]]
    check: Callable[[Instance], list[Mismatch]]


CAMPAIGNS: dict[str, Campaign] = {c.name: c for c in (
    Campaign("bounds_3_2", "r(G) - 2 theta <= r(Phi) <= r(G) + 2 theta", general_instances, check_bounds),
    Campaign("char_lower_4_8", "structural lower verdict == direct lower optimality", general_instances,
             check_char_lower),
    Campaign("char_upper_4_9", "structural upper verdict == direct upper optimality", general_instances,
             check_char_upper),
    Campaign("cycle_table_2_5", "gain cycle inertia matches its Type row", cycle_instances, check_cycle_table),
    Campaign("pendant_2_2", "deleting a pendant vertex and its neighbour drops inertia by (1, 1, 0)",
             pendant_instances, check_pendant),
    Campaign("tree_2_6", "gain trees share the spectrum of the underlying tree", tree_instances, check_tree),
    Campaign("cutpoint_2_8", "cut-vertex rank identities", general_instances, check_cutpoint),
    Campaign("trim_2_11", "trimming pendant vertices of a forest lowers its rank", forest_instances, check_trim),
    Campaign("theta_3_1", "theta under vertex deletion; theta counts disjoint cycles", general_instances,
             check_theta),
    Campaign("unicyclic_4_3", "rank of a cycle glued at one vertex", unicyclic_instances, check_unicyclic),
    Campaign("contraction_4_6_4_7", "contraction rank identities on optimal instances", general_instances,
             check_contraction),
    Campaign("ratio_4_10", "ratio bounds and extremal classes", general_instances, check_ratio),
    Campaign("exact_vs_numeric", "exact and numeric inertia agree", general_instances, check_exact_vs_numeric),
)}


# -- running ------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Failure:
    instance: str
    tag: str
    expected: str
    actual: str


@dataclass
class CampaignReport:
    campaign: str
    instances_checked: int
    failures: list[Failure]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def failure_lines(self) -> list[str]:
        return ["\t".join((self.campaign, f.tag, f.instance, f.expected, f.actual)) for f in self.failures]

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.campaign}: {self.instances_checked} instances, "
                f"{len(self.failures)} failures, {self.elapsed:.2f}s")


def _clean(text: str) -> str:
    return text.replace("\t", " ").replace("\n", " ")


def run_check(campaign: Campaign, inst: Instance) -> list[Failure]:
    """One instance; exceptions become failures so a campaign never aborts."""
    try:
        mismatches = campaign.check(inst)
    except Exception as exc:  # noqa: BLE001 -- every error is a recorded failure
        mismatches = [("no error", f"{type(exc).__name__}: {exc}")]
    if not mismatches:
        return []
    text = inst.serialize()
    return [Failure(text, inst.tag, _clean(e), _clean(a)) for e, a in mismatches]


def _run_chunk(name: str, chunk: Sequence[Instance]) -> list[Failure]:
    campaign = CAMPAIGNS[name]
    return [f for inst in chunk for f in run_check(campaign, inst)]


def get_campaign(name: str) -> Campaign:
    try:
        return CAMPAIGNS[name]
    except KeyError:
        raise KeyError(f"unknown campaign {name!r}; choose from {', '.join(CAMPAIGNS)}") from None


def run_campaign(name: str, scope: Scope | None = None,
                 instances: Iterable[Instance] | None = None) -> CampaignReport:
    """Run campaign ``name`` over ``scope`` (or an explicit instance list)."""
    campaign = get_campaign(name)
    scope = scope or Scope()
    start = time.perf_counter()
    items = list(instances if instances is not None else campaign.instances(scope))
    if scope.workers > 1 and len(items) > 1:
        size = max(1, len(items) // (scope.workers * 4))
        chunks = [items[i:i + size] for i in range(0, len(items), size)]
        with ProcessPoolExecutor(scope.workers) as pool:
            failures = [f for part in pool.map(_run_chunk, [name] * len(chunks), chunks) for f in part]
    else:
        failures = [f for inst in items for f in run_check(campaign, inst)]
    failures.sort()
    return CampaignReport(name, len(items), failures, time.perf_counter() - start)


_META = re.compile(r"#\s*meta\s+([^;\n]*)")


def parse_instance(text: str, tag: str = "replay") -> Instance:
    meta = {}
    m = _META.search(text)
    if m:
        for item in m.group(1).split():
            k, _, v = item.partition("=")
            meta[k] = v
    return Instance(tag, fileformat.parse(text), meta)


def replay(name: str, instance_text: str) -> list[Failure]:
    """Re-run one check on a serialised instance (e.g. from a failure line)."""
    return run_check(get_campaign(name), parse_instance(instance_text))
