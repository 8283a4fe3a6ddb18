"""Plabic networks, boundary measurements, and double-dimer immanants.

A network is a plabic graph with exact rational edge weights.  Boundary
measurements sum dimer-cover weights per boundary subset; superposing two
covers yields a 2-like subgraph whose boundary connectivity is a partial
noncrossing matching, and the immanants are the connectivity-filtered
generating functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from random import Random

from .invariants import (
    alt_sign_factor,
    evaluate_web,
    exact_det,
    sign_lemma_factor,
)
from .matchings import DomainError, PartialMatching
from .plabic import dimer_covers, graph_type, validate_plabic
from .tableaux import (
    ContentEncoding,
    as_semistandard,
    partial_matching_of_tableau,
    standardize,
)
from .webs import WebDiagram, tableau_to_web


@dataclass(frozen=True)
class PlabicNetwork:
    """Plabic graph with a nonzero exact rational weight on every edge."""

    graph: WebDiagram
    weights: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        norm = tuple(sorted((int(e), Fraction(w)) for e, w in self.weights))
        object.__setattr__(self, "weights", norm)
        have = {e for e, _ in norm}
        need = {e for e, *_ in self.graph.edges}
        if have != need:
            raise DomainError("weights must cover exactly the edge set")
        if any(w == 0 for _, w in norm):
            raise DomainError("weights must be nonzero")

    @property
    def weight_map(self) -> dict[int, Fraction]:
        return dict(self.weights)

    def to_json(self) -> dict:
        obj = self.graph.to_json()
        obj["weights"] = {str(e): f"{w.numerator}/{w.denominator}"
                          for e, w in self.weights}
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "PlabicNetwork":
        graph = WebDiagram.from_json(obj)
        weights = tuple((int(e), Fraction(s)) for e, s in obj["weights"].items())
        return cls(graph=graph, weights=weights)


def unit_network(g: WebDiagram) -> PlabicNetwork:
    return PlabicNetwork(graph=g, weights=tuple(
        (e, Fraction(1)) for e, *_ in g.edges))


def random_network(g: WebDiagram, rng: Random | int) -> PlabicNetwork:
    """Small random positive rational weights from a seeded generator."""
    if not isinstance(rng, Random):
        rng = Random(rng)
    weights = tuple((e, Fraction(rng.randint(1, 9), rng.randint(1, 9)))
                    for e, *_ in g.edges)
    return PlabicNetwork(graph=g, weights=weights)


def _cover_classes(net: PlabicNetwork):
    """Covers grouped by boundary set, with their weights."""
    wt = net.weight_map
    classes: dict[frozenset[int], list[tuple[frozenset[int], Fraction]]] = {}
    for cover, boundary in dimer_covers(net.graph):
        w = Fraction(1)
        for e in cover:
            w *= wt[e]
        classes.setdefault(boundary, []).append((cover, w))
    return classes


def boundary_measurements(net: PlabicNetwork) -> dict[frozenset[int], Fraction]:
    """Dimer partition function per boundary subset."""
    return {boundary: sum(w for _, w in recs)
            for boundary, recs in _cover_classes(net).items()}


def realize_matrix(measurements: dict, n: int | None = None):
    """k x n exact matrix whose minors reproduce the measurements.

    Columns are built from minor ratios against the lexicographically
    minimal nonvanishing basis; every minor is re-checked against the
    input, so inconsistent measurements are rejected.
    """
    keys = [frozenset(key) for key in measurements]
    if not keys:
        raise DomainError("empty measurement map")
    k = len(keys[0])
    if any(len(key) != k for key in keys):
        raise DomainError("measurement subsets must share one size")
    if n is None:
        n = max(x for key in keys for x in key)
    meas = {frozenset(key): Fraction(val) for key, val in measurements.items()}

    def delta(subset) -> Fraction:
        return meas.get(frozenset(subset), Fraction(0))

    nonzero = sorted((tuple(sorted(key)) for key in keys if meas[key] != 0))
    if not nonzero:
        raise DomainError("all measurements are zero")
    base = nonzero[0]
    d_base = delta(base)
    row_of = {b: r for r, b in enumerate(base)}

    mat = [[Fraction(0)] * n for _ in range(k)]
    for b in base:
        mat[row_of[b]][b - 1] = Fraction(1)
    for j in range(1, n + 1):
        if j in row_of:
            continue
        for r in range(k):
            subset = tuple(sorted(set(base) - {base[r]} | {j}))
            # unit-column pattern determinant fixes the sign of the entry
            pattern = [[Fraction(0)] * k for _ in range(k)]
            for pos, col in enumerate(subset):
                if col in row_of:
                    pattern[row_of[col]][pos] = Fraction(1)
                else:
                    pattern[r][pos] = Fraction(1)
            eps = exact_det(pattern)
            mat[r][j - 1] = delta(subset) / d_base / eps
    for x in range(n):
        mat[0][x] *= d_base

    from itertools import combinations
    for subset in combinations(range(1, n + 1), k):
        rows = [[mat[r][c - 1] for c in subset] for r in range(k)]
        if exact_det(rows) != delta(subset):
            raise DomainError("measurements do not satisfy the minor relations")
    return mat


def matrix_columns(mat) -> list[tuple[Fraction, ...]]:
    k, n = len(mat), len(mat[0])
    return [tuple(mat[r][c] for r in range(k)) for c in range(n)]


# --- 2-like subgraphs -------------------------------------------------


@dataclass(frozen=True)
class TwoLikeSubgraph:
    """Edge multiplicity pattern summing to 2 at every interior vertex."""

    mults: tuple[tuple[int, int], ...]

    def multiplicity_map(self) -> dict[int, int]:
        return dict(self.mults)


def _connectivity(g: WebDiagram, mult: dict[int, int]):
    """Decompose a 2-like subgraph into paths, cycles and doubled edges.

    Returns (pm, cycles) where pm pairs the multiplicity-one boundary legs
    through their paths and lists the doubled legs, and cycles counts the
    closed components.
    """
    edge_map = g.edge_map
    adj: dict[int, list[int]] = {}
    doubled_legs = []
    for e, m in mult.items():
        u, v, _ = edge_map[e]
        if m == 1:
            adj.setdefault(u, []).append(e)
            adj.setdefault(v, []).append(e)
        elif m == 2:
            for end in (u, v):
                if g.is_boundary(end):
                    doubled_legs.append(end)
    seen_edges = set()
    arcs = []
    cycles = 0
    boundary_ends = sorted(v for v in adj if g.is_boundary(v))
    for start in boundary_ends:
        e = adj[start][0]
        if e in seen_edges:
            continue
        cur, via = start, e
        while True:
            seen_edges.add(via)
            u, v, _ = edge_map[via]
            cur = v if u == cur else u
            if g.is_boundary(cur):
                break
            nxt = [x for x in adj[cur] if x != via]
            via = nxt[0]
        arcs.append((start, cur))
    for v, inc in adj.items():
        for e in inc:
            if e not in seen_edges:
                cycles += 1
                cur, via = v, e
                while via not in seen_edges:
                    seen_edges.add(via)
                    u, w, _ = edge_map[via]
                    cur = w if u == cur else u
                    via = [x for x in adj[cur] if x != via][0]
    pm = PartialMatching(n=g.n, arcs=tuple(arcs),
                         doubled=frozenset(doubled_legs))
    return pm, cycles


def two_like_subgraphs(net: PlabicNetwork):
    """All 2-like subgraphs with connectivity, cycle count and weight.

    Enumerated as superpositions of ordered dimer-cover pairs, quotiented
    to distinct multiplicity maps; the weight carries the factor 2^c(W).
    """
    g = net.graph
    wt = net.weight_map
    covers = [cover for cover, _ in dimer_covers(g)]
    seen: dict[tuple, tuple] = {}
    for c1 in covers:
        for c2 in covers:
            mult: dict[int, int] = {}
            for e in c1:
                mult[e] = mult.get(e, 0) + 1
            for e in c2:
                mult[e] = mult.get(e, 0) + 1
            key = tuple(sorted(mult.items()))
            if key in seen:
                continue
            pm, cycles = _connectivity(g, mult)
            weight = Fraction(2) ** cycles
            for e, m in mult.items():
                weight *= wt[e] ** m
            seen[key] = (TwoLikeSubgraph(mults=key), pm, cycles, weight)
    return sorted(seen.values(), key=lambda rec: rec[0].mults)


def immanant_value(net: PlabicNetwork, pm: PartialMatching) -> Fraction:
    """Connectivity-filtered 2-like generating function F_(M,P).

    Each 2-like subgraph with p boundary paths and c cycles arises from
    2^(c+p) ordered cover pairs, so summing ordered pair weights and
    dividing by 2^p leaves exactly the 2^c factor per subgraph.
    """
    g = net.graph
    k, n = graph_type(g)
    if pm.n != n:
        raise DomainError("partial matching and network sizes differ")
    if pm.k != k:
        raise DomainError("partial matching type disagrees with the network")
    want_d = pm.content()
    doubled = frozenset(pm.doubled)
    support = pm.support
    classes = _cover_classes(net)
    target_arcs = set(pm.arcs)
    total = Fraction(0)
    for b1, recs1 in classes.items():
        if not doubled <= b1 or not b1 <= doubled | support:
            continue
        b2 = doubled | (support - b1)
        recs2 = classes.get(b2)
        if recs2 is None:
            continue
        for c1, w1 in recs1:
            for c2, w2 in recs2:
                mult: dict[int, int] = {}
                for e in c1:
                    mult[e] = mult.get(e, 0) + 1
                for e in c2:
                    mult[e] = mult.get(e, 0) + 1
                arcs, _ = _pair_arcs(g, mult)
                if arcs == target_arcs:
                    total += w1 * w2
    return total / Fraction(2) ** len(pm.arcs)


def _pair_arcs(g: WebDiagram, mult: dict[int, int]):
    """Boundary path pairing of a superposition (cheap form of connectivity)."""
    edge_map = g.edge_map
    adj: dict[int, list[int]] = {}
    for e, m in mult.items():
        if m == 1:
            u, v, _ = edge_map[e]
            adj.setdefault(u, []).append(e)
            adj.setdefault(v, []).append(e)
    arcs = set()
    seen = set()
    for start in sorted(v for v in adj if g.is_boundary(v)):
        e = adj[start][0]
        if e in seen:
            continue
        cur, via = start, e
        while True:
            seen.add(via)
            u, v, _ = edge_map[via]
            cur = v if u == cur else u
            if g.is_boundary(cur):
                break
            via = [x for x in adj[cur] if x != via][0]
        arcs.add(tuple(sorted((start, cur))))
    return arcs, seen


def total_two_like_weight(net: PlabicNetwork) -> Fraction:
    return sum((wt for _, _, _, wt in two_like_subgraphs(net)), Fraction(0))


# --- network surgeries ------------------------------------------------


def delete_boundary(net: PlabicNetwork, i: int) -> PlabicNetwork:
    """Remove boundary vertex i and its legs; relabel the rest down."""
    g = net.graph
    if not g.is_boundary(i):
        raise DomainError(f"{i} is not a boundary vertex")
    dead = set(g.rotation_map.get(i, ()))

    def mv(v: int) -> int:
        if g.is_boundary(v):
            return v - 1 if v > i else v
        return v

    edges = tuple((e, mv(u), mv(v), m) for e, u, v, m in g.edges
                  if e not in dead)
    rotations = tuple((mv(v), tuple(e for e in rot if e not in dead))
                      for v, rot in g.rotations if v != i)
    graph = WebDiagram(k=g.k, n=g.n - 1, colors=g.colors, edges=edges,
                       rotations=rotations)
    weights = tuple((e, w) for e, w in net.weights if e not in dead)
    return PlabicNetwork(graph=graph, weights=weights)


def stitch_network(net: PlabicNetwork, enc: ContentEncoding) -> PlabicNetwork:
    """Spread the legs of a type (k,n) network over the 2k-gon.

    Boundary vertices with d_i = 0 lose their leg; those with d_i = 2 feed
    their interior neighbor twice, once per encoding position, with the
    original leg weight on both copies.
    """
    g = net.graph
    wt = net.weight_map
    if enc.n != g.n:
        raise DomainError("encoding length and boundary size differ")
    two_k = 2 * enc.k
    positions: dict[int, list[int]] = {}
    for j, value in enumerate(enc.a, start=1):
        positions.setdefault(value, []).append(j)

    interior = sorted(v for v, _ in g.colors)
    remap = {v: two_k + r for r, v in enumerate(interior, start=1)}
    colors = tuple((remap[v], c) for v, c in g.colors)

    next_edge = max(e for e, *_ in g.edges) + 1
    edges = []
    weights = []
    rot_patch: dict[int, dict[int, list[int]]] = {}
    boundary_rot = {}
    for i in range(1, g.n + 1):
        legs = g.rotation_map.get(i, ())
        if len(legs) != 1:
            raise DomainError("stitching expects one leg per boundary vertex")
        leg = legs[0]
        vi = remap[g.other_end(leg, i)]
        js = positions.get(i, [])
        if not js:
            rot_patch.setdefault(vi, {})[leg] = []
            continue
        new_ids = []
        for j in js:
            eid = leg if not new_ids else next_edge
            if eid != leg:
                next_edge += 1
            new_ids.append(eid)
            edges.append((eid, vi, j, 1))
            weights.append((eid, wt[leg]))
            boundary_rot[j] = (eid,)
        # at the interior end two parallel legs sit earlier-position first
        rot_patch.setdefault(vi, {})[leg] = list(new_ids)
    for e, u, v, m in g.edges:
        if g.is_boundary(u) or g.is_boundary(v):
            continue
        edges.append((e, remap[u], remap[v], m))
        weights.append((e, wt[e]))
    rotations = list(boundary_rot.items())
    for v, rot in g.rotations:
        if g.is_boundary(v):
            continue
        new_rot = []
        patch = rot_patch.get(remap[v], {})
        for e in rot:
            if e in patch:
                new_rot.extend(patch[e])
            else:
                new_rot.append(e)
        rotations.append((remap[v], tuple(new_rot)))
    graph = WebDiagram(k=g.k, n=two_k, colors=colors, edges=tuple(edges),
                       rotations=tuple(rotations))
    problem = validate_plabic(graph)
    if problem:
        raise DomainError(f"stitched network invalid: {problem}")
    return PlabicNetwork(graph=graph, weights=tuple(weights))


# --- the immanant / invariant comparison ------------------------------


def immanant_vs_invariant(t, net: PlabicNetwork) -> dict:
    """Both sides of the immanant = sign * invariant identity at net's point."""
    tab = as_semistandard(t)
    pm = partial_matching_of_tableau(tab)
    lhs = immanant_value(net, pm)
    mat = realize_matrix(boundary_measurements(net), n=net.graph.n)
    web = tableau_to_web(tab, which=0)[0]
    rhs = evaluate_web(web, matrix_columns(mat))
    std, _ = standardize(tab)
    report = {
        "lhs": lhs,
        "rhs": rhs,
        "sign": None,
        "ok": True,
        "matches_shifted_sign": None,
        "matches_plain_sign": None,
    }
    if rhs == 0:
        report["ok"] = lhs == 0
        return report
    ratio = lhs / rhs
    report["sign"] = ratio
    report["ok"] = ratio in (1, -1)
    report["matches_shifted_sign"] = ratio == sign_lemma_factor(std)
    report["matches_plain_sign"] = ratio == alt_sign_factor(std)
    return report
