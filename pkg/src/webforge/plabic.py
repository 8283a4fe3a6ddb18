"""Plabic graphs: trips, dimer covers, positroids, top-cell networks.

A plabic graph is a web diagram with its multiplicities erased; all edges
carry multiplicity 1 and interior vertex sums are unconstrained.  Trips,
dimer covers and the positroid of boundary subsets live here, along with
a bridge-built top-cell graph used as a generic network scaffold.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .matchings import DomainError
from .webs import BLACK, WHITE, WebDiagram, _components, _face_count

# turn rule: entering a white vertex leave by the next edge counterclockwise,
# entering an interior black vertex leave by the next edge clockwise
TRIP_TURN = {WHITE: 1, BLACK: -1}


def plabic_of_web(w: WebDiagram) -> WebDiagram:
    """Forget edge multiplicities; the graph itself is unchanged."""
    edges = tuple((e, u, v, 1) for e, u, v, _ in w.edges)
    return WebDiagram(k=w.k, n=w.n, colors=w.colors, edges=edges,
                      rotations=w.rotations)


def validate_plabic(g: WebDiagram) -> str | None:
    """Like web validation but without the vertex-sum constraint."""
    colors = dict(g.colors)
    known = set(range(1, g.n + 1)) | set(colors)
    edge_map = {}
    for e, u, v, m in g.edges:
        if e in edge_map:
            return f"duplicate edge id {e}"
        edge_map[e] = (u, v)
        if u not in known or v not in known:
            return f"edge {e} touches unknown vertex"
        if g.color(u) == g.color(v):
            return f"edge {e} joins two {g.color(u)} vertices"
        if m != 1:
            return f"edge {e} multiplicity {m} != 1"
    rot = dict(g.rotations)
    for v in known:
        inc = sorted(e for e, (a, b) in edge_map.items() if v in (a, b))
        if inc != sorted(rot.get(v, ())):
            return f"rotation at vertex {v} does not list its incident edges"
    if _components(g) > 1:
        return "interior component not attached to the boundary"
    if g.n > 0:
        V, E, F = _face_count(g)
        if V - E + F != 2:
            return f"rotation system is not planar (V-E+F = {V - E + F})"
    return None


def graph_type(g: WebDiagram) -> tuple[int, int]:
    """(k, n) with k = number of whites minus interior blacks."""
    whites = sum(1 for _, c in g.colors if c == WHITE)
    blacks = sum(1 for _, c in g.colors if c == BLACK)
    return whites - blacks, g.n


def isolated_boundary(g: WebDiagram) -> frozenset[int]:
    """Boundary vertices with no leg; their trips are flagged fixed points."""
    touched = set()
    for _, u, v, _ in g.edges:
        for end in (u, v):
            if g.is_boundary(end):
                touched.add(end)
    return frozenset(set(range(1, g.n + 1)) - touched)


def trip_permutation(g: WebDiagram) -> dict[int, int]:
    """Terminal boundary vertex of the trip starting at each boundary vertex."""
    rot = g.rotation_map
    edge_map = g.edge_map
    perm = {}
    for start in range(1, g.n + 1):
        legs = rot.get(start, ())
        if not legs:
            perm[start] = start
            continue
        e = legs[0]
        u, v, _ = edge_map[e]
        cur = v if u == start else u
        while not g.is_boundary(cur):
            r = rot[cur]
            step = TRIP_TURN[g.color(cur)]
            e = r[(r.index(e) + step) % len(r)]
            u, v, _ = edge_map[e]
            cur = v if u == cur else u
        perm[start] = cur
    return perm


def dimer_covers(g: WebDiagram) -> list[tuple[frozenset[int], frozenset[int]]]:
    """All almost perfect matchings as (edge id set, boundary set) pairs.

    Every interior vertex is covered exactly once; boundary vertices at
    most once.  The boundary set is the set of covered boundary vertices.
    """
    interior = sorted(v for v, _ in g.colors)
    incident: dict[int, list[int]] = {v: [] for v in interior}
    edge_map = g.edge_map
    for e, u, v, _ in g.edges:
        if u in incident:
            incident[u].append(e)
        if v in incident:
            incident[v].append(e)
    used: set[int] = set()
    chosen: list[int] = []
    out = []

    def rec(idx: int):
        while idx < len(interior) and interior[idx] in used:
            idx += 1
        if idx == len(interior):
            boundary = frozenset(x for e in chosen for x in edge_map[e][:2]
                                 if g.is_boundary(x))
            out.append((frozenset(chosen), boundary))
            return
        v = interior[idx]
        for e in incident[v]:
            u, w, _ = edge_map[e]
            other = w if u == v else u
            if other in used:
                continue
            used.add(v)
            used.add(other)
            chosen.append(e)
            rec(idx + 1)
            chosen.pop()
            used.discard(v)
            used.discard(other)

    rec(0)
    out.sort(key=lambda rec: sorted(rec[0]))
    return out


@dataclass(frozen=True)
class Positroid:
    """Matroid given by its bases; checked against the exchange axiom."""

    k: int
    n: int
    bases: frozenset[frozenset[int]]

    def __post_init__(self):
        object.__setattr__(self, "bases",
                           frozenset(frozenset(b) for b in self.bases))
        if not self.bases:
            raise DomainError("a positroid needs at least one basis")
        for b in self.bases:
            if len(b) != self.k or not all(1 <= x <= self.n for x in b):
                raise DomainError("bases must be k-subsets of [n]")
        for b1 in self.bases:
            for b2 in self.bases:
                for x in b1 - b2:
                    if not any((b1 - {x}) | {y} in self.bases for y in b2 - b1):
                        raise DomainError("exchange axiom fails")

    def is_basis(self, subset) -> bool:
        return frozenset(subset) in self.bases

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n,
                "bases": sorted(sorted(b) for b in self.bases)}

    @classmethod
    def from_json(cls, obj: dict) -> "Positroid":
        return cls(k=obj["k"], n=obj["n"],
                   bases=frozenset(frozenset(b) for b in obj["bases"]))


def cyclic_interval_positroid(intervals) -> Positroid:
    """Rank-2 positroid of an interval partition: bases cross two intervals."""
    blocks = [tuple(int(x) for x in block) for block in intervals]
    elements = [x for block in blocks for x in block]
    n = len(elements)
    if sorted(elements) != list(range(1, n + 1)):
        raise DomainError("intervals must partition [n]")
    where = {}
    for j, block in enumerate(blocks):
        for x in block:
            where[x] = j
    bases = frozenset(frozenset((a, b))
                      for a, b in combinations(range(1, n + 1), 2)
                      if where[a] != where[b])
    return Positroid(k=2, n=n, bases=bases)


def grassmann_necklace(p: Positroid) -> tuple[tuple[int, ...], ...]:
    """I_a = lexicographically minimal basis in the a-shifted order."""
    out = []
    for a in range(1, p.n + 1):
        def key(b):
            return tuple(sorted((x - a) % p.n for x in b))
        best = min(p.bases, key=key)
        out.append(tuple(sorted(best, key=lambda x: (x - a) % p.n)))
    return tuple(out)


def positroid_of_graph(g: WebDiagram) -> Positroid:
    """Bases are the boundary subsets of the dimer covers."""
    covers = dimer_covers(g)
    if not covers:
        raise DomainError("graph has no cover")
    k, n = graph_type(g)
    bases = frozenset(boundary for _, boundary in covers)
    for b in bases:
        if len(b) != k:
            raise DomainError("cover boundary size disagrees with the type")
    return Positroid(k=k, n=n, bases=bases)


# --- top-cell graphs by bridge insertion ------------------------------


def _transposition_word(n: int, target: dict[int, int], length: int) -> list[int]:
    """Word i_1..i_m of cyclically adjacent swaps (i, i+1) composing to target.

    Returns a word of exactly the requested length (padded with a repeated
    swap when the shortest word is shorter).  Words compose left to right:
    the product t_{i_1} o t_{i_2} o ... applied as functions.
    """
    ident = tuple(range(1, n + 1))
    goal = tuple(target[i] for i in range(1, n + 1))

    def mul(perm: tuple[int, ...], i: int) -> tuple[int, ...]:
        # right-multiply by the swap of positions i, i+1 (cyclic)
        j = i % n + 1
        lst = list(perm)
        lst[i - 1], lst[j - 1] = lst[j - 1], lst[i - 1]
        return tuple(lst)

    prev: dict[tuple[int, ...], tuple] = {ident: None}
    frontier = [ident]
    while goal not in prev and frontier:
        nxt = []
        for perm in frontier:
            for i in range(1, n + 1):
                new = mul(perm, i)
                if new not in prev:
                    prev[new] = (perm, i)
                    nxt.append(new)
        frontier = nxt
    if goal not in prev:
        raise DomainError("target permutation unreachable")
    word = []
    cur = goal
    while prev[cur] is not None:
        parent, i = prev[cur]
        word.append(i)
        cur = parent
    word.reverse()
    if len(word) > length or (length - len(word)) % 2:
        raise DomainError("no bridge word of the required length")
    word.extend([1, 1] * ((length - len(word)) // 2))
    return word


@lru_cache(maxsize=None)
def top_cell_graph(k: int, n: int) -> WebDiagram:
    """A plabic graph of type (k, n) whose covers realize every k-subset.

    Built from k boundary-interval claws by inserting boundary bridges; each
    bridge subdivides two cyclically adjacent legs with a white-black pair
    and joins them, composing the trip permutation with the adjacent swap.
    The construction self-verifies: planarity, the shift-by-k trip
    permutation, and the uniform positroid are all asserted.
    """
    if not 1 <= k <= n:
        raise DomainError("need 1 <= k <= n")
    colors: dict[int, str] = {}
    edges: dict[int, tuple[int, int]] = {}
    rot: dict[int, list[int]] = {}
    next_vertex = n + 1
    next_edge = n + 1

    # vacuum: one claw per boundary interval block
    base, rem = divmod(n, k)
    start = 1
    blocks = []
    for j in range(k):
        size = base + (1 if j < rem else 0)
        blocks.append(list(range(start, start + size)))
        start += size
    for block in blocks:
        w = next_vertex
        next_vertex += 1
        colors[w] = WHITE
        rot[w] = []
        for a in block:
            edges[a] = (a, w)
            rot[a] = [a]
            rot[w].append(a)

    def subdivide(i: int) -> tuple[int, int, int]:
        nonlocal next_vertex, next_edge
        e = rot[i][0]
        u, v = edges[e]
        interior = v if u == i else u
        x, y = next_vertex, next_vertex + 1
        next_vertex += 2
        f1, f2 = next_edge, next_edge + 1
        next_edge += 2
        colors[x] = WHITE
        colors[y] = BLACK
        edges[e] = (i, x)
        edges[f1] = (x, y)
        edges[f2] = (y, interior)
        rot[x] = [e, f1]
        rot[y] = [f1, f2]
        rot[interior][rot[interior].index(e)] = f2
        return x, y, f1

    def bridge(i: int):
        nonlocal next_edge
        j = i % n + 1
        xi, _, f1i = subdivide(i)
        _, yj, _ = subdivide(j)
        b = next_edge
        next_edge += 1
        edges[b] = (xi, yj)
        rot[xi].insert(rot[xi].index(f1i), b)
        rot[yj].append(b)

    # trip permutation of the vacuum: a forward cycle within each block
    vac = {}
    for block in blocks:
        for t, a in enumerate(block):
            vac[a] = block[(t + 1) % len(block)]
    inv_vac = {v: a for a, v in vac.items()}
    target = {i: inv_vac[(i + k - 1) % n + 1] for i in range(1, n + 1)}
    for i in _transposition_word(n, target, (k - 1) * (n - k)):
        bridge(i)

    g = WebDiagram(
        k=k, n=n,
        colors=tuple(colors.items()),
        edges=tuple((e, u, v, 1) for e, (u, v) in edges.items()),
        rotations=tuple((v, tuple(r)) for v, r in rot.items()))
    problem = validate_plabic(g)
    if problem:
        raise DomainError(f"top-cell construction invalid: {problem}")
    trips = trip_permutation(g)
    if any(trips[i] != (i + k - 1) % n + 1 for i in range(1, n + 1)):
        raise DomainError("top-cell construction has wrong trips")
    bases = positroid_of_graph(g).bases
    if len(bases) != len(list(combinations(range(n), k))):
        raise DomainError("top-cell construction misses a basis")
    return g
