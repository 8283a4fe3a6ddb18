"""Web diagrams: embedded bipartite graphs in a disk with edge multiplicities.

Boundary vertices are 1..n counterclockwise on the disk boundary and count
as black; interior vertices carry ids above n and a color.  Every vertex
stores the counterclockwise cyclic order of its incident edges, which pins
the embedding combinatorially (faces are recovered by dart tracing).
"""

from __future__ import annotations

from dataclasses import dataclass

from .dissections import WeightedDissection, WeightedTriangulation
from .matchings import DomainError, NoncrossingMatching
from .tableaux import (
    ContentEncoding,
    SemistandardTableau,
    StandardTableau,
    as_semistandard,
    catalan_bijection,
    standardize,
)
from .matchings import color_sets as matching_color_sets
from .dissections import dissection_of_matching, triangulation_extensions

WHITE = "w"
BLACK = "b"


@dataclass(frozen=True)
class WebDiagram:
    """Immutable web diagram.

    colors: tuple of (interior vertex id, color)
    edges: tuple of (edge id, endpoint u, endpoint v, multiplicity)
    rotations: tuple of (vertex id, tuple of edge ids counterclockwise)
    """

    k: int
    n: int
    colors: tuple[tuple[int, str], ...]
    edges: tuple[tuple[int, int, int, int], ...]
    rotations: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(sorted((int(v), c) for v, c in self.colors)))
        object.__setattr__(self, "edges", tuple(sorted(
            (int(e), int(u), int(v), int(m)) for e, u, v, m in self.edges)))
        object.__setattr__(self, "rotations", tuple(sorted(
            (int(v), tuple(int(e) for e in rot)) for v, rot in self.rotations)))

    # --- accessors ----------------------------------------------------

    @property
    def color_map(self) -> dict[int, str]:
        return dict(self.colors)

    @property
    def edge_map(self) -> dict[int, tuple[int, int, int]]:
        return {e: (u, v, m) for e, u, v, m in self.edges}

    @property
    def rotation_map(self) -> dict[int, tuple[int, ...]]:
        return dict(self.rotations)

    def is_boundary(self, v: int) -> bool:
        return 1 <= v <= self.n

    def color(self, v: int) -> str:
        if self.is_boundary(v):
            return BLACK
        return self.color_map[v]

    def incident(self, v: int) -> list[int]:
        return [e for e, u, w, _ in self.edges if v in (u, w)]

    def other_end(self, eid: int, v: int) -> int:
        _, u, w, _ = next(rec for rec in self.edges if rec[0] == eid)
        return w if u == v else u

    def mult(self, eid: int) -> int:
        return self.edge_map[eid][2]

    def interior(self) -> list[int]:
        return [v for v, _ in self.colors]

    def content(self) -> tuple[int, ...]:
        d = [0] * self.n
        for _, u, v, _ in self.edges:
            for end in (u, v):
                if self.is_boundary(end):
                    d[end - 1] += 1
        return tuple(d)

    def is_standard(self) -> bool:
        return all(x == 1 for x in self.content())

    def degree(self) -> int:
        total = sum(self.content())
        if total % self.k:
            raise DomainError("boundary leg count not divisible by k")
        return total // self.k

    def leg_slots(self) -> list[int]:
        """Boundary leg edge ids in slot order.

        Slots run over boundary vertices in increasing order; at a doubled
        vertex the two legs are stored ccw as (later slot, earlier slot),
        so reversing each rotation recovers the slot order.
        """
        out = []
        rot = self.rotation_map
        for a in range(1, self.n + 1):
            out.extend(reversed(rot.get(a, ())))
        return out

    def to_json(self) -> dict:
        return {
            "version": 1,
            "k": self.k,
            "n": self.n,
            "interior": [{"id": v, "color": c} for v, c in self.colors],
            "edges": [{"id": e, "ends": [u, v], "mult": m}
                      for e, u, v, m in self.edges],
            "rotations": {str(v): list(rot) for v, rot in self.rotations},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "WebDiagram":
        return cls(
            k=obj["k"], n=obj["n"],
            colors=tuple((rec["id"], rec["color"]) for rec in obj["interior"]),
            edges=tuple((rec["id"], rec["ends"][0], rec["ends"][1], rec["mult"])
                        for rec in obj["edges"]),
            rotations=tuple((int(v), tuple(rot)) for v, rot in obj["rotations"].items()),
        )


# --- validation -------------------------------------------------------


def _face_count(w: WebDiagram) -> tuple[int, int, int]:
    """(V, E, F) of the embedding closed up with virtual boundary arcs."""
    rot = {v: list(r) for v, r in w.rotations}
    for a in range(1, w.n + 1):
        rot.setdefault(a, [])
    edges = {e: (u, v) for e, u, v, _ in w.edges}
    # virtual arcs between consecutive boundary vertices close the disk
    if w.n > 0:
        for a in range(1, w.n + 1):
            nxt = a % w.n + 1
            prv = (a - 2) % w.n + 1
            arc_next = ("arc", a, nxt)
            arc_prev = ("arc", prv, a)
            if w.n == 1:
                rot[a] = [arc_next] + rot[a]
            else:
                rot[a] = [arc_next] + rot[a] + [arc_prev]
            edges[arc_next] = (a, nxt)
    darts = []
    for e, (u, v) in edges.items():
        darts.append((u, e))
        darts.append((v, e))

    def succ(dart):
        v, e = dart
        u, x = edges[e]
        target = x if v == u else u
        r = rot[target]
        i = r.index(e)
        e2 = r[(i - 1) % len(r)]
        return (target, e2)

    seen = set()
    faces = 0
    for d in darts:
        if d in seen:
            continue
        faces += 1
        cur = d
        while cur not in seen:
            seen.add(cur)
            cur = succ(cur)
    V = w.n + len(w.colors)
    E = len(edges)
    return V, E, faces


def validate_web(w: WebDiagram) -> str | None:
    """None when the diagram is a valid web, else a short violation report."""
    edge_map = {}
    for e, u, v, m in w.edges:
        if e in edge_map:
            return f"duplicate edge id {e}"
        edge_map[e] = (u, v, m)
    colors = dict(w.colors)
    known = set(range(1, w.n + 1)) | set(colors)
    for e, (u, v, m) in edge_map.items():
        if u not in known or v not in known:
            return f"edge {e} touches unknown vertex"
        if w.color(u) == w.color(v):
            return f"edge {e} joins two {w.color(u)} vertices"
        if m < 1 or m > w.k:
            return f"edge {e} multiplicity {m} out of range"
        if (w.is_boundary(u) or w.is_boundary(v)) and m != 1:
            return f"boundary edge {e} multiplicity {m} != 1"
    rot = dict(w.rotations)
    for v in known:
        inc = sorted(e for e, (a, b, _) in edge_map.items() if v in (a, b))
        stored = sorted(rot.get(v, ()))
        if inc != stored:
            return f"rotation at vertex {v} does not list its incident edges"
    for v in colors:
        total = sum(m for e, (a, b, m) in edge_map.items() if v in (a, b))
        if total != w.k:
            return f"vertex sum at {v} is {total}, expected {w.k}"
    # planarity: Euler count with virtual boundary arcs; disconnected
    # interior components are rejected outright
    comp = _components(w)
    if comp > 1:
        return "interior component not attached to the boundary"
    if w.n > 0:
        V, E, F = _face_count(w)
        if V - E + F != 2:
            return f"rotation system is not planar (V-E+F = {V - E + F})"
    return None


def _components(w: WebDiagram) -> int:
    """Component count after adding the virtual boundary cycle."""
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for v in range(1, w.n + 1):
        find(v)
        union(v, v % w.n + 1)
    for v, _ in w.colors:
        find(v)
    for _, u, v, _ in w.edges:
        union(u, v)
    roots = {find(x) for x in list(parent)}
    return len(roots)


# --- constructions ----------------------------------------------------


def claw_web(legs, k: int, n: int | None = None) -> WebDiagram:
    """Single white vertex joined to the k boundary vertices in legs."""
    legs = sorted(int(x) for x in legs)
    if len(legs) != k:
        raise DomainError("claw needs exactly k boundary vertices")
    if n is None:
        n = max(legs)
    w = n + 1
    edges = tuple((i + 1, w, a, 1) for i, a in enumerate(legs))
    rotations = [(w, tuple(e for e, *_ in edges))]
    rotations += [(a, (e,)) for e, _, a, _ in edges]
    return WebDiagram(k=k, n=n, colors=((w, WHITE),), edges=edges,
                      rotations=tuple(rotations))


def sl2_web_of_matching(m: NoncrossingMatching) -> WebDiagram:
    """The SL_2 web with one bivalent white vertex per arc."""
    n = 2 * m.k
    colors = []
    edges = []
    rotations = []
    eid = 0
    for j, (a, b) in enumerate(m.arcs, start=1):
        w = n + j
        colors.append((w, WHITE))
        e1, e2 = eid + 1, eid + 2
        eid += 2
        edges.append((e1, w, a, 1))
        edges.append((e2, w, b, 1))
        rotations.append((w, (e1, e2)))
        rotations.append((a, (e1,)))
        rotations.append((b, (e2,)))
    return WebDiagram(k=2, n=n, colors=tuple(colors), edges=tuple(edges),
                      rotations=tuple(rotations))


def _claw_pair_web(cs: list[tuple[int, ...]], k: int) -> WebDiagram:
    """The s=2 web: one claw per color set."""
    n = 2 * k
    colors = []
    edges = []
    rotations = []
    eid = 0
    for j, block in enumerate(cs, start=1):
        w = n + j
        colors.append((w, WHITE))
        mine = []
        for a in block:
            eid += 1
            edges.append((eid, w, a, 1))
            rotations.append((a, (eid,)))
            mine.append(eid)
        rotations.append((w, tuple(mine)))
    return WebDiagram(k=k, n=n, colors=tuple(colors), edges=tuple(edges),
                      rotations=tuple(rotations))


def web_of_triangulation(t: WeightedTriangulation | WeightedDissection,
                         cs: list[tuple[int, ...]]) -> WebDiagram:
    """Web with a white vertex per polygon vertex and a black per triangle.

    The multiplicity of the edge from triangle t's black vertex toward
    corner a is the total weight of the chords on the far side of the
    side opposite a, that side included.  Color set C_j supplies the
    boundary legs of the j-th white vertex.
    """
    s = t.s
    if len(cs) != s:
        raise DomainError("color set count must equal polygon size")
    contents = t.content()
    for j in range(s):
        if len(cs[j]) != contents[j]:
            raise DomainError(f"color set {j + 1} has size {len(cs[j])}, "
                              f"expected content {contents[j]}")
    k = t.total_weight()
    n = 2 * k
    if s == 2:
        return _claw_pair_web(cs, k)

    whites = {j: n + j for j in range(1, s + 1)}
    triangles = t.triangles()
    blacks = {tri: n + s + i for i, tri in enumerate(triangles, start=1)}

    edges = []
    eid = 0
    leg_ids: dict[int, list[int]] = {}
    for j in range(1, s + 1):
        leg_ids[j] = []
        for a in cs[j - 1]:
            eid += 1
            edges.append((eid, whites[j], a, 1))
            leg_ids[j].append(eid)

    chord_set = [(a, b, wt) for a, b, wt in t.chords]

    def opposite_mult(tri, corner):
        b, c = sorted(set(tri) - {corner})
        # chords strictly on the far side of side {b,c}, that side included
        if b < corner < c:
            interval = set(range(c, s + 1)) | set(range(1, b + 1))
        else:
            interval = set(range(b, c + 1))
        return sum(wt for a2, b2, wt in chord_set
                   if a2 in interval and b2 in interval)

    interior_ids: dict[tuple, int] = {}
    for tri in triangles:
        for corner in tri:
            mlt = opposite_mult(tri, corner)
            if mlt == 0:
                continue
            eid += 1
            interior_ids[(tri, corner)] = eid
            edges.append((eid, blacks[tri], whites[corner], mlt))

    rotations = []
    for j in range(1, s + 1):
        for idx, a in enumerate(cs[j - 1]):
            rotations.append((a, (leg_ids[j][idx],)))
        # interior edges fan from the (j+1)-side around to the (j-1)-side
        mine = [tri for tri in triangles if j in tri and (tri, j) in interior_ids]
        mine.sort(key=lambda tri: min((v - j) % s for v in tri if v != j))
        rotations.append((whites[j], tuple(leg_ids[j]) + tuple(
            interior_ids[(tri, j)] for tri in mine)))
    for tri in triangles:
        rot = [interior_ids[(tri, corner)] for corner in tri
               if (tri, corner) in interior_ids]
        rotations.append((blacks[tri], tuple(rot)))

    colors = tuple((whites[j], WHITE) for j in range(1, s + 1)) + tuple(
        (blacks[tri], BLACK) for tri in triangles)
    web = WebDiagram(k=k, n=n, colors=colors, edges=tuple(edges),
                     rotations=tuple(rotations))
    problem = validate_web(web)
    if problem:
        raise DomainError(f"constructed web invalid: {problem}")
    return web


def reattach_boundary(w_hat: WebDiagram, enc: ContentEncoding) -> WebDiagram:
    """Move leg of slot i to boundary vertex a_i of the n-gon."""
    if not w_hat.is_standard():
        raise DomainError("reattachment starts from a standard web")
    if w_hat.n != 2 * enc.k:
        raise DomainError("encoding length does not match the web")
    if enc.n == w_hat.n and enc.a == tuple(range(1, w_hat.n + 1)):
        return w_hat
    n = enc.n
    slots = w_hat.leg_slots()
    # interior ids must clear the new boundary range
    old_interior = [v for v, _ in w_hat.colors]
    remap = {v: n + i for i, v in enumerate(sorted(old_interior), start=1)}
    edges = []
    slot_of = {e: i for i, e in enumerate(slots, start=1)}
    for e, u, v, m in w_hat.edges:
        if e in slot_of:
            interior_end = u if not w_hat.is_boundary(u) else v
            edges.append((e, remap[interior_end], enc.a[slot_of[e] - 1], m))
        else:
            edges.append((e, remap[u], remap[v], m))
    rotations = []
    legs_at: dict[int, list[int]] = {}
    for i, e in enumerate(slots, start=1):
        legs_at.setdefault(enc.a[i - 1], []).append((i, e))
    for a in range(1, n + 1):
        mine = sorted(legs_at.get(a, []), reverse=True)
        if mine:
            rotations.append((a, tuple(e for _, e in mine)))
        else:
            rotations.append((a, ()))
    for v, rot in w_hat.rotations:
        if not w_hat.is_boundary(v):
            rotations.append((remap[v], rot))
    colors = tuple((remap[v], c) for v, c in w_hat.colors)
    web = WebDiagram(k=w_hat.k, n=n, colors=colors, edges=tuple(edges),
                     rotations=tuple(rotations))
    problem = validate_web(web)
    if problem:
        raise DomainError(f"reattached web invalid: {problem}")
    return web


def tableau_to_web(t, which="all") -> list[WebDiagram]:
    """Full pipeline from a (semi)standard tableau to its web(s)."""
    ss = as_semistandard(t) if not isinstance(t, SemistandardTableau) else t
    std, enc = standardize(ss)
    m = catalan_bijection(std)
    cs = matching_color_sets(m)
    diss = dissection_of_matching(m)
    if diss.s == 2:
        webs = [_claw_pair_web(cs, std.k)]
    else:
        webs = [web_of_triangulation(ext, cs)
                for ext in triangulation_extensions(diss)]
    webs = [reattach_boundary(w, enc) for w in webs]
    if which == "all":
        return webs
    return [webs[int(which)]]


# --- surgeries --------------------------------------------------------


def remove_dimer(w: WebDiagram, pi) -> WebDiagram:
    """Decrement the multiplicities along a dimer cover; drop dead edges."""
    pi = set(pi)
    edge_map = w.edge_map
    covered: dict[int, int] = {}
    for e in pi:
        if e not in edge_map:
            raise DomainError(f"edge {e} not in web")
        u, v, _ = edge_map[e]
        for end in (u, v):
            if not w.is_boundary(end):
                covered[end] = covered.get(end, 0) + 1
    if sorted(covered) != sorted(v for v, _ in w.colors) or any(
            c != 1 for c in covered.values()):
        raise DomainError("edge set is not a dimer cover")
    edges = []
    dead = set()
    for e, u, v, m in w.edges:
        m2 = m - 1 if e in pi else m
        if m2 == 0:
            dead.add(e)
        else:
            edges.append((e, u, v, m2))
    rotations = tuple((v, tuple(e for e in rot if e not in dead))
                      for v, rot in w.rotations)
    return WebDiagram(k=w.k - 1, n=w.n, colors=w.colors, edges=tuple(edges),
                      rotations=rotations)


def contract_bivalent(w: WebDiagram) -> WebDiagram:
    """Fixpoint of merging the neighbors of interior bivalent vertices.

    A bivalent interior vertex forces its two edge labels to be
    complementary, so deleting it and identifying its neighbors preserves
    labeling counts.  Vertices with a boundary neighbor are left alone.
    """
    colors = dict(w.colors)
    edges = {e: [u, v, m] for e, u, v, m in w.edges}
    rot = {v: list(r) for v, r in w.rotations}

    def incident(v):
        return [e for e, (a, b, _) in edges.items() if v in (a, b)]

    changed = True
    while changed:
        changed = False
        for v in list(colors):
            inc = incident(v)
            if len(inc) != 2:
                continue
            e1, e2 = inc
            u = edges[e1][0] if edges[e1][1] == v else edges[e1][1]
            x = edges[e2][0] if edges[e2][1] == v else edges[e2][1]
            if u == x:
                raise DomainError("bigon at bivalent vertex")
            if w.is_boundary(u) or w.is_boundary(x):
                continue
            # splice x's rotation into u's at the removed edge
            rx = rot[x]
            i2 = rx.index(e2)
            tail = rx[i2 + 1:] + rx[:i2]
            ru = rot[u]
            i1 = ru.index(e1)
            rot[u] = ru[:i1] + tail + ru[i1 + 1:]
            for e in tail:
                a, b, m = edges[e]
                edges[e] = [u if a == x else a, u if b == x else b, m]
            del edges[e1], edges[e2]
            del rot[v], rot[x]
            del colors[v], colors[x]
            changed = True
            break
    return WebDiagram(k=w.k, n=w.n,
                      colors=tuple(colors.items()),
                      edges=tuple((e, u, v, m) for e, (u, v, m) in edges.items()),
                      rotations=tuple((v, tuple(r)) for v, r in rot.items()))


def boundary_relabel(w: WebDiagram, perm: dict[int, int], n: int | None = None) -> WebDiagram:
    """Rename boundary vertices; perm maps old labels to new ones."""
    n = n if n is not None else w.n
    old_interior = [v for v, _ in w.colors]
    remap = {v: n + i for i, v in enumerate(sorted(old_interior), start=1)}

    def mv(v):
        if w.is_boundary(v):
            return perm.get(v, v)
        return remap[v]

    edges = tuple((e, mv(u), mv(v), m) for e, u, v, m in w.edges)
    rotations = tuple((mv(v), rot) for v, rot in w.rotations)
    colors = tuple((remap[v], c) for v, c in w.colors)
    return WebDiagram(k=w.k, n=n, colors=colors, edges=edges, rotations=rotations)


def web_certificate(w: WebDiagram) -> tuple:
    """Canonical form under boundary-label-preserving isomorphism.

    Interior vertices are renamed by first visit of a deterministic
    rotation-guided traversal from the boundary; two webs are isomorphic
    (fixing the boundary) iff their certificates are equal.
    """
    rot = w.rotation_map
    order: dict[int, int] = {}
    queue = []
    for a in range(1, w.n + 1):
        for e in rot.get(a, ()):
            queue.append((a, e))
    while queue:
        v, e = queue.pop(0)
        target = w.other_end(e, v)
        if w.is_boundary(target) or target in order:
            continue
        order[target] = len(order)
        for e2 in rot[target]:
            queue.append((target, e2))
    for v, _ in w.colors:
        if v not in order:
            order[v] = len(order)

    def name(v):
        return ("b", v) if w.is_boundary(v) else ("i", order[v])

    cert_edges = sorted(
        (tuple(sorted((name(u), name(v)))), m) for _, u, v, m in w.edges)
    cert_colors = sorted((order[v], c) for v, c in w.colors)
    # rotations compared as cyclic sequences of (neighbor, mult) pairs
    cert_rots = []
    edge_map = w.edge_map
    for v, r in w.rotations:
        if w.is_boundary(v):
            continue
        seq = tuple((name(w.other_end(e, v)), edge_map[e][2]) for e in r)
        if seq:
            best = min(seq[i:] + seq[:i] for i in range(len(seq)))
        else:
            best = seq
        cert_rots.append((name(v), best))
    cert_rots.sort()
    return (w.k, w.n, tuple(cert_colors), tuple(cert_edges), tuple(cert_rots))
