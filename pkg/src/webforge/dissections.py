"""Weighted dissections and triangulations of a convex s-gon.

Chords are unordered vertex pairs {a,b} on the polygon 1..s (sides are the
chords {i, i+1} and {1, s}).  A dissection carries nonnegative integer
weights on a noncrossing chord family; a triangulation is a maximal one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .matchings import DomainError, NoncrossingMatching, color_sets


def is_side(chord: tuple[int, int], s: int) -> bool:
    a, b = chord
    return b - a == 1 or (a == 1 and b == s)


def chords_cross(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    a, b = c1
    c, d = c2
    return (a < c < b < d) or (c < a < d < b)


@dataclass(frozen=True)
class WeightedDissection:
    """Noncrossing chord family of an s-gon with weights in ℕ.

    chords is a sorted tuple of (a, b, wt); sides are always part of the
    support, diagonals appear only when the dissection uses them.
    """

    s: int
    chords: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        norm = []
        for a, b, wt in self.chords:
            a, b = sorted((int(a), int(b)))
            if not (1 <= a < b <= self.s):
                raise DomainError(f"chord ({a},{b}) out of range")
            if int(wt) < 0:
                raise DomainError("weights must be nonnegative")
            norm.append((a, b, int(wt)))
        norm.sort()
        object.__setattr__(self, "chords", tuple(norm))
        pairs = [(a, b) for a, b, _ in self.chords]
        if len(set(pairs)) != len(pairs):
            raise DomainError("duplicate chord")
        if self.s >= 3:
            sides = {(i, i + 1) for i in range(1, self.s)} | {(1, self.s)}
            if not sides <= set(pairs):
                raise DomainError("all sides must be present")
        for i, p in enumerate(pairs):
            for q in pairs[i + 1:]:
                if chords_cross(p, q):
                    raise DomainError(f"chords {p} and {q} cross")

    @property
    def diagonals(self) -> tuple[tuple[int, int], ...]:
        return tuple((a, b) for a, b, _ in self.chords if not is_side((a, b), self.s))

    def weight(self, a: int, b: int) -> int:
        a, b = sorted((a, b))
        for c, d, wt in self.chords:
            if (c, d) == (a, b):
                return wt
        raise DomainError(f"chord ({a},{b}) not in dissection")

    def total_weight(self) -> int:
        return sum(wt for _, _, wt in self.chords)

    def content(self) -> tuple[int, ...]:
        d = [0] * self.s
        for a, b, wt in self.chords:
            d[a - 1] += wt
            d[b - 1] += wt
        return tuple(d)

    def to_json(self) -> dict:
        return {"s": self.s,
                "chords": [{"a": a, "b": b, "wt": wt} for a, b, wt in self.chords]}

    @classmethod
    def from_json(cls, obj: dict) -> "WeightedDissection":
        return cls(s=obj["s"],
                   chords=tuple((c["a"], c["b"], c["wt"]) for c in obj["chords"]))


@dataclass(frozen=True)
class WeightedTriangulation(WeightedDissection):
    """Dissection whose support is a full triangulation (s-3 diagonals)."""

    def __post_init__(self):
        super().__post_init__()
        if self.s >= 3 and len(self.diagonals) != self.s - 3:
            raise DomainError("triangulation needs exactly s-3 diagonals")

    def triangles(self) -> tuple[tuple[int, int, int], ...]:
        """Triangles as vertex triples in increasing order."""
        return tuple(sorted(tuple(sorted(f)) for f in _faces(self.s, self.diagonals)))


def _faces(s: int, diagonals) -> list[tuple[int, ...]]:
    """Faces of the polygon cut along the given noncrossing diagonals.

    Each face is a tuple of its vertices in increasing cyclic order.
    """
    diag = set(tuple(sorted(d)) for d in diagonals)

    def rec(poly: tuple[int, ...]) -> list[tuple[int, ...]]:
        # find a diagonal with both ends on this sub-polygon splitting it
        m = len(poly)
        for i in range(m):
            for j in range(i + 2, m):
                if i == 0 and j == m - 1:
                    continue
                if tuple(sorted((poly[i], poly[j]))) in diag:
                    left = poly[i:j + 1]
                    right = poly[j:] + poly[:i + 1]
                    return rec(left) + rec(right)
        return [poly]

    return rec(tuple(range(1, s + 1)))


def dissection_faces(d: WeightedDissection) -> list[tuple[int, ...]]:
    return _faces(d.s, d.diagonals)


def dissection_of_matching(m: NoncrossingMatching) -> WeightedDissection:
    """Merge each color set to a polygon vertex; chord weights count arcs.

    The j-th polygon vertex is the j-th color set (vertex 1's set first);
    the weight of chord {a,b} is the number of arcs joining C_a and C_b.
    """
    sets = color_sets(m)
    s = len(sets)
    where = {}
    for j, block in enumerate(sets, start=1):
        for v in block:
            where[v] = j
    weights: dict[tuple[int, int], int] = {}
    for a, b in m.arcs:
        ca, cb = where[a], where[b]
        if ca == cb:
            raise DomainError("arc inside a color set; matching is invalid")
        key = tuple(sorted((ca, cb)))
        weights[key] = weights.get(key, 0) + 1
    if s >= 3:
        for i in range(1, s):
            weights.setdefault((i, i + 1), 0)
        weights.setdefault((1, s), 0)
    chords = tuple((a, b, wt) for (a, b), wt in sorted(weights.items()))
    return WeightedDissection(s=s, chords=chords)


@lru_cache(maxsize=None)
def _triangulation_diagonal_sets(s: int) -> tuple[frozenset, ...]:
    """All diagonal sets of triangulations of the s-gon."""
    def rec(poly: tuple[int, ...]):
        if len(poly) <= 3:
            yield frozenset()
            return
        # triangle on the edge (poly[0], poly[-1]) with each possible apex
        a, b = poly[0], poly[-1]
        for i in range(1, len(poly) - 1):
            apex = poly[i]
            new = set()
            if i > 1:
                new.add(tuple(sorted((a, apex))))
            if i < len(poly) - 2:
                new.add(tuple(sorted((apex, b))))
            for left in rec(poly[:i + 1]):
                for right in rec(poly[i:]):
                    yield frozenset(new) | left | right

    return tuple(rec(tuple(range(1, s + 1))))


def triangulation_extensions(d: WeightedDissection) -> list:
    """Every triangulation containing d's support, extended by zero weights."""
    if d.s < 3:
        return [d]
    have = set(d.diagonals)
    out = []
    for diagset in _triangulation_diagonal_sets(d.s):
        if have <= diagset:
            chords = list(d.chords)
            for a, b in sorted(diagset - have):
                chords.append((a, b, 0))
            out.append(WeightedTriangulation(s=d.s, chords=tuple(chords)))
    out.sort(key=lambda t: t.chords)
    if not out:
        raise DomainError("dissection admits no triangulation extension")
    return out


def flip(t: WeightedTriangulation, diagonal: tuple[int, int]) -> WeightedTriangulation:
    """Replace a weight-0 diagonal by the other diagonal of its quadrilateral."""
    a, b = sorted(diagonal)
    if (a, b) not in t.diagonals:
        raise DomainError(f"({a},{b}) is not a diagonal of the triangulation")
    if t.weight(a, b) != 0:
        raise DomainError("only weight-0 diagonals may be flipped")
    adjacent = [tri for tri in t.triangles() if a in tri and b in tri]
    if len(adjacent) != 2:
        raise DomainError("diagonal does not separate two triangles")
    apexes = sorted(set(v for tri in adjacent for v in tri) - {a, b})
    c, d = apexes
    chords = tuple(ch for ch in t.chords if (ch[0], ch[1]) != (a, b))
    chords = chords + ((min(c, d), max(c, d), 0),)
    return WeightedTriangulation(s=t.s, chords=chords)
