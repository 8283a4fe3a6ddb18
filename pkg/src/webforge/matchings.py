"""Noncrossing matchings of the 2k-gon and the word combinatorics built on them.

A matching lives on boundary vertices 1..2k in cyclic (counterclockwise)
order.  Short arcs cut the circle into cyclic intervals ("color sets"),
arcs give rise to balanced words, and partial matchings of type (k, n)
extend the picture to ground sets with unused and doubled vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class DomainError(ValueError):
    """Raised when an operation is applied outside its domain."""


def _normalize_arcs(arcs) -> tuple[tuple[int, int], ...]:
    pairs = sorted(tuple(sorted(a)) for a in arcs)
    return tuple((int(a), int(b)) for a, b in pairs)


def _crossing(a, b, c, d) -> bool:
    # arcs {a,b}, {c,d} with a<b, c<d cross iff one separates the other
    return (a < c < b < d) or (c < a < d < b)


@dataclass(frozen=True)
class NoncrossingMatching:
    """Perfect noncrossing matching of {1,...,2k}."""

    k: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", _normalize_arcs(self.arcs))
        if len(self.arcs) != self.k:
            raise DomainError(f"expected {self.k} arcs, got {len(self.arcs)}")
        seen = [v for arc in self.arcs for v in arc]
        if sorted(seen) != list(range(1, 2 * self.k + 1)):
            raise DomainError("arcs are not a perfect matching of [2k]")
        for i, (a, b) in enumerate(self.arcs):
            for c, d in self.arcs[i + 1:]:
                if _crossing(a, b, c, d):
                    raise DomainError(f"arcs ({a},{b}) and ({c},{d}) cross")

    @classmethod
    def from_arcs(cls, arcs) -> "NoncrossingMatching":
        arcs = _normalize_arcs(arcs)
        return cls(k=len(arcs), arcs=arcs)

    def partner(self, v: int) -> int:
        for a, b in self.arcs:
            if a == v:
                return b
            if b == v:
                return a
        raise DomainError(f"vertex {v} not matched")

    def to_json(self) -> dict:
        return {"k": self.k, "arcs": [list(a) for a in self.arcs]}

    @classmethod
    def from_json(cls, obj: dict) -> "NoncrossingMatching":
        return cls(k=obj["k"], arcs=[tuple(a) for a in obj["arcs"]])


def enumerate_matchings(k: int) -> list[NoncrossingMatching]:
    """All noncrossing perfect matchings of the 2k-gon, deterministic order.

    Vertex 1 is matched to an even-offset partner; the two sides recurse
    independently, which is the usual Catalan decomposition.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")

    def rec(verts: tuple[int, ...]):
        if not verts:
            yield ()
            return
        first = verts[0]
        for j in range(1, len(verts), 2):
            partner = verts[j]
            inside = verts[1:j]
            outside = verts[j + 1:]
            for left in rec(inside):
                for right in rec(outside):
                    yield ((first, partner),) + left + right

    verts = tuple(range(1, 2 * k + 1))
    return [NoncrossingMatching.from_arcs(arcs) for arcs in rec(verts)]


def short_arcs(m: NoncrossingMatching) -> list[int]:
    """Indices i such that {i, i+1 mod 2k} is an arc, in increasing order.

    The wrap-around arc {1, 2k} contributes the index 2k.
    """
    n = 2 * m.k
    out = []
    arcset = set(m.arcs)
    for i in range(1, n + 1):
        j = i % n + 1
        if tuple(sorted((i, j))) in arcset:
            out.append(i)
    return out


def color_sets(m: NoncrossingMatching) -> list[tuple[int, ...]]:
    """Cyclic intervals (i_j, i_{j+1}] cut at the short-arc indices.

    The interval containing vertex 1 comes first; subsequent intervals
    follow in cyclic order.
    """
    n = 2 * m.k
    idx = short_arcs(m)
    s = len(idx)
    intervals = []
    for j in range(s):
        lo, hi = idx[j], idx[(j + 1) % s]
        cur, block = lo, []
        while True:
            cur = cur % n + 1
            block.append(cur)
            if cur == hi:
                break
        intervals.append(tuple(block))
    start = next(j for j, block in enumerate(intervals) if 1 in block)
    return intervals[start:] + intervals[:start]


@dataclass(frozen=True)
class BalancedWord:
    """Word of length d*k over {1..k} in which every symbol appears d times."""

    k: int
    d: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if len(self.letters) != self.d * self.k:
            raise DomainError("word length must be d*k")
        for sym in range(1, self.k + 1):
            if self.letters.count(sym) != self.d:
                raise DomainError(f"symbol {sym} does not appear exactly {self.d} times")

    def sign(self) -> int:
        return word_sign(self.letters)

    def __str__(self) -> str:
        if self.k <= 9:
            return "".join(str(x) for x in self.letters)
        return ",".join(str(x) for x in self.letters)


def word_sign(letters) -> int:
    """Sign of the subscripted permutation of the ordered alphabet.

    Position p carrying the r-th occurrence of symbol j is the letter j_r;
    the word is compared against the sorted alphabet 1_1, 1_2, ..., k_d by
    inversion count.
    """
    letters = tuple(letters)
    counts: dict[int, int] = {}
    subscripted = []
    for x in letters:
        counts[x] = counts.get(x, 0) + 1
        subscripted.append((x, counts[x]))
    d_values = set(counts.values())
    if len(d_values) != 1 or set(counts) != set(range(1, len(counts) + 1)):
        raise DomainError("word is not balanced")
    inv = 0
    for i in range(len(subscripted)):
        for j in range(i + 1, len(subscripted)):
            if subscripted[i] > subscripted[j]:
                inv += 1
    return -1 if inv % 2 else 1


def word_of_matching(m: NoncrossingMatching) -> BalancedWord:
    """Balanced (k,2)-word with symbol j on both endpoints of the j-th arc.

    Arcs are numbered by increasing left endpoint.
    """
    letters = [0] * (2 * m.k)
    for j, (a, b) in enumerate(m.arcs, start=1):
        letters[a - 1] = j
        letters[b - 1] = j
    return BalancedWord(k=m.k, d=2, letters=tuple(letters))


def remove_arc(m: NoncrossingMatching, i: int) -> NoncrossingMatching:
    """Delete the short arc {i, i+1 mod 2k} and relabel 1..2(k-1)."""
    n = 2 * m.k
    j = i % n + 1
    arc = tuple(sorted((i, j)))
    if arc not in set(m.arcs):
        raise DomainError(f"arc {arc} not in matching")
    survivors = [v for v in range(1, n + 1) if v not in arc]
    relabel = {v: r for r, v in enumerate(survivors, start=1)}
    arcs = [(relabel[a], relabel[b]) for a, b in m.arcs if (a, b) != arc]
    return NoncrossingMatching.from_arcs(arcs)


@dataclass(frozen=True)
class PartialMatching:
    """Partial noncrossing matching of type (k, n).

    S is the support of the matching arcs, P the set of doubled vertices;
    #S + 2#P = 2k.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]
    doubled: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "arcs", _normalize_arcs(self.arcs))
        object.__setattr__(self, "doubled", frozenset(self.doubled))
        support = [v for arc in self.arcs for v in arc]
        if len(set(support)) != len(support):
            raise DomainError("matching arcs overlap")
        if not set(support) <= set(range(1, self.n + 1)):
            raise DomainError("arc endpoint out of range")
        if not self.doubled <= set(range(1, self.n + 1)):
            raise DomainError("doubled vertex out of range")
        if self.doubled & set(support):
            raise DomainError("doubled vertices must be disjoint from S")
        for i, (a, b) in enumerate(self.arcs):
            for c, d in self.arcs[i + 1:]:
                if _crossing(a, b, c, d):
                    raise DomainError(f"arcs ({a},{b}) and ({c},{d}) cross")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(v for arc in self.arcs for v in arc)

    @property
    def k(self) -> int:
        total = len(self.support) + 2 * len(self.doubled)
        if total % 2:
            raise DomainError("#S + 2#P must be even")
        return total // 2

    def content(self) -> tuple[int, ...]:
        d = [0] * self.n
        for v in self.support:
            d[v - 1] = 1
        for v in self.doubled:
            d[v - 1] = 2
        return tuple(d)

    def encoding(self) -> tuple[int, ...]:
        out = []
        for v, mult in enumerate(self.content(), start=1):
            out.extend([v] * mult)
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "arcs": [list(a) for a in self.arcs],
            "doubled": sorted(self.doubled),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PartialMatching":
        return cls(n=obj["n"], arcs=[tuple(a) for a in obj["arcs"]],
                   doubled=frozenset(obj["doubled"]))


def hat(pm: PartialMatching) -> NoncrossingMatching:
    """Full matching of the 2k-gon induced by a partial matching.

    Positions i, j of the content encoding a are joined if a_i = a_j
    (a doubled vertex) or if a_i and a_j are matched in pm.
    """
    a = pm.encoding()
    arcset = {tuple(sorted(arc)) for arc in pm.arcs}
    arcs = []
    m = len(a)
    for i in range(m):
        for j in range(i + 1, m):
            if a[i] == a[j] or tuple(sorted((a[i], a[j]))) in arcset:
                arcs.append((i + 1, j + 1))
    return NoncrossingMatching.from_arcs(arcs)


def enumerate_partial_matchings(k: int, n: int) -> list[PartialMatching]:
    """All partial noncrossing matchings of type (k, n), deterministic order."""
    out = []
    for s_size in range(0, 2 * k + 1, 2):
        p_size = (2 * k - s_size) // 2
        for support in combinations(range(1, n + 1), s_size):
            rest = [v for v in range(1, n + 1) if v not in support]
            if p_size > len(rest):
                continue
            for matching_arcs in _matchings_of(support):
                for doubled in combinations(rest, p_size):
                    out.append(PartialMatching(n=n, arcs=matching_arcs,
                                               doubled=frozenset(doubled)))
    return out


def _matchings_of(verts: tuple[int, ...]):
    """Noncrossing perfect matchings of an ordered even vertex set."""
    if not verts:
        yield ()
        return
    first = verts[0]
    for j in range(1, len(verts), 2):
        partner = verts[j]
        for left in _matchings_of(verts[1:j]):
            for right in _matchings_of(verts[j + 1:]):
                yield ((first, partner),) + left + right


def brute_force_matchings(k: int) -> list[NoncrossingMatching]:
    """Oracle: all perfect matchings of [2k] filtered by the noncrossing test."""

    def all_matchings(verts: tuple[int, ...]):
        if not verts:
            yield ()
            return
        first = verts[0]
        for j in range(1, len(verts)):
            rest = verts[1:j] + verts[j + 1:]
            for tail in all_matchings(rest):
                yield ((first, verts[j]),) + tail

    out = []
    for arcs in all_matchings(tuple(range(1, 2 * k + 1))):
        norm = [tuple(sorted(a)) for a in arcs]
        if not any(_crossing(*a, *b) for a, b in combinations(norm, 2)):
            out.append(NoncrossingMatching.from_arcs(norm))
    return out
