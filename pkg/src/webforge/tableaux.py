"""Two-column standard and semistandard Young tableaux.

Tableaux are stored column-wise as two strictly increasing sequences.
The Catalan bijection with noncrossing matchings, descent sets, content
encodings, and standardization all live here, as does the bijection with
partial noncrossing matchings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .matchings import (
    DomainError,
    NoncrossingMatching,
    PartialMatching,
    color_sets,
    hat,
)


@dataclass(frozen=True)
class StandardTableau:
    """Standard filling of the 2-column shape with k rows."""

    k: int
    col1: tuple[int, ...]
    col2: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "col1", tuple(int(x) for x in self.col1))
        object.__setattr__(self, "col2", tuple(int(x) for x in self.col2))
        k = self.k
        if len(self.col1) != k or len(self.col2) != k:
            raise DomainError("columns must have length k")
        if sorted(self.col1 + self.col2) != list(range(1, 2 * k + 1)):
            raise DomainError("entries must be exactly 1..2k")
        for col in (self.col1, self.col2):
            if any(col[i] >= col[i + 1] for i in range(k - 1)):
                raise DomainError("columns must strictly increase")
        if any(self.col1[r] >= self.col2[r] for r in range(k)):
            raise DomainError("rows must increase left to right")

    def to_json(self) -> dict:
        return {"k": self.k, "col1": list(self.col1), "col2": list(self.col2)}


@dataclass(frozen=True)
class SemistandardTableau:
    """Semistandard filling: strict columns, weakly increasing rows, entries in [n]."""

    k: int
    n: int
    col1: tuple[int, ...]
    col2: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "col1", tuple(int(x) for x in self.col1))
        object.__setattr__(self, "col2", tuple(int(x) for x in self.col2))
        k = self.k
        if len(self.col1) != k or len(self.col2) != k:
            raise DomainError("columns must have length k")
        entries = self.col1 + self.col2
        if any(not 1 <= x <= self.n for x in entries):
            raise DomainError("entries must lie in [1, n]")
        for col in (self.col1, self.col2):
            if any(col[i] >= col[i + 1] for i in range(k - 1)):
                raise DomainError("columns must strictly increase")
        if any(self.col1[r] > self.col2[r] for r in range(k)):
            raise DomainError("rows must weakly increase")

    def content(self) -> tuple[int, ...]:
        d = [0] * self.n
        for x in self.col1 + self.col2:
            d[x - 1] += 1
        return tuple(d)

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n,
                "col1": list(self.col1), "col2": list(self.col2)}


@dataclass(frozen=True)
class ContentEncoding:
    """Multiplicity vector d over [n] and its weakly increasing word a."""

    d: tuple[int, ...]
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if any(x not in (0, 1, 2) for x in self.d):
            raise DomainError("multiplicities must be 0, 1 or 2")
        expected = []
        for v, mult in enumerate(self.d, start=1):
            expected.extend([v] * mult)
        if list(self.a) != expected:
            raise DomainError("a must be the sorted word with multiplicities d")

    @classmethod
    def from_content(cls, d) -> "ContentEncoding":
        d = tuple(int(x) for x in d)
        a = []
        for v, mult in enumerate(d, start=1):
            a.extend([v] * mult)
        return cls(d=d, a=tuple(a))

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def k(self) -> int:
        return sum(self.d) // 2


def enumerate_standard(k: int) -> list[StandardTableau]:
    """All of SYT(2^k) in lexicographic order of the first column."""
    if k < 1:
        raise DomainError("k must be positive")
    out = []
    universe = range(1, 2 * k + 1)
    for col1 in combinations(universe, k):
        if col1[0] != 1:
            continue
        col2 = tuple(sorted(set(universe) - set(col1)))
        if all(col1[r] < col2[r] for r in range(k)):
            out.append(StandardTableau(k=k, col1=col1, col2=col2))
    return out


def enumerate_semistandard(k: int, n: int) -> list[SemistandardTableau]:
    """All of SSYT(2^k, [n]) in lexicographic order of (col1, col2)."""
    if k < 1:
        raise DomainError("k must be positive")
    out = []
    cols = list(combinations(range(1, n + 1), k))
    for col1 in cols:
        for col2 in cols:
            if all(col1[r] <= col2[r] for r in range(k)):
                out.append(SemistandardTableau(k=k, n=n, col1=col1, col2=col2))
    return out


def catalan_bijection(t: StandardTableau) -> NoncrossingMatching:
    """Noncrossing matching whose left endpoints are the first column.

    Scanning 1..2k, a column-2 entry closes the nearest open column-1
    entry (stack discipline), which is the unique noncrossing choice.
    """
    col1 = set(t.col1)
    stack: list[int] = []
    arcs = []
    for v in range(1, 2 * t.k + 1):
        if v in col1:
            stack.append(v)
        else:
            if not stack:
                raise DomainError("invalid tableau: unmatched right endpoint")
            arcs.append((stack.pop(), v))
    return NoncrossingMatching.from_arcs(arcs)


def catalan_bijection_inverse(m: NoncrossingMatching) -> StandardTableau:
    col1 = tuple(sorted(a for a, _ in m.arcs))
    col2 = tuple(sorted(b for _, b in m.arcs))
    return StandardTableau(k=m.k, col1=col1, col2=col2)


def descents(t: StandardTableau) -> set[int]:
    """Cyclic descents: i such that i and i+1 (mod 2k) share a color set.

    The wrap-around pair {2k, 1} is reported as the element 2k.
    """
    n = 2 * t.k
    out = set()
    for block in color_sets(catalan_bijection(t)):
        for p in range(len(block) - 1):
            out.add(block[p])
    return out


def row_descents(t: StandardTableau) -> set[int]:
    """Oracle form: i in a strictly higher row than i+1; 2k included iff
    deleting 1 and 2k leaves a decreasing row."""
    n = 2 * t.k
    row = {}
    for r in range(t.k):
        row[t.col1[r]] = r
        row[t.col2[r]] = r
    out = {i for i in range(1, n) if row[i] < row[i + 1]}
    # dropping 1 (top of column 1) and 2k (bottom of column 2) slides
    # column 1 up one row; a decreasing row then pairs col1[r+1] with col2[r]
    if any(t.col1[r + 1] > t.col2[r] for r in range(t.k - 1)):
        out.add(n)
    return out


def standardize(t: SemistandardTableau) -> tuple[StandardTableau, ContentEncoding]:
    """Relabel a semistandard tableau to the standard tableau of its insertion order.

    Boxes are inserted in the order of the content word a_1..a_{2k}; when a
    value is doubled the first copy goes to column 1.
    """
    enc = ContentEncoding.from_content(t.content())
    col1_counts: dict[int, int] = {}
    col2_counts: dict[int, int] = {}
    for x in t.col1:
        col1_counts[x] = col1_counts.get(x, 0) + 1
    for x in t.col2:
        col2_counts[x] = col2_counts.get(x, 0) + 1
    new_col1, new_col2 = [], []
    remaining1 = dict(col1_counts)
    for i, value in enumerate(enc.a, start=1):
        if remaining1.get(value, 0) > 0:
            new_col1.append(i)
            remaining1[value] -= 1
        else:
            new_col2.append(i)
    std = StandardTableau(k=t.k, col1=tuple(new_col1), col2=tuple(new_col2))
    return std, enc


def destandardize(std: StandardTableau, enc: ContentEncoding) -> SemistandardTableau:
    """Substitute a_i for i in a standard tableau."""
    a = enc.a
    col1 = tuple(a[i - 1] for i in std.col1)
    col2 = tuple(a[i - 1] for i in std.col2)
    return SemistandardTableau(k=std.k, n=enc.n, col1=col1, col2=col2)


def partial_matching_of_tableau(t: SemistandardTableau) -> PartialMatching:
    """The (M, P) pair encoding a semistandard tableau.

    P collects the doubled values; M joins values whose standardized
    positions are matched and carry distinct values.
    """
    std, enc = standardize(t)
    m_hat = catalan_bijection(std)
    a = enc.a
    doubled = {v for v in range(1, t.n + 1) if a.count(v) == 2}
    arcs = []
    for p, q in m_hat.arcs:
        if a[p - 1] != a[q - 1]:
            arcs.append((a[p - 1], a[q - 1]))
    return PartialMatching(n=t.n, arcs=arcs, doubled=frozenset(doubled))


def tableau_of_partial_matching(pm: PartialMatching) -> SemistandardTableau:
    """Inverse of partial_matching_of_tableau via the hat construction."""
    full = hat(pm)
    std = catalan_bijection_inverse(full)
    enc = ContentEncoding.from_content(pm.content())
    return destandardize(std, enc)


def parse_tableau(obj: dict):
    """CLI text format: {"k", "col1", "col2"} plus optional "n" for SSYT."""
    if "n" in obj and obj["n"] is not None:
        return SemistandardTableau(k=obj["k"], n=obj["n"],
                                   col1=tuple(obj["col1"]), col2=tuple(obj["col2"]))
    return StandardTableau(k=obj["k"], col1=tuple(obj["col1"]), col2=tuple(obj["col2"]))


def as_semistandard(t) -> SemistandardTableau:
    if isinstance(t, SemistandardTableau):
        return t
    return SemistandardTableau(k=t.k, n=2 * t.k, col1=t.col1, col2=t.col2)
