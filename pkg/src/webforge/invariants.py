"""Consistent labelings, invariant vectors, Pluecker monomials, evaluation.

Labelings assign a mult(e)-subset of [k] to each edge, disjoint across
incident edges; around interior vertices the subsets partition [k].
Subsets are carried as bitmasks during the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .matchings import (
    BalancedWord,
    DomainError,
    NoncrossingMatching,
    enumerate_matchings,
    word_of_matching,
    word_sign,
)
from .webs import WebDiagram


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _subsets_of(mask: int, size: int):
    for combo in combinations(_bits(mask), size):
        m = 0
        for b in combo:
            m |= 1 << b
        yield m


def _solver_order(w: WebDiagram) -> list[int]:
    """Interior vertices in BFS order from the boundary legs."""
    adj: dict[int, list[int]] = {}
    for _, u, v, _ in w.edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen = set()
    order = []
    queue = [v for v in range(1, w.n + 1)]
    while queue:
        cur = queue.pop(0)
        for nxt in adj.get(cur, []):
            if not w.is_boundary(nxt) and nxt not in seen:
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    for v, _ in w.colors:
        if v not in seen:
            order.append(v)
    return order


def labelings(w: WebDiagram, word=None):
    """Yield consistent labelings as dicts edge id -> bitmask over [k].

    When a boundary word is given, the legs are pinned to its letters
    (slot order) before the interior search begins.
    """
    k = w.k
    full = (1 << k) - 1
    edge_map = w.edge_map
    incident: dict[int, list[int]] = {}
    for e, u, v, _ in w.edges:
        incident.setdefault(u, []).append(e)
        incident.setdefault(v, []).append(e)

    assignment: dict[int, int] = {}

    def conflicts(eid: int, mask: int) -> bool:
        u, v, _ = edge_map[eid]
        for end in (u, v):
            for e2 in incident[end]:
                if e2 != eid and e2 in assignment and assignment[e2] & mask:
                    return True
        return False

    if word is not None:
        slots = w.leg_slots()
        letters = list(word.letters) if isinstance(word, BalancedWord) else list(word)
        if len(letters) != len(slots):
            raise DomainError("word length must match the number of legs")
        for slot_e, letter in zip(slots, letters):
            if not 1 <= letter <= k:
                raise DomainError(f"letter {letter} outside [1, {k}]")
            mask = 1 << (letter - 1)
            if conflicts(slot_e, mask):
                return
            assignment[slot_e] = mask

    order = _solver_order(w)

    def solve(vi: int):
        if vi == len(order):
            yield dict(assignment)
            return
        v = order[vi]
        todo = [e for e in incident.get(v, []) if e not in assignment]
        pool = full
        for e in incident.get(v, []):
            if e in assignment:
                pool &= ~assignment[e]
        need = sum(edge_map[e][2] for e in todo)
        if bin(pool).count("1") != need:
            return
        todo.sort(key=lambda e: -edge_map[e][2])

        def fill(ti: int, pool_left: int):
            if ti == len(todo):
                yield from solve(vi + 1)
                return
            e = todo[ti]
            m = edge_map[e][2]
            for mask in _subsets_of(pool_left, m):
                if conflicts(e, mask):
                    continue
                assignment[e] = mask
                yield from fill(ti + 1, pool_left & ~mask)
                del assignment[e]

        yield from fill(0, pool)

    yield from solve(0)


def boundary_word(w: WebDiagram, labeling: dict[int, int]) -> tuple[int, ...]:
    out = []
    for e in w.leg_slots():
        mask = labeling[e]
        out.append(mask.bit_length())
    return tuple(out)


def labeling_count(w: WebDiagram, word) -> int:
    return sum(1 for _ in labelings(w, word))


def pairing(w: WebDiagram, word) -> int:
    """The duality pairing of [W] against the word monomial: a(W, w)."""
    return labeling_count(w, word)


@dataclass(frozen=True)
class InvariantVector:
    """Sparse coefficient map word -> sign(word) * a(W, word)."""

    k: int
    d: int
    n: int
    coeffs: tuple[tuple[tuple[int, ...], int], ...]

    def coefficient(self, word) -> int:
        word = tuple(word)
        for wrd, c in self.coeffs:
            if wrd == word:
                return c
        return 0

    def counts(self) -> dict[tuple[int, ...], int]:
        return {wrd: abs(c) for wrd, c in self.coeffs}

    def to_json(self) -> dict:
        def render(word):
            if self.k <= 9:
                return "".join(str(x) for x in word)
            return ",".join(str(x) for x in word)

        return {"k": self.k, "d": self.d,
                "coeffs": [{"word": render(wrd), "c": c} for wrd, c in self.coeffs]}


def invariant_vector(w: WebDiagram) -> InvariantVector:
    """One pass over all labelings, binned by boundary word."""
    if not w.is_standard():
        raise DomainError("invariant vectors are defined for standard webs")
    counts: dict[tuple[int, ...], int] = {}
    for lab in labelings(w):
        wrd = boundary_word(w, lab)
        counts[wrd] = counts.get(wrd, 0) + 1
    coeffs = tuple(sorted((wrd, word_sign(wrd) * a) for wrd, a in counts.items()))
    return InvariantVector(k=w.k, d=w.degree(), n=w.n, coeffs=coeffs)


def dual_matchings(w: WebDiagram) -> list[tuple[NoncrossingMatching, int]]:
    """Noncrossing matchings with a positive labeling count against W."""
    if w.degree() != 2:
        raise DomainError("dual matchings are defined for degree-2 webs")
    out = []
    for m in enumerate_matchings(w.n // 2):
        a = labeling_count(w, word_of_matching(m))
        if a > 0:
            out.append((m, a))
    return out


# --- Pluecker monomials and evaluation --------------------------------


@dataclass(frozen=True)
class PlueckerMonomial:
    """Product of minors, one column subset per factor."""

    subsets: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"subsets": [list(s) for s in self.subsets]}


def delta_monomial(word) -> PlueckerMonomial:
    letters = list(word.letters) if isinstance(word, BalancedWord) else list(word)
    k = max(letters)
    subsets = []
    for j in range(1, k + 1):
        subset = tuple(p + 1 for p, x in enumerate(letters) if x == j)
        if not subset:
            raise DomainError("word skips a symbol")
        subsets.append(subset)
    if len({len(s) for s in subsets}) != 1:
        raise DomainError("word is not balanced")
    return PlueckerMonomial(subsets=tuple(subsets))


def exact_det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-preserving Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in rows]
    size = len(m)
    if any(len(row) != size for row in m):
        raise DomainError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = Fraction(1) / m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, size):
                    m[r][c] -= factor * m[col][c]
    return det


def evaluate_monomial(mono: PlueckerMonomial, vt) -> Fraction:
    """Product of minors of the column tuple vt (vectors as sequences)."""
    total = Fraction(1)
    for subset in mono.subsets:
        cols = []
        for p in subset:
            if not 1 <= p <= len(vt):
                raise DomainError(f"column {p} out of range")
            cols.append(vt[p - 1])
        dim = len(cols)
        if any(len(c) != dim for c in cols):
            raise DomainError("minor is not square")
        rows = [[Fraction(cols[j][i]) for j in range(dim)] for i in range(dim)]
        total *= exact_det(rows)
    return total


def evaluate_web(w: WebDiagram, vt) -> Fraction:
    """[W] evaluated at n exact k-vectors.

    Standard webs evaluate through the sparse invariant vector; webs with
    doubled or missing boundary vertices evaluate by stitching: the parent
    standard web is evaluated at the column tuple repeated along the
    content encoding.
    """
    if len(vt) != w.n:
        raise DomainError("need one vector per boundary vertex")
    if any(len(col) != w.k for col in vt):
        raise DomainError("vector dimension must equal k")
    if w.is_standard():
        vec = invariant_vector(w)
        total = Fraction(0)
        for wrd, c in vec.coeffs:
            term = Fraction(c)
            for p, letter in enumerate(wrd):
                term *= Fraction(vt[p][letter - 1])
                if term == 0:
                    break
            total += term
        return total
    return _evaluate_stitched(w, vt)


def _evaluate_stitched(w: WebDiagram, vt) -> Fraction:
    from .tableaux import ContentEncoding

    enc = ContentEncoding.from_content(w.content())
    parent = _detach_boundary(w, enc)
    duplicated = [vt[a - 1] for a in enc.a]
    return evaluate_web(parent, duplicated)


def _detach_boundary(w: WebDiagram, enc) -> WebDiagram:
    """Undo reattachment: spread the legs back over the 2k-gon by slot."""
    two_k = 2 * enc.k
    slots = w.leg_slots()
    old_interior = [v for v, _ in w.colors]
    remap = {v: two_k + i for i, v in enumerate(sorted(old_interior), start=1)}
    slot_of = {e: i for i, e in enumerate(slots, start=1)}
    edges = []
    for e, u, v, m in w.edges:
        if e in slot_of:
            interior_end = u if not w.is_boundary(u) else v
            edges.append((e, remap[interior_end], slot_of[e], m))
        else:
            edges.append((e, remap[u], remap[v], m))
    rotations = [(slot_of[e], (e,)) for e in slots]
    for v, rot in w.rotations:
        if not w.is_boundary(v):
            rotations.append((remap[v], rot))
    colors = tuple((remap[v], c) for v, c in w.colors)
    return WebDiagram(k=w.k, n=two_k, colors=colors, edges=tuple(edges),
                      rotations=tuple(rotations))


# --- SL_2 side: matching monomials and the sign lemma -----------------


def delta_matching_expansion(m: NoncrossingMatching) -> dict[tuple[int, ...], int]:
    """Coefficients of prod over arcs of det(v_a, v_b) in the word basis.

    Words are elements of [2]^{2k}; each arc contributes +1 when its left
    endpoint carries letter 1 and right carries 2, and -1 the other way.
    """
    coeffs: dict[tuple[int, ...], int] = {}

    def rec(idx: int, word: list[int], sign: int):
        if idx == len(m.arcs):
            coeffs[tuple(word)] = coeffs.get(tuple(word), 0) + sign
            return
        a, b = m.arcs[idx]
        word[a - 1], word[b - 1] = 1, 2
        rec(idx + 1, word, sign)
        word[a - 1], word[b - 1] = 2, 1
        rec(idx + 1, word, -sign)
        word[a - 1] = word[b - 1] = 0

    rec(0, [0] * (2 * m.k), 1)
    return coeffs


def sign_lemma_factor(t) -> int:
    """Product of (-1)^(i_j - j) over the first column."""
    return -1 if sum(i - j for j, i in enumerate(t.col1, start=1)) % 2 else 1


def alt_sign_factor(t) -> int:
    """Product of (-1)^(i_j - 1) over the first column."""
    return -1 if sum(i - 1 for i in t.col1) % 2 else 1
