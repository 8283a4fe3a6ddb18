"""Shared fixtures: the running 18-gon example and hand-built webs."""

import pytest

from webforge.matchings import NoncrossingMatching
from webforge.tableaux import SemistandardTableau, StandardTableau
from webforge.dissections import WeightedTriangulation
from webforge.webs import BLACK, WHITE, WebDiagram

RUNNING_COL1 = (1, 2, 3, 5, 6, 8, 10, 13, 14)
RUNNING_COL2 = (4, 7, 9, 11, 12, 15, 16, 17, 18)
RUNNING_ARCS = ((1, 18), (2, 17), (3, 4), (5, 12), (6, 7),
                (8, 9), (10, 11), (13, 16), (14, 15))
RUNNING_WORD = (1, 2, 3, 3, 4, 5, 5, 6, 6, 7, 7, 4, 8, 9, 9, 8, 2, 1)
RUNNING_COLOR_SETS = [
    (1, 2, 3), (4, 5, 6), (7, 8), (9, 10),
    (11, 12, 13, 14), (15, 16, 17, 18),
]

SSYT18_COL1 = (1, 2, 3, 4, 5, 8, 9, 12, 14)
SSYT18_COL2 = (3, 7, 8, 10, 11, 14, 15, 16, 18)


@pytest.fixture
def running_tableau() -> StandardTableau:
    return StandardTableau(k=9, col1=RUNNING_COL1, col2=RUNNING_COL2)


@pytest.fixture
def running_matching() -> NoncrossingMatching:
    return NoncrossingMatching(k=9, arcs=RUNNING_ARCS)


@pytest.fixture
def ssyt18() -> SemistandardTableau:
    return SemistandardTableau(k=9, n=18, col1=SSYT18_COL1, col2=SSYT18_COL2)


def five_web() -> WebDiagram:
    """An SL_5 web on 10 boundary vertices pairing with two matchings.

    Four whites carry the boundary legs; two interior blacks tie them
    together with multiplicities 2,1 / 2 / 1,2 / 2.
    """
    A, B, C, D, X, Y = 11, 12, 13, 14, 15, 16
    legs = [(i, i, owner) for i, owner in
            [(1, A), (2, A), (3, B), (4, B), (5, B),
             (6, C), (7, C), (8, D), (9, D), (10, D)]]
    edges = [(e, owner, i, 1) for e, i, owner in legs]
    edges += [
        (11, A, X, 2), (12, A, Y, 1), (13, B, X, 2),
        (14, C, X, 1), (15, C, Y, 2), (16, D, Y, 2),
    ]
    rotations = [(i, (e,)) for e, i, _ in legs]
    rotations += [
        (A, (1, 2, 11, 12)),
        (B, (3, 4, 5, 13)),
        (C, (6, 7, 15, 14)),
        (D, (8, 9, 10, 16)),
        (X, (11, 13, 14)),
        (Y, (12, 15, 16)),
    ]
    colors = ((A, WHITE), (B, WHITE), (C, WHITE), (D, WHITE),
              (X, BLACK), (Y, BLACK))
    return WebDiagram(k=5, n=10, colors=colors, edges=tuple(edges),
                      rotations=tuple(rotations))


SQUARE_COLOR_SETS = [
    (1, 2, 3, 4, 5), (6, 7, 8, 9), (10, 11, 12, 13, 14), (15, 16, 17, 18),
]


def square_triangulations() -> tuple[WeightedTriangulation, WeightedTriangulation]:
    """Two weighted squares sharing contents (5,4,5,4) and the diagonal."""
    t_a = WeightedTriangulation(s=4, chords=(
        (1, 2, 2), (2, 3, 2), (3, 4, 2), (1, 4, 2), (1, 3, 1)))
    t_b = WeightedTriangulation(s=4, chords=(
        (1, 2, 1), (2, 3, 3), (3, 4, 1), (1, 4, 3), (1, 3, 1)))
    return t_a, t_b


def catalan(n: int) -> int:
    """Closed-form oracle for the Catalan numbers."""
    import math
    return math.comb(2 * n, n) // (n + 1)
