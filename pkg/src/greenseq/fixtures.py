"""Quivers and matrices taken from the worked examples.

Each quiver also ships as a ``.quiver`` file under the repository's
``fixtures/`` directory; ``tests/test_fixtures.py`` keeps the two in sync.
"""

from .core import Quiver, disjoint_union

POINT = Quiver.from_arrows(1, [])
A2 = Quiver.from_arrows(2, [(1, 2, 1)])
A3 = Quiver.from_arrows(3, [(1, 2, 1), (2, 3, 1)])
TWO_POINTS = Quiver.from_arrows(2, [])


def kronecker(m: int) -> Quiver:
    return Quiver.from_arrows(2, [(1, 2, m)])


# double arrow 1 => 3 plus the path 1 -> 2 -> 3
DOUBLE_TRIANGLE = Quiver.from_arrows(3, [(1, 3, 2), (1, 2, 1), (2, 3, 1)])
# 1 -> 2 => 3 -> 4
DOUBLE_MIDDLE_A4 = Quiver.from_arrows(4, [(1, 2, 1), (2, 3, 2), (3, 4, 1)])
# oriented 3-cycle with a double arrow 3 => 1
CYCLIC_DOUBLE = Quiver.from_arrows(3, [(1, 2, 1), (2, 3, 1), (3, 1, 2)])
CYCLIC_TRIPLE = Quiver.from_arrows(3, [(1, 2, 1), (2, 3, 1), (3, 1, 3)])
# two oriented triangles joined by 2 => 4
TWO_TRIANGLES = Quiver.from_arrows(
    6, [(1, 2, 1), (2, 3, 1), (3, 1, 1), (2, 4, 2), (4, 5, 1), (5, 6, 1), (6, 4, 1)]
)
# hexagon 1 -> 2 => 3 -> 4 -> 5 ==(4)==> 6 -> 1
HEXAGON = Quiver.from_arrows(
    6, [(1, 2, 1), (2, 3, 2), (3, 4, 1), (4, 5, 1), (5, 6, 4), (6, 1, 1)]
)
A2_PLUS_POINT = disjoint_union(A2, POINT)

CYCLIC_DOUBLE_SEQUENCE = (2, 1, 3, 1, 2)

# Reference extended matrices along 2,1,3,1,2 on CYCLIC_DOUBLE, written
# with the frozen rows in the opposite sign convention (they start at -I).
CYCLIC_DOUBLE_REFERENCE = (
    ((0, 1, -2), (-1, 0, 1), (2, -1, 0), (-1, 0, 0), (0, -1, 0), (0, 0, -1)),
    ((0, -1, -1), (1, 0, -1), (1, 1, 0), (-1, 0, 0), (-1, 1, 0), (0, 0, -1)),
    ((0, 1, 1), (-1, 0, -1), (-1, 1, 0), (1, -1, -1), (1, 0, -1), (0, 0, -1)),
    ((0, 2, -1), (-2, 0, 1), (1, -1, 0), (0, -1, 1), (0, 0, 1), (-1, 0, 1)),
    ((0, -2, 1), (2, 0, -1), (-1, 1, 0), (0, -1, 1), (0, 0, 1), (1, 0, 0)),
    ((0, 2, -1), (-2, 0, 1), (1, -1, 0), (0, 1, 0), (0, 0, 1), (1, 0, 0)),
)

FILES = {
    "point.quiver": POINT,
    "a2.quiver": A2,
    "a3.quiver": A3,
    "kronecker2.quiver": kronecker(2),
    "kronecker3.quiver": kronecker(3),
    "double_triangle.quiver": DOUBLE_TRIANGLE,
    "double_middle_a4.quiver": DOUBLE_MIDDLE_A4,
    "cyclic_double.quiver": CYCLIC_DOUBLE,
    "cyclic_triple.quiver": CYCLIC_TRIPLE,
    "two_triangles.quiver": TWO_TRIANGLES,
    "hexagon.quiver": HEXAGON,
    "a2_plus_point.quiver": A2_PLUS_POINT,
}
