"""Standard chain models: spheres, disks, the cylinder and friends.

Minimal CW structures, used by the test suite and handy for assembling
input files by hand. Pair builders return (complex, boundary inclusion)
ready for :func:`towercalc.chains.relative_homology`, and the sectioned
fixtures return (P, boundary inclusion, section) triples for
:func:`towercalc.chains.verify_desuspension`.
"""

from __future__ import annotations

from .chains import ChainComplex, ChainMap
from .matrix import Matrix


def point() -> ChainComplex:
    return ChainComplex({0: 1}, {})


def circle() -> ChainComplex:
    """One vertex, one loop."""
    return ChainComplex({0: 1, 1: 1}, {1: Matrix.zero(1, 1)})


def sphere(n: int) -> ChainComplex:
    """Minimal model of S^n: one 0-cell and one n-cell."""
    if n < 1:
        raise ValueError("sphere dimension must be >= 1")
    if n == 1:
        return circle()
    return ChainComplex({0: 1, n: 1}, {})


def two_circles() -> ChainComplex:
    """S^1 disjoint union S^1; the boundary of the cylinder."""
    return ChainComplex({0: 2, 1: 2}, {1: Matrix.zero(2, 2)})


def disk(n: int) -> ChainComplex:
    """D^n built from the minimal S^{n-1} by one top cell."""
    if n < 2:
        raise ValueError("disk model needs n >= 2")
    if n == 2:
        return ChainComplex({0: 1, 1: 1, 2: 1}, {1: [[0]], 2: [[1]]})
    return ChainComplex({0: 1, n - 1: 1, n: 1}, {n: [[1]]})


def disk_pair(n: int) -> tuple[ChainComplex, ChainMap]:
    """(D^n, inclusion of S^{n-1})."""
    d, s = disk(n), sphere(n - 1)
    comps = {0: [[1]], n - 1: [[1]]}
    return d, ChainMap.build(s, d, comps)


def disk_section(n: int) -> ChainMap:
    """Basepoint section of the n-disk: a point into S^{n-1}."""
    return ChainMap.build(point(), sphere(n - 1), {0: [[1]]})


def disk_fixture(n: int) -> tuple[ChainComplex, ChainMap, ChainMap]:
    """(P, boundary inclusion, section) for P = D^n sectioned by a basepoint."""
    p, incl = disk_pair(n)
    return p, incl, disk_section(n)


def cylinder() -> ChainComplex:
    """S^1 x D^1: two vertices, two boundary loops, one rung, one square.

    The square is glued along loop0 . rung . loop1^{-1} . rung^{-1}, so its
    cellular boundary is loop0 - loop1.
    """
    return ChainComplex(
        {0: 2, 1: 3, 2: 1},
        {
            1: [[0, 0, -1], [0, 0, 1]],   # rung runs from vertex 0 to vertex 1
            2: [[1], [-1], [0]],
        },
    )


def cylinder_pair() -> tuple[ChainComplex, ChainMap]:
    """(cylinder, inclusion of both boundary circles)."""
    c = cylinder()
    incl = ChainMap.build(
        two_circles(), c,
        {0: [[1, 0], [0, 1]], 1: [[1, 0], [0, 1], [0, 0]]},
    )
    return c, incl


def cylinder_section(weight: int = 1) -> ChainMap:
    """Section of the cylinder: a circle onto the first boundary circle.

    ``weight`` scales the loop component; the sectioned fixture needs
    weight 1, and weight 2 is the deliberately corrupted variant whose cone
    acquires torsion.
    """
    return ChainMap.build(circle(), two_circles(), {0: [[1], [0]], 1: [[weight], [0]]})


def cylinder_fixture(weight: int = 1) -> tuple[ChainComplex, ChainMap, ChainMap]:
    """(P, boundary inclusion, section) for P the cylinder over a circle."""
    c, incl = cylinder_pair()
    return c, incl, cylinder_section(weight)


def cylinder_diagonal_section() -> ChainMap:
    """Circle mapped onto the sum of both boundary loops.

    Homologically twice a generator, so the sectioning hypothesis fails even
    though the cone/pair comparison happens to agree degree by degree.
    """
    return ChainMap.build(circle(), two_circles(), {0: [[1], [0]], 1: [[1], [1]]})


def sphere_self_map(n: int, degree: int) -> ChainMap:
    """Self map of the minimal S^n model of the given degree."""
    s = sphere(n)
    comps = {0: [[1]], n: [[degree]]}
    return ChainMap.build(s, s, comps)


def projective_plane() -> ChainComplex:
    """RP^2: one cell in each degree 0, 1, 2; the 2-cell wraps twice."""
    return ChainComplex({0: 1, 1: 1, 2: 1}, {1: [[0]], 2: [[2]]})
