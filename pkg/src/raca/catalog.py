"""Reference combinatorial polyhedra.

Vertex numbering conventions are documented per constructor; all return
AbstractPolyhedron values that pass validate().
"""

from __future__ import annotations

from .errors import DomainError
from .polyhedra import AbstractPolyhedron


def tetrahedron() -> AbstractPolyhedron:
    return AbstractPolyhedron(4, [(0, 1, 2), (0, 3, 1), (1, 3, 2), (2, 3, 0)])


def cube() -> AbstractPolyhedron:
    return AbstractPolyhedron(8, [
        (0, 1, 2, 3),
        (7, 6, 5, 4),
        (0, 4, 5, 1),
        (1, 5, 6, 2),
        (2, 6, 7, 3),
        (3, 7, 4, 0),
    ])


def triangular_prism() -> AbstractPolyhedron:
    return AbstractPolyhedron(6, [
        (0, 1, 2),
        (5, 4, 3),
        (0, 3, 4, 1),
        (1, 4, 5, 2),
        (2, 5, 3, 0),
    ])


def triangular_bipyramid() -> AbstractPolyhedron:
    """The bipyramid over a triangle: equator 0,1,2 (degree 4), apexes 3,4."""
    return AbstractPolyhedron(5, [
        (0, 1, 3), (1, 2, 3), (2, 0, 3),
        (1, 0, 4), (2, 1, 4), (0, 2, 4),
    ])


def antiprism(n: int) -> AbstractPolyhedron:
    """n-antiprism: rings a_i = i and b_i = n+i, two belts of triangles.

    antiprism(3) is the octahedron.
    """
    if n < 3:
        raise DomainError("antiprism: requires n >= 3")
    a = list(range(n))
    b = [n + i for i in range(n)]
    faces = [tuple(a), tuple(reversed(b))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((a[i], a[j], b[i]))      # apex-down belt triangle
        faces.append((b[i], a[j], b[j]))      # apex-up belt triangle
    return AbstractPolyhedron(2 * n, faces)


def octahedron() -> AbstractPolyhedron:
    return antiprism(3)


def lobell(n: int) -> AbstractPolyhedron:
    """Loebell-type (2n+2)-hedron: two n-gons and two belts of n pentagons.

    Rings top-down: t_i = i, u_i = n+i, v_i = 2n+i, w_i = 3n+i.  lobell(5)
    is the dodecahedron.
    """
    if n < 3:
        raise DomainError("lobell: requires n >= 3")
    t = list(range(n))
    u = [n + i for i in range(n)]
    v = [2 * n + i for i in range(n)]
    w = [3 * n + i for i in range(n)]
    faces = [tuple(t), tuple(reversed(w))]
    for i in range(n):
        j = (i + 1) % n
        faces.append((t[i], u[i], v[i], u[j], t[j]))
        faces.append((v[i], u[j], v[j], w[j], w[i]))
    return AbstractPolyhedron(4 * n, faces)


def dodecahedron() -> AbstractPolyhedron:
    return lobell(5)


def p32() -> AbstractPolyhedron:
    return triangular_bipyramid()


def p28() -> AbstractPolyhedron:
    """Tetragonal trapezohedron: apexes 0 and 9 (degree 4), eight quads."""
    r = [1 + i for i in range(4)]
    q = [5 + i for i in range(4)]
    faces = []
    for i in range(4):
        j = (i + 1) % 4
        faces.append((0, r[i], q[i], r[j]))
        faces.append((q[i], 9, q[j], r[j]))
    return AbstractPolyhedron(10, faces)


def p34() -> AbstractPolyhedron:
    """Heptahedron with ideal triangle 0,1,2; belt 3,4,5; base vertex 6."""
    faces = [(0, 1, 2)]
    for i in range(3):
        j = (i + 1) % 3
        faces.append((i, 3 + i, j))             # belt triangle
        faces.append((j, 3 + j, 6, 3 + i))      # belt quadrilateral
    return AbstractPolyhedron(7, faces)


NAMED = {
    "tetrahedron": tetrahedron,
    "cube": cube,
    "triangular_prism": triangular_prism,
    "triangular_bipyramid": triangular_bipyramid,
    "octahedron": octahedron,
    "dodecahedron": dodecahedron,
    "P32": p32,
    "P28": p28,
    "P34": p34,
}
