"""Combinatorial model of abstract polyhedra and realizability checking.

An abstract polyhedron is a combinatorial 2-sphere presented as faces, each a
cyclic sequence of vertex indices.  This module validates that presentation,
derives counting statistics, builds the dual graph, detects prismatic
k-circuits, evaluates the four realizability conditions for right-angled
hyperbolic polyhedra, and produces canonical isomorphism certificates.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import (
    BAD_DEGREE,
    BAD_FACE,
    BAD_INDEX,
    DISCONNECTED,
    EDGE_FACE_COUNT,
    EULER,
    MULTI_ADJACENT_FACES,
    NOT_3_CONNECTED,
    DomainError,
    PolyhedronError,
)


@dataclass(frozen=True)
class AbstractPolyhedron:
    vertex_count: int
    faces: tuple

    def __post_init__(self):
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))

    def to_dict(self) -> dict:
        return {"vertex_count": self.vertex_count, "faces": [list(f) for f in self.faces]}


@dataclass(frozen=True)
class CombinatorialProfile:
    v_inf: int  # degree-4 (ideal) vertices
    v_f: int    # degree-3 (finite) vertices
    e: int
    f: int


@dataclass(frozen=True)
class FaceStatistics:
    p: dict          # face size -> count
    w: int           # sum of face sizes
    wi: int          # sum over faces of ideal vertices contained


@dataclass(frozen=True)
class DualGraph:
    face_count: int
    edges: tuple     # (i, j, primal edge (a, b)) with i < j, a < b

    def neighbors(self, i: int):
        for a, b, _ in self.edges:
            if a == i:
                yield b
            elif b == i:
                yield a


@dataclass(frozen=True)
class AndreevResult:
    passed: bool
    condition: int | None
    witness: object
    reading: str


@dataclass(frozen=True)
class LemmaResult:
    passed: bool
    face: tuple | None
    ideal_count: int | None


def load_polyhedron(source) -> AbstractPolyhedron:
    """Build an AbstractPolyhedron from a dict, JSON string, or file path."""
    if isinstance(source, AbstractPolyhedron):
        return source
    if isinstance(source, dict):
        data = source
    else:
        text = str(source)
        if text.lstrip().startswith("{"):
            data = json.loads(text)
        else:
            with open(text) as fh:
                data = json.load(fh)
    try:
        return AbstractPolyhedron(int(data["vertex_count"]), data["faces"])
    except (KeyError, TypeError) as exc:
        raise DomainError(f"polyhedron input missing field: {exc}") from exc


def _face_edges(face):
    n = len(face)
    for i in range(n):
        a, b = face[i], face[(i + 1) % n]
        yield (a, b) if a < b else (b, a)


def _edge_counts(p: AbstractPolyhedron) -> Counter:
    counts = Counter()
    for face in p.faces:
        counts.update(_face_edges(face))
    return counts


def _adjacency(p: AbstractPolyhedron) -> dict:
    adj = defaultdict(set)
    for face in p.faces:
        for a, b in _face_edges(face):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def _connected(adj: dict, vertices: set, removed=frozenset()) -> bool:
    alive = [v for v in vertices if v not in removed]
    if not alive:
        return False
    seen = {alive[0]}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for w in adj.get(v, ()):
            if w not in removed and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(alive)


def validate(p: AbstractPolyhedron) -> CombinatorialProfile:
    """Check all structural invariants; return the vertex/edge/face profile.

    Raises PolyhedronError with a stable code naming the first failed check:
    bad_index, bad_face, edge_face_count, multi_adjacent_faces, disconnected,
    not_3_connected, bad_degree, euler.
    """
    n = p.vertex_count
    for face in p.faces:
        for v in face:
            if not isinstance(v, int) or isinstance(v, bool) or not (0 <= v < n):
                raise PolyhedronError(BAD_INDEX, f"vertex index {v!r} outside [0, {n})")
    for face in p.faces:
        if len(face) < 3 or len(set(face)) != len(face):
            raise PolyhedronError(BAD_FACE, f"face {face} needs >= 3 distinct vertices")

    counts = _edge_counts(p)
    for edge, c in counts.items():
        if c != 2:
            raise PolyhedronError(EDGE_FACE_COUNT, f"edge {edge} lies in {c} faces, expected 2")

    by_edge = defaultdict(list)
    for fi, face in enumerate(p.faces):
        for edge in _face_edges(face):
            by_edge[edge].append(fi)
    pair_shares = Counter()
    for edge, fs in by_edge.items():
        pair_shares[tuple(sorted(fs))] += 1
    for (fa, fb), c in pair_shares.items():
        if c > 1:
            raise PolyhedronError(
                MULTI_ADJACENT_FACES, f"faces {fa} and {fb} share {c} edges")

    adj = _adjacency(p)
    vertices = set(range(n))
    if not _connected(adj, vertices):
        raise PolyhedronError(DISCONNECTED, "1-skeleton is not connected")

    if n >= 4:
        for u, w in combinations(range(n), 2):
            if not _connected(adj, vertices, removed=frozenset((u, w))):
                raise PolyhedronError(
                    NOT_3_CONNECTED, f"removing vertices {u},{w} disconnects the 1-skeleton")
    else:
        raise PolyhedronError(NOT_3_CONNECTED, "fewer than 4 vertices")

    degrees = {v: len(adj[v]) for v in range(n)}
    for v, d in degrees.items():
        if d not in (3, 4):
            raise PolyhedronError(BAD_DEGREE, f"vertex {v} has degree {d}, expected 3 or 4")

    e = len(counts)
    f = len(p.faces)
    if n - e + f != 2:
        raise PolyhedronError(EULER, f"V - E + F = {n - e + f}, expected 2")

    v_inf = sum(1 for d in degrees.values() if d == 4)
    return CombinatorialProfile(v_inf=v_inf, v_f=n - v_inf, e=e, f=f)


def face_statistics(p: AbstractPolyhedron) -> FaceStatistics:
    """Face vector p_n plus the weighted counts W and WI."""
    validate(p)
    adj = _adjacency(p)
    sizes = Counter(len(face) for face in p.faces)
    w = sum(len(face) for face in p.faces)
    wi = sum(1 for face in p.faces for v in face if len(adj[v]) == 4)
    return FaceStatistics(p=dict(sizes), w=w, wi=wi)


def dual_graph(p: AbstractPolyhedron) -> DualGraph:
    validate(p)
    by_edge = defaultdict(list)
    for fi, face in enumerate(p.faces):
        for edge in _face_edges(face):
            by_edge[edge].append(fi)
    dual_edges = []
    for edge, (fa, fb) in sorted(by_edge.items()):
        i, j = min(fa, fb), max(fa, fb)
        dual_edges.append((i, j, edge))
    dual_edges.sort()
    return DualGraph(face_count=len(p.faces), edges=tuple(dual_edges))


def _disjoint(e1, e2) -> bool:
    return not (set(e1) & set(e2))


def prismatic_circuits(p: AbstractPolyhedron, k: int) -> list:
    """All prismatic k-circuits of the dual graph, k in {3, 4}.

    A k-circuit is a simple k-cycle of faces; it is prismatic when the k
    primal edges it crosses are pairwise vertex-disjoint.  Circuits are
    returned as tuples of face indices in canonical cyclic order.
    """
    if k not in (3, 4):
        raise DomainError("prismatic_circuits: k must be 3 or 4")
    dg = dual_graph(p)
    edge_of = {}
    for i, j, primal in dg.edges:
        edge_of[(i, j)] = primal
        edge_of[(j, i)] = primal

    found = set()
    if k == 3:
        for fa, fb, fc in combinations(range(dg.face_count), 3):
            pairs = ((fa, fb), (fb, fc), (fa, fc))
            if all(pr in edge_of for pr in pairs):
                edges = [edge_of[pr] for pr in pairs]
                if all(_disjoint(x, y) for x, y in combinations(edges, 2)):
                    found.add((fa, fb, fc))
    else:
        for quad in combinations(range(dg.face_count), 4):
            for mid in permutations(quad[1:], 3):
                cycle = (quad[0],) + mid
                if cycle[1] > cycle[3]:
                    continue  # each 4-cycle once, up to direction
                pairs = [(cycle[i], cycle[(i + 1) % 4]) for i in range(4)]
                if not all(pr in edge_of for pr in pairs):
                    continue
                edges = [edge_of[pr] for pr in pairs]
                if all(_disjoint(x, y) for x, y in combinations(edges, 2)):
                    found.add(cycle)
    return sorted(found)


def _degree_map(p: AbstractPolyhedron) -> dict:
    adj = _adjacency(p)
    return {v: len(adj[v]) for v in range(p.vertex_count)}


READING_DISJOINT = "disjoint_endpoints"
READING_DISTINCT = "distinct_edges"


def andreev_check(p: AbstractPolyhedron, condition3_reading: str = READING_DISJOINT) -> AndreevResult:
    """Evaluate the four realizability conditions for right-angled polyhedra.

    (1) at least six faces; (2) all vertex degrees 3 or 4; (3) for any face
    triple (F_i, F_j, F_k) whose intersections F_i&F_j and F_j&F_k are edges
    with distinct endpoints, F_i and F_k are disjoint; (4) no prismatic
    k-circuits for k <= 4.

    Conditions are evaluated in the fixed order 4, 1, 2, 3 and the first
    failure is reported.  (A prismatic circuit is the most informative
    witness, and a polyhedron small enough to fail condition 1 cannot carry
    one: a prismatic 3-circuit needs six distinct vertices.)
    `condition3_reading` selects how "edges with distinct endpoints" is
    quantified: "disjoint_endpoints" (default) requires the two edges to
    share no vertex; "distinct_edges" only requires them to differ.
    """
    if condition3_reading not in (READING_DISJOINT, READING_DISTINCT):
        raise DomainError(f"unknown condition3 reading {condition3_reading!r}")
    validate(p)

    for k in (3, 4):
        circuits = prismatic_circuits(p, k)
        if circuits:
            return AndreevResult(False, 4, circuits[0], condition3_reading)

    if len(p.faces) < 6:
        return AndreevResult(False, 1, len(p.faces), condition3_reading)

    degrees = _degree_map(p)
    for v, d in degrees.items():
        if d not in (3, 4):  # unreachable after validate; kept for clarity
            return AndreevResult(False, 2, (v, d), condition3_reading)

    dg = dual_graph(p)
    edge_of = {}
    for i, j, primal in dg.edges:
        edge_of[(i, j)] = primal
        edge_of[(j, i)] = primal
    face_sets = [set(face) for face in p.faces]
    nbrs = defaultdict(set)
    for i, j, _ in dg.edges:
        nbrs[i].add(j)
        nbrs[j].add(i)
    for fj in range(dg.face_count):
        for fi, fk in combinations(sorted(nbrs[fj]), 2):
            e_ij = edge_of[(fi, fj)]
            e_jk = edge_of[(fj, fk)]
            if condition3_reading == READING_DISJOINT:
                if not _disjoint(e_ij, e_jk):
                    continue
            else:
                if e_ij == e_jk:
                    continue
            if face_sets[fi] & face_sets[fk]:
                return AndreevResult(False, 3, (fi, fj, fk), condition3_reading)

    return AndreevResult(True, None, None, condition3_reading)


def lemma_rem_check(p: AbstractPolyhedron) -> LemmaResult:
    """Necessary ideal-vertex counts per face: >=2 on triangles, >=1 on quads."""
    validate(p)
    degrees = _degree_map(p)
    for face in p.faces:
        ideal = sum(1 for v in face if degrees[v] == 4)
        if len(face) == 3 and ideal < 2:
            return LemmaResult(False, face, ideal)
        if len(face) == 4 and ideal < 1:
            return LemmaResult(False, face, ideal)
    return LemmaResult(True, None, None)


# --- canonical certificates ------------------------------------------------
#
# The faces are first oriented consistently (possible exactly when the
# complex is a sphere, which validate guarantees).  The oriented faces induce
# a rotation system: around each vertex the incident edges form a single
# cycle.  A breadth-first canonical labeling is then computed from every
# starting directed edge in both senses of rotation, and the lexicographic
# minimum serialization is the certificate.  Two polyhedra are isomorphic
# (allowing reflection) iff their certificates are equal.

def _oriented_faces(p: AbstractPolyhedron) -> list:
    by_edge = defaultdict(list)
    for fi, face in enumerate(p.faces):
        for edge in _face_edges(face):
            by_edge[edge].append(fi)
    adj_faces = defaultdict(set)
    for edge, (fa, fb) in by_edge.items():
        adj_faces[fa].add(fb)
        adj_faces[fb].add(fa)

    def directed_edges(face):
        return {(face[i], face[(i + 1) % len(face)]) for i in range(len(face))}

    oriented = {0: tuple(p.faces[0])}
    queue = deque([0])
    while queue:
        fi = queue.popleft()
        cur = directed_edges(oriented[fi])
        for fj in adj_faces[fi]:
            if fj in oriented:
                continue
            cand = tuple(p.faces[fj])
            # the shared edge must be traversed oppositely by the neighbor
            if directed_edges(cand) & cur:
                cand = tuple(reversed(cand))
            oriented[fj] = cand
            queue.append(fj)
    return [oriented[i] for i in range(len(p.faces))]


def _rotation_system(faces) -> dict:
    # next_around[(v, a)] = (v, b) where some oriented face reads (a, v, b)
    nxt = {}
    for face in faces:
        n = len(face)
        for i in range(n):
            a, v, b = face[i], face[(i + 1) % n], face[(i + 2) % n]
            nxt[(v, b)] = (v, a)
    return nxt


def canonical_form(p: AbstractPolyhedron) -> str:
    """Canonical certificate, invariant under relabeling and reflection."""
    validate(p)
    faces = _oriented_faces(p)
    rotation = _rotation_system(faces)
    inverse = {v: k for k, v in rotation.items()}
    best = None
    darts = sorted(rotation.keys())
    for rot in (rotation, inverse):  # second pass covers the mirror image
        for start in darts:
            code = _bfs_code(p.vertex_count, rot, start)
            if best is None or code < best:
                best = code
    payload = ";".join(",".join(str(x) for x in row) for row in best)
    return f"c{p.vertex_count}|{payload}"


def _bfs_code(n, rotation, start) -> tuple:
    labels = {start[0]: 0, start[1]: 1}
    order = [start[0], start[1]]
    entry = {start[0]: start, start[1]: (start[1], start[0])}
    rows = []
    idx = 0
    while idx < len(order):
        v = order[idx]
        idx += 1
        first = entry[v]
        row = []
        dart = first
        while True:
            w = dart[1]
            if w not in labels:
                labels[w] = len(order)
                order.append(w)
                entry[w] = (w, v)
            row.append(labels[w])
            dart = rotation[dart]
            if dart == first:
                break
        rows.append(tuple(row))
    if len(order) != n:  # cannot happen for validated input
        raise PolyhedronError(DISCONNECTED, "rotation system does not cover all vertices")
    return tuple(rows)


def is_isomorphic(p: AbstractPolyhedron, q: AbstractPolyhedron) -> bool:
    return canonical_form(p) == canonical_form(q)


def polyhedron_from_certificate(cert: str) -> AbstractPolyhedron:
    """Rebuild a representative polyhedron from a canonical certificate.

    The certificate rows are the rotation cycles of the canonically labeled
    map, so the face set can be recovered by tracing dart orbits.  The result
    is validated and its own certificate is required to round-trip.
    """
    head, sep, payload = cert.partition("|")
    if not sep or not head.startswith("c"):
        raise DomainError(f"malformed certificate {cert!r}")
    try:
        n = int(head[1:])
        rows = [tuple(int(x) for x in row.split(",")) for row in payload.split(";")]
    except ValueError as exc:
        raise DomainError(f"malformed certificate {cert!r}") from exc
    if len(rows) != n:
        raise DomainError(f"certificate row count {len(rows)} != vertex count {n}")

    pos = {}
    for v, row in enumerate(rows):
        for i, w in enumerate(row):
            if not 0 <= w < n or (v, w) in pos:
                raise DomainError(f"certificate row for vertex {v} is not a rotation")
            pos[(v, w)] = i
    for v, w in pos:
        if (w, v) not in pos:
            raise DomainError(f"certificate dart ({v},{w}) has no reverse")

    # Rows list neighbors in forward rotation order, so within a face the
    # dart (u, v) is followed by (v, w) with w one step before u around v.
    faces = []
    seen = set()
    for d0 in sorted(pos):
        if d0 in seen:
            continue
        face = []
        u, v = d0
        while (u, v) not in seen:
            seen.add((u, v))
            face.append(u)
            row = rows[v]
            w = row[(pos[(v, u)] - 1) % len(row)]
            u, v = v, w
        if (u, v) != d0:
            raise DomainError("certificate face walk does not close")
        faces.append(tuple(face))

    p = AbstractPolyhedron(n, faces)
    try:
        validate(p)
    except PolyhedronError as exc:
        raise DomainError(f"certificate does not encode a valid polyhedron: {exc}") from exc
    if canonical_form(p) != cert:
        raise DomainError("string is not a canonical certificate")
    return p
