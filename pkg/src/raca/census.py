"""Census of small right-angled combinatorial types and theorem verification.

The census enumerates, for a candidate vertex count pair (V_ideal, V_finite),
every abstract polyhedron with exactly that many degree-4 and degree-3
vertices up to isomorphism, then filters by the realizability conditions.
On top of the census sits the end-to-end verification that Catalan's
constant is the minimal volume of a right-angled hyperbolic polyhedron,
attained exactly once.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from . import catalog
from .errors import DomainError, PolyhedronError, RacaError, ResourceLimitError
from .lobachevsky import catalan_constant, v_oct
from .polyhedra import (
    READING_DISJOINT,
    READING_DISTINCT,
    AbstractPolyhedron,
    andreev_check,
    canonical_form,
    face_statistics,
    lemma_rem_check,
    polyhedron_from_certificate,
    validate,
)
from .volumes import VolumeReport, lobell_volume, mixed_lower_bound, named_volume

# Imported fact (Nonaka): a right-angled hyperbolic polyhedron with exactly
# one ideal vertex has at least 12 faces.  Used as a constant, not re-derived.
MIN_FACES_ONE_IDEAL = 12
MIN_FACES_ONE_IDEAL_SOURCE = (
    "Nonaka: face count of a right-angled polyhedron with one ideal vertex")

_ENUMERATION_CAP = 12  # total vertex count beyond this is out of scope


@dataclass(frozen=True, order=True)
class CandidatePair:
    """Vertex counts (V_ideal, V_finite) admissible for volume at most G.

    The admissible region is cut out by: V_finite even, V_ideal >= 2,
    V_finite >= 2, V_ideal + V_finite/2 >= 4 (at least six faces), and
    4*V_ideal + V_finite <= 16 (volume lower bound at most G).
    """

    v_inf: int
    v_f: int

    def __post_init__(self):
        vi, vf = self.v_inf, self.v_f
        if not isinstance(vi, int) or not isinstance(vf, int) \
                or isinstance(vi, bool) or isinstance(vf, bool):
            raise DomainError("candidate pair: vertex counts must be integers")
        if vf % 2 != 0:
            raise DomainError("candidate pair: V_finite must be even")
        if vi < 2:
            raise DomainError("candidate pair: V_ideal must be at least 2")
        if vf < 2:
            raise DomainError("candidate pair: V_finite must be at least 2")
        if 2 * vi + vf < 8:
            raise DomainError("candidate pair: V_ideal + V_finite/2 must be at least 4")
        if 4 * vi + vf > 16:
            raise DomainError("candidate pair: 4*V_ideal + V_finite must be at most 16")

    def to_dict(self) -> dict:
        return {"v_ideal": self.v_inf, "v_finite": self.v_f}


@dataclass(frozen=True)
class CensusRecord:
    pair: CandidatePair
    realizable_types: tuple      # sorted canonical certificates
    volume: VolumeReport | None  # attached when unique with a closed form
    polyhedra: tuple             # representative per certificate
    condition3_reading: str

    def to_dict(self) -> dict:
        return {
            "pair": self.pair.to_dict(),
            "count": len(self.realizable_types),
            "realizable_types": list(self.realizable_types),
            "volume": None if self.volume is None else {
                "value": self.volume.value,
                "formula": self.volume.formula,
                "error_bound": self.volume.abs_error_bound,
            },
            "condition3_reading": self.condition3_reading,
        }


@dataclass(frozen=True)
class TheoremReport:
    minimal_volume: float
    witness: str | None
    uniqueness: bool
    branch_log: tuple
    verified: bool
    failures: tuple
    condition3_reading: str

    def to_dict(self) -> dict:
        return {
            "minimal_volume": self.minimal_volume,
            "witness": self.witness,
            "uniqueness": self.uniqueness,
            "verified": self.verified,
            "failures": list(self.failures),
            "condition3_reading": self.condition3_reading,
            "branch_log": [dict(entry) for entry in self.branch_log],
        }


def candidate_pairs() -> list:
    """Integer points of the admissible region, in lexicographic order."""
    pairs = []
    vi = 2
    while 4 * vi + 2 <= 16:
        vf = 2
        while 4 * vi + vf <= 16:
            if 2 * vi + vf >= 8:
                pairs.append(CandidatePair(vi, vf))
            vf += 2
        vi += 1
    return pairs


# --- degree-sequence backtracker --------------------------------------------
#
# Vertices are wired in index order; step i chooses the full set of neighbors
# of vertex i among higher indices.  Vertices j > i that agree in target
# degree and in adjacency to the already wired prefix are interchangeable, so
# only choices taking a prefix of each such group are explored (any other
# choice is isomorphic to a prefix choice via a group-internal swap).  The
# final certificate dedup makes the output independent of this pruning.

def _candidate_groups(i, degrees, adj):
    n = len(degrees)
    groups = {}
    order = []
    for j in range(i + 1, n):
        if len(adj[j]) < degrees[j]:
            key = (degrees[j], tuple(sorted(adj[j])))
            if key not in groups:
                groups[key] = []
                order.append(key)
            groups[key].append(j)
    return [groups[k] for k in order]


def _count_vectors(sizes, need):
    vectors = []
    tail = [0] * (len(sizes) + 1)
    for g in range(len(sizes) - 1, -1, -1):
        tail[g] = tail[g + 1] + sizes[g]

    def rec(g, left, acc):
        if g == len(sizes):
            if left == 0:
                vectors.append(tuple(acc))
            return
        hi = min(sizes[g], left)
        lo = max(0, left - tail[g + 1])
        for t in range(hi, lo - 1, -1):
            acc.append(t)
            rec(g + 1, left - t, acc)
            acc.pop()

    rec(0, need, [])
    return vectors


def _canonical_combos(groups, need, reverse):
    sizes = [len(g) for g in groups]
    if sum(sizes) < need:
        return []
    combos = []
    for counts in _count_vectors(sizes, need):
        combo = []
        for group, t in zip(groups, counts):
            combo.extend(group[:t])
        combos.append(tuple(combo))
    if reverse:
        combos.reverse()
    return combos


def _feasible(degrees, adj, i):
    n = len(degrees)
    total = 0
    for j in range(i + 1, n):
        rem = degrees[j] - len(adj[j])
        if rem > n - i - 2:
            return False
        total += rem
    return total % 2 == 0


def _embedding_faces(embedding):
    seen = set()
    faces = []
    for dart in embedding.edges():
        if dart in seen:
            continue
        walk = embedding.traverse_face(*dart, mark_half_edges=seen)
        faces.append(tuple(walk))
    return faces


def _certify(degrees, adj):
    """Certificate of the completed graph if it is a sphere type, else None."""
    n = len(degrees)
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for v in range(n):
        for w in adj[v]:
            if v < w:
                graph.add_edge(v, w)
    if not nx.is_connected(graph):
        return None
    planar, embedding = nx.check_planarity(graph)
    if not planar:
        return None
    faces = _embedding_faces(embedding)
    p = AbstractPolyhedron(n, faces)
    try:
        validate(p)
    except PolyhedronError:
        return None
    return canonical_form(p)


def _extend(degrees, adj, i, reverse, out):
    n = len(degrees)
    if i == n:
        cert = _certify(degrees, adj)
        if cert is not None:
            out.add(cert)
        return
    need = degrees[i] - len(adj[i])
    if need < 0:
        return
    groups = _candidate_groups(i, degrees, adj)
    for combo in _canonical_combos(groups, need, reverse):
        for j in combo:
            adj[i].add(j)
            adj[j].add(i)
        if _feasible(degrees, adj, i):
            _extend(degrees, adj, i + 1, reverse, out)
        for j in combo:
            adj[i].remove(j)
            adj[j].remove(i)


def _prefixes(degrees, depth, reverse):
    """Partial edge sets after wiring vertices 0..depth-1, for task splitting."""
    n = len(degrees)
    states = []
    adj = [set() for _ in range(n)]

    def rec(i):
        if i == depth:
            states.append(tuple(sorted(
                (v, w) for v in range(n) for w in adj[v] if v < w)))
            return
        need = degrees[i] - len(adj[i])
        for combo in _canonical_combos(_candidate_groups(i, degrees, adj), need, reverse):
            for j in combo:
                adj[i].add(j)
                adj[j].add(i)
            if _feasible(degrees, adj, i):
                rec(i + 1)
            for j in combo:
                adj[i].remove(j)
                adj[j].remove(i)

    rec(0)
    return states


def _search_worker(args):
    vi, vf, edges, depth, reverse = args
    degrees = (4,) * vi + (3,) * vf
    adj = [set() for _ in range(len(degrees))]
    for v, w in edges:
        adj[v].add(w)
        adj[w].add(v)
    out = set()
    _extend(degrees, adj, depth, reverse, out)
    return out


def _resolve_workers(workers):
    if workers is not None:
        if not isinstance(workers, int) or isinstance(workers, bool) or workers < 1:
            raise DomainError("workers must be a positive integer")
    cap_text = os.environ.get("RACA_THREADS", "").strip()
    cap = 0
    if cap_text:
        try:
            cap = int(cap_text)
        except ValueError:
            raise DomainError(f"RACA_THREADS must be an integer, got {cap_text!r}")
        cap = max(cap, 0)
    # Auto means serial: the census sizes here are small enough that process
    # startup dominates any fan-out win.
    effective = workers if workers is not None else 1
    if cap:
        effective = min(effective, cap)
    return max(effective, 1)


@lru_cache(maxsize=None)
def _closed_form_names() -> dict:
    return {
        canonical_form(catalog.p32()): "P32",
        canonical_form(catalog.p28()): "P28",
        canonical_form(catalog.p34()): "P34",
    }


def _type_volume(cert: str, pair: CandidatePair):
    """(VolumeReport, closed_form_known) for one census survivor."""
    name = _closed_form_names().get(cert)
    if name is not None:
        return named_volume(name), True
    coeff = (4 * pair.v_inf + pair.v_f - 8) / 8.0
    g = catalan_constant()
    return VolumeReport(
        value=mixed_lower_bound(pair.v_inf, pair.v_f),
        formula=f"lower bound ({4 * pair.v_inf + pair.v_f} - 8)*G/8",
        abs_error_bound=abs(coeff) * g.abs_error_bound,
    ), False


@lru_cache(maxsize=None)
def _enumerate_cached(vi, vf, reading, reverse, workers):
    degrees = (4,) * vi + (3,) * vf
    certs = set()
    if workers > 1:
        depth = 2 if len(degrees) > 4 else 1
        tasks = [(vi, vf, state, depth, reverse)
                 for state in _prefixes(degrees, depth, reverse)]
        if len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
                for part in pool.map(_search_worker, tasks):
                    certs.update(part)
        else:
            workers = 1
    if workers <= 1:
        adj = [set() for _ in degrees]
        _extend(degrees, adj, 0, reverse, certs)

    survivors = []
    reps = []
    for cert in sorted(certs):
        p = polyhedron_from_certificate(cert)
        profile = validate(p)
        stats = face_statistics(p)
        if (profile.v_inf, profile.v_f) != (vi, vf):
            raise RacaError(f"census invariant violated: degree partition of {cert}")
        if profile.f != vi + vf // 2 + 2:
            raise RacaError(f"census invariant violated: F != V_ideal + V_finite/2 + 2 for {cert}")
        if stats.w != 4 * vi + 3 * vf or stats.wi != 4 * vi:
            raise RacaError(f"census invariant violated: W identity for {cert}")
        result = andreev_check(p, condition3_reading=reading)
        if not result.passed:
            continue
        if not lemma_rem_check(p).passed:
            raise RacaError(
                f"census invariant violated: realizable type fails the face lemma: {cert}")
        survivors.append(cert)
        reps.append(p)

    volume = None
    if len(survivors) == 1:
        report, known = _type_volume(survivors[0], CandidatePair(vi, vf))
        if known:
            volume = report
    return CensusRecord(
        pair=CandidatePair(vi, vf),
        realizable_types=tuple(survivors),
        volume=volume,
        polyhedra=tuple(reps),
        condition3_reading=reading,
    )


def enumerate_types(pair, *, condition3_reading: str = READING_DISJOINT,
                    reverse_branching: bool = False, workers=None) -> CensusRecord:
    """All realizable combinatorial types for a candidate pair.

    Enumerates every abstract polyhedron with exactly pair.v_inf degree-4
    and pair.v_f degree-3 vertices up to isomorphism (reflections included),
    keeps those passing andreev_check, and returns sorted certificates.
    The result is independent of branching order and worker count.
    """
    if not isinstance(pair, CandidatePair):
        pair = CandidatePair(*pair)
    if condition3_reading not in (READING_DISJOINT, READING_DISTINCT):
        raise DomainError(f"unknown condition3 reading {condition3_reading!r}")
    if pair.v_inf + pair.v_f > _ENUMERATION_CAP:
        raise ResourceLimitError(
            f"enumeration limited to V_ideal + V_finite <= {_ENUMERATION_CAP}")
    effective = _resolve_workers(workers)
    return _enumerate_cached(
        pair.v_inf, pair.v_f, condition3_reading, bool(reverse_branching), effective)


def verify_minimality(*, condition3_reading: str = READING_DISJOINT,
                      workers=None) -> TheoremReport:
    """Machine verification that G is the minimal volume, attained once.

    Walks the case split: polyhedra that are all-ideal, compact, or have a
    single ideal vertex are bounded below away from G; the remaining shapes
    fall into finitely many vertex-count pairs, each of which is censused
    exhaustively and has its realizable types priced by closed forms.  Any
    inconsistency is reported in `failures`, never silently absorbed.
    """
    g_val = catalan_constant().value
    log = []
    failures = []

    ideal_bound = v_oct().value
    log.append({
        "case": "all vertices ideal",
        "lower_bound": ideal_bound,
        "statement": "volume >= vol(ideal octahedron) = 8*L(pi/4) = 4G",
    })
    if not ideal_bound > g_val:
        failures.append("ideal branch: octahedron volume does not exceed G")

    compact_bound = lobell_volume(5).value
    log.append({
        "case": "no ideal vertices",
        "lower_bound": compact_bound,
        "statement": "volume >= vol(Lobell(5))",
    })
    if not compact_bound > g_val:
        failures.append("compact branch: Lobell(5) volume does not exceed G")

    vf_min = 2 * (MIN_FACES_ONE_IDEAL - 3)  # F = V_finite/2 + 3 when V_ideal = 1
    one_ideal_bound = mixed_lower_bound(1, vf_min)
    log.append({
        "case": "one ideal vertex",
        "min_faces": MIN_FACES_ONE_IDEAL,
        "min_finite_vertices": vf_min,
        "lower_bound": one_ideal_bound,
        "statement": "volume >= (4*1 + V_finite - 8)*G/8 >= 14G/8",
        "source": MIN_FACES_ONE_IDEAL_SOURCE,
    })
    if not one_ideal_bound > g_val:
        failures.append("one-ideal branch: 14G/8 bound does not exceed G")

    pairs = candidate_pairs()
    log.append({
        "case": "candidate region",
        "pairs": [[p.v_inf, p.v_f] for p in pairs],
    })

    priced = []
    for pair in pairs:
        try:
            record = enumerate_types(
                pair, condition3_reading=condition3_reading, workers=workers)
        except RacaError as exc:
            failures.append(f"census ({pair.v_inf},{pair.v_f}) failed: {exc}")
            continue
        types = []
        for cert in record.realizable_types:
            report, known = _type_volume(cert, pair)
            if not known:
                failures.append(
                    f"census ({pair.v_inf},{pair.v_f}): type without a closed form, "
                    f"only bounded below by {report.value:.6f}")
            types.append({
                "certificate": cert,
                "volume": report.value,
                "formula": report.formula,
                "closed_form": known,
            })
            priced.append((report.value, cert, known))
        log.append({
            "case": f"census ({pair.v_inf},{pair.v_f})",
            "realizable": len(record.realizable_types),
            "types": types,
        })

    if not priced:
        failures.append("census produced no realizable types at all")
        minimal = float("nan")
        witness = None
        unique = False
    else:
        minimal = min(value for value, _, _ in priced)
        attaining = [cert for value, cert, _ in priced if abs(value - minimal) <= 1e-12]
        witness = attaining[0]
        unique = len(attaining) == 1
        if not unique:
            failures.append("minimal volume attained by more than one type")
        if abs(minimal - g_val) > 1e-9:
            failures.append(
                f"minimal volume {minimal!r} does not match Catalan's constant")
        if witness != canonical_form(catalog.p32()):
            failures.append("minimal type is not the triangular bipyramid")

    return TheoremReport(
        minimal_volume=minimal,
        witness=witness,
        uniqueness=unique,
        branch_log=tuple(log),
        verified=not failures,
        failures=tuple(failures),
        condition3_reading=condition3_reading,
    )
