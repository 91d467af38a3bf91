"""Vinberg's arithmeticity criterion for non-cocompact reflection groups.

For a reflection group whose fundamental polyhedron is non-compact, the
group is arithmetic iff every cyclic product of the doubled Gram matrix is
a rational integer.  With dihedral angles drawn from {pi/2, pi/3, pi/4,
pi/6, 0} the doubled Gram entries live in Z[sqrt(2), sqrt(3)], so the
check runs in exact arithmetic.  Whether the group actually is
non-cocompact is a hypothesis the caller must supply; it is not verified
here.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import DomainError
from .surd import SurdInteger

INF = math.inf

# label m -> doubled Gram entry -2*cos(pi/m)
_ENTRY = {
    2: SurdInteger(0),
    3: SurdInteger(-1),
    4: SurdInteger(0, -1),
    6: SurdInteger(0, 0, -1),
    INF: SurdInteger(-2),
}


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of Coxeter labels; diagonal 1, off-diagonal >= 2 or inf."""

    size: int
    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(tuple(row) for row in self.m))
        n = self.size
        if len(self.m) != n or any(len(row) != n for row in self.m):
            raise DomainError(f"Coxeter matrix must be {n}x{n}")
        for i in range(n):
            if self.m[i][i] != 1:
                raise DomainError(f"Coxeter matrix diagonal entry ({i},{i}) must be 1")
            for j in range(n):
                if i == j:
                    continue
                entry = self.m[i][j]
                if entry != self.m[j][i]:
                    raise DomainError(f"Coxeter matrix not symmetric at ({i},{j})")
                if entry == INF:
                    continue
                if isinstance(entry, bool) or not isinstance(entry, int) or entry < 2:
                    raise DomainError(
                        f"Coxeter label at ({i},{j}) must be an integer >= 2 or inf")


@dataclass(frozen=True)
class ExactGramMatrix:
    """Doubled Gram matrix 2*A: symmetric, diagonal 2, entries in Z[sqrt2, sqrt3]."""

    size: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(row) for row in self.entries))
        n = self.size
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise DomainError(f"Gram matrix must be {n}x{n}")
        two = SurdInteger(2)
        for i in range(n):
            if self.entries[i][i] != two:
                raise DomainError(f"doubled Gram diagonal entry ({i},{i}) must be 2")
            for j in range(n):
                if not isinstance(self.entries[i][j], SurdInteger):
                    raise DomainError(f"Gram entry ({i},{j}) is not a SurdInteger")
                if self.entries[i][j] != self.entries[j][i]:
                    raise DomainError(f"Gram matrix not symmetric at ({i},{j})")


@dataclass(frozen=True)
class ArithmeticityResult:
    arithmetic: bool
    witness_cycle: tuple | None
    witness_product: SurdInteger | None
    cycles_checked: int
    max_len: int

    def to_dict(self) -> dict:
        return {
            "arithmetic": self.arithmetic,
            "witness_cycle": None if self.witness_cycle is None else list(self.witness_cycle),
            "witness_product": None if self.witness_product is None else str(self.witness_product),
            "cycles_checked": self.cycles_checked,
            "max_len": self.max_len,
        }


def load_coxeter(source) -> CoxeterMatrix:
    """Build a CoxeterMatrix from a dict, JSON string, or file path.

    The file format is {"size": N, "m": [[1, 4, ...], ...]} with the string
    "inf" standing for an unbounded label.
    """
    if isinstance(source, CoxeterMatrix):
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
        size = int(data["size"])
        raw = data["m"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"diagram input missing field: {exc}") from exc

    rows = []
    for row in raw:
        parsed = []
        for entry in row:
            if isinstance(entry, str):
                if entry.strip().lower() != "inf":
                    raise DomainError(f"unknown Coxeter label {entry!r}")
                parsed.append(INF)
            elif entry == INF:
                parsed.append(INF)
            else:
                parsed.append(entry)
        rows.append(tuple(parsed))
    return CoxeterMatrix(size=size, m=tuple(rows))


def gram_from_coxeter(matrix) -> ExactGramMatrix:
    """Doubled Gram matrix of a Coxeter diagram: entry -2cos(pi/m_ij).

    Labels map as 2 -> 0, 3 -> -1, 4 -> -sqrt(2), 6 -> -sqrt(3),
    inf -> -2.  Any other label leaves the ring and is rejected.
    """
    matrix = load_coxeter(matrix)
    n = matrix.size
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(SurdInteger(2))
                continue
            label = matrix.m[i][j]
            entry = _ENTRY.get(label)
            if entry is None:
                raise DomainError(
                    f"Coxeter label {label} at ({i},{j}): entry outside Z[sqrt2, sqrt3]")
            row.append(entry)
        rows.append(tuple(row))
    return ExactGramMatrix(size=n, entries=tuple(rows))


def _simple_cycles(gram: ExactGramMatrix, max_len: int):
    """Yield (cycle, product) over simple cycles of length 2..max_len.

    Cycles are emitted once (not once per orientation or starting point):
    the smallest vertex leads, and for length >= 3 the second vertex is
    smaller than the last.  The reverse orientation has the same product
    because the matrix is symmetric.  Order of emission is deterministic.
    """
    n = gram.size
    entries = gram.entries
    nonzero = [[j for j in range(n) if j != i and entries[i][j]] for i in range(n)]

    for i in range(n):
        for j in nonzero[i]:
            if j > i:
                yield (i, j), entries[i][j] * entries[j][i]

    if max_len < 3:
        return

    def walk(start, path, product, used):
        last = path[-1]
        for nxt in nonzero[last]:
            if nxt == start and len(path) >= 3:
                if path[1] < path[-1]:
                    yield tuple(path), product * entries[last][start]
            elif nxt > start and nxt not in used and len(path) < max_len:
                used.add(nxt)
                path.append(nxt)
                yield from walk(start, path, product * entries[last][nxt], used)
                path.pop()
                used.discard(nxt)

    for start in range(n):
        yield from walk(start, [start], SurdInteger(1), {start})


def cyclic_products(gram, max_len: int) -> set:
    """Products over all simple cycles of length 2..max_len, as a set."""
    gram = _as_gram(gram)
    if isinstance(max_len, bool) or not isinstance(max_len, int) or max_len < 2:
        raise DomainError("max_len must be an integer >= 2")
    return {product for _, product in _simple_cycles(gram, max_len)}


def is_arithmetic_noncocompact(gram, max_len=None) -> ArithmeticityResult:
    """Exact Vinberg check: are all cyclic products rational integers?

    Simple cycles up to max_len (default: the matrix size) together with
    the 2-cycles generate every cyclic product multiplicatively, so
    checking them decides the criterion.  The non-cocompactness of the
    group is assumed, not checked.
    """
    gram = _as_gram(gram)
    if max_len is None:
        max_len = max(gram.size, 2)
    if isinstance(max_len, bool) or not isinstance(max_len, int) or max_len < 2:
        raise DomainError("max_len must be an integer >= 2")

    checked = 0
    witness_cycle = None
    witness_product = None
    for cycle, product in _simple_cycles(gram, max_len):
        checked += 1
        if witness_cycle is None and not product.is_rational_integer:
            witness_cycle = cycle
            witness_product = product
    return ArithmeticityResult(
        arithmetic=witness_cycle is None,
        witness_cycle=witness_cycle,
        witness_product=witness_product,
        cycles_checked=checked,
        max_len=max_len,
    )


def _as_gram(gram) -> ExactGramMatrix:
    if isinstance(gram, ExactGramMatrix):
        return gram
    if isinstance(gram, CoxeterMatrix):
        return gram_from_coxeter(gram)
    raise DomainError("expected an ExactGramMatrix or CoxeterMatrix")
