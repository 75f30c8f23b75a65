"""Generalised Cartan matrices, symmetrisation and subdiagram types."""

import json
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (AxiomC1Violated, AxiomC2Violated, AxiomC3Violated,
                     DimensionMismatch, EmptySubset, NotSquare,
                     NotSymmetrisable, IndexOutOfRange)
from .linalg import determinant, frac_str

FINITE = "Finite"
AFFINE = "Affine"
INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class GCM:
    """A validated generalised Cartan matrix (use :func:`validate_gcm`)."""

    entries: tuple

    @property
    def n(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self):
        return [list(r) for r in self.entries]

    def to_json(self):
        return json.dumps({"matrix": self.rows()})

    def check_index(self, i):
        """Validate a 1-based generator index and return it 0-based."""
        if not isinstance(i, int) or not 1 <= i <= self.n:
            raise IndexOutOfRange(f"index {i} outside 1..{self.n}")
        return i - 1


@dataclass(frozen=True)
class SymmetrizationData:
    """``A = D B`` with ``D = diag(d)`` positive and ``B`` symmetric."""

    d: tuple
    b: tuple

    def to_dict(self):
        return {"d": [frac_str(x) for x in self.d],
                "b": [[frac_str(x) for x in row] for row in self.b]}


def validate_gcm(matrix):
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare(f"expected a non-empty square matrix, got {rows!r}")
    for r in rows:
        for v in r:
            if isinstance(v, bool) or int(v) != v:
                raise ValueError(f"entries must be integers, got {v!r}")
    rows = [[int(v) for v in r] for r in rows]
    for i in range(n):
        if rows[i][i] != 2:
            raise AxiomC1Violated(i + 1)
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] > 0:
                raise AxiomC2Violated(i + 1, j + 1)
    for i in range(n):
        for j in range(i + 1, n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise AxiomC3Violated(i + 1, j + 1)
    return GCM(tuple(tuple(r) for r in rows))


def load_gcm(path):
    with open(path) as fh:
        doc = json.load(fh)
    return validate_gcm(doc["matrix"])


def diagram_edges(a):
    """Edges ``(i, j)``, 1-based with ``i < j``, of the diagram of ``a``."""
    return [(i + 1, j + 1) for i in range(a.n) for j in range(i + 1, a.n)
            if a[i, j] < 0]


def _components(a, vertices):
    """Connected components (sorted 0-based lists) of the induced subgraph."""
    vertices = sorted(vertices)
    left = set(vertices)
    comps = []
    for v in vertices:
        if v not in left:
            continue
        comp, queue = [], deque([v])
        left.discard(v)
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in sorted(left):
                if a[u, w] < 0:
                    left.discard(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def components(a, subset=None):
    """Connected components of the diagram (or of a subdiagram), 1-based."""
    verts = range(a.n) if subset is None else [a.check_index(i) for i in subset]
    return [[i + 1 for i in c] for c in _components(a, verts)]


def is_connected(a, subset):
    subset = list(subset)
    return bool(subset) and len(components(a, subset)) == 1


def symmetrize(a):
    n = a.n
    d = [None] * n
    for comp in _components(a, range(n)):
        root = comp[0]
        d[root] = Fraction(1)
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in comp:
                if a[i, j] < 0 and d[j] is None:
                    # a_ij / d_i = a_ji / d_j
                    d[j] = d[i] * Fraction(a[j, i], a[i, j])
                    queue.append(j)
        for i in comp:
            for j in comp:
                if i != j and a[i, j] < 0 and Fraction(a[i, j]) / d[i] != Fraction(a[j, i]) / d[j]:
                    raise NotSymmetrisable(
                        f"inconsistent cycle through a[{i + 1}][{j + 1}]")
        m = min(d[i] for i in comp)
        for i in comp:
            d[i] /= m
    b = tuple(tuple(Fraction(a[i, j]) / d[i] for j in range(n)) for i in range(n))
    return SymmetrizationData(tuple(d), b)


def _principal_minors_positive(rows, idx):
    for size in range(1, len(idx) + 1):
        for sub in combinations(idx, size):
            if determinant([[rows[i][j] for j in sub] for i in sub]) <= 0:
                return False
    return True


def _component_type(a, comp):
    rows = a.rows()
    if _principal_minors_positive(rows, comp):
        return FINITE
    det = determinant([[rows[i][j] for j in comp] for i in comp])
    if det == 0:
        proper_ok = all(
            determinant([[rows[i][j] for j in sub] for i in sub]) > 0
            for size in range(1, len(comp))
            for sub in combinations(comp, size))
        if proper_ok:
            return AFFINE
    return INDEFINITE


def classify_subdiagram(a, subset=None):
    """Type of each indecomposable component of the subdiagram on ``subset``.

    Returns a list of ``(component, type)`` pairs with 1-based components.
    """
    if subset is None:
        subset = range(1, a.n + 1)
    subset = list(subset)
    if not subset:
        raise EmptySubset("subset must be non-empty")
    idx = [a.check_index(i) for i in subset]
    return [([i + 1 for i in comp], _component_type(a, comp))
            for comp in _components(a, idx)]


def has_affine_subdiagram(a):
    """Whether some connected subdiagram of the diagram is of affine type."""
    for size in range(2, a.n + 1):
        for sub in combinations(range(1, a.n + 1), size):
            if is_connected(a, sub) and classify_subdiagram(a, sub)[0][1] == AFFINE:
                return True
    return False


def bilinear(s, alpha, beta):
    n = len(s.d)
    if len(alpha) != n or len(beta) != n:
        raise DimensionMismatch(f"expected vectors of length {n}")
    total = Fraction(0)
    for i, ai in enumerate(alpha):
        if ai:
            row = s.b[i]
            for j, bj in enumerate(beta):
                if bj:
                    total += ai * row[j] * bj
    return total
