"""Exact linear algebra over the rationals.

Vectors are handled as sparse ``{index: value}`` dicts internally.
Elimination is fraction-free: rows are kept as primitive integer vectors,
and rational coefficients only appear when expressing a vector in terms of
the spanning set (back-substitution).
"""

from fractions import Fraction
from math import gcd


def frac_str(x):
    """Exact string form ``"p/q"`` (or ``"p"`` for integers)."""
    return str(Fraction(x))


def parse_frac(s):
    return Fraction(s)


def _lcm(a, b):
    return a // gcd(a, b) * b


def _integral(vec):
    """Return ``(scale, ints)`` with ``ints = scale * vec`` integral, scale > 0."""
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = _lcm(den, v.denominator)
    if den == 1:
        return 1, {k: int(v) for k, v in vec.items()}
    return den, {k: int(v * den) for k, v in vec.items()}


def _content(vec):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def to_sparse(seq):
    return {i: Fraction(v) for i, v in enumerate(seq) if v}


def to_dense(vec, dim):
    out = [Fraction(0)] * dim
    for k, v in vec.items():
        out[k] = Fraction(v)
    return out


class Subspace:
    """Span of an incrementally grown list of vectors.

    ``add`` keeps only vectors that are independent of the ones already
    kept; ``coords`` expresses a vector in terms of the kept vectors.
    Keys of the sparse vectors may be any sortable objects.
    """

    def __init__(self):
        self.vectors = []        # kept spanning vectors, as given
        self._pivots = []        # sorted list of pivot keys
        self._rows = {}          # pivot -> (int row dict, combination dict)

    def __len__(self):
        return len(self.vectors)

    @property
    def rank(self):
        return len(self.vectors)

    def _reduce(self, vec):
        mu, w = _integral({k: v for k, v in vec.items() if v})
        mu = Fraction(mu)
        gamma = {}
        for p in self._pivots:
            wp = w.get(p)
            if not wp:
                continue
            row, rho = self._rows[p]
            a = row[p]
            # w <- a*w - wp*row
            if a != 1:
                w = {k: a * v for k, v in w.items()}
                gamma = {k: a * v for k, v in gamma.items()}
                mu *= a
            for k, v in row.items():
                nv = w.get(k, 0) - wp * v
                if nv:
                    w[k] = nv
                else:
                    w.pop(k, None)
            for k, v in rho.items():
                nv = gamma.get(k, 0) + wp * v
                if nv:
                    gamma[k] = nv
                else:
                    gamma.pop(k, None)
            g = gcd(_content(w), abs(mu.numerator)) if w else 0
            if g > 1:
                w = {k: v // g for k, v in w.items()}
                mu /= g
                gamma = {k: v / g for k, v in gamma.items()}
        return mu, w, gamma

    def add(self, vec):
        """Add ``vec`` if independent; return True when it was added."""
        mu, w, gamma = self._reduce(vec)
        if not w:
            return False
        m = len(self.vectors)
        self.vectors.append(dict(vec))
        g = _content(w)
        p = min(w)
        if w[p] < 0:
            g = -g
        row = {k: v // g for k, v in w.items()}
        rho = {k: -Fraction(v) / g for k, v in gamma.items()}
        rho[m] = mu / g
        self._rows[p] = (row, rho)
        self._insert_pivot(p)
        return True

    def _insert_pivot(self, p):
        lo, hi = 0, len(self._pivots)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._pivots[mid] < p:
                lo = mid + 1
            else:
                hi = mid
        self._pivots.insert(lo, p)

    def contains(self, vec):
        return not self._reduce(vec)[1]

    def coords(self, vec):
        """Coefficients ``c`` with ``vec == sum(c[j] * vectors[j])``.

        Raises ValueError when ``vec`` is outside the span.
        """
        mu, w, gamma = self._reduce(vec)
        if w:
            raise ValueError("vector is not in the span")
        out = [Fraction(0)] * len(self.vectors)
        for k, v in gamma.items():
            out[k] = Fraction(v) / mu
        return out


def rank(vectors):
    s = Subspace()
    for v in vectors:
        s.add(v if isinstance(v, dict) else to_sparse(v))
    return s.rank


def nullspace(matrix):
    """Basis of ``{x : matrix @ x == 0}`` in reduced form (free variables = 1)."""
    rows = [[Fraction(v) for v in r] for r in matrix]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -rows[i][fc]
        basis.append(x)
    return basis


def determinant(matrix):
    """Exact determinant by Bareiss fraction-free elimination."""
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
