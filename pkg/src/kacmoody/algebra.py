"""Truncated Kac-Moody algebras over the rationals.

A positive root space ``g_beta`` (height >= 2) is realised through the map
``x -> ([f_j, x])_j`` into the lower root spaces ``g_{beta - alpha_j}``.
The map is injective on ``g(A)``, so each basis vector is stored as its
image ("f-image"), a sparse vector keyed by ``(j, k)``: the k-th basis
coordinate of ``[f_j, x]``.  Candidates spanning ``g_beta`` are the standard
bracketings of Lyndon words of content ``beta``; the basis consists of the
earliest candidates (Lyndon words in lexicographic order) that are
independent.

The negative part is the image of the positive part under the Chevalley
involution ``omega``: a term of degree ``-beta`` with coordinates ``c``
stands for ``sum_k c_k * omega(b_k)``.

Defining relations follow the convention ``[f_j, e_i] = delta_ij h_i``,
``[h, e_i] = <alpha_i, h> e_i``, ``omega(e_i) = -f_i``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import (HeightExceedsTruncation, InternalConsistencyError,
                     NotHomogeneous, ResourceLimit, TruncationExceeded,
                     ZeroElement, DimensionMismatch)
from .gcm import symmetrize
from .linalg import Subspace, nullspace
from .lyndon import standard_factorisation, words_by_content
from . import roots as R

DEFAULT_MAX_CANDIDATES = 20000

ZERO = Fraction(0)


def _is_zero_vec(v):
    return not any(v)


class Element:
    """A finite sum of homogeneous pieces plus Cartan and derivation parts.

    ``terms`` maps a degree (integer tuple, never zero) to a tuple of
    coefficients over that degree's basis.  ``cartan[i]`` is the coefficient
    of the coroot ``h_{i+1}``, ``deriv[i]`` that of the derivation ``d_{i+1}``.
    """

    __slots__ = ("n", "terms", "cartan", "deriv")

    def __init__(self, n, terms=None, cartan=None, deriv=None):
        self.n = n
        clean = {}
        for deg, vec in (terms or {}).items():
            vec = tuple(Fraction(c) for c in vec)
            if any(vec):
                clean[tuple(deg)] = vec
        self.terms = clean
        self.cartan = tuple(Fraction(c) for c in cartan) if cartan is not None else (ZERO,) * n
        self.deriv = tuple(Fraction(c) for c in deriv) if deriv is not None else (ZERO,) * n
        if len(self.cartan) != n or len(self.deriv) != n:
            raise DimensionMismatch("Cartan and derivation parts must have length n")

    @classmethod
    def zero(cls, n):
        return cls(n)

    def is_zero(self):
        return not self.terms and not any(self.cartan) and not any(self.deriv)

    __bool__ = lambda self: not self.is_zero()

    def degrees(self):
        """Degrees present; the zero degree stands for the Cartan/derivation part."""
        degs = sorted(self.terms, key=lambda d: (sum(d), d))
        if any(self.cartan) or any(self.deriv):
            degs.append((0,) * self.n)
        return degs

    def is_homogeneous(self):
        return len(self.degrees()) == 1

    @property
    def degree(self):
        degs = self.degrees()
        if len(degs) != 1:
            raise NotHomogeneous(f"element has degrees {degs}")
        return degs[0]

    def component(self, deg):
        return self.terms.get(tuple(deg))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Element):
            return NotImplemented
        return (self.n == other.n and self.terms == other.terms
                and self.cartan == other.cartan and self.deriv == other.deriv)

    def __hash__(self):
        return hash((tuple(sorted(self.terms.items())), self.cartan, self.deriv))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        terms = dict(self.terms)
        for deg, vec in other.terms.items():
            if deg in terms:
                terms[deg] = tuple(a + b for a, b in zip(terms[deg], vec))
            else:
                terms[deg] = vec
        return Element(self.n, terms,
                       [a + b for a, b in zip(self.cartan, other.cartan)],
                       [a + b for a, b in zip(self.deriv, other.deriv)])

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Element(self.n)
        return Element(self.n, {d: tuple(c * x for x in v) for d, v in self.terms.items()},
                       [c * x for x in self.cartan], [c * x for x in self.deriv])

    def __rmul__(self, c):
        return self.scale(c)

    def __mul__(self, c):
        return self.scale(c)

    def is_proportional_to(self, other):
        """Whether the two elements span the same line (both nonzero)."""
        if self.is_zero() or other.is_zero():
            return False
        ratio = None
        mine, theirs = self._flat(), other._flat()
        if set(mine) != set(theirs):
            return False
        for key, v in mine.items():
            r = theirs[key] / v
            if ratio is None:
                ratio = r
            elif r != ratio:
                return False
        return True

    def _flat(self):
        out = {}
        for deg, vec in self.terms.items():
            for k, c in enumerate(vec):
                if c:
                    out[(deg, k)] = c
        for i, c in enumerate(self.cartan):
            if c:
                out[("h", i)] = c
        for i, c in enumerate(self.deriv):
            if c:
                out[("d", i)] = c
        return out

    def __repr__(self):
        return f"Element({self.terms!r}, cartan={self.cartan!r}, deriv={self.deriv!r})"


@dataclass
class _Basis:
    word: tuple          # Lyndon word whose bracketing is this basis vector
    fimage: dict         # {(j, k): coefficient}, empty for simple roots


class KacMoodyAlgebra:
    """The algebra ``g'(A)`` plus derivations, with root spaces up to height ``H``.

    Construct with :func:`build`.
    """

    def __init__(self, a, s, H, max_candidates=DEFAULT_MAX_CANDIDATES):
        if H < 1:
            raise ValueError("height bound must be >= 1")
        self.gcm = a
        self.symm = s
        self.H = H
        self.n = a.n
        self.max_candidates = max_candidates
        self.bases = {}          # positive degree -> list of _Basis
        self._spaces = {}        # positive degree -> Subspace of f-images
        self._word_image = {}    # Lyndon word -> coordinate tuple in its degree
        self._pp = {}            # (deg1, k1, deg2, k2) -> coords in deg1 + deg2
        self._fpair = {}         # (deg1, k1, deg2, k2) -> f-image dict
        self._mixed = {}         # (deg1, k1, deg2, k2) -> Element [b1, omega(b2)]
        self._classes = {}

    # -- construction -----------------------------------------------------

    def _build(self):
        n = self.n
        groups = words_by_content(n, self.H)
        for h in range(1, self.H + 1):
            degrees = sorted(d for d in groups if sum(d) == h)
            for beta in degrees:
                self._build_degree(beta, groups[beta])

    def _build_degree(self, beta, words):
        if len(words) > self.max_candidates:
            raise ResourceLimit(
                f"{len(words)} candidates in degree {list(beta)} exceed the cap "
                f"{self.max_candidates}", degree=beta)
        if sum(beta) == 1:
            self.bases[beta] = [_Basis(words[0], {})]
            self._word_image[words[0]] = (Fraction(1),)
            return
        space = Subspace()
        basis = []
        fimages = []
        reachable = any(self.dim(R.sub(beta, R.simple_root(self.n, j))) for j in range(1, self.n + 1)
                        if beta[j - 1] > 0)
        for w in words:
            fim = self._candidate_fimage(w) if reachable else {}
            fimages.append(fim)
            if fim and space.add(fim):
                basis.append(_Basis(w, fim))
        self.bases[beta] = basis
        self._spaces[beta] = space
        m = len(basis)
        for w, fim in zip(words, fimages):
            if not fim:
                self._word_image[w] = (ZERO,) * m
            else:
                self._word_image[w] = tuple(space.coords(fim))

    def _candidate_fimage(self, word):
        u, v = standard_factorisation(word)
        du, dv = self._word_degree(u), self._word_degree(v)
        cu, cv = self._word_image[u], self._word_image[v]
        out = {}
        for ka, xa in enumerate(cu):
            if not xa:
                continue
            for kb, yb in enumerate(cv):
                if not yb:
                    continue
                c = xa * yb
                for key, val in self._pair_fimage(du, ka, dv, kb).items():
                    nv = out.get(key, 0) + c * val
                    if nv:
                        out[key] = nv
                    else:
                        out.pop(key, None)
        return out

    def _word_degree(self, word):
        c = [0] * self.n
        for letter in word:
            c[letter - 1] += 1
        return tuple(c)

    def _pair_fimage(self, g1, k1, g2, k2):
        """f-image of ``[b1, b2]`` for positive basis vectors, via
        ``[f_j,[x,y]] = [[f_j,x],y] + [x,[f_j,y]]``."""
        key = (g1, k1, g2, k2)
        hit = self._fpair.get(key)
        if hit is not None:
            return hit
        n = self.n
        out = {}

        def acc(j, deg, coords, c=1):
            for k, v in enumerate(coords):
                if v:
                    kk = (j, k)
                    nv = out.get(kk, 0) + c * v
                    if nv:
                        out[kk] = nv
                    else:
                        out.pop(kk, None)

        a = self.gcm
        for j in range(1, n + 1):
            aj = R.simple_root(n, j)
            target = R.sub(R.add(g1, g2), aj)
            if not all(c >= 0 for c in target) or not self.dim(target):
                continue
            # [[f_j, b1], b2]
            if g1 == aj:
                coeff = R.pairing(a, g2, j)
                if coeff:
                    unit = [ZERO] * self.dim(g2)
                    unit[k2] = Fraction(coeff)
                    acc(j, target, unit)
            elif sum(g1) >= 2 and g1[j - 1] > 0:
                lower = R.sub(g1, aj)
                for (jj, k), c in self.bases[g1][k1].fimage.items():
                    if jj == j:
                        acc(j, target, self._pos_bracket(lower, k, g2, k2), c)
            # [b1, [f_j, b2]]
            if g2 == aj:
                coeff = -R.pairing(a, g1, j)
                if coeff:
                    unit = [ZERO] * self.dim(g1)
                    unit[k1] = Fraction(coeff)
                    acc(j, target, unit)
            elif sum(g2) >= 2 and g2[j - 1] > 0:
                lower = R.sub(g2, aj)
                for (jj, k), c in self.bases[g2][k2].fimage.items():
                    if jj == j:
                        acc(j, target, self._pos_bracket(g1, k1, lower, k), c)
        self._fpair[key] = out
        return out

    def _pos_bracket(self, g1, k1, g2, k2):
        """Coordinates of ``[b1, b2]`` in the basis of degree ``g1 + g2``."""
        key = (g1, k1, g2, k2)
        hit = self._pp.get(key)
        if hit is not None:
            return hit
        target = R.add(g1, g2)
        if sum(target) > self.H:
            if not self.classify(target).is_root:
                return ()
            raise TruncationExceeded(target, self.H)
        m = self.dim(target)
        if m == 0:
            res = ()
        elif g1 == g2 and k1 == k2:
            res = (ZERO,) * m
        else:
            rev = self._pp.get((g2, k2, g1, k1))
            if rev is not None:
                res = tuple(-c for c in rev)
            else:
                fim = self._pair_fimage(g1, k1, g2, k2)
                res = tuple(self._spaces[target].coords(fim)) if fim else (ZERO,) * m
        self._pp[key] = res
        return res

    # -- queries ----------------------------------------------------------

    def classify(self, beta):
        beta = tuple(beta)
        c = self._classes.get(beta)
        if c is None:
            c = R.classify_root(self.gcm, self.symm, beta)
            self._classes[beta] = c
        return c

    def dim(self, beta):
        """Dimension of a positive root space already built (0 if absent)."""
        return len(self.bases.get(tuple(beta), ()))

    def mult(self, beta):
        beta = tuple(int(c) for c in beta)
        if len(beta) != self.n:
            raise DimensionMismatch(f"expected a vector of length {self.n}")
        if abs(sum(beta)) > self.H:
            raise HeightExceedsTruncation(
                f"height of {list(beta)} exceeds the truncation {self.H}")
        if not any(beta) or not R.is_sign_pure(beta):
            return 0
        if sum(beta) < 0:
            beta = R.neg(beta)
        return self.dim(beta)

    def positive_degrees(self):
        """Positive degrees with a nonzero root space, by (height, coords)."""
        return sorted((d for d, b in self.bases.items() if b), key=lambda d: (sum(d), d))

    def basis_words(self, beta):
        return [b.word for b in self.bases.get(tuple(beta), [])]

    def basis_element(self, beta, k):
        beta = tuple(beta)
        m = self.mult(beta)
        if not 0 <= k < m:
            raise IndexError(f"basis index {k} outside 0..{m - 1} for degree {list(beta)}")
        vec = [ZERO] * m
        vec[k] = Fraction(1)
        return Element(self.n, {beta: vec})

    def basis(self, beta):
        return [self.basis_element(beta, k) for k in range(self.mult(beta))]

    def homogeneous(self, beta, coords):
        beta = tuple(beta)
        if len(coords) != self.mult(beta):
            raise DimensionMismatch(f"degree {list(beta)} has dimension {self.mult(beta)}")
        return Element(self.n, {beta: coords})

    # generators

    def e(self, i):
        self.gcm.check_index(i)
        return Element(self.n, {R.simple_root(self.n, i): (1,)})

    def f(self, i):
        self.gcm.check_index(i)
        return Element(self.n, {R.neg(R.simple_root(self.n, i)): (-1,)})

    def h(self, i):
        r = self.gcm.check_index(i)
        return Element(self.n, cartan=[1 if j == r else 0 for j in range(self.n)])

    def d(self, i):
        r = self.gcm.check_index(i)
        return Element(self.n, deriv=[1 if j == r else 0 for j in range(self.n)])

    def cartan_element(self, coords):
        return Element(self.n, cartan=coords)

    def sharp(self, beta):
        """``beta^sharp`` as a Cartan element: ``sum_i beta_i h_i / d_i``."""
        return Element(self.n, cartan=[Fraction(b) / d for b, d in zip(beta, self.symm.d)])

    def word_element(self, word):
        """The standard bracketing of a Lyndon word, as an element."""
        word = tuple(word)
        beta = self._word_degree(word)
        if sum(beta) > self.H:
            raise TruncationExceeded(beta, self.H)
        return Element(self.n, {beta: self._word_image[word]})

    # -- algebra operations ----------------------------------------------

    def omega(self, x):
        return Element(self.n, {R.neg(d): v for d, v in x.terms.items()},
                       [-c for c in x.cartan], [-c for c in x.deriv])

    def _f_action(self, j, g1, k1):
        """``[f_j, b]`` for a positive basis vector ``b``."""
        n = self.n
        if sum(g1) == 1:
            if g1 == R.simple_root(n, j):
                return self.h(j)
            return Element(n)
        lower = R.sub(g1, R.simple_root(n, j))
        m = self.dim(lower)
        if m == 0:
            return Element(n)
        vec = [ZERO] * m
        for (jj, k), c in self.bases[g1][k1].fimage.items():
            if jj == j:
                vec[k] += c
        return Element(n, {lower: vec})

    def _mixed_bracket(self, g1, k1, g2, k2):
        """``[b1, omega(b2)]`` for positive basis vectors ``b1``, ``b2``."""
        key = (g1, k1, g2, k2)
        hit = self._mixed.get(key)
        if hit is not None:
            return hit
        n = self.n
        diff = R.sub(g1, g2)
        if any(diff) and (not R.is_sign_pure(diff) or not self.mult(diff)):
            res = Element(n)
        elif sum(g2) == 1:
            # omega(e_j) = -f_j and [x, -f_j] = [f_j, x]
            j = g2.index(1) + 1
            res = self._f_action(j, g1, k1)
        else:
            u, v = standard_factorisation(self.bases[g2][k2].word)
            wu = self.omega(self.word_element(u))
            wv = self.omega(self.word_element(v))
            x = self.basis_element(g1, k1)
            res = self.bracket(self.bracket(x, wu), wv) + self.bracket(wu, self.bracket(x, wv))
        self._mixed[key] = res
        return res

    def _pairing_with_cartan(self, deg, x):
        """``<deg, h>`` for the Cartan part of x plus derivation part."""
        a = self.gcm
        total = ZERO
        for i, c in enumerate(x.cartan):
            if c:
                total += c * sum(deg[j] * a[i, j] for j in range(self.n))
        for i, c in enumerate(x.deriv):
            if c:
                total += c * deg[i]
        return total

    def bracket(self, x, y):
        n = self.n
        terms = {}
        cartan = [ZERO] * n

        def acc(deg, vec, c):
            if not c:
                return
            cur = terms.get(deg)
            if cur is None:
                cur = [ZERO] * len(vec)
                terms[deg] = cur
            for k, v in enumerate(vec):
                if v:
                    cur[k] += c * v

        def acc_elem(el, c):
            if not c:
                return
            for deg, vec in el.terms.items():
                acc(deg, vec, c)
            for i, v in enumerate(el.cartan):
                if v:
                    cartan[i] += c * v

        for d1, v1 in x.terms.items():
            pos1 = sum(d1) > 0
            for d2, v2 in y.terms.items():
                pos2 = sum(d2) > 0
                if pos1 and pos2:
                    target = R.add(d1, d2)
                    for k1, c1 in enumerate(v1):
                        if c1:
                            for k2, c2 in enumerate(v2):
                                if c2:
                                    r = self._pos_bracket(d1, k1, d2, k2)
                                    if r:
                                        acc(target, r, c1 * c2)
                elif not pos1 and not pos2:
                    p1, p2 = R.neg(d1), R.neg(d2)
                    target = R.neg(R.add(p1, p2))
                    for k1, c1 in enumerate(v1):
                        if c1:
                            for k2, c2 in enumerate(v2):
                                if c2:
                                    r = self._pos_bracket(p1, k1, p2, k2)
                                    if r:
                                        acc(target, r, c1 * c2)
                elif pos1:
                    p2 = R.neg(d2)
                    for k1, c1 in enumerate(v1):
                        if c1:
                            for k2, c2 in enumerate(v2):
                                if c2:
                                    acc_elem(self._mixed_bracket(d1, k1, p2, k2), c1 * c2)
                else:
                    p1 = R.neg(d1)
                    for k1, c1 in enumerate(v1):
                        if c1:
                            for k2, c2 in enumerate(v2):
                                if c2:
                                    acc_elem(self._mixed_bracket(d2, k2, p1, k1), -c1 * c2)
        # Cartan and derivation parts act diagonally
        if any(x.cartan) or any(x.deriv):
            for deg, vec in y.terms.items():
                acc(deg, vec, self._pairing_with_cartan(deg, x))
        if any(y.cartan) or any(y.deriv):
            for deg, vec in x.terms.items():
                acc(deg, vec, -self._pairing_with_cartan(deg, y))
        return Element(n, terms, cartan)

    def ad_power(self, y, x, k):
        """``(ad y)^k x``."""
        for _ in range(k):
            x = self.bracket(y, x)
            if x.is_zero():
                break
        return x

    def exp_ad(self, z, x):
        """``exp(ad z) x`` for locally nilpotent ``ad z``."""
        total = x
        term = x
        k = 0
        limit = 4 * self.H + 8
        while True:
            k += 1
            term = self.bracket(z, term)
            if term.is_zero():
                return total
            if k > limit:
                raise InternalConsistencyError("ad z is not nilpotent on x within truncation")
            total = total + term.scale(Fraction(1, factorial(k)))

    def simple_reflection_star(self, i, x):
        """``s_i^* x = exp(ad f_i) exp(ad e_i) exp(ad f_i) x``."""
        e, f = self.e(i), self.f(i)
        return self.exp_ad(f, self.exp_ad(e, self.exp_ad(f, x)))

    def weyl_star(self, word, x):
        """Apply ``s_{w1}^*`` first, then ``s_{w2}^*``, and so on."""
        for i in word:
            x = self.simple_reflection_star(i, x)
        return x

    def real_root_vector(self, alpha):
        """A fixed nonzero element of ``g_alpha`` for a real root ``alpha``."""
        alpha = tuple(alpha)
        c = self.classify(alpha)
        if not c.is_real:
            raise ValueError(f"{list(alpha)} is not a real root")
        rep = c.orbit_rep
        i = next(k for k, v in enumerate(rep) if v) + 1
        start = self.e(i) if sum(rep) > 0 else self.f(i)
        return self.weyl_star(tuple(reversed(c.word)), start)

    def dual_constant(self, x):
        """The rational ``c`` with ``[omega(x), x] = c * alpha^sharp``."""
        if x.is_zero():
            raise ZeroElement("dual constant of the zero element")
        if len(x.terms) != 1 or any(x.cartan) or any(x.deriv):
            raise NotHomogeneous("dual constant needs a homogeneous root vector")
        (alpha,) = x.terms
        y = self.bracket(self.omega(x), x)
        sharp = self.sharp(alpha)
        if y.terms or any(y.deriv):
            raise InternalConsistencyError("[omega(x), x] left the Cartan subalgebra")
        ratio = None
        for got, want in zip(y.cartan, sharp.cartan):
            if want == 0:
                if got != 0:
                    raise InternalConsistencyError("[omega(x), x] is not a multiple of alpha^sharp")
                continue
            r = got / want
            if ratio is None:
                ratio = r
            elif r != ratio:
                raise InternalConsistencyError("[omega(x), x] is not a multiple of alpha^sharp")
        if not ratio:
            raise InternalConsistencyError("[omega(x), x] vanished for a nonzero root vector")
        return ratio

    def center(self):
        """Basis (coroot coordinates) of ``{h : <alpha_i, h> = 0 for all i}``."""
        at = [[self.gcm[j, i] for j in range(self.n)] for i in range(self.n)]
        return [self.cartan_element(v) for v in nullspace(at)]

    def pairing_on(self, beta, x):
        """``beta(h)`` for the Cartan/derivation part of ``x``."""
        return self._pairing_with_cartan(tuple(beta), x)

    # -- text form --------------------------------------------------------

    def format(self, x):
        from .expr import format_element
        return format_element(self, x)

    def parse(self, text):
        from .expr import parse_element
        return parse_element(self, text)


def build(a, s=None, H=1, max_candidates=DEFAULT_MAX_CANDIDATES):
    """Construct the root spaces of heights 1..H and the bracket tables."""
    if s is None:
        s = symmetrize(a)
    g = KacMoodyAlgebra(a, s, H, max_candidates)
    g._build()
    return g


# functional aliases ------------------------------------------------------

def mult(g, beta):
    return g.mult(beta)


def bracket(g, x, y):
    return g.bracket(x, y)


def omega(g, x):
    return g.omega(x)


def simple_reflection_star(g, i, x):
    return g.simple_reflection_star(i, x)


def weyl_star(g, word, x):
    return g.weyl_star(word, x)


def dual_constant(g, x):
    return g.dual_constant(x)


def center(g):
    return g.center()
