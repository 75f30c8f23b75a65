"""Root combinatorics at the level of the root lattice.

Roots are plain integer tuples of coordinates over the simple roots.
Reflection indices and Weyl words use 1-based letters; a word
``(i1, i2, ..., ik)`` acts on a vector by applying ``s_i1`` first and
``s_ik`` last.
"""

from dataclasses import dataclass, field
from math import gcd

from .errors import (AlphaNotReal, BetaNotRoot, HeightBoundTooLarge,
                     NotImaginaryPositive, NotSignPure, PreconditionViolated,
                     SumIsRoot, DimensionMismatch)
from .gcm import AFFINE, bilinear, classify_subdiagram, is_connected

NOT_A_ROOT = "NotARoot"
REAL_POSITIVE = "RealPositive"
REAL_NEGATIVE = "RealNegative"
IMAGINARY_ISOTROPIC = "ImaginaryIsotropic"
IMAGINARY_ANISOTROPIC = "ImaginaryAnisotropic"

REAL_KINDS = (REAL_POSITIVE, REAL_NEGATIVE)
IMAGINARY_KINDS = (IMAGINARY_ISOTROPIC, IMAGINARY_ANISOTROPIC)

MAX_ENUMERATION_HEIGHT = 60


def height(beta):
    return sum(beta)


def support(beta):
    """1-based indices of the nonzero coordinates."""
    return frozenset(i + 1 for i, c in enumerate(beta) if c)


def simple_root(n, i):
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def is_sign_pure(beta):
    return all(c >= 0 for c in beta) or all(c <= 0 for c in beta)


def is_positive(beta):
    return any(beta) and all(c >= 0 for c in beta)


def add(alpha, beta):
    return tuple(a + b for a, b in zip(alpha, beta))


def sub(alpha, beta):
    return tuple(a - b for a, b in zip(alpha, beta))


def scale(k, beta):
    return tuple(k * c for c in beta)


def neg(beta):
    return tuple(-c for c in beta)


def primitive(beta):
    g = 0
    for c in beta:
        g = gcd(g, c)
    return tuple(c // g for c in beta) if g else tuple(beta)


def _check(a, beta):
    if len(beta) != a.n:
        raise DimensionMismatch(f"expected a vector of length {a.n}, got {beta!r}")
    return tuple(int(c) for c in beta)


def pairing(a, beta, i):
    """``<beta, alpha_i^vee> = sum_j beta_j a_ij``."""
    r = a.check_index(i)
    beta = _check(a, beta)
    row = a.entries[r]
    return sum(c * row[j] for j, c in enumerate(beta))


def reflect(a, i, beta):
    p = pairing(a, beta, i)
    r = i - 1
    return tuple(c - p if j == r else c for j, c in enumerate(beta))


def apply_word(a, word, beta):
    beta = _check(a, beta)
    for i in word:
        beta = reflect(a, i, beta)
    return beta


def in_fundamental_set(a, beta):
    """Membership in K0: nonnegative, nonzero, all coroot pairings <= 0."""
    return is_positive(beta) and all(pairing(a, beta, i) <= 0 for i in range(1, a.n + 1))


def reduce_min_height(a, beta):
    """Lower ``beta`` by simple reflections while some pairing is positive.

    The smallest such index is always chosen.  Stops at a simple root, at an
    element of K0, or at the first vector with a negative coordinate.
    Returns ``(rep, word)`` with ``rep == apply_word(a, word, beta)``.
    """
    beta = _check(a, beta)
    if not all(c >= 0 for c in beta):
        raise NotSignPure(f"{list(beta)} is not a nonnegative vector")
    word = []
    while any(beta) and all(c >= 0 for c in beta) and height(beta) != 1:
        for i in range(1, a.n + 1):
            if pairing(a, beta, i) > 0:
                beta = reflect(a, i, beta)
                word.append(i)
                break
        else:
            break
    return beta, tuple(word)


@dataclass(frozen=True)
class RootClass:
    kind: str
    orbit_rep: tuple
    word: tuple
    norm: object = field(default=None)

    @property
    def is_root(self):
        return self.kind != NOT_A_ROOT

    @property
    def is_real(self):
        return self.kind in REAL_KINDS

    @property
    def is_imaginary(self):
        return self.kind in IMAGINARY_KINDS


def classify_root(a, s, beta):
    beta = _check(a, beta)
    norm = bilinear(s, beta, beta)
    if not any(beta) or not is_sign_pure(beta):
        return RootClass(NOT_A_ROOT, beta, (), norm)
    negative = any(c < 0 for c in beta)
    pos = neg(beta) if negative else beta
    rep, word = reduce_min_height(a, pos)
    if any(c < 0 for c in rep):
        return RootClass(NOT_A_ROOT, rep, word, norm)
    if height(rep) == 1:
        kind = REAL_NEGATIVE if negative else REAL_POSITIVE
        return RootClass(kind, neg(rep) if negative else rep, word, norm)
    if not is_connected(a, support(rep)):
        return RootClass(NOT_A_ROOT, rep, word, norm)
    kind = IMAGINARY_ISOTROPIC if norm == 0 else IMAGINARY_ANISOTROPIC
    return RootClass(kind, neg(rep) if negative else rep, word, norm)


def is_root(a, s, beta):
    return classify_root(a, s, beta).is_root


def _vectors_of_height(n, h):
    if n == 1:
        yield (h,)
        return
    for first in range(h, -1, -1):
        for rest in _vectors_of_height(n - 1, h - first):
            yield (first,) + rest


def nonnegative_vectors(n, h):
    """All nonnegative integer vectors of length ``n`` and height ``h``."""
    return sorted(_vectors_of_height(n, h))


def enumerate_positive_roots(a, s, H, max_height=MAX_ENUMERATION_HEIGHT):
    """Positive roots of height <= H with their classes, sorted by (height, coords)."""
    if H < 1:
        raise ValueError("height bound must be >= 1")
    if H > max_height:
        raise HeightBoundTooLarge(f"height {H} exceeds the guard {max_height}")
    n = a.n
    level = {simple_root(n, i) for i in range(1, n + 1)}
    out = []
    for h in range(1, H + 1):
        classified = sorted((beta, classify_root(a, s, beta)) for beta in level)
        roots = [(beta, c) for beta, c in classified if c.is_root]
        out.extend(roots)
        level = {add(beta, simple_root(n, i)) for beta, _ in roots for i in range(1, n + 1)}
    return out


@dataclass(frozen=True)
class RootString:
    p: int
    q: int
    case: int
    members: tuple


def coroot_pairing(s, beta, alpha):
    """``<beta, alpha^vee> = 2 (beta|alpha) / (alpha|alpha)`` for real alpha."""
    val = 2 * bilinear(s, beta, alpha) / bilinear(s, alpha, alpha)
    if val.denominator != 1:
        raise PreconditionViolated("non-integral coroot pairing")
    return int(val)


def root_string(a, s, alpha, beta, max_length=200):
    alpha = _check(a, alpha)
    beta = _check(a, beta)
    if not classify_root(a, s, alpha).is_real:
        raise AlphaNotReal(f"{list(alpha)} is not a real root")
    if not classify_root(a, s, beta).is_root:
        raise BetaNotRoot(f"{list(beta)} is not a root")

    def member(v):
        return (not any(v)) or classify_root(a, s, v).is_root

    p = 0
    k = 1
    while k <= max_length:
        v = sub(beta, scale(k, alpha))
        if not member(v):
            break
        if any(v):
            p = k
        k += 1
    pairing_value = coroot_pairing(s, beta, alpha)
    q = p - pairing_value
    if q < 0:
        raise PreconditionViolated("negative q: the root string is broken")
    members = tuple(add(beta, scale(m, alpha)) for m in range(-p, q + 1))
    members = tuple(v for v in members if any(v))
    nreal = sum(1 for v in members if classify_root(a, s, v).is_real)
    return RootString(p, q, nreal + 1, members)


# -- Weyl words ----------------------------------------------------------

def reduced_word(a, word):
    """A reduced word for the group element ``s_{i1} s_{i2} ... s_{ik}``.

    Uses the exchange condition: ``w s_i`` is shorter than ``w`` iff
    ``w(alpha_i)`` is a negative root.
    """
    n = a.n
    red = []
    for i in word:
        a.check_index(i)
        # beta_t = s_{r_{t+1}} ... s_{r_m} (alpha_i), t from m down to 0
        beta = simple_root(n, i)
        removed = False
        for t in range(len(red) - 1, -1, -1):
            nxt = reflect(a, red[t], beta)
            if any(c < 0 for c in nxt):
                # beta == alpha_{red[t]}; delete that letter
                del red[t]
                removed = True
                break
            beta = nxt
        if not removed:
            red.append(i)
    return tuple(red)


def word_support(a, word):
    """Support of the Weyl group element represented by ``word``."""
    return frozenset(reduced_word(a, word))


def check_fixed_coordinate_support(a, s, alpha, i, word):
    """For alpha in K0 imaginary with nonzero i-th pairing: equal i-th
    coordinates of alpha and word.alpha force i outside supp(word)."""
    alpha = _check(a, alpha)
    if not in_fundamental_set(a, alpha) or not classify_root(a, s, alpha).is_imaginary:
        raise PreconditionViolated(f"{list(alpha)} is not an imaginary root in K0")
    if pairing(a, alpha, i) == 0:
        raise PreconditionViolated(f"pairing of {list(alpha)} with index {i} vanishes")
    image = apply_word(a, word, alpha)
    if alpha[i - 1] != image[i - 1]:
        return True
    return i not in word_support(a, word)


def disjointify(a, s, betas):
    """Move pairwise non-summable positive imaginary roots into K0 with
    pairwise disjoint, mutually non-adjacent supports.

    Returns ``(word, reps)`` with ``reps[t] == apply_word(a, word, betas[t])``.
    """
    betas = [_check(a, b) for b in betas]
    for t, b in enumerate(betas):
        if classify_root(a, s, b).kind not in IMAGINARY_KINDS or not is_positive(b):
            raise NotImaginaryPositive(t + 1)
    for i in range(len(betas)):
        for j in range(i + 1, len(betas)):
            if classify_root(a, s, add(betas[i], betas[j])).is_root:
                raise SumIsRoot(i + 1, j + 1)
    word = ()
    for t in range(len(betas)):
        current = apply_word(a, word, betas[t])
        _, extra = reduce_min_height(a, current)
        word = word + extra
    reps = [apply_word(a, word, b) for b in betas]
    for t, r in enumerate(reps):
        if not in_fundamental_set(a, r):
            raise PreconditionViolated(f"representative {list(r)} left K0")
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            si, sj = support(reps[i]), support(reps[j])
            if si & sj or any(a[u - 1, v - 1] < 0 for u in si for v in sj):
                raise PreconditionViolated("supports are not separated")
    return word, reps


def is_isotropic_support(a, beta):
    comps = classify_subdiagram(a, sorted(support(beta)))
    return len(comps) == 1 and comps[0][1] == AFFINE
