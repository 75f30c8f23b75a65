"""Graded subalgebras of a truncated Kac-Moody algebra.

A graded subspace is stored piece by piece: for each degree a basis of its
intersection with the root space (coordinates over the algebra's basis of
that degree), and for the zero degree a basis of its Cartan/derivation part
(``n`` coroot coordinates followed by ``n`` derivation coordinates).

Pieces are exact up to the height bound ``H``.  Beyond ``H`` a graded space
carries a *degree superset*: finitely many degrees plus arithmetic
progressions ``base + t*step`` (t >= 0).  Series steps propagate these
supersets, pruned with the root classifier, and a step is certified to
vanish only when its superset contains no root beyond ``H``.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import NotAbelian, NotHomogeneous, NotInNimPlus, NotRealRoot, ResourceLimit
from .gcm import bilinear, has_affine_subdiagram
from .linalg import Subspace
from . import roots as R

DERIVED = "Derived"
LOWER_CENTRAL = "LowerCentral"

TERMINATES = "TerminatesAtStep"
STABILISES = "Stabilises"
NONZERO_AT_TRUNCATION = "NonzeroAtTruncation"


def _zero(n):
    return (0,) * n


def _height(d):
    return sum(d)


def _deg_key(d):
    return (_height(d), d)


class _Piece:
    __slots__ = ("space", "vectors")

    def __init__(self):
        self.space = Subspace()
        self.vectors = []

    def add(self, vec):
        sparse = {k: v for k, v in enumerate(vec) if v}
        if sparse and self.space.add(sparse):
            self.vectors.append(tuple(Fraction(v) for v in vec))
            return True
        return False

    def contains(self, vec):
        sparse = {k: v for k, v in enumerate(vec) if v}
        return not sparse or self.space.contains(sparse)

    @property
    def dim(self):
        return len(self.vectors)


# -- degree supersets beyond the truncation --------------------------------

@dataclass
class DegreeSet:
    """Superset of the degrees of a graded space, used beyond height ``H``.

    ``finite`` holds individual degrees, ``progressions`` pairs
    ``(base, step)`` standing for ``{base + t*step : t >= 0}``.  ``unknown``
    means no useful superset is available.
    """

    finite: frozenset = frozenset()
    progressions: tuple = ()
    unknown: bool = False

    def beyond(self, H):
        """Whether the set can contain a degree of height > H."""
        if self.unknown or self.progressions:
            return True
        return any(abs(_height(d)) > H for d in self.finite)


def _norms_of_roots(s):
    return {s.b[i][i] for i in range(len(s.d))}


def _prog_roots_beyond(g, base, step):
    """Analyse ``{base + t*step}`` beyond height H.

    Returns ``(finite_roots, keep)``: roots found explicitly, and whether the
    progression must be kept because infinitely many members may be roots.
    """
    H = g.H
    s = g.symm
    hb, hs = _height(base), _height(step)
    if hs <= 0:
        return set(), True
    t_start = max(0, (H - hb) // hs + 1) if hb <= H else 0
    bb = bilinear(s, base, base)
    bs = bilinear(s, base, step)
    ss = bilinear(s, step, step)
    norms = _norms_of_roots(s)
    top = max(norms)

    def q(t):
        return bb + 2 * t * bs + t * t * ss

    if ss == 0 and bs == 0:
        if bb > 0 and bb not in norms:
            return set(), False
        return set(), True
    if ss > 0 or (ss == 0 and bs > 0):
        # q grows without bound; only finitely many t can give a root norm
        found = set()
        t = t_start
        # once q exceeds every root norm while increasing, it stays there
        while not (q(t) > top and 2 * bs + (2 * t + 1) * ss > 0):
            v = R.add(base, R.scale(t, step))
            if g.classify(v).is_root:
                found.add(v)
            t += 1
            if t - t_start > 10000:
                return found, True
        return found, False
    return set(), True


def _filter(g, candidates, progs):
    """Drop non-roots beyond H; keep everything of height <= H."""
    H = g.H
    finite = set()
    for d in candidates:
        if abs(_height(d)) <= H:
            finite.add(d)
        elif any(d) and g.classify(d).is_root:
            finite.add(d)
    kept = []
    for base, step in progs:
        roots_found, keep = _prog_roots_beyond(g, base, step)
        finite |= roots_found
        if keep:
            kept.append((base, step))
    return finite, tuple(sorted(set(kept)))


def _sum_sets(g, left, right, exclude_inner=True):
    """Superset of degrees of ``[left, right]`` beyond H (and below)."""
    if left.unknown or right.unknown:
        return DegreeSet(unknown=True)
    H = g.H
    cands = set()
    for a in left.finite:
        for b in right.finite:
            if exclude_inner and abs(_height(a)) <= H and abs(_height(b)) <= H:
                continue   # bracketed exactly; beyond-H targets are boundary events
            cands.add(R.add(a, b))
    progs = []
    for (b, st) in left.progressions:
        for a in right.finite:
            progs.append((R.add(a, b), st))
        for (b2, st2) in right.progressions:
            if st2 != st:
                return DegreeSet(unknown=True)
            progs.append((R.add(b, b2), st))
    for (b, st) in right.progressions:
        for a in left.finite:
            progs.append((R.add(a, b), st))
    if any(_height(d) < 0 for d in left.finite | right.finite) and (left.progressions or right.progressions):
        return DegreeSet(unknown=True)
    finite, kept = _filter(g, cands, progs)
    return DegreeSet(frozenset(finite), kept)


def _covered(prog, patterns):
    base, step = prog
    for pb, ps in patterns:
        if ps != step:
            continue
        diff = R.sub(base, pb)
        hs = _height(step)
        if hs == 0:
            continue
        k, r = divmod(_height(diff), hs)
        if r == 0 and k >= 0 and diff == R.scale(k, step):
            return True
    return False


# -- graded spaces ---------------------------------------------------------

class GradedSpace:
    """Exact pieces up to height H plus a degree superset beyond it."""

    def __init__(self, g):
        self.g = g
        self.pieces = {}
        self.beyond = DegreeSet()
        self.certified = True

    # vectors <-> elements
    def _to_element(self, deg, vec):
        g = self.g
        if not any(deg):
            return g.cartan_element(vec[:g.n]) + _deriv(g, vec[g.n:])
        return g.homogeneous(deg, vec)

    def add_vector(self, deg, vec):
        piece = self.pieces.get(deg)
        if piece is None:
            piece = _Piece()
            self.pieces[deg] = piece
        return piece.add(vec)

    def degrees(self):
        return sorted((d for d, p in self.pieces.items() if p.dim), key=_deg_key)

    def dim(self, deg):
        p = self.pieces.get(tuple(deg))
        return p.dim if p else 0

    def basis(self, deg):
        p = self.pieces.get(tuple(deg))
        return [self._to_element(tuple(deg), v) for v in p.vectors] if p else []

    def basis_pairs(self):
        """All ``(degree, vector)`` pairs, by degree."""
        return [(d, v) for d in self.degrees() for v in self.pieces[d].vectors]

    def elements(self):
        return [self._to_element(d, v) for d, v in self.basis_pairs()]

    def profile(self):
        return {tuple(d): self.pieces[d].dim for d in self.degrees()}

    def is_zero(self):
        return not self.degrees()

    def total_dim(self):
        return sum(p.dim for p in self.pieces.values())

    def contains(self, x):
        for deg, vec in _components(self.g, x):
            p = self.pieces.get(deg)
            if p is None:
                return False
            if not p.contains(vec):
                return False
        return True

    def finite_degrees(self):
        return frozenset(self.degrees())

    def degree_set(self):
        """Exact degrees up to H joined with the superset beyond."""
        if self.beyond.unknown:
            return DegreeSet(unknown=True)
        return DegreeSet(self.finite_degrees() | self.beyond.finite, self.beyond.progressions)

    def vanishes_beyond(self):
        return self.certified and not self.beyond.beyond(self.g.H)

    def same_as(self, other):
        if self.profile() != other.profile():
            return False
        for d in self.degrees():
            for v in other.pieces[d].vectors:
                if not self.pieces[d].contains(v):
                    return False
        return True


def _deriv(g, coords):
    out = g.cartan_element([0] * g.n)
    for i, c in enumerate(coords):
        if c:
            out = out + g.d(i + 1).scale(c)
    return out


def _components(g, x):
    """Homogeneous components of an element as ``(degree, vector)`` pairs."""
    out = [(deg, vec) for deg, vec in x.terms.items()]
    if any(x.cartan) or any(x.deriv):
        out.append((_zero(g.n), tuple(x.cartan) + tuple(x.deriv)))
    return out


def _bracket_target(g, d1, d2):
    """``(target, status)`` with status 'zero', 'beyond' or 'compute'."""
    t = R.add(d1, d2)
    if not any(t):
        return t, "compute"
    if not R.is_sign_pure(t):
        return t, "zero"
    if abs(_height(t)) > g.H:
        if not g.classify(t).is_root:
            return t, "zero"
        return t, "beyond"
    if not g.mult(t):
        return t, "zero"
    return t, "compute"


def _proportional(u, v):
    return all(a * v[k] == b * u[k] for a, b in zip(u, v) for k in range(len(u)))


def bracket_spaces(g, A, B, symmetric=False):
    """Exact pieces of ``[A, B]`` up to H, and the boundary targets skipped."""
    out = GradedSpace(g)
    boundary = set()
    pa = A.basis_pairs()
    pb = pa if symmetric else B.basis_pairs()
    elems_a = [A._to_element(d, v) for d, v in pa]
    elems_b = elems_a if symmetric else [B._to_element(d, v) for d, v in pb]
    for i, (da, _) in enumerate(pa):
        start = i + 1 if symmetric else 0
        for j in range(start, len(pb)):
            db = pb[j][0]
            tgt, status = _bracket_target(g, da, db)
            if status == "zero" or (da == db and _proportional(pa[i][1], pb[j][1])):
                continue
            if status == "beyond":
                boundary.add(tgt)
                continue
            z = g.bracket(elems_a[i], elems_b[j])
            for deg, vec in _components(g, z):
                out.add_vector(deg, vec)
    return out, boundary


# -- subalgebras -----------------------------------------------------------

@dataclass(frozen=True)
class Pattern:
    """Degrees ``base + t*step`` for ``start <= t (<= stop)``, full root spaces."""

    base: tuple
    step: tuple
    start: int = 0
    stop: object = None
    component: str = "full"

    @classmethod
    def from_dict(cls, d):
        comp = d.get("component", "full")
        if comp != "full":
            raise ValueError(f"unsupported pattern component {comp!r}")
        return cls(tuple(d["base_degree"]), tuple(d["step_degree"]),
                   int(d.get("from", 0)), d.get("to"), comp)

    @property
    def unbounded(self):
        return self.stop is None and any(self.step)

    def degrees(self, H):
        if not any(self.step):
            return [self.base]
        out = []
        t = self.start
        hs = _height(self.step)
        while self.stop is None or t <= self.stop:
            d = R.add(self.base, R.scale(t, self.step))
            if abs(_height(d)) > H:
                if hs == 0 or (_height(d) > H and hs > 0) or (_height(d) < -H and hs < 0):
                    break
            else:
                out.append(d)
            t += 1
            if t - self.start > 4 * H + 4:
                break
        return out

    def progression(self):
        return (R.add(self.base, R.scale(self.start, self.step)), self.step)


class GradedSubalgebra(GradedSpace):
    """Closure of homogeneous generators (and degree patterns) under bracket."""

    def __init__(self, g, generators=(), patterns=()):
        super().__init__(g)
        self.generators = list(generators)
        self.patterns = [p if isinstance(p, Pattern) else Pattern.from_dict(p) for p in patterns]
        self.boundary = []

    @property
    def complete(self):
        return self.certified and not self.beyond.beyond(self.g.H)


def span_closure(g, gens, patterns=(), max_dim=5000):
    """Smallest graded subspace containing ``gens`` (and the pattern root
    spaces) closed under all brackets that stay within the truncation."""
    L = GradedSubalgebra(g, gens, patterns)
    queue = []
    for x in gens:
        if x.is_zero():
            continue
        if not x.is_homogeneous():
            raise NotHomogeneous(f"generator {g.format(x)} is not homogeneous")
        for deg, vec in _components(g, x):
            if abs(_height(deg)) > g.H:
                raise NotHomogeneous(f"generator degree {list(deg)} beyond the truncation")
            if L.add_vector(deg, vec):
                queue.append((deg, L.pieces[deg].vectors[-1]))
    for p in L.patterns:
        for deg in p.degrees(g.H):
            for k in range(g.mult(deg)):
                vec = [0] * g.mult(deg)
                vec[k] = 1
                if L.add_vector(deg, vec):
                    queue.append((deg, L.pieces[deg].vectors[-1]))
    processed = []
    boundary = set()
    while queue:
        deg, vec = queue.pop(0)
        x = L._to_element(deg, vec)
        for pdeg, pvec, px in processed:
            tgt, status = _bracket_target(g, pdeg, deg)
            if status == "zero":
                continue
            if status == "beyond":
                boundary.add((min(pdeg, deg), max(pdeg, deg), tgt))
                continue
            z = g.bracket(px, x)
            for zdeg, zvec in _components(g, z):
                if L.add_vector(zdeg, zvec):
                    queue.append((zdeg, L.pieces[zdeg].vectors[-1]))
                    if L.total_dim() > max_dim:
                        raise ResourceLimit(f"closure exceeds {max_dim} dimensions", degree=zdeg)
        processed.append((deg, vec, x))
    L.boundary = sorted(boundary)
    _certify(L)
    return L


def _certify(L):
    """Decide whether ``L`` beyond H is exactly the union of its patterns."""
    g = L.g
    progs = tuple(sorted({p.progression() for p in L.patterns if p.unbounded}))
    patt = list(progs)
    unexplained = [t for (_, _, t) in L.boundary
                   if not any(_member(t, b, s) for b, s in patt)]
    if unexplained:
        L.certified = False
        L.beyond = DegreeSet(frozenset(unexplained), progs, unknown=True)
        return
    if not progs:
        L.beyond = DegreeSet()
        return
    if any(_height(s) <= 0 for _, s in progs) or any(_height(d) < 0 for d in L.degrees()):
        L.certified = False
        L.beyond = DegreeSet(frozenset(), progs, unknown=True)
        return
    L.beyond = DegreeSet(frozenset(), progs)
    closure = _sum_sets(g, L.degree_set(), L.degree_set())
    if closure.unknown:
        L.certified = False
        return
    for d in closure.finite:
        if abs(_height(d)) > g.H and not any(_member(d, b, s) for b, s in patt):
            L.certified = False
            return
    for prog in closure.progressions:
        if not _covered(prog, patt):
            L.certified = False
            return


def _member(d, base, step):
    diff = R.sub(d, base)
    hs = _height(step)
    if hs == 0:
        return not any(diff)
    k, r = divmod(_height(diff), hs)
    return r == 0 and k >= 0 and diff == R.scale(k, step)


def subalgebra_from_fixture(g, doc):
    """Build a subalgebra from ``{"generators": [...], "patterns": [...]}``."""
    if isinstance(doc, str):
        with open(doc) as fh:
            doc = json.load(fh)
    gens = [g.parse(t) for t in doc.get("generators", [])]
    return span_closure(g, gens, doc.get("patterns", []))


# -- decomposition ---------------------------------------------------------

@dataclass
class Decomposition:
    cartan: list          # zero-degree basis vectors
    psi: list             # real degrees present
    im_plus: dict         # degree -> dim
    im_minus: dict
    dims_add_up: bool

    def to_dict(self):
        return {
            "L0_dim": len(self.cartan),
            "psi": [list(d) for d in self.psi],
            "im_plus": {json.dumps(list(d)): m for d, m in sorted(self.im_plus.items())},
            "im_minus": {json.dumps(list(d)): m for d, m in sorted(self.im_minus.items())},
        }


def decompose(L):
    g = L.g
    cartan, psi, plus, minus = [], [], {}, {}
    total = 0
    for d in L.degrees():
        m = L.dim(d)
        total += m
        if not any(d):
            cartan = list(L.pieces[d].vectors)
        elif g.classify(d).is_real:
            psi.append(d)
        elif _height(d) > 0:
            plus[d] = m
        else:
            minus[d] = m
    added = len(cartan) + len(psi) + sum(plus.values()) + sum(minus.values())
    return Decomposition(cartan, psi, plus, minus, added == total)


def _subspace_of(L, degrees):
    out = GradedSpace(L.g)
    for d in degrees:
        for v in L.pieces[d].vectors:
            out.add_vector(d, v)
    return out


def parts(L):
    """The four constituents as graded spaces: L0, g_Psi, L^{im+}, L^{im-}."""
    dec = decompose(L)
    zero = _zero(L.g.n)
    l0 = _subspace_of(L, [zero] if dec.cartan else [])
    return (l0, _subspace_of(L, dec.psi), _subspace_of(L, sorted(dec.im_plus, key=_deg_key)),
            _subspace_of(L, sorted(dec.im_minus, key=_deg_key)))


# -- closed sets of real roots --------------------------------------------

@dataclass
class PsiAnalysis:
    psi: list
    psi_s: list
    psi_n: list
    closed: bool
    witness: object
    h_s: list

    def to_dict(self):
        return {"psi": [list(d) for d in self.psi], "psi_s": [list(d) for d in self.psi_s],
                "psi_n": [list(d) for d in self.psi_n], "closed": self.closed,
                "witness": [list(w) for w in self.witness] if self.witness else None,
                "h_s": [[str(c) for c in v] for v in self.h_s]}


def psi_analysis(g, psi, height_bound=None):
    """Split real roots into symmetric and nilpotent parts and test closedness.

    Sums of height beyond ``height_bound`` (default: H) are not examined.
    """
    psi = sorted({tuple(int(c) for c in a) for a in psi}, key=_deg_key)
    for a in psi:
        if not g.classify(a).is_real:
            raise NotRealRoot(f"{list(a)} is not a real root")
    bound = g.H if height_bound is None else height_bound
    pset = set(psi)
    psi_s = [a for a in psi if R.neg(a) in pset]
    psi_n = [a for a in psi if R.neg(a) not in pset]
    closed, witness = True, None
    for i, a in enumerate(psi):
        for b in psi[i:]:
            t = R.add(a, b)
            if not any(t) or abs(_height(t)) > bound:
                continue
            if g.classify(t).is_root and t not in pset:
                closed, witness = False, (a, b)
                break
        if not closed:
            break
    space = Subspace()
    h_s = []
    for a in psi_s:
        norm = bilinear(g.symm, a, a)
        coroot = [2 * Fraction(c) / d / norm for c, d in zip(a, g.symm.d)]
        sparse = {k: v for k, v in enumerate(coroot) if v}
        if space.add(sparse):
            h_s.append(tuple(coroot))
    return PsiAnalysis(psi, psi_s, psi_n, closed, witness, h_s)


# -- structure checks ------------------------------------------------------

@dataclass
class Check:
    name: str
    passed: object       # True, False or None (inconclusive)
    witness: object = None

    def to_dict(self):
        return {"name": self.name, "passed": self.passed,
                "witness": None if self.witness is None else str(self.witness)}


def _all_zero(g, A, B, symmetric=False):
    """Whether every bracket between basis vectors of A and B vanishes.

    Returns ``(answer, witness)``; ``answer`` is None when a needed bracket
    lies beyond the truncation.
    """
    pa = A.basis_pairs()
    pb = pa if symmetric else B.basis_pairs()
    beyond = False
    for i, (da, va) in enumerate(pa):
        for j in range(i + 1 if symmetric else 0, len(pb)):
            db, vb = pb[j]
            tgt, status = _bracket_target(g, da, db)
            if status == "zero" or (da == db and _proportional(va, vb)):
                continue
            if status == "beyond":
                beyond = True
                continue
            z = g.bracket(A._to_element(da, va), B._to_element(db, vb))
            if not z.is_zero():
                return False, (list(da), list(db))
    return (None if beyond else True), None


def _contained(g, A, dst):
    """Whether ``[A-brackets]`` (a graded space) lies in dst."""
    for d in A.degrees():
        for v in A.pieces[d].vectors:
            p = dst.pieces.get(d)
            if p is None or not p.contains(v):
                return False, list(d)
    return True, None


@dataclass
class StructureReport:
    checks: list

    @property
    def passed(self):
        vals = [c.passed for c in self.checks]
        if any(v is False for v in vals):
            return False
        if any(v is None for v in vals):
            return None
        return True

    def check(self, name):
        return next(c for c in self.checks if c.name == name)

    def to_dict(self):
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def check_locally_finite_structure(L):
    g = L.g
    l0, gpsi, plus, minus = parts(L)
    checks = []
    pa = psi_analysis(g, gpsi.degrees())
    checks.append(Check("psi_closed", pa.closed, pa.witness))
    ans, wit = _all_zero(g, plus, plus, symmetric=True)
    checks.append(Check("im_plus_abelian", ans, wit))
    ans, wit = _all_zero(g, minus, minus, symmetric=True)
    checks.append(Check("im_minus_abelian", ans, wit))
    a1, w1 = _all_zero(g, gpsi, plus)
    a2, w2 = _all_zero(g, gpsi, minus)
    cond2 = False if (a1 is False or a2 is False) else (None if None in (a1, a2) else True)
    checks.append(Check("psi_commutes_with_im", cond2, w1 or w2))
    br, boundary = bracket_spaces(g, plus, minus)
    target = GradedSpace(g)
    for d in l0.degrees() + gpsi.degrees():
        for v in L.pieces[d].vectors:
            target.add_vector(d, v)
    ok, wit = _contained(g, br, target)
    cond3 = ok if (not boundary or not ok) else None
    checks.append(Check("im_bracket_in_L0_plus_psi", cond3, wit))
    return StructureReport(checks)


# -- series ----------------------------------------------------------------

@dataclass
class SeriesReport:
    kind: str
    steps: list           # graded dimension profiles
    verdict: str
    step: int
    certified: bool
    spaces: list = field(default_factory=list, repr=False)

    @property
    def terminates(self):
        return self.verdict == TERMINATES

    def to_dict(self):
        return {"kind": self.kind, "verdict": f"{self.verdict}({self.step})",
                "certified": self.certified,
                "steps": [{json.dumps(list(d)): m for d, m in sorted(p.items(), key=lambda kv: _deg_key(kv[0]))}
                          for p in self.steps]}


def series(L, kind, max_steps=8):
    """Derived or lower central series with a truncation-aware verdict.

    Step 0 is L itself; step k+1 is ``[S_k, S_k]`` (derived) or ``[L, S_k]``
    (lower central).
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    if kind not in (DERIVED, LOWER_CENTRAL):
        raise ValueError(f"unknown series kind {kind!r}")
    g = L.g
    steps = [L]
    if L.is_zero() and L.vanishes_beyond():
        return SeriesReport(kind, [L.profile()], TERMINATES, 0, True, steps)
    for k in range(1, max_steps + 1):
        prev = steps[-1]
        if kind == DERIVED:
            cur, boundary = bracket_spaces(g, prev, prev, symmetric=True)
            sup = _sum_sets(g, prev.degree_set(), prev.degree_set(), exclude_inner=True)
        else:
            cur, boundary = bracket_spaces(g, L, prev)
            sup = _sum_sets(g, L.degree_set(), prev.degree_set(), exclude_inner=True)
        cur.certified = prev.certified and L.certified and not sup.unknown
        if sup.unknown:
            cur.beyond = DegreeSet(unknown=True)
        else:
            extra = frozenset(d for d in sup.finite if abs(_height(d)) > g.H) | frozenset(boundary)
            cur.beyond = DegreeSet(extra, sup.progressions)
        steps.append(cur)
        profiles = [s.profile() for s in steps]
        if cur.is_zero():
            if cur.vanishes_beyond():
                return SeriesReport(kind, profiles, TERMINATES, k, True, steps)
            return SeriesReport(kind, profiles, NONZERO_AT_TRUNCATION, k, False, steps)
        if cur.same_as(prev) and cur.vanishes_beyond() and prev.vanishes_beyond():
            return SeriesReport(kind, profiles, STABILISES, k, True, steps)
    return SeriesReport(kind, [s.profile() for s in steps], NONZERO_AT_TRUNCATION, max_steps,
                        False, steps)


def nilpotency_class(L, max_steps=8):
    """Class c with L^c = 0 (lower central), or None when not certified."""
    rep = series(L, LOWER_CENTRAL, max_steps)
    return rep.step if rep.terminates else None


def generated_subalgebra(L, spaces):
    """Subalgebra generated by the given graded spaces."""
    gens = []
    for sp in spaces:
        gens.extend(sp.elements())
    return span_closure(L.g, gens)


# -- abelian canonical form -------------------------------------------------

@dataclass
class CanonicalForm:
    word: tuple
    anisotropic: list     # [(original degree, K0 degree)]
    isotropic: list       # [(primitive ray, K0 ray, {original degree: dim})]
    transformed: object = None

    def to_dict(self):
        return {"word": list(self.word),
                "anisotropic": [{"degree": list(a), "rep": list(b)} for a, b in self.anisotropic],
                "isotropic": [{"ray": list(r), "rep": list(k),
                               "degrees": {json.dumps(list(d)): m for d, m in sorted(dd.items())}}
                              for r, k, dd in self.isotropic]}


def abelian_canonical_form(g, L, transform=False):
    """Weyl word moving an abelian graded subspace of n^{im+} to the
    fundamental chamber with separated supports."""
    for d in L.degrees():
        if _height(d) <= 0 or not g.classify(d).is_imaginary:
            raise NotInNimPlus(f"degree {list(d)} is not a positive imaginary root")
    ans, wit = _all_zero(g, L, L, symmetric=True)
    if ans is False:
        raise NotAbelian(wit)
    aniso, rays = [], {}
    for d in L.degrees():
        if bilinear(g.symm, d, d) == 0:
            ray = R.primitive(d)
            rays.setdefault(ray, {})[d] = L.dim(d)
        else:
            aniso.append(d)
    reps_in = aniso + sorted(rays, key=_deg_key)
    word, reps = R.disjointify(g.gcm, g.symm, reps_in) if reps_in else ((), [])
    an = list(zip(aniso, reps[:len(aniso)]))
    iso = [(ray, rep, rays[ray]) for ray, rep in zip(sorted(rays, key=_deg_key), reps[len(aniso):])]
    form = CanonicalForm(tuple(word), an, iso)
    if transform:
        form.transformed = [g.weyl_star(word, x) for x in L.elements()]
    return form


# -- solvability ------------------------------------------------------------

@dataclass
class SolvabilityReport:
    solvable: object
    derived: SeriesReport
    second_derived_nilpotent: object
    cartan_condition: object
    derived_nilpotent: object
    consistency: dict

    def to_dict(self):
        return {"solvable": self.solvable,
                "derived_series": self.derived.to_dict(),
                "second_derived_nilpotent": self.second_derived_nilpotent,
                "cartan_condition": self.cartan_condition,
                "first_derived_nilpotent": self.derived_nilpotent,
                "consistency": self.consistency}


def _decided(rep):
    if rep.verdict == TERMINATES:
        return True
    if rep.verdict == STABILISES:
        return False
    return None


def _cartan_condition(L, first):
    """``[h ∩ L^1, L] = 0``; None when it cannot be settled beyond H."""
    g = L.g
    zero = _zero(g.n)
    hvecs = first.pieces[zero].vectors if zero in first.pieces else []
    if not hvecs:
        return True
    degs = list(L.degrees())
    for v in hvecs:
        h = first._to_element(zero, v)
        for d in degs:
            if any(d) and g.pairing_on(d, h):
                return False
        if L.beyond.unknown:
            return None
        for d in L.beyond.finite:
            if g.pairing_on(d, h):
                return None
        for base, step in L.beyond.progressions:
            if g.pairing_on(base, h) or g.pairing_on(step, h):
                return None
    return True if L.certified else None


def solvability_verdict(L, max_steps=8):
    derived = series(L, DERIVED, max_steps)
    solvable = _decided(derived)
    spaces = derived.spaces
    first = spaces[1] if len(spaces) > 1 else None
    second = spaces[2] if len(spaces) > 2 else None
    if second is None and derived.verdict in (TERMINATES, STABILISES):
        second = spaces[-1]
    nil2 = _decided(series(second, LOWER_CENTRAL, max_steps)) if second is not None else None
    nil1 = _decided(series(first, LOWER_CENTRAL, max_steps)) if first is not None else None
    cartan = _cartan_condition(L, first) if first is not None else True
    consistency = {}
    if solvable is not None and nil2 is not None:
        consistency["solvable_iff_second_derived_nilpotent"] = solvable == nil2
    if solvable is True and cartan is not None:
        consistency["solvable_implies_cartan_condition"] = bool(cartan)
    if not has_affine_subdiagram(L.g.gcm) and solvable is not None and nil1 is not None:
        consistency["no_affine_solvable_iff_first_derived_nilpotent"] = solvable == nil1
    return SolvabilityReport(solvable, derived, nil2, cartan, nil1, consistency)
