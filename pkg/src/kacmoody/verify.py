"""Property sweeps over a truncated algebra, producing machine-readable reports.

Every suite walks its cases in a fixed order and draws random coefficients
from a ``random.Random`` seeded by the caller, so a report is a pure function
of ``(gcm, H, samples, seed)``.
"""

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import sympy

from .errors import HeightExceedsTruncation
from .gcm import GCM, bilinear, symmetrize
from .linalg import frac_str, rank
from . import roots as R
from . import subalgebra as S

DEFAULT_SEED = 0x4B4D
DEFAULT_SAMPLES = 200

PASS, FAIL, INCONCLUSIVE = "Pass", "Fail", "Inconclusive"

HEISENBERG_GCM = [[2, -2, -1], [-2, 2, -1], [-1, -1, 2]]
HEISENBERG_Y = "[e3,[e2,e1]] + 2*[e2,[e3,e1]]"
HEISENBERG_X = "[[e1,e3],[e1,e2]] + [e3,[e1,[e2,e1]]]"
AFFINE_GCM = [[2, -2], [-2, 2]]


@dataclass
class VerificationReport:
    suite: str
    gcm: list
    parameters: dict
    cases_checked: int = 0
    skipped: int = 0
    regimes: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def verdict(self):
        if self.violations:
            return FAIL
        if self.cases_checked == 0:
            return INCONCLUSIVE
        return PASS

    def case(self, regime, n=1):
        self.cases_checked += n
        self.regimes[regime] = self.regimes.get(regime, 0) + n

    def violation(self, inputs, expected, actual):
        self.violations.append({"inputs": inputs, "expected": expected, "actual": actual})

    def to_dict(self):
        violations = sorted(self.violations, key=lambda v: json.dumps(v, sort_keys=True))
        return {"suite": self.suite, "gcm": self.gcm, "parameters": self.parameters,
                "cases_checked": self.cases_checked, "skipped": self.skipped,
                "regimes": dict(sorted(self.regimes.items())), "violations": violations,
                "notes": list(self.notes), "verdict": self.verdict}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def summary(self):
        line = f"{self.suite}: {self.verdict} ({self.cases_checked} cases, {len(self.violations)} violations"
        if self.skipped:
            line += f", {self.skipped} skipped"
        return line + ")"


def _report(g, suite, H, **params):
    if H > g.H:
        raise HeightExceedsTruncation(f"suite height {H} exceeds the truncation {g.H}")
    return VerificationReport(suite, g.gcm.rows(), dict(sorted({"H": H, **params}.items())))


def _ht(d):
    return sum(d)


def _label(d):
    return list(d)


def _all_roots(g, H):
    """Roots of absolute height <= H with their classes: positives then negatives."""
    pos = [(b, c) for b, c in R.enumerate_positive_roots(g.gcm, g.symm, H, max_height=max(H, 1))]
    return pos + [(R.neg(b), g.classify(R.neg(b))) for b, _ in pos]


def _basis_vectors(g, d):
    m = g.mult(d)
    return [tuple(Fraction(int(i == k)) for i in range(m)) for k in range(m)]


def _vector(g, z, target):
    """Coordinates of the ``target`` component of an element."""
    if not any(target):
        return tuple(z.cartan) + tuple(z.deriv)
    m = g.mult(target)
    return tuple(z.terms.get(target, (Fraction(0),) * m))


def _tensor(g, a, b):
    """``T[i][j]`` = coordinates of ``[b_i, b_j]`` in degree ``a + b``."""
    t = R.add(a, b)
    xs = g.basis(a)
    ys = g.basis(b)
    return [[_vector(g, g.bracket(x, y), t) for y in ys] for x in xs]


def _contract(tensor, xv, yv):
    width = len(tensor[0][0])
    out = [Fraction(0)] * width
    for i, xi in enumerate(xv):
        if not xi:
            continue
        for j, yj in enumerate(yv):
            if not yj:
                continue
            c = xi * yj
            for k, v in enumerate(tensor[i][j]):
                if v:
                    out[k] += c * v
    return out


def _random_vector(rng, m):
    while True:
        v = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(m)]
        if any(v):
            return v


def _proportional(u, v):
    return all(a * v[k] == b * u[k] for a, b in zip(u, v) for k in range(len(u)))


def _map_matrix(tensor, xv):
    """Matrix (rows: target coordinates) of ``y -> [x, y]``."""
    cols = len(tensor[0])
    width = len(tensor[0][0])
    return [[sum((xv[i] * tensor[i][j][k] for i in range(len(xv))), Fraction(0))
             for j in range(cols)] for k in range(width)]


def _generic_injectivity(tensor, required):
    """For mult 1 or 2 on the left: does ``y -> [x, y]`` have rank >= required
    for every nonzero ``x``?  Returns ``(ok, detail)``."""
    m = len(tensor)
    if m == 1:
        r = rank(_map_matrix(tensor, [Fraction(1)]))
        return r >= required, f"rank {r}"
    # x = x_2 (the point at infinity of x_1 + t x_2)
    r = rank(_map_matrix(tensor, [Fraction(0), Fraction(1)]))
    if r < required:
        return False, f"rank {r} at x = b2"
    t = sympy.Symbol("t")
    m1 = _map_matrix(tensor, [Fraction(1), Fraction(0)])
    m2 = _map_matrix(tensor, [Fraction(0), Fraction(1)])
    rows = len(m1)
    cols = len(m1[0])
    if rows < required:
        return False, f"target dimension {rows} < {required}"
    poly = sympy.Matrix(rows, cols, lambda i, j: sympy.Rational(m1[i][j].numerator, m1[i][j].denominator)
                        + t * sympy.Rational(m2[i][j].numerator, m2[i][j].denominator))
    common = sympy.Integer(0)
    for rs in combinations(range(rows), required):
        for cs in combinations(range(cols), required):
            minor = sympy.expand(poly.extract(list(rs), list(cs)).det())
            common = sympy.gcd(common, minor)
            if common != 0 and sympy.degree(common, t) == 0:
                return True, "minors coprime"
    return False, f"minors share the factor {common}"


def verify_imaginary_brackets_nonzero(g, H=None, samples=DEFAULT_SAMPLES, seed=DEFAULT_SEED):
    """``[x, y] != 0`` for nonzero x in g_alpha, y in g_beta when (alpha|beta) < 0."""
    H = g.H if H is None else H
    rep = _report(g, "nonvanishing", H, samples=samples, seed=seed)
    rng = random.Random(seed)
    roots = _all_roots(g, H)
    for a, ca in roots:
        for b, cb in roots:
            if abs(_ht(a)) + abs(_ht(b)) > H:
                continue
            if bilinear(g.symm, a, b) >= 0:
                continue
            same = a == b
            tensor = _tensor(g, a, b)
            ma, mb = len(tensor), len(tensor[0])
            case = {"alpha": _label(a), "beta": _label(b)}
            # basis vectors and sums of two basis vectors on each side
            xs = _basis_vectors(g, a) + [tuple(u[k] + v[k] for k in range(ma))
                                         for u, v in combinations(_basis_vectors(g, a), 2)]
            ys = _basis_vectors(g, b) + [tuple(u[k] + v[k] for k in range(mb))
                                         for u, v in combinations(_basis_vectors(g, b), 2)]
            for xv in xs:
                for yv in ys:
                    if same and _proportional(xv, yv):
                        continue
                    regime = "basis" if sum(map(bool, xv)) == sum(map(bool, yv)) == 1 else "sums"
                    rep.case(regime)
                    if not any(_contract(tensor, xv, yv)):
                        rep.violation(dict(case, x=[frac_str(c) for c in xv], y=[frac_str(c) for c in yv]),
                                      "nonzero", "0")
            if ma * mb > 1:
                for _ in range(samples):
                    xv = _random_vector(rng, ma)
                    yv = _random_vector(rng, mb)
                    if same and _proportional(xv, yv):
                        continue
                    rep.case("sampled")
                    if not any(_contract(tensor, xv, yv)):
                        rep.violation(dict(case, x=[frac_str(c) for c in xv], y=[frac_str(c) for c in yv]),
                                      "nonzero", "0")
            if ma <= 2:
                rep.case("generic")
                ok, detail = _generic_injectivity(tensor, mb - (1 if same else 0))
                if not ok:
                    rep.violation(dict(case, regime="generic"), "injective for every nonzero x", detail)
    return rep


def _is_root_or_none(g, d):
    return any(d) and g.classify(d).is_root


def _bracket_space_dim(g, a, b):
    tensor = _tensor(g, a, b)
    rows = [v for row in tensor for v in row]
    return rank(rows)


def verify_bracket_zero_classification(g, H=None):
    """``[g_alpha, g_beta] = 0`` exactly when the root-theoretic criteria say so."""
    H = g.H if H is None else H
    rep = _report(g, "bracket-zero", H)
    pos = R.enumerate_positive_roots(g.gcm, g.symm, H, max_height=max(H, 1))
    im = [b for b, c in pos if c.is_imaginary]
    for a in im:
        for b in im:
            if _ht(a) + _ht(b) > H:
                continue
            t = R.add(a, b)
            zero = _bracket_space_dim(g, a, b) == 0
            if a == b:
                # one basis vector brackets to zero with itself
                expected = (not _is_root_or_none(g, t) or bilinear(g.symm, a, a) == 0
                            or g.mult(a) == 1)
            else:
                prop_iso = (bilinear(g.symm, a, a) == 0 and R.primitive(a) == R.primitive(b))
                expected = not _is_root_or_none(g, t) or prop_iso
            rep.case("imaginary")
            if zero != expected:
                rep.violation({"alpha": _label(a), "beta": _label(b)},
                              "zero" if expected else "nonzero", "zero" if zero else "nonzero")
    roots = _all_roots(g, H)
    for a, ca in roots:
        if not ca.is_real:
            continue
        for b, cb in roots:
            t = R.add(a, b)
            if not any(t) or abs(_ht(t)) > H:
                continue
            zero = _bracket_space_dim(g, a, b) == 0
            expected = not _is_root_or_none(g, t)
            rep.case("real")
            if zero != expected:
                rep.violation({"alpha": _label(a), "beta": _label(b)},
                              "zero" if expected else "nonzero", "zero" if zero else "nonzero")
    return rep


def _is_symmetric_rank2(a):
    return a.n == 2 and a[0, 1] == a[1, 0] and a[0, 1] <= -2


def verify_bracket_dimension(g, H=None):
    """Dimension bound for brackets of imaginary root spaces, and the rank-2
    monotonicity ``dim g_alpha <= dim g_{alpha + alpha_1 + alpha_2}``."""
    H = g.H if H is None else H
    rep = _report(g, "bracket-dimension", H)
    pos = R.enumerate_positive_roots(g.gcm, g.symm, H, max_height=max(H, 1))
    im = [b for b, c in pos if c.is_imaginary]
    for a in im:
        for b in im:
            if a == b or _ht(a) + _ht(b) > H:
                continue
            r = _bracket_space_dim(g, a, b)
            if r == 0:
                continue
            ma, mb = g.mult(a), g.mult(b)
            rep.case("dimension")
            case = {"alpha": _label(a), "beta": _label(b), "mult": [ma, mb]}
            if r < max(ma, mb):
                rep.violation(case, f">= {max(ma, mb)}", str(r))
            elif (r == max(ma, mb)) != (min(ma, mb) == 1):
                rep.violation(case, "equality iff min mult is 1", str(r))
    if _is_symmetric_rank2(g.gcm):
        for b, _ in pos:
            t = R.add(b, (1, 1))
            if _ht(t) > H:
                continue
            rep.case("monotonicity")
            if g.mult(b) > g.mult(t):
                rep.violation({"alpha": _label(b)}, f"<= {g.mult(t)}", str(g.mult(b)))
    else:
        rep.notes.append("monotonicity sweep applies to [[2,-a],[-a,2]] with a >= 2 only")
    return rep


def verify_ad_power(g, H=None):
    """``(ad y)^n x != 0`` along the whole chain inside the truncation."""
    H = g.H if H is None else H
    rep = _report(g, "ad-power", H)
    roots = _all_roots(g, H)
    im_pos = [b for b, c in roots if c.is_imaginary and _ht(b) > 0]
    for a, ca in roots:
        if _ht(a) < 0 and not ca.is_real:
            continue
        for b in im_pos:
            if abs(_ht(R.add(a, b))) > H:
                rep.skipped += 1
                continue
            top = (H - _ht(a)) // _ht(b)
            for x in g.basis(a):
                for y in g.basis(b):
                    z = g.bracket(y, x)
                    if z.is_zero():
                        continue
                    rep.case("chain")
                    for n in range(2, top + 1):
                        z = g.bracket(y, z)
                        if z.is_zero():
                            rep.violation({"alpha": _label(a), "beta": _label(b),
                                           "x": g.format(x), "y": g.format(y), "n": n},
                                          "nonzero", "0")
                            break
    return rep


def _witt_check(degree_dims, bracket_dims, N):
    """``prod (1 - t^n)^{l_n} == 1 - sum g_n t^n`` modulo ``t^{N+1}``."""
    poly = [0] * (N + 1)
    poly[0] = 1
    for n in range(1, N + 1):
        for _ in range(degree_dims[n]):
            # multiply by (1 - t^n)
            for k in range(N, n - 1, -1):
                poly[k] -= poly[k - n]
    gens = [degree_dims[n] - bracket_dims[n] for n in range(N + 1)]
    expected = [1] + [-gens[n] for n in range(1, N + 1)]
    return poly, expected


def verify_free_and_heisenberg(g, H=None):
    """Free Lie structure on anisotropic rays and Heisenberg relations on isotropic ones."""
    H = g.H if H is None else H
    rep = _report(g, "free-heisenberg", H)
    pos = R.enumerate_positive_roots(g.gcm, g.symm, H, max_height=max(H, 1))
    rootset = {b for b, _ in pos}
    for a, c in pos:
        if not c.is_imaginary:
            continue
        prim = R.primitive(a)
        k0 = next(k for k in range(1, 100) if R.scale(k, prim) in rootset)
        if R.scale(k0, prim) != a:
            continue
        N = H // _ht(a)
        norm = bilinear(g.symm, a, a)
        if norm < 0:
            if N < 2:
                rep.case("witt-vacuous")
                continue
            dims = [0] * (N + 1)
            brackets = [0] * (N + 1)
            for n in range(1, N + 1):
                d = R.scale(n, a)
                dims[n] = g.mult(d)
                vecs = []
                for i in range(1, n):
                    tensor = _tensor(g, R.scale(i, a), R.scale(n - i, a))
                    vecs.extend(v for row in tensor for v in row)
                brackets[n] = rank(vecs) if vecs else 0
            got, want = _witt_check(dims, brackets, N)
            rep.case("witt")
            if got != want:
                rep.violation({"alpha": _label(a), "order": N}, want, got)
        else:
            sharp = g.sharp(a)
            sharp_vec = tuple(sharp.cartan) + tuple(sharp.deriv)
            for n in range(1, N + 1):
                for m in range(1, N + 1):
                    pn, nm = R.scale(n, a), R.neg(R.scale(m, a))
                    tensor = _tensor(g, pn, nm)
                    vecs = [v for row in tensor for v in row]
                    r = rank(vecs)
                    rep.case("heisenberg")
                    case = {"delta": _label(a), "n": n, "m": -m}
                    if n != m:
                        if r:
                            rep.violation(case, "0", f"dimension {r}")
                    elif r != 1 or rank(vecs + [sharp_vec]) != 1:
                        rep.violation(case, "span of delta^sharp", f"dimension {r}")
                    if (n + m) * _ht(a) <= H:
                        rep.case("heisenberg")
                        r = _bracket_space_dim(g, pn, R.scale(m, a))
                        if r:
                            rep.violation({"delta": _label(a), "n": n, "m": m}, "0", f"dimension {r}")
    return rep


def _root_vector(g, d):
    if _ht(d) > 0:
        return g.basis_element(d, 0)
    return g.homogeneous(d, (Fraction(1),))


def verify_orthogonal_real_pairs(g, H=None, max_steps=4):
    """Real pairs summing to an imaginary root orthogonal to both."""
    H = g.H if H is None else H
    rep = _report(g, "orthogonal-real-pairs", H)
    real = [b for b, c in _all_roots(g, H) if c.is_real]
    for a in real:
        for c in real:
            b = R.add(a, c)
            if _ht(b) <= 0 or not g.classify(b).is_imaginary:
                continue
            if bilinear(g.symm, a, b) or bilinear(g.symm, c, b):
                continue
            if abs(_ht(R.add(b, a))) > H:
                rep.skipped += 1
                continue
            ea, ec = _root_vector(g, a), _root_vector(g, c)
            case = {"alpha": _label(a), "gamma": _label(c)}
            rep.case("double-bracket")
            if g.bracket(ea, g.bracket(ea, ec)).is_zero():
                rep.violation(case, "[e_a,[e_a,e_c]] nonzero", "0")
            L = S.span_closure(g, [ea, ec])
            rep.case("derived-series")
            ser = S.series(L, S.DERIVED, max_steps)
            if ser.terminates:
                rep.violation(case, "derived series does not terminate", ser.to_dict()["verdict"])
    return rep


# -- fixed regressions -----------------------------------------------------

def affine_fixtures():
    """Subalgebra fixtures of the rank-2 affine example: L and L with d2."""
    pattern = {"base_degree": [1, 0], "step_degree": [1, 1], "component": "full", "from": 0}
    L = {"generators": ["[e1,e2]"], "patterns": [pattern]}
    Lhat = {"generators": ["[e1,e2]", "d2"], "patterns": [pattern]}
    return L, Lhat


def psi_degrees(m, H):
    """Degrees ``n*delta + alpha_1`` with ``n >= m`` and height <= H."""
    return [(n + 1, n) for n in range(m, H) if 2 * n + 1 <= H]


def run_regressions(g=None):
    """Exact checks of the worked examples: the rank-3 Heisenberg copy and the
    rank-2 affine subalgebras."""
    from .algebra import build
    if g is None or g.gcm.rows() != HEISENBERG_GCM or g.H < 6:
        g = build(GCM(HEISENBERG_GCM), symmetrize(GCM(HEISENBERG_GCM)), 6)
    rep = VerificationReport("regressions", g.gcm.rows(), {"H": g.H})

    def check(name, ok, expected, actual):
        rep.case(name)
        if not ok:
            rep.violation({"check": name}, expected, actual)

    y = g.parse(HEISENBERG_Y)
    x = g.simple_reflection_star(1, y)
    ys = g.omega(y)
    f1y = g.bracket(g.f(1), y)
    check("[f1,y]=0", f1y.is_zero(), "0", g.format(f1y))
    check("x=s1*y", x == g.parse(HEISENBERG_X), HEISENBERG_X, g.format(x))
    e1x = g.bracket(g.e(1), x)
    check("[e1,x]=0", e1x.is_zero(), "0", g.format(e1x))
    yx = g.bracket(ys, x)
    want = g.e(1).scale(-24)
    check("[y*,x]=-24*e1", yx == want, g.format(want), g.format(yx))
    e1ys = g.bracket(g.e(1), ys)
    check("[e1,y*]=0", e1ys.is_zero(), "0", g.format(e1ys))
    L = S.span_closure(g, [g.e(1), x, ys])
    check("closure dimension 3", L.total_dim() == 3 and L.complete, "3", str(L.total_dim()))
    lc = S.series(L, S.LOWER_CENTRAL, 6)
    check("nilpotent of class 2", lc.terminates and lc.step == 2, "TerminatesAtStep(2)",
          lc.to_dict()["verdict"])
    _, gpsi, _, _ = S.parts(L)
    ab, _ = S._all_zero(g, gpsi, gpsi, symmetric=True)
    check("g_Psi abelian", ab is True, "True", str(ab))

    H = 10
    aff = build(GCM(AFFINE_GCM), None, H)
    rep.parameters = {"H": g.H, "affine_H": H}
    Lf, Lhatf = affine_fixtures()
    L = S.subalgebra_from_fixture(aff, Lf)
    lc = S.series(L, S.LOWER_CENTRAL, 5)
    for n in range(1, 5):
        want = {d: 1 for d in psi_degrees(n, H)}
        got = lc.steps[n] if n < len(lc.steps) else None
        check(f"L^{n}=g_Psi_{n}", got == want, json.dumps(sorted(want)), json.dumps(sorted(got or {})))
    check("[L,L] abelian", S.series(lc.spaces[1], S.LOWER_CENTRAL, 2).terminates, "abelian", "not abelian")
    Lhat = S.subalgebra_from_fixture(aff, Lhatf)
    der = S.series(Lhat, S.DERIVED, 5)
    want = {d: 1 for d in psi_degrees(2, H)}
    got = der.steps[2] if len(der.steps) > 2 else None
    check("Lhat^(2)=g_Psi_2", got == want, json.dumps(sorted(want)), json.dumps(sorted(got or {})))
    sv = S.solvability_verdict(Lhat)
    check("Lhat solvable", sv.solvable is True, "True", str(sv.solvable))
    lc_hat = S.series(Lhat, S.LOWER_CENTRAL, 5)
    check("Lhat not certified nilpotent", not lc_hat.terminates, "not terminating", lc_hat.to_dict()["verdict"])
    return rep


SUITES = {
    "nonvanishing": verify_imaginary_brackets_nonzero,
    "bracket-zero": verify_bracket_zero_classification,
    "bracket-dimension": verify_bracket_dimension,
    "ad-power": verify_ad_power,
    "free-heisenberg": verify_free_and_heisenberg,
    "orthogonal-real-pairs": verify_orthogonal_real_pairs,
}
