"""Command-line entry point: ``kacmoody <command> ...``.

Exit codes: 0 success or Pass, 1 failure or violation, 2 usage error or
Inconclusive, 3 resource limit (including requests beyond the truncation).
"""

import argparse
import json
import sys

from . import roots as R
from . import subalgebra as S
from . import verify as V
from .cache import cache_dir, cached_build
from .errors import HeightBoundTooLarge, KacMoodyError, ResourceLimit, TruncationExceeded, HeightExceedsTruncation
from .gcm import classify_subdiagram, load_gcm, symmetrize, validate_gcm
from .linalg import frac_str

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args, doc, text=None):
    if getattr(args, "format", "json") == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(doc, sort_keys=True, indent=2))


def _vector(text, n=None):
    try:
        v = tuple(int(c) for c in text.replace("[", "").replace("]", "").split(","))
    except ValueError:
        raise UsageError(f"cannot read an integer vector from {text!r}")
    if n is not None and len(v) != n:
        raise UsageError(f"expected {n} coordinates, got {len(v)}")
    return v


def _gcm(args):
    if not args.gcm:
        raise UsageError("--gcm is required")
    return load_gcm(args.gcm)


def _algebra(args, a=None, height=None):
    a = a if a is not None else _gcm(args)
    H = height if height is not None else args.height
    g, _, _ = cached_build(a, H, args.cache_dir, args.max_candidates)
    return g


def element_json(g, x):
    terms = [{"degree": list(d), "coords": [frac_str(c) for c in v]}
             for d, v in sorted(x.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))]
    return {"expr": g.format(x), "terms": terms,
            "cartan": [frac_str(c) for c in x.cartan], "deriv": [frac_str(c) for c in x.deriv]}


# -- commands ---------------------------------------------------------------

def cmd_gcm(args):
    with open(args.gcm) as fh:
        doc = json.load(fh)
    a = validate_gcm(doc["matrix"])
    if args.action == "check":
        out = {"valid": True, "n": a.n}
        _emit(args, out, "valid")
    elif args.action == "symmetrize":
        out = symmetrize(a).to_dict()
        _emit(args, out)
    else:
        parts = classify_subdiagram(a)
        kinds = [t for _, t in parts]
        out = {"type": kinds[0] if len(kinds) == 1 else kinds,
               "components": [{"vertices": list(c), "type": t} for c, t in parts]}
        _emit(args, out, ", ".join(kinds))
    return EXIT_OK


def cmd_build(args):
    a = _gcm(args)
    g, path, hit = cached_build(a, args.height, args.cache_dir, args.max_candidates)
    dims = {json.dumps(list(d)): g.dim(d) for d in g.positive_degrees()}
    out = {"cache": str(path), "hit": hit, "H": g.H, "root_spaces": len(dims), "dims": dims}
    _emit(args, out, f"{len(dims)} root spaces ({'cache hit' if hit else 'built'}: {path})")
    return EXIT_OK


def cmd_roots(args):
    a = _gcm(args)
    s = symmetrize(a)
    if args.action == "enumerate":
        g = _algebra(args, a) if args.with_mult else None
        for b, c in R.enumerate_positive_roots(a, s, args.height):
            rec = _root_record(b, c)
            if g is not None:
                rec["mult"] = g.mult(b)
            print(json.dumps(rec, sort_keys=True))
        return EXIT_OK
    elif args.action == "classify":
        if not args.beta:
            raise UsageError("--coords is required")
        beta = _vector(args.beta, a.n)
        c = R.classify_root(a, s, beta)
        _emit(args, _root_record(beta, c), c.kind)
    else:
        if not (args.alpha and args.beta):
            raise UsageError("--alpha and --beta are required")
        st = R.root_string(a, s, _vector(args.alpha, a.n), _vector(args.beta, a.n))
        out = {"p": st.p, "q": st.q, "case": st.case, "members": [list(m) for m in st.members]}
        _emit(args, out, f"p={st.p} q={st.q} case={st.case}")
    return EXIT_OK


def _root_record(beta, c):
    return {"coords": list(beta), "kind": c.kind, "norm": frac_str(c.norm),
            "orbit_rep": list(c.orbit_rep), "word": list(c.word)}


def _apply(g, x, op):
    if op == "omega":
        return g.omega(x)
    body = op[:-1] if op.endswith("*") else op
    if body.startswith("s") and body[1:].isdigit():
        return g.simple_reflection_star(int(body[1:]), x)
    raise UsageError(f"unknown operation {op!r}; use omega or s<i>*")


def cmd_eval(args):
    g = _algebra(args)
    x = g.parse(args.expr)
    for op in args.apply or ():
        x = _apply(g, x, op)
    out = element_json(g, x)
    _emit(args, out, out["expr"])
    return EXIT_OK


def _profile(p):
    return {json.dumps(list(d)): m for d, m in sorted(p.items(), key=lambda kv: (sum(kv[0]), kv[0]))}


def subalgebra_report(L, max_steps):
    g = L.g
    dec = S.decompose(L)
    struct = S.check_locally_finite_structure(L)
    lc = S.series(L, S.LOWER_CENTRAL, max_steps)
    der = S.series(L, S.DERIVED, max_steps)
    sv = S.solvability_verdict(L, max_steps)
    return {
        "H": g.H,
        "profile": _profile(L.profile()),
        "complete": L.complete,
        "certified": L.certified,
        "boundary_events": len(L.boundary),
        "decomposition": dec.to_dict(),
        "structure": struct.to_dict(),
        "lower_central": lc.to_dict(),
        "derived": der.to_dict(),
        "nilpotency_class": lc.step if lc.terminates else None,
        "solvability": sv.to_dict(),
    }


def _subalgebra_text(rep):
    lines = []
    cls = rep["nilpotency_class"]
    lc = rep["lower_central"]["verdict"]
    lines.append(f"nilpotent of class {cls}" if cls is not None else
                 f"not nilpotent at truncation ({lc})" if lc.startswith(S.NONZERO_AT_TRUNCATION)
                 else f"not nilpotent ({lc})")
    solv = rep["solvability"]["solvable"]
    lines.append({True: "solvable", False: "not solvable", None: "solvability inconclusive"}[solv])
    return "\n".join(lines)


def cmd_subalgebra(args):
    with open(args.fixture) as fh:
        doc = json.load(fh)
    if args.gcm:
        a = load_gcm(args.gcm)
    elif "gcm" in doc:
        a = validate_gcm(doc["gcm"])
    else:
        raise UsageError("--gcm is required when the fixture has no gcm field")
    height = args.height if args.height is not None else doc.get("height")
    if height is None:
        raise UsageError("--height is required when the fixture has no height field")
    g = _algebra(args, a, height)
    L = S.subalgebra_from_fixture(g, doc)
    rep = subalgebra_report(L, args.max_steps)
    _emit(args, rep, _subalgebra_text(rep))
    return EXIT_OK


SUITE_NAMES = sorted(list(V.SUITES) + ["regressions"])


def cmd_verify(args):
    if args.suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITE_NAMES)}")
    if args.suite == "regressions":
        g = None
        if args.gcm:
            g = _algebra(args)
        rep = V.run_regressions(g)
    else:
        g = _algebra(args)
        fn = V.SUITES[args.suite]
        if args.suite == "nonvanishing":
            rep = fn(g, args.height, samples=args.samples, seed=args.seed)
        else:
            rep = fn(g, args.height)
    text = rep.to_json()
    if args.out:
        from .cache import write_atomic
        write_atomic(args.out, text)
    if args.format == "text":
        print(rep.summary())
    else:
        sys.stdout.write(text)
    return {V.PASS: EXIT_OK, V.FAIL: EXIT_FAIL, V.INCONCLUSIVE: EXIT_USAGE}[rep.verdict]


# -- argument parsing ---------------------------------------------------------

def _common(p, height=True):
    p.add_argument("--gcm", help="JSON file with a 'matrix' field")
    if height:
        p.add_argument("--height", type=int, default=None, help="truncation height H")
    p.add_argument("--cache-dir", default=None, help=f"cache directory (default {cache_dir()})")
    p.add_argument("--max-candidates", type=int, default=None,
                   help="cap on candidate words per degree")
    p.add_argument("--format", choices=("json", "text"), default="json")


def make_parser():
    parser = argparse.ArgumentParser(prog="kacmoody", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gcm", help="validate, symmetrise or classify a GCM")
    p.add_argument("action", choices=("check", "symmetrize", "classify"))
    _common(p, height=False)
    p.set_defaults(func=cmd_gcm, needs_height=False)

    p = sub.add_parser("build", help="build (or load from cache) the truncated algebra")
    _common(p)
    p.set_defaults(func=cmd_build, needs_height=True)

    p = sub.add_parser("roots", help="root enumeration, classification and strings")
    p.add_argument("action", choices=("enumerate", "classify", "string"))
    p.add_argument("--coords", "--beta", dest="beta", help="root coordinates, e.g. 1,1,1")
    p.add_argument("--alpha")
    p.add_argument("--with-mult", action="store_true", help="add root multiplicities")
    _common(p)
    p.set_defaults(func=cmd_roots, needs_height=False)

    p = sub.add_parser("eval", help="evaluate a bracket expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--apply", action="append", help="omega or s<i>*, applied in order")
    _common(p)
    p.set_defaults(func=cmd_eval, needs_height=True)

    p = sub.add_parser("subalgebra", help="analyse the graded subalgebra of a fixture")
    p.add_argument("fixture")
    p.add_argument("--max-steps", type=int, default=8)
    _common(p)
    p.set_defaults(func=cmd_subalgebra, needs_height=False)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--samples", type=int, default=V.DEFAULT_SAMPLES)
    p.add_argument("--seed", type=lambda t: int(t, 0), default=V.DEFAULT_SEED)
    p.add_argument("--out")
    _common(p)
    p.set_defaults(func=cmd_verify, needs_height=False)
    return parser


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "verify" and args.suite != "regressions" and args.height is None:
        args.height = 8
    if args.command == "roots" and args.height is None:
        args.height = 8
    try:
        if getattr(args, "needs_height", False) and (args.height is None):
            raise UsageError("--height is required")
        if getattr(args, "height", None) is not None and args.height < 1:
            raise UsageError("--height must be >= 1")
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimit, TruncationExceeded, HeightExceedsTruncation, HeightBoundTooLarge) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except KacMoodyError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
