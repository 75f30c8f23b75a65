"""Structure-constant export and a content-addressed on-disk cache.

The export records, for every positive degree up to ``H``, the Lyndon words of
the chosen basis with their f-images, the coordinates of every Lyndon word,
and the bracket ``[b_i, b_j]`` of every pair of positive basis vectors whose
degree sum stays within ``H``.  Loading restores an algebra without repeating
the candidate elimination.
"""

import hashlib
import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import KacMoodyAlgebra, _Basis, build
from .gcm import GCM, symmetrize
from .linalg import Subspace, frac_str

FORMAT = "kacmoody-structure-constants/1"


class CacheCorrupted(Exception):
    pass


def _fracs(values):
    return [frac_str(v) for v in values]


def export_structure_constants(g):
    bases = []
    for deg in sorted(g.bases, key=lambda d: (sum(d), d)):
        entries = []
        for b in g.bases[deg]:
            fim = sorted(([j, k, frac_str(c)] for (j, k), c in b.fimage.items()))
            entries.append({"word": list(b.word), "fimage": fim})
        bases.append({"degree": list(deg), "basis": entries})
    words = [{"word": list(w), "coords": _fracs(c)}
             for w, c in sorted(g._word_image.items(), key=lambda kv: (len(kv[0]), kv[0]))]
    table = []
    degs = g.positive_degrees()
    for d1 in degs:
        for d2 in degs:
            if sum(d1) + sum(d2) > g.H:
                continue
            target = tuple(a + b for a, b in zip(d1, d2))
            if not g.dim(target):
                continue
            for k1 in range(g.dim(d1)):
                for k2 in range(g.dim(d2)):
                    coords = g._pos_bracket(d1, k1, d2, k2)
                    if any(coords):
                        table.append({"left": [list(d1), k1], "right": [list(d2), k2],
                                      "coords": _fracs(coords)})
    body = {"format": FORMAT, "version": __version__, "gcm": g.gcm.rows(), "H": g.H,
            "symmetrizer": _fracs(g.symm.d), "bases": bases, "words": words,
            "brackets": table}
    return body


def _canonical(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def dumps(g):
    body = export_structure_constants(g)
    body["checksum"] = hashlib.sha256(_canonical(body).encode()).hexdigest()
    return json.dumps(body, sort_keys=True, indent=1) + "\n"


def loads(text, max_candidates=None):
    """Rebuild an algebra from :func:`dumps` output; raises CacheCorrupted."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CacheCorrupted(f"unreadable cache: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise CacheCorrupted("unknown cache format")
    checksum = doc.pop("checksum", None)
    if checksum != hashlib.sha256(_canonical(doc).encode()).hexdigest():
        raise CacheCorrupted("checksum mismatch")
    a = GCM(doc["gcm"])
    s = symmetrize(a)
    kwargs = {} if max_candidates is None else {"max_candidates": max_candidates}
    g = KacMoodyAlgebra(a, s, doc["H"], **kwargs)
    for entry in doc["bases"]:
        deg = tuple(entry["degree"])
        basis, space = [], Subspace()
        for b in entry["basis"]:
            fim = {(j, k): Fraction(c) for j, k, c in b["fimage"]}
            if fim:
                space.add(fim)
            basis.append(_Basis(tuple(b["word"]), fim))
        g.bases[deg] = basis
        if sum(deg) >= 2:
            g._spaces[deg] = space
    for w in doc["words"]:
        g._word_image[tuple(w["word"])] = tuple(Fraction(c) for c in w["coords"])
    for entry in doc["brackets"]:
        (d1, k1), (d2, k2) = entry["left"], entry["right"]
        g._pp[(tuple(d1), k1, tuple(d2), k2)] = tuple(Fraction(c) for c in entry["coords"])
    return g


def cache_dir(explicit=None):
    if explicit:
        return Path(explicit)
    env = os.environ.get("KM_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "kacmoody"


def cache_key(a, H):
    ident = _canonical({"gcm": a.rows(), "H": H, "version": __version__})
    return hashlib.sha256(ident.encode()).hexdigest()


def write_atomic(path, text):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cached_build(a, H, directory=None, max_candidates=None):
    """Load ``(a, H)`` from the cache, or build and store it.

    Returns ``(algebra, path, hit)``.  A corrupted file is rebuilt.
    """
    path = cache_dir(directory) / f"{cache_key(a, H)}.json"
    if path.exists():
        try:
            return loads(path.read_text(), max_candidates), path, True
        except CacheCorrupted:
            pass
    kwargs = {} if max_candidates is None else {"max_candidates": max_candidates}
    g = build(a, symmetrize(a), H, **kwargs)
    write_atomic(path, dumps(g))
    return g, path, False
