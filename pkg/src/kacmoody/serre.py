"""Root space dimensions of the Serre presentation, computed literally.

Works inside the free associative algebra on ``e_1..e_n``, where the free
Lie algebra sits as Lie polynomials.  In degree ``beta`` the quotient by the
ideal generated by the Serre relators ``(ad e_i)^{1-a_ij} e_j`` has
dimension ``#Lyndon words of content beta - rank(ideal part)``; the ideal
part is spanned by iterated ``ad e_k`` applied to relators.

Only meant for small heights: the word space grows like a multinomial.
"""

from functools import lru_cache

from .linalg import Subspace
from .lyndon import words_by_content


def _commutator(p, q):
    out = {}
    for u, a in p.items():
        for v, b in q.items():
            for w, c in ((u + v, a * b), (v + u, -a * b)):
                nv = out.get(w, 0) + c
                if nv:
                    out[w] = nv
                else:
                    out.pop(w, None)
    return out


def _letter(i):
    return {(i,): 1}


class SerreQuotient:
    def __init__(self, a, max_height):
        self.gcm = a
        self.n = a.n
        self.H = max_height
        self._lyndon = words_by_content(self.n, max_height)

    @lru_cache(maxsize=None)
    def _ideal(self, beta):
        """Spanning polynomials of the ideal in degree beta."""
        n = self.n
        out = []
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                k = 1 - self.gcm[i, j]
                deg = [0] * n
                deg[i] += k
                deg[j] += 1
                if tuple(deg) == beta:
                    p = _letter(j + 1)
                    for _ in range(k):
                        p = _commutator(_letter(i + 1), p)
                    out.append(p)
        for k in range(n):
            if beta[k] == 0:
                continue
            lower = tuple(c - (idx == k) for idx, c in enumerate(beta))
            if sum(lower) < 2:
                continue
            for p in self._ideal(lower):
                out.append(_commutator(_letter(k + 1), p))
        return tuple(self._dedupe(out))

    @staticmethod
    def _dedupe(polys):
        space = Subspace()
        kept = []
        for p in polys:
            if p and space.add(p):
                kept.append(p)
        return kept

    def dim(self, beta):
        beta = tuple(beta)
        if sum(beta) > self.H:
            raise ValueError(f"height of {list(beta)} exceeds {self.H}")
        free = len(self._lyndon.get(beta, ()))
        if free == 0:
            return 0
        return free - len(self._ideal(beta))


def serre_dim(a, beta):
    return SerreQuotient(a, sum(beta)).dim(beta)
