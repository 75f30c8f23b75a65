"""Lyndon words and their standard bracketings.

Words are tuples of 1-based letters compared lexicographically.
"""

from collections import defaultdict
from functools import lru_cache


def lyndon_words(k, max_length):
    """All Lyndon words over ``1..k`` of length <= max_length, in lex order (Duval)."""
    out = []
    w = [0]
    while w:
        out.append(tuple(c + 1 for c in w))
        m = len(w)
        while len(w) < max_length:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()
        if w:
            w[-1] += 1
    return out


def is_lyndon(word):
    word = tuple(word)
    return bool(word) and all(word < word[i:] + word[:i] for i in range(1, len(word)))


@lru_cache(maxsize=None)
def standard_factorisation(word):
    """Split a Lyndon word of length >= 2 as ``(u, v)`` with ``v`` its longest
    proper Lyndon suffix."""
    word = tuple(word)
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError(f"{word} has no standard factorisation")


def content(word, n):
    c = [0] * n
    for letter in word:
        c[letter - 1] += 1
    return tuple(c)


def words_by_content(n, max_length):
    """Lyndon words grouped by their letter content, each group in lex order."""
    groups = defaultdict(list)
    for w in lyndon_words(n, max_length):
        groups[content(w, n)].append(w)
    return dict(groups)


def bracketing(word, letter="e"):
    """String form of the standard bracketing, e.g. ``(1,1,2) -> [e1,[e1,e2]]``."""
    if len(word) == 1:
        return f"{letter}{word[0]}"
    u, v = standard_factorisation(tuple(word))
    return f"[{bracketing(u, letter)},{bracketing(v, letter)}]"
