"""Bracket expressions: parsing into elements and printing elements back.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := [rational '*'] atom
    atom     := gen | '[' expr ',' expr ']' | '(' expr ')'
    gen      := ('e' | 'f' | 'h' | 'd') index
    rational := ['-'] digits ['/' digits]

Two small extensions: an expression may start with '-' (negating its first
term) and a bare ``0`` denotes the zero element.
"""

from fractions import Fraction

from .errors import ExpressionSyntaxError, UnknownGenerator
from .lyndon import bracketing


class _Parser:
    def __init__(self, g, text):
        self.g = g
        self.text = text
        self.pos = 0

    def error(self, message):
        raise ExpressionSyntaxError(message, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def digits(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return int(self.text[start:self.pos])

    def parse(self):
        if not self.text.strip():
            self.error("empty expression")
        value = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return value

    def expr(self):
        sign = 1
        if self.peek() == "-":
            # a leading '-' either starts a rational or negates the term
            save = self.pos
            self.pos += 1
            if self.peek().isdigit():
                self.pos = save
            else:
                sign = -1
        value = self.term().scale(sign)
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            t = self.term()
            value = value + t if op == "+" else value - t
        return value

    def term(self):
        ch = self.peek()
        if ch == "-" or ch.isdigit():
            neg = False
            if ch == "-":
                neg = True
                self.pos += 1
            num = self.digits()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den = self.digits()
                if den == 0:
                    self.error("zero denominator")
            coeff = Fraction(-num if neg else num, den)
            if self.peek() != "*":
                if coeff == 0 and not neg and den == 1:
                    return self.g.cartan_element([0] * self.g.n)
                self.error("expected '*'")
            self.pos += 1
            return self.atom().scale(coeff)
        return self.atom()

    def atom(self):
        ch = self.peek()
        if ch == "[":
            self.pos += 1
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return self.g.bracket(left, right)
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        if ch in ("e", "f", "h", "d"):
            self.pos += 1
            if not self.peek().isdigit():
                self.error("expected a generator index")
            index = self.digits()
            if not 1 <= index <= self.g.n:
                raise UnknownGenerator(f"{ch}{index}: index outside 1..{self.g.n}")
            return getattr(self.g, ch)(index)
        if not ch:
            self.error("unexpected end of expression")
        self.error(f"unexpected {ch!r}")


def parse_element(g, text):
    return _Parser(g, text).parse()


def _coeff_term(c, atom, first):
    if first:
        if c == 1:
            return atom
        if c == -1:
            return f"-{atom}"
        return f"{c}*{atom}"
    if c == 1:
        return f" + {atom}"
    if c == -1:
        return f" - {atom}"
    if c < 0:
        return f" - {-c}*{atom}"
    return f" + {c}*{atom}"


def format_element(g, x):
    """Text form that :func:`parse_element` maps back to ``x``.

    A negative-degree basis vector ``omega(b)`` is written through the
    f-bracketing of ``b``'s Lyndon word, which equals ``(-1)^ht * omega(b)``.
    """
    pieces = []
    for deg in sorted(x.terms, key=lambda d: (sum(d) < 0, abs(sum(d)), tuple(abs(c) for c in d))):
        vec = x.terms[deg]
        positive = sum(deg) > 0
        words = g.basis_words(deg if positive else tuple(-c for c in deg))
        sign = 1 if positive or sum(deg) % 2 == 0 else -1
        for k, c in enumerate(vec):
            if c:
                atom = bracketing(words[k], "e" if positive else "f")
                pieces.append((c * sign, atom))
    for i, c in enumerate(x.cartan):
        if c:
            pieces.append((c, f"h{i + 1}"))
    for i, c in enumerate(x.deriv):
        if c:
            pieces.append((c, f"d{i + 1}"))
    if not pieces:
        return "0"
    return "".join(_coeff_term(c, atom, k == 0) for k, (c, atom) in enumerate(pieces))
