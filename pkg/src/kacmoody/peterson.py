"""Root multiplicities from the Peterson recursion.

Independent of the Lie algebra engine: only the symmetrised form is used.
With ``c_beta = sum_{k | beta} mult(beta/k) / k`` the recursion reads

    (beta | beta - 2 rho) c_beta = sum_{beta' + beta'' = beta} (beta'|beta'') c_beta' c_beta''

over ordered pairs of nonzero nonnegative vectors, and ``(rho|alpha_i) =
(alpha_i|alpha_i)/2``.  Where ``(beta|beta - 2 rho)`` vanishes for a
non-simple ``beta`` the vector cannot be a root, and the multiplicity is 0.
"""

from fractions import Fraction
from itertools import product
from math import gcd

from .errors import DenominatorZero, NotSignPure
from .gcm import bilinear


class PetersonOracle:
    def __init__(self, a, s):
        self.gcm = a
        self.symm = s
        self.n = a.n
        self._c = {}
        self._mult = {}

    def _norm_rho(self, beta):
        # (beta | 2 rho) = sum_i beta_i (alpha_i | alpha_i)
        return sum(b * self.symm.b[i][i] for i, b in enumerate(beta))

    def _divisors(self, beta):
        g = 0
        for c in beta:
            g = gcd(g, c)
        return [k for k in range(1, g + 1) if g % k == 0]

    def c(self, beta):
        beta = tuple(beta)
        hit = self._c.get(beta)
        if hit is not None:
            return hit
        total = Fraction(0)
        for k in self._divisors(beta):
            total += Fraction(self.mult(tuple(b // k for b in beta)), k)
        self._c[beta] = total
        return total

    def mult(self, beta):
        beta = tuple(int(b) for b in beta)
        if any(b < 0 for b in beta) or not any(beta):
            raise NotSignPure(f"{list(beta)} is not a positive vector")
        hit = self._mult.get(beta)
        if hit is not None:
            return hit
        if sum(beta) == 1:
            self._mult[beta] = 1
            return 1
        rhs = Fraction(0)
        for left in product(*(range(b + 1) for b in beta)):
            if not any(left) or left == beta:
                continue
            right = tuple(b - l for b, l in zip(beta, left))
            form = bilinear(self.symm, left, right)
            if form:
                rhs += form * self.c(left) * self.c(right)
        denom = bilinear(self.symm, beta, beta) - self._norm_rho(beta)
        if denom == 0:
            # Imaginary roots have (beta|beta) <= 0 < (beta|2 rho), and a real
            # root with <rho, beta^vee> = 1 is simple; so beta is no root and
            # the recursion only has to be consistent here.
            if rhs:
                raise DenominatorZero(
                    f"(beta|beta - 2 rho) vanishes at {list(beta)} but the sum does not")
            c_beta = sum((Fraction(self.mult(tuple(b // k for b in beta)), k)
                          for k in self._divisors(beta)[1:]), Fraction(0))
        else:
            c_beta = rhs / denom
        # subtract the contributions of proper divisors
        value = c_beta
        for k in self._divisors(beta)[1:]:
            value -= Fraction(self.mult(tuple(b // k for b in beta)), k)
        if value.denominator != 1 or value < 0:
            raise DenominatorZero(f"non-integral multiplicity {value} at {list(beta)}")
        self._mult[beta] = int(value)
        self._c[beta] = c_beta
        return int(value)


def peterson_mult(a, s, beta):
    return PetersonOracle(a, s).mult(beta)
