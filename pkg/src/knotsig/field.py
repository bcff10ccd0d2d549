"""Arithmetic in Q(alpha) for a real algebraic number alpha.

The defining polynomial of alpha is only known to be squarefree.  When a
gcd computation exposes a nontrivial factor, the field switches to the
factor that vanishes at alpha.  This narrowing is monotone and does not
change the value of any element, so callers never observe it.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import poly as P
from .realalg import RealAlgebraicNumber, sign_and_refine, sturm_count


def _as_rep(coeffs):
    return P.strip(tuple(Fraction(c) for c in coeffs))


class AlgebraicField:
    """The field Q(alpha), operating on coefficient tuples modulo ``modulus``."""

    def __init__(self, alpha):
        self.alpha = alpha
        if alpha.is_rational:
            self.modulus = (-alpha.lo, Fraction(1))
        else:
            self.modulus = tuple(alpha.min_poly)

    @property
    def degree(self):
        return len(self.modulus) - 1

    def _narrow(self, factor):
        """Replace the modulus by whichever of ``factor`` and its cofactor vanishes at alpha."""
        factor = P.primitive(factor)
        cofactor = P.primitive(P.exquo(self.modulus, factor))
        a = self.alpha
        if a.is_rational:
            return
        keep = factor if sturm_count(factor, a.lo, a.hi) > 0 else cofactor
        self.modulus = keep
        if len(keep) == 2:
            root = Fraction(-keep[0], keep[1])
            self.alpha = RealAlgebraicNumber.from_rational(root)
        else:
            self.alpha = RealAlgebraicNumber(keep, a.lo, a.hi)

    def reduce(self, r):
        if len(r) < len(self.modulus):
            return r
        return P.rem(r, self.modulus)

    def add(self, a, b):
        return self.reduce(P.add(a, b))

    def sub(self, a, b):
        return self.reduce(P.sub(a, b))

    def mul(self, a, b):
        if not a or not b:
            return ()
        return self.reduce(P.mul(a, b))

    def sign(self, r):
        """Exact sign of the element with representative ``r``."""
        r = self.reduce(r)
        if not r:
            return 0
        if len(r) == 1:
            return (r[0] > 0) - (r[0] < 0)
        h = P.gcd(r, self.modulus)
        if len(h) > 1:
            self._narrow(h)
            r = self.reduce(r)
            if not r:
                return 0
        s, self.alpha = sign_and_refine(self.alpha, r)
        return s

    def is_zero(self, r):
        return self.sign(r) == 0

    def inv(self, r):
        while True:
            r = self.reduce(r)
            if not r:
                raise ZeroDivisionError("inverse of zero in Q(alpha)")
            g, s, _ = P.egcd(r, self.modulus)
            if len(g) == 1:
                return self.reduce(s)
            self._narrow(g)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def element(self, coeffs):
        return FieldElement(self.reduce(_as_rep(coeffs)), self)

    def gen(self):
        return self.element((0, 1))

    def __repr__(self):
        return f"AlgebraicField({self.alpha!r})"


@dataclass(frozen=True, eq=False)
class FieldElement:
    """An element of Q(alpha), stored as a polynomial in alpha with rational coefficients."""

    rep: tuple
    field: AlgebraicField

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements belong to different fields")
            return other.rep
        return _as_rep((other,))

    def canonical(self):
        return self.field.reduce(self.rep)

    def __add__(self, other):
        return FieldElement(self.field.add(self.rep, self._coerce(other)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field.sub(self.rep, self._coerce(other)), self.field)

    def __rsub__(self, other):
        return FieldElement(self.field.sub(self._coerce(other), self.rep), self.field)

    def __neg__(self):
        return FieldElement(P.neg(self.rep), self.field)

    def __mul__(self, other):
        return FieldElement(self.field.mul(self.rep, self._coerce(other)), self.field)

    __rmul__ = __mul__

    def inverse(self):
        return FieldElement(self.field.inv(self.rep), self.field)

    def __truediv__(self, other):
        return FieldElement(self.field.div(self.rep, self._coerce(other)), self.field)

    def __rtruediv__(self, other):
        return FieldElement(self.field.div(self._coerce(other), self.rep), self.field)

    def sign(self):
        return self.field.sign(self.rep)

    def is_zero(self):
        return self.field.is_zero(self.rep)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.field.is_zero(P.sub(self.rep, self._coerce(other)))
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"FieldElement({P.to_str(self.canonical(), 'a')})"
