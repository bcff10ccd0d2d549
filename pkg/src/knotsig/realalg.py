"""Real algebraic numbers: Sturm counting, root isolation and exact sign tests."""

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from . import poly as P


class EndpointRootError(ValueError):
    """An interval endpoint handed to a Sturm count is itself a root."""


def _sgn(v):
    return (v > 0) - (v < 0)


def _signed_primitive(r):
    # primitive(), but keeps the sign of the leading coefficient
    p = P.primitive(r)
    return p if _sgn(p[-1]) == _sgn(r[-1]) else P.neg(p)


@lru_cache(maxsize=4096)
def sturm_sequence(p):
    """Sturm sequence of a squarefree polynomial, each term scaled by a positive constant."""
    p = P.strip(p)
    if not p:
        return ()
    seq = [_signed_primitive(p)]
    d = P.deriv(p)
    if d:
        seq.append(_signed_primitive(d))
    while len(seq) > 1:
        r = P.rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(_signed_primitive(P.neg(r)))
    return tuple(seq)


def sign_variations(seq, x):
    count = 0
    last = 0
    for s in seq:
        v = _sgn(P.evaluate(s, x))
        if v == 0:
            continue
        if last and v != last:
            count += 1
        last = v
    return count


def sturm_count(p, lo, hi):
    """Number of distinct real roots of the squarefree polynomial ``p`` in ``(lo, hi)``."""
    lo, hi = Fraction(lo), Fraction(hi)
    p = P.strip(p)
    if P.evaluate(p, lo) == 0 or P.evaluate(p, hi) == 0:
        raise EndpointRootError(f"interval endpoint is a root of {P.to_str(p)}")
    if hi <= lo:
        return 0
    seq = sturm_sequence(p)
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def root_bound(p):
    """Cauchy bound: every real root of ``p`` lies strictly inside ``(-B, B)``."""
    p = P.strip(p)
    lead = abs(Fraction(p[-1]))
    m = max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))
    return Fraction(int(m) + 2)


_DIVISOR_LIMIT = 10**12


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p):
    """Rational roots of an integer polynomial (rational root theorem).

    Returns ``None`` when the trailing or leading coefficient is too large
    to enumerate divisors; callers then fall back to interval-only roots.
    """
    p = P.primitive(p)
    roots = set()
    while p and p[0] == 0:
        roots.add(Fraction(0))
        p = p[1:]
    if len(p) <= 1:
        return sorted(roots)
    a0, an = abs(p[0]), abs(p[-1])
    if a0 > _DIVISOR_LIMIT or an > _DIVISOR_LIMIT:
        return None
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and P.evaluate(p, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


@dataclass(frozen=True)
class RealAlgebraicNumber:
    """A real root of ``min_poly`` isolated by the closed interval ``[lo, hi]``.

    ``min_poly`` is squarefree, primitive, with positive leading
    coefficient.  It is not necessarily irreducible.  A rational number
    carries a linear ``min_poly`` and ``lo == hi``.
    """

    min_poly: tuple
    lo: Fraction
    hi: Fraction

    @classmethod
    def from_rational(cls, q):
        q = Fraction(q)
        return cls((-q.numerator, q.denominator), q, q)

    @property
    def is_rational(self):
        return self.lo == self.hi

    @property
    def value(self):
        if not self.is_rational:
            raise ValueError("not a rational number")
        return self.lo

    @property
    def width(self):
        return self.hi - self.lo

    def refine(self, width):
        return refine(self, width)

    def __float__(self):
        return float(approx_fraction(self, Fraction(1, 10**18)))

    def __repr__(self):
        if self.is_rational:
            return f"RealAlgebraicNumber({self.lo})"
        return (f"RealAlgebraicNumber(root of {P.to_str(self.min_poly)} "
                f"in [{self.lo}, {self.hi}])")


def _bisect_once(p, lo, hi):
    """One sign-based bisection step; returns a new ``(lo, hi)``, possibly degenerate."""
    mid = (lo + hi) / 2
    v = P.evaluate(p, mid)
    if v == 0:
        return mid, mid
    if _sgn(v) == _sgn(P.evaluate(p, lo)):
        return mid, hi
    return lo, mid


def _make(p, lo, hi):
    if lo == hi:
        return RealAlgebraicNumber.from_rational(lo)
    return RealAlgebraicNumber(p, lo, hi)


def refine(alpha, width):
    """Shrink the isolating interval of ``alpha`` below ``width``.

    Bisection with exact endpoint sign tests; a midpoint that is a root
    turns the number into an exact rational.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    p, lo, hi = alpha.min_poly, alpha.lo, alpha.hi
    if hi - lo <= width:
        return alpha
    while hi - lo > width:
        lo, hi = _bisect_once(p, lo, hi)
    return _make(p, lo, hi)


def _clear_critical_points(p, lo, hi):
    """Shrink ``[lo, hi]`` until it holds no root of ``p'`` (the root of ``p`` inside is simple)."""
    d = P.sqf_part(P.deriv(p))
    if len(d) <= 1:
        return lo, hi
    while True:
        if lo == hi:
            return lo, hi
        dlo, dhi = P.evaluate(d, lo), P.evaluate(d, hi)
        if dlo == 0:
            cand = lo + (hi - lo) / 3
            v = P.evaluate(p, cand)
            if v == 0:
                return cand, cand
            if _sgn(v) == _sgn(P.evaluate(p, lo)):
                lo = cand
            else:
                hi = cand
            continue
        if dhi == 0:
            cand = hi - (hi - lo) / 3
            v = P.evaluate(p, cand)
            if v == 0:
                return cand, cand
            if _sgn(v) == _sgn(P.evaluate(p, hi)):
                hi = cand
            else:
                lo = cand
            continue
        if sturm_count(d, lo, hi) == 0:
            return lo, hi
        lo, hi = _bisect_once(p, lo, hi)


def _split_point(p, lo, hi):
    mid = (lo + hi) / 2
    step = (hi - lo) / 6  # a third of the half-width
    while P.evaluate(p, mid) == 0:
        mid += step
        step /= 3
    return mid


def isolate_real_roots(p, lo, hi):
    """Isolate the distinct real roots of ``p`` in the open interval ``(lo, hi)``.

    Returns ascending :class:`RealAlgebraicNumber` values with pairwise
    disjoint intervals.  Rational roots come back exact (linear
    ``min_poly``); the others carry the squarefree cofactor left after
    splitting off the rational roots.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    p = P.strip(p)
    if not p:
        raise ValueError("cannot isolate the roots of the zero polynomial")
    q = P.sqf_part(p)
    if P.evaluate(q, lo) == 0 or P.evaluate(q, hi) == 0:
        raise EndpointRootError("interval endpoint is a root")
    if len(q) <= 1:
        return []

    found = []
    rats = rational_roots(q)
    if rats:
        for r in rats:
            q = P.primitive(P.exquo(q, (-r.numerator, r.denominator)))
            if lo < r < hi:
                found.append(RealAlgebraicNumber.from_rational(r))

    if len(q) > 1:
        stack = [(lo, hi)]
        while stack:
            a, b = stack.pop()
            n = sturm_count(q, a, b)
            if n == 0:
                continue
            if n == 1:
                a2, b2 = _clear_critical_points(q, a, b)
                found.append(_make(q, a2, b2))
                continue
            m = _split_point(q, a, b)
            stack.append((a, m))
            stack.append((m, b))

    return _separate(found)


def _separate(roots):
    # closed intervals may touch, or an exact rational may sit inside a
    # neighbour's interval; shrink until strictly disjoint
    roots = sorted(roots, key=lambda r: (r.lo, r.hi))
    i = 0
    while i + 1 < len(roots):
        a, b = roots[i], roots[i + 1]
        if a.hi < b.lo:
            i += 1
            continue
        if not a.is_rational:
            a = refine(a, a.width / 2)
        if not b.is_rational:
            b = refine(b, b.width / 2)
        roots[i:i + 2] = sorted((a, b), key=lambda r: (r.lo, r.hi))
        i = max(i - 1, 0)
    return roots


def real_roots(p):
    """All distinct real roots of ``p``."""
    b = root_bound(p)
    return isolate_real_roots(p, -b, b)


def _interval_eval(g, lo, hi):
    a = b = Fraction(0)
    for c in reversed(g):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


def sign_and_refine(alpha, g):
    """Sign of ``g(alpha)`` together with a (possibly) tighter ``alpha``."""
    g = P.strip(g)
    if not g:
        return 0, alpha
    if alpha.is_rational:
        return _sgn(P.evaluate(g, alpha.lo)), alpha
    h = P.gcd(g, alpha.min_poly)
    if len(h) > 1 and sturm_count(h, alpha.lo, alpha.hi) > 0:
        return 0, alpha
    p, lo, hi = alpha.min_poly, alpha.lo, alpha.hi
    while True:
        a, b = _interval_eval(g, lo, hi)
        if a > 0:
            return 1, _make(p, lo, hi)
        if b < 0:
            return -1, _make(p, lo, hi)
        lo, hi = _bisect_once(p, lo, hi)
        if lo == hi:
            return _sgn(P.evaluate(g, lo)), _make(p, lo, hi)


def sign_at(alpha, g):
    """Exact sign of the rational polynomial ``g`` at ``alpha``: -1, 0 or +1."""
    return sign_and_refine(alpha, g)[0]


def compare_rational(alpha, q):
    """Sign of ``alpha - q`` for rational ``q``."""
    q = Fraction(q)
    return sign_at(alpha, (-q, Fraction(1)))


def equal(alpha, beta):
    if alpha.is_rational:
        return sign_at(beta, (-alpha.lo, Fraction(1))) == 0
    if beta.is_rational:
        return sign_at(alpha, (-beta.lo, Fraction(1))) == 0
    lo, hi = max(alpha.lo, beta.lo), min(alpha.hi, beta.hi)
    if lo > hi:
        return False
    h = P.gcd(alpha.min_poly, beta.min_poly)
    if len(h) <= 1:
        return False
    if lo == hi:
        return P.evaluate(h, lo) == 0
    return sturm_count(h, lo, hi) > 0


def compare(alpha, beta):
    """Sign of ``alpha - beta``."""
    if beta.is_rational:
        return compare_rational(alpha, beta.lo)
    if alpha.is_rational:
        return -compare_rational(beta, alpha.lo)
    if equal(alpha, beta):
        return 0
    while not (alpha.hi < beta.lo or beta.hi < alpha.lo):
        alpha = refine(alpha, alpha.width / 2)
        beta = refine(beta, beta.width / 2)
    return 1 if alpha.lo > beta.hi else -1


def approx_fraction(alpha, tol):
    """A rational within ``tol`` of ``alpha``."""
    if alpha.is_rational:
        return alpha.lo
    a = refine(alpha, tol)
    return (a.lo + a.hi) / 2


def approx_decimal(alpha, digits=12):
    """Decimal string of ``alpha`` to ``digits`` significant digits (an annotation only)."""
    if alpha.is_rational:
        q = alpha.lo
    else:
        mag = max(abs(alpha.lo), abs(alpha.hi), Fraction(1, 10**6))
        q = approx_fraction(alpha, mag / 10 ** (digits + 4))
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(q.numerator) / Decimal(q.denominator))


def halve(alpha):
    """The number ``alpha / 2``."""
    if alpha.is_rational:
        return RealAlgebraicNumber.from_rational(alpha.lo / 2)
    return RealAlgebraicNumber(P.primitive(P.rescale(alpha.min_poly, 2)),
                               alpha.lo / 2, alpha.hi / 2)


def double(alpha):
    """The number ``2 * alpha``."""
    if alpha.is_rational:
        return RealAlgebraicNumber.from_rational(alpha.lo * 2)
    return RealAlgebraicNumber(P.primitive(P.rescale(alpha.min_poly, Fraction(1, 2))),
                               alpha.lo * 2, alpha.hi * 2)


def inside_open(alpha, lo, hi):
    """Refine ``alpha`` until its interval sits inside ``(lo, hi)``; ``None`` if it cannot."""
    if compare_rational(alpha, lo) <= 0 or compare_rational(alpha, hi) >= 0:
        return None
    while not (lo < alpha.lo and alpha.hi < hi):
        alpha = refine(alpha, alpha.width / 2)
    return alpha
