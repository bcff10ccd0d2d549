"""Dense univariate polynomials over the integers and the rationals.

A polynomial is a tuple of coefficients, lowest degree first, with no
trailing zeros.  The zero polynomial is the empty tuple.  Coefficients are
``int`` or :class:`fractions.Fraction`; integer input stays integer wherever
the operation allows it.
"""

from fractions import Fraction
from math import gcd as igcd

ZERO = ()
ONE = (1,)
X = (0, 1)


def strip(coeffs):
    """Drop trailing zero coefficients and return a tuple."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p):
    return len(p) - 1


def lc(p):
    return p[-1] if p else 0


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return strip(out)


def neg(a):
    return tuple(-c for c in a)


def sub(a, b):
    return add(a, neg(b))


def scale(a, k):
    if k == 0:
        return ZERO
    return tuple(c * k for c in a)


def mul(a, b):
    if not a or not b:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return strip(out)


def power(a, n):
    result = ONE
    for _ in range(n):
        result = mul(result, a)
    return result


def divmod_poly(a, b):
    """Quotient and remainder of ``a`` by nonzero ``b`` over the rationals."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(c) for c in a]
    db = len(b) - 1
    lead = Fraction(b[-1])
    if len(a) - 1 < db:
        return ZERO, strip(a)
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        coef = a[k + db] / lead
        q[k] = coef
        if coef:
            for j in range(db + 1):
                a[k + j] -= coef * b[j]
    return strip(q), strip(a[:db])


def rem(a, b):
    return divmod_poly(a, b)[1]


def exquo(a, b):
    """Exact quotient ``a / b``; raises ``ValueError`` if ``b`` does not divide ``a``."""
    q, r = divmod_poly(a, b)
    if r:
        raise ValueError("polynomial division is not exact")
    return q


def deriv(p):
    return strip(tuple(k * p[k] for k in range(1, len(p))))


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def content(p):
    """Positive gcd of the (integer) coefficients; 0 for the zero polynomial."""
    g = 0
    for c in p:
        g = igcd(g, int(c))
    return g


def primitive(p):
    """Scale a rational polynomial to a primitive integer one with positive leading coefficient."""
    if not p:
        return ZERO
    den = 1
    for c in p:
        c = Fraction(c)
        den = den * c.denominator // igcd(den, c.denominator)
    ints = [int(Fraction(c) * den) for c in p]
    g = content(ints)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def monic(p):
    lead = Fraction(p[-1])
    return tuple(Fraction(c) / lead for c in p)


def gcd(a, b):
    """Greatest common divisor, normalized primitive with positive leading coefficient."""
    a, b = strip(a), strip(b)
    while b:
        a, b = b, primitive(rem(a, b))
    return primitive(a)


def egcd(a, b):
    """Extended Euclid over the rationals.

    Returns ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` monic.
    """
    r0, r1 = tuple(Fraction(c) for c in a), tuple(Fraction(c) for c in b)
    s0, s1 = (Fraction(1),), ZERO
    t0, t1 = ZERO, (Fraction(1),)
    while r1:
        q, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return ZERO, ZERO, ZERO
    inv = 1 / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def sqf_part(p):
    """Squarefree part of ``p`` as a primitive integer polynomial."""
    p = strip(p)
    if len(p) <= 1:
        return primitive(p)
    g = gcd(p, deriv(p))
    if len(g) == 1:
        return primitive(p)
    return primitive(exquo(p, g))


def sqf_list(p):
    """Factors ``[(f1, 1), (f2, 2), ...]`` with ``p = c * prod f_i**i`` (Yun's algorithm)."""
    p = primitive(p)
    if len(p) <= 1:
        return []
    out = []
    g = gcd(p, deriv(p))
    w = primitive(exquo(p, g))
    k = 1
    while len(w) > 1:
        y = gcd(w, g)
        z = primitive(exquo(w, y))
        if len(z) > 1:
            out.append((z, k))
        w = y
        g = primitive(exquo(g, y))
        k += 1
    return out


def is_squarefree(p):
    return len(gcd(p, deriv(p))) <= 1


def rescale(p, k):
    """Return ``p(k*x)``."""
    out = []
    f = 1
    for c in p:
        out.append(c * f)
        f *= k
    return strip(out)


def from_roots(roots):
    p = ONE
    for r in roots:
        p = mul(p, (-r, 1))
    return p


def to_str(p, var="x"):
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s
