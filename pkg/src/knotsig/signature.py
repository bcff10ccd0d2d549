"""Exact Tristram-Levine signatures.

For ``ω = c + i s`` on the unit circle the hermitian matrix
``H = (1-ω)V + (1-ω̄)V^T`` splits as ``A + iB`` with
``A = (1-c)(V+V^T)`` and ``B = -s(V-V^T)``.  Rational points are handled
through the real doubling ``[[A, -B], [B, A]]``.  Points whose real part
is algebraic use the congruent matrix

    [[(1-c)(V+V^T),  V-V^T          ],
     [(V-V^T)^T,     (V+V^T)/(1+c)  ]]

over Q(c), which avoids ``s = sqrt(1-c^2)`` entirely.  Both have twice the
signature and twice the nullity of ``H``.

Abscissas are ``x = ω + ω̄ = 2c``, the variable of the trace polynomial.
"""

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import poly as P
from .field import AlgebraicField
from .realalg import (RealAlgebraicNumber, approx_decimal, approx_fraction, compare,
                      compare_rational, double, equal, halve, inside_open,
                      refine)
from .seifert import circle_roots, validate


class PointError(ValueError):
    """A circle point is invalid or not allowed (``ω = 1``)."""


@dataclass(frozen=True)
class RationalPoint:
    """``ω = c + i s`` with rational ``c, s``, ``c² + s² = 1`` and ``ω ≠ 1``."""

    c: Fraction
    s: Fraction

    def __post_init__(self):
        c, s = Fraction(self.c), Fraction(self.s)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "s", s)
        if c * c + s * s != 1:
            raise PointError(f"({c}, {s}) is not on the unit circle")
        if c == 1:
            raise PointError("ω = 1 is excluded")

    @property
    def x(self):
        return 2 * self.c

    @classmethod
    def from_parameter(cls, u):
        """Pythagorean point ``((1-u²)/(1+u²), 2u/(1+u²))``."""
        u = Fraction(u)
        d = 1 + u * u
        return cls((1 - u * u) / d, 2 * u / d)


@dataclass(frozen=True)
class AlgebraicPoint:
    """``ω = c + i sqrt(1-c²)`` on the upper half circle, ``-1 < c < 1`` algebraic."""

    c: RealAlgebraicNumber

    @property
    def x(self):
        return double(self.c)


class _MinusOne:
    """The point ``ω = -1``."""

    c = Fraction(-1)
    s = Fraction(0)
    x = Fraction(-2)

    def __repr__(self):
        return "MINUS_ONE"

    def __reduce__(self):
        return "MINUS_ONE"


MINUS_ONE = _MinusOne()


@dataclass(frozen=True)
class SignatureValue:
    sigma: int
    nullity: int


class _Rationals:
    """Entry domain for congruence elimination over Q."""

    @staticmethod
    def sign(a):
        return (a > 0) - (a < 0)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        return 1 / a


RATIONALS = _Rationals()


def congruence_diagonalize(M, domain=RATIONALS):
    """Signature and nullity of a symmetric matrix by exact congruence elimination.

    ``domain`` supplies ``sign``, ``add``, ``sub``, ``mul`` and ``inv`` on the
    entries; a falsy entry is taken to be structurally zero, which lets
    block-diagonal inputs cost no more than their blocks.

    Pivots are the first nonzero diagonal entry in index order.  When the
    whole remaining diagonal vanishes, the first nonzero off-diagonal entry
    ``M[i][j]`` splits off a hyperbolic plane, contributing ``+1`` and
    ``-1``.  Returns ``(sigma, nullity)``.
    """
    M = [list(row) for row in M]
    n = len(M)
    for i in range(n):
        if len(M[i]) != n:
            raise ValueError("matrix is not square")
    active = list(range(n))
    sigma = 0
    sign = domain.sign
    sub, mul = domain.sub, domain.mul

    while active:
        piv = None
        for i in active:
            if M[i][i] and sign(M[i][i]) != 0:
                piv = i
                break

        if piv is not None:
            i = piv
            sigma += sign(M[i][i])
            active.remove(i)
            pinv = domain.inv(M[i][i])
            row_i = M[i]
            touched = [j for j in active if row_i[j]]
            for a, j in enumerate(touched):
                f = mul(M[j][i], pinv)
                row_j = M[j]
                for k in touched[a:]:
                    v = sub(row_j[k], mul(f, row_i[k]))
                    row_j[k] = v
                    M[k][j] = v
            continue

        pair = None
        for a, i in enumerate(active):
            for j in active[a + 1:]:
                if M[i][j] and sign(M[i][j]) != 0:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            return sigma, len(active)

        i, j = pair
        active.remove(i)
        active.remove(j)
        binv = domain.inv(M[i][j])
        touched = [k for k in active if M[i][k] or M[j][k]]
        for a, k in enumerate(touched):
            row_k = M[k]
            for l in touched[a:]:
                t = None
                if row_k[i] and M[j][l]:
                    t = mul(row_k[i], M[j][l])
                if row_k[j] and M[i][l]:
                    t2 = mul(row_k[j], M[i][l])
                    t = t2 if t is None else domain.add(t, t2)
                if t is None:
                    continue
                v = sub(row_k[l], mul(t, binv))
                row_k[l] = v
                M[l][k] = v
    return sigma, 0


def _sym_skew(V):
    e = V.entries
    n = V.n
    sym = [[e[i][j] + e[j][i] for j in range(n)] for i in range(n)]
    skew = [[e[i][j] - e[j][i] for j in range(n)] for i in range(n)]
    return sym, skew


def _halve_result(sigma, nullity, n):
    if sigma % 2 or nullity % 2:
        raise AssertionError("realified form has odd signature or nullity")
    return SignatureValue(sigma // 2, nullity // 2)


def signature_at_rational(V, point):
    """σ and nullity at a point with rational coordinates (or ``MINUS_ONE``)."""
    V = validate(V)
    if isinstance(point, RationalPoint):
        c, s = point.c, point.s
    elif point is MINUS_ONE:
        c, s = Fraction(-1), Fraction(0)
    else:
        raise PointError(f"not a rational circle point: {point!r}")
    if c == 1:
        raise PointError("ω = 1 is excluded")
    n = V.n
    if n == 0:
        return SignatureValue(0, 0)
    sym, skew = _sym_skew(V)
    A = [[(1 - c) * sym[i][j] for j in range(n)] for i in range(n)]
    if s == 0:
        sigma, nullity = congruence_diagonalize(A)
        return SignatureValue(sigma, nullity)
    B = [[-s * skew[i][j] for j in range(n)] for i in range(n)]
    D = [A[i] + [-B[i][j] for j in range(n)] for i in range(n)]
    D += [B[i] + A[i] for i in range(n)]
    sigma, nullity = congruence_diagonalize(D)
    return _halve_result(sigma, nullity, n)


def signature_at_root(V, c):
    """σ and nullity at ``ω = c + i sqrt(1-c²)`` for algebraic ``c`` in ``(-1, 1)``.

    Intended for roots of the Alexander polynomial but valid at any such
    ``c``; the computation runs over the field Q(c).
    """
    V = validate(V)
    if not isinstance(c, RealAlgebraicNumber):
        c = RealAlgebraicNumber.from_rational(c)
    inside = inside_open(c, Fraction(-1), Fraction(1))
    if inside is None:
        raise PointError(f"abscissa {c!r} is not inside (-1, 1)")
    c = inside
    n = V.n
    if n == 0:
        return SignatureValue(0, 0)
    sym, skew = _sym_skew(V)

    if c.is_rational:
        cv = c.lo
        k = 1 / (1 + cv)
        D = [[(1 - cv) * sym[i][j] for j in range(n)] + [Fraction(skew[i][j]) for j in range(n)]
             for i in range(n)]
        D += [[Fraction(skew[j][i]) for j in range(n)] + [k * sym[i][j] for j in range(n)]
              for i in range(n)]
        sigma, nullity = congruence_diagonalize(D)
        return _halve_result(sigma, nullity, n)

    K = AlgebraicField(c)
    one_minus_c = K.reduce((Fraction(1), Fraction(-1)))
    inv_one_plus_c = K.inv((Fraction(1), Fraction(1)))

    def const(v):
        return (Fraction(v),) if v else ()

    D = [[P.scale(one_minus_c, sym[i][j]) for j in range(n)] + [const(skew[i][j]) for j in range(n)]
         for i in range(n)]
    D += [[const(skew[j][i]) for j in range(n)] + [P.scale(inv_one_plus_c, sym[i][j]) for j in range(n)]
          for i in range(n)]
    sigma, nullity = congruence_diagonalize(D, K)
    return _halve_result(sigma, nullity, n)


def signature_at(V, point):
    """Dispatch on the kind of circle point."""
    if isinstance(point, AlgebraicPoint):
        return signature_at_root(V, point.c)
    return signature_at_rational(V, point)


def _x_of_u(u):
    return 2 * (1 - u * u) / (1 + u * u)


def rational_point_between(a, b, where=Fraction(1, 2)):
    """A Pythagorean point whose abscissa ``2c`` lies strictly inside ``(a, b)``.

    ``a < b`` are rationals within ``[-2, 2]``; ``where`` in ``(0, 1)``
    steers the target towards ``a + where*(b-a)``.  Small denominators are
    tried first, then exact bisection in the parameter.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("empty interval")
    target = a + Fraction(where) * (b - a)
    tf = float(target)
    if -2 < tf < 2:
        u0 = math.sqrt((2 - tf) / (2 + tf))
        approx = Fraction(u0)
        den = 1
        while den < 2**60:
            u = approx.limit_denominator(den)
            if u > 0 and a < _x_of_u(u) < b:
                return RationalPoint.from_parameter(u)
            den *= 2
    # x(u) decreases from 2 (u = 0) to -2 (u -> oo)
    lo, hi = Fraction(0), Fraction(1)
    while _x_of_u(hi) >= b:
        lo, hi = hi, hi * 2
    while True:
        mid = (lo + hi) / 2
        xm = _x_of_u(mid)
        if a < xm < b:
            return RationalPoint.from_parameter(mid)
        if xm >= b:
            lo = mid
        else:
            hi = mid


def _separated(left, right):
    """Refine two distinct algebraic numbers until ``left.hi < right.lo``."""
    while not left.hi < right.lo:
        if not left.is_rational:
            left = refine(left, left.width / 2)
        if not right.is_rational:
            right = refine(right, right.width / 2)
    return left, right


@dataclass(frozen=True)
class SignatureFunction:
    """The step function ``x ↦ σ`` on ``[-2, 2)``, ``x = 2 cos θ``.

    ``arc_values[0]`` is the arc containing ``x = -2`` (ω = -1),
    ``arc_values[-1]`` the arc adjacent to ``x = 2`` (ω → 1).
    """

    n: int
    jumps: tuple
    arc_values: tuple
    point_values: tuple
    arc_samples: tuple = field(default=(), compare=False)

    def arc_bounds(self, i):
        """Rational ``(a, b)`` with the open arc ``i`` containing ``(a, b)``, excluding jumps."""
        lo = Fraction(-2) if i == 0 else self.jumps[i - 1].hi
        hi = Fraction(2) if i == len(self.jumps) else self.jumps[i].lo
        return lo, hi

    def locate(self, x):
        """``("jump", i)`` if ``x`` is the i-th jump, else ``("arc", i)``."""
        if not isinstance(x, RealAlgebraicNumber):
            x = RealAlgebraicNumber.from_rational(x)
        if compare_rational(x, -2) < 0 or compare_rational(x, 2) >= 0:
            raise ValueError("abscissa outside [-2, 2)")
        for i, j in enumerate(self.jumps):
            d = compare(x, j)
            if d == 0:
                return "jump", i
            if d < 0:
                return "arc", i
        return "arc", len(self.jumps)

    def value_at(self, x):
        kind, i = self.locate(x)
        if kind == "jump":
            return self.point_values[i]
        return SignatureValue(self.arc_values[i], 0)

    def averaged(self, x):
        return averaged_signature(self, x)

    def to_dict(self, digits=12):
        return signature_function_dict(self, digits)

    def to_json(self, digits=12):
        return json.dumps(self.to_dict(digits), indent=2)


def signature_function(V):
    """Assemble the full signature function of ``V`` on the upper half circle."""
    V = validate(V)
    jumps = circle_roots(V)
    points = tuple(signature_at_root(V, halve(x)) for x in jumps)

    samples = [MINUS_ONE]
    values = [signature_at_rational(V, MINUS_ONE).sigma]
    refined = list(jumps)
    for i in range(len(jumps)):
        if i + 1 < len(jumps):
            refined[i], refined[i + 1] = _separated(refined[i], refined[i + 1])
        else:
            refined[i] = inside_open(refined[i], Fraction(-2), Fraction(2))
        a = refined[i].hi
        b = refined[i + 1].lo if i + 1 < len(jumps) else Fraction(2)
        pt = rational_point_between(a, b)
        if compare_rational(jumps[i], pt.x) >= 0 or (
                i + 1 < len(jumps) and compare_rational(jumps[i + 1], pt.x) <= 0):
            raise AssertionError("arc sample not certified inside its arc")
        samples.append(pt)
        sv = signature_at_rational(V, pt)
        if sv.nullity:
            raise AssertionError("nonzero nullity at an arc sample")
        values.append(sv.sigma)
    return SignatureFunction(V.n, tuple(refined), tuple(values), points, tuple(samples))


def averaged_signature(f, x):
    """Mean of the one-sided limits of σ at abscissa ``x`` in ``[-2, 2)``."""
    kind, i = f.locate(x)
    if kind == "arc":
        return Fraction(f.arc_values[i])
    return Fraction(f.arc_values[i] + f.arc_values[i + 1], 2)


def theta_over_pi(x, digits=12):
    """Decimal ``arccos(x/2)/π`` for an abscissa (annotation only)."""
    if isinstance(x, RealAlgebraicNumber):
        if x.is_rational:
            q = x.lo
        else:
            q = approx_fraction(x, Fraction(1, 10 ** (2 * digits + 4)))
    else:
        q = Fraction(x)
    with mpmath.workdps(2 * digits + 10):
        t = mpmath.acos(mpmath.mpf(q.numerator) / q.denominator / 2) / mpmath.pi
        return mpmath.nstr(t, digits)


def _point_dict(pt):
    if pt is MINUS_ONE:
        return {"c": "-1", "s": "0"}
    return {"c": str(pt.c), "s": str(pt.s)}


def signature_function_dict(f, digits=12):
    return {
        "n": f.n,
        "jumps": [
            {
                "min_poly": list(j.min_poly),
                "interval": [str(j.lo), str(j.hi)],
                "x_approx": approx_decimal(j, digits),
                "theta_over_pi_approx": theta_over_pi(j, digits),
            }
            for j in f.jumps
        ],
        "arc_values": list(f.arc_values),
        "point_values": [{"sigma": v.sigma, "nullity": v.nullity} for v in f.point_values],
        "arc_samples": [_point_dict(p) for p in f.arc_samples],
    }


def step_rows(f, digits=12):
    """Plot rows ``(θ/π from, θ/π to, σ, nullity)`` walking from ω = 1 to ω = -1."""
    rows = []
    m = len(f.jumps)
    edges = ["0"] + [theta_over_pi(j, digits) for j in reversed(f.jumps)] + ["1"]
    for k in range(m + 1):
        arc = m - k
        rows.append((edges[k], edges[k + 1], f.arc_values[arc], 0))
        if k < m:
            pv = f.point_values[arc - 1]
            rows.append((edges[k + 1], edges[k + 1], pv.sigma, pv.nullity))
    return rows


def samples(f, count):
    """``count`` evenly spaced ``(θ/π, σ)`` samples with θ/π in ``(0, 1]``.

    Each sample is evaluated exactly at a rational abscissa within
    ``1e-30`` of ``2 cos θ``.
    """
    out = []
    with mpmath.workdps(40):
        for k in range(1, count + 1):
            t = Fraction(k, count)
            xv = 2 * mpmath.cos(mpmath.pi * mpmath.mpf(t.numerator) / t.denominator)
            x = Fraction(mpmath.nstr(xv, 35, min_fixed=-100, max_fixed=100))
            x = max(Fraction(-2), min(x, Fraction(2) - Fraction(1, 10**30)))
            if k == count:
                x = Fraction(-2)
            out.append((t, f.value_at(x).sigma))
    return out


def to_tsv(f, count=None, digits=12):
    lines = ["theta_over_pi_from\ttheta_over_pi_to\tsigma\tnullity"]
    for r in step_rows(f, digits):
        lines.append("\t".join(str(v) for v in r))
    if count:
        lines.append("")
        lines.append("theta_over_pi\tsigma")
        for t, s in samples(f, count):
            lines.append(f"{float(t):.12g}\t{s}")
    return "\n".join(lines) + "\n"


def equal_abscissa(a, b):
    return equal(a, b)
