"""Seifert matrices, Alexander and trace polynomials, connected sum and mirror.

Conventions: the Alexander polynomial is ``det(V - t V^T)`` multiplied by
a unit ``±t^k`` so that it has nonzero constant term and ``Δ(1) = +1``.
The trace polynomial ``Q`` satisfies ``Δ(t) = t^d Q(t + 1/t)``.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from . import poly as P
from .realalg import isolate_real_roots


class SeifertMatrixError(ValueError):
    """Input is not a valid Seifert matrix of a knot."""


class NotSquareError(SeifertMatrixError):
    pass


class OddDimensionError(SeifertMatrixError):
    pass


class NotUnimodularError(SeifertMatrixError):
    pass


class AsymmetricPolynomialError(ValueError):
    pass


def bareiss_det(rows):
    """Exact determinant of an integer matrix by fraction-free elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer square matrix ``V`` of even size with ``det(V - V^T) = 1``.

    Build instances with :func:`validate`; the 0x0 matrix is the unknot.
    """

    entries: tuple

    @property
    def n(self):
        return len(self.entries)

    @property
    def genus(self):
        return self.n // 2

    def transpose(self):
        return tuple(zip(*self.entries)) if self.entries else ()

    def tolist(self):
        return [list(r) for r in self.entries]

    def __str__(self):
        return format_matrix(self)


def validate(raw):
    """Check ``raw`` and return it as a :class:`SeifertMatrix`."""
    if isinstance(raw, SeifertMatrix):
        return raw
    rows = [list(r) for r in raw]
    n = len(rows)
    if n == 1 and len(rows[0]) == 0:  # "[[]]"
        rows, n = [], 0
    for r in rows:
        if len(r) != n:
            raise NotSquareError(f"matrix is not square: row of length {len(r)} in a {n}-row matrix")
    try:
        entries = tuple(tuple(_as_int(x) for x in r) for r in rows)
    except (TypeError, ValueError) as exc:
        raise SeifertMatrixError(f"non-integer entry: {exc}") from None
    if n % 2:
        raise OddDimensionError(f"odd dimension {n}: a knot Seifert matrix has even size")
    skew = [[entries[i][j] - entries[j][i] for j in range(n)] for i in range(n)]
    d = bareiss_det(skew)
    if d != 1:
        raise NotUnimodularError(f"det(V - V^T) = {d}, expected 1")
    return SeifertMatrix(entries)


def _as_int(x):
    if isinstance(x, bool):
        raise TypeError(repr(x))
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if hasattr(x, "__index__"):
        return int(x.__index__())
    if isinstance(x, float) and x.is_integer():
        return int(x)
    raise ValueError(repr(x))


UNKNOT = SeifertMatrix(())

_TOKEN = re.compile(r"\s*(-?\d+|[\[\]{},])")


def parse_matrix(text):
    """Parse ``[[a,b],[c,d]]`` or ``{{a,b},{c,d}}`` into a list of integer rows."""
    s = text.strip()
    pos = 0
    tokens = []
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise SeifertMatrixError(f"unexpected character {s[pos:].strip()[:1]!r} in matrix literal")
        tokens.append(m.group(1))
        pos = m.end()
    tokens = ["[" if t == "{" else "]" if t == "}" else t for t in tokens]
    it = iter(tokens)

    def expect(tok):
        got = next(it, None)
        if got != tok:
            raise SeifertMatrixError(f"malformed matrix literal: expected {tok!r}, got {got!r}")

    def parse_list(item):
        out = []
        tok = next(it, None)
        if tok == "]":
            return out
        while True:
            out.append(item(tok))
            tok = next(it, None)
            if tok == "]":
                return out
            if tok != ",":
                raise SeifertMatrixError(f"malformed matrix literal near {tok!r}")
            tok = next(it, None)

    def number(tok):
        if tok is None or tok in "[],":
            raise SeifertMatrixError(f"expected an integer, got {tok!r}")
        return int(tok)

    def row(tok):
        if tok != "[":
            raise SeifertMatrixError(f"expected a row, got {tok!r}")
        return parse_list(number)

    expect("[")
    rows = parse_list(row)
    if next(it, None) is not None:
        raise SeifertMatrixError("trailing characters after matrix literal")
    if rows == [[]]:
        rows = []
    return rows


def format_matrix(V, style="bracket"):
    rows = V.entries if isinstance(V, SeifertMatrix) else V
    body = ",".join("[" + ",".join(str(x) for x in r) + "]" for r in rows)
    s = "[" + body + "]"
    if style == "brace":
        s = s.replace("[", "{").replace("]", "}")
    return s


def _interpolate(xs, ys):
    # Newton divided differences, expanded to monomial coefficients
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    result = (coef[-1],)
    for i in range(n - 2, -1, -1):
        result = P.add(P.mul(result, (-xs[i], 1)), (coef[i],))
    return result


def alexander(V):
    """Normalized Alexander polynomial of a Seifert matrix, as an integer coefficient tuple."""
    V = validate(V)
    n = V.n
    if n == 0:
        return (1,)
    e = V.entries
    xs = list(range(n + 1))
    ys = [bareiss_det([[e[i][j] - t * e[j][i] for j in range(n)] for i in range(n)]) for t in xs]
    raw = _interpolate(xs, ys)
    if any(Fraction(c).denominator != 1 for c in raw):
        raise AssertionError("interpolated determinant is not an integer polynomial")
    delta = tuple(int(c) for c in raw)
    while delta and delta[0] == 0:
        delta = delta[1:]
    if not delta or len(delta) % 2 == 0:
        raise AssertionError("det(V - tV^T) does not have even degree; validation bug")
    if P.evaluate(delta, 1) == -1:
        delta = P.neg(delta)
    if P.evaluate(delta, 1) != 1 or delta != delta[::-1]:
        raise AssertionError("cannot normalize Alexander polynomial to Δ(1) = 1")
    return delta


def trace_polynomial(delta):
    """The polynomial ``Q`` with ``Δ(t) = t^d Q(t + 1/t)`` for symmetric ``Δ`` of degree ``2d``."""
    delta = P.strip(delta)
    if not delta or len(delta) % 2 == 0 or tuple(delta) != tuple(delta[::-1]):
        raise AsymmetricPolynomialError("expected a symmetric polynomial of even degree")
    d = (len(delta) - 1) // 2
    # t^j + t^-j as a polynomial in x = t + 1/t
    cheb = [(2,), (0, 1)]
    for _ in range(2, d + 1):
        cheb.append(P.sub(P.mul((0, 1), cheb[-1]), cheb[-2]))
    Q = (delta[d],)
    for j in range(1, d + 1):
        Q = P.add(Q, P.scale(cheb[j], delta[d + j]))
    # back-substitution: sum q_k (t^2 + 1)^k t^(d-k) must reproduce Δ
    back = P.ZERO
    for k, q in enumerate(Q):
        back = P.add(back, P.scale(P.mul(P.power((1, 0, 1), k), (0,) * (d - k) + (1,)), q))
    if back != P.strip(tuple(delta)):
        raise AssertionError("trace polynomial back-substitution failed")
    return Q


def circle_roots(V):
    """Abscissas ``x = 2 cos θ`` in ``(-2, 2)`` of the unit-circle roots of Δ, ascending."""
    Q = trace_polynomial(alexander(V))
    if len(Q) <= 1:
        return []
    return isolate_real_roots(Q, -2, 2)


def connected_sum(*matrices):
    """Block-diagonal sum, the Seifert matrix of the connected sum."""
    blocks = [validate(V) for V in matrices]
    n = sum(b.n for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for r in b.entries:
            rows.append((0,) * offset + tuple(r) + (0,) * (n - offset - b.n))
        offset += b.n
    return SeifertMatrix(tuple(rows))


def mirror(V):
    """Seifert matrix ``-V^T`` of the mirror image."""
    V = validate(V)
    return SeifertMatrix(tuple(tuple(-x for x in col) for col in V.transpose()))


def power(V, copies):
    """``copies``-fold connected sum of ``V`` with itself."""
    return connected_sum(*([V] * copies)) if copies else UNKNOT
