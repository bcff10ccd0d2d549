"""Random valid Seifert matrices for property testing.

Matrices are block sums of 2x2 blocks ``[[a, 1], [0, b]]`` (and their
mirrors), conjugated by a random unimodular ``P`` as ``P^T V P``.  Both
steps preserve ``det(V - V^T) = 1``, so no rejection sampling is needed.
"""

import random

from .seifert import SeifertMatrix, connected_sum, mirror, validate

# trefoil, figure-eight, 5_2, stevedore, 7_2-like twist knots, unknot
BLOCK_LIBRARY = (
    ((-1, 1), (0, -1)),
    ((1, 1), (0, -1)),
    ((-1, 1), (0, -2)),
    ((1, 1), (0, -2)),
    ((-1, 1), (0, -3)),
    ((2, 1), (0, 1)),
    ((0, 1), (0, 0)),
    ((0, 1), (0, 1)),
)


def random_block(rng):
    B = validate(rng.choice(BLOCK_LIBRARY))
    return mirror(B) if rng.random() < 0.5 else B


def random_unimodular(rng, n, steps=None):
    """Product of ``steps`` elementary row operations with multipliers ±1, and a shuffle."""
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(n if steps is None else steps):
        i, j = rng.sample(range(n), 2)
        k = rng.choice((-1, 1))
        for c in range(n):
            P[i][c] += k * P[j][c]
    rng.shuffle(P)
    return P


def congruent(V, P):
    """``P^T V P``."""
    e = V.entries if isinstance(V, SeifertMatrix) else V
    n = len(e)
    VP = [[sum(e[i][k] * P[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[sum(P[k][i] * VP[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def random_seifert(rng=None, genus=None, max_genus=4, steps=None):
    """A random valid Seifert matrix of the given genus (``n = 2 * genus``)."""
    rng = rng if isinstance(rng, random.Random) else random.Random(rng)
    g = rng.randint(1, max_genus) if genus is None else genus
    if g == 0:
        return validate([])
    V = connected_sum(*[random_block(rng) for _ in range(g)])
    return validate(congruent(V, random_unimodular(rng, 2 * g, steps)))
