"""Small exact linear algebra over field elements.

Vectors are tuples of FieldElement.  Everything here is exact; there is no
pivoting heuristic to tune because there is no rounding.
"""

from __future__ import annotations

from ._rational import Q, qgcd
from .errors import DimensionMismatch
from .ordfield import FE_ONE, FE_ZERO, FieldElement, as_fe


def vec(entries):
    return tuple(as_fe(x) for x in entries)


def vzero(dim):
    return tuple(FE_ZERO for _ in range(dim))


def vdot(a, b):
    if len(a) != len(b):
        raise DimensionMismatch(f"dot of length {len(a)} with {len(b)}")
    total = FE_ZERO
    for x, y in zip(a, b):
        if x.p or x.q:
            if y.p or y.q:
                total = total + x * y
    return total


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vneg(a):
    return tuple(-x for x in a)


def vscale(t, a):
    return tuple(t * x for x in a)


def is_zero_vec(a):
    return all(not x for x in a)


def canonical_ray(v):
    """Scale by a positive factor so the first nonzero coordinate is +-1."""
    for x in v:
        if x:
            lead = x if x.sign() > 0 else -x
            return tuple(y / lead for y in v)
    raise ValueError("zero vector is not a ray")


def rref(rows, dim):
    """Reduced row echelon form.  Returns (rows, pivot_columns), rows canonical."""
    work = [list(vec(r)) for r in rows if not is_zero_vec(r)]
    pivots = []
    r = 0
    for c in range(dim):
        k = next((i for i in range(r, len(work)) if work[i][c]), None)
        if k is None:
            continue
        work[r], work[k] = work[k], work[r]
        lead = work[r][c]
        work[r] = [x / lead for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                t = work[i][c]
                work[i] = [x - t * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in work[:r]], pivots


def rank(rows, dim):
    return len(rref(rows, dim)[0])


def kernel_basis(rows, dim):
    """Basis of the right kernel {x : A x = 0}."""
    reduced, pivots = rref(rows, dim)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        v = [FE_ZERO] * dim
        v[f] = FE_ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def primitive_int_vector(v):
    """Rescale a rational vector to a primitive integer vector, same direction."""
    scale = 1
    for x in v:
        x = as_fe(x)
        if x.q != 0:
            raise ValueError(f"vector entry {x} is not rational")
        scale = scale * int(x.p.denominator) // qgcd(scale, int(x.p.denominator))
    ints = [int(as_fe(x).p * scale) for x in v]
    content = 0
    for n in ints:
        content = qgcd(content, n)
    if content == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(n // content for n in ints)
