"""Exact ordered-field arithmetic and finitely generated value groups.

Elements live in Q or in a real quadratic extension Q(sqrt(d)): every value is
p + q*sqrt(d) with p, q exact rationals and d a fixed square-free integer >= 2.
Signs, comparisons and group membership are all decided exactly; nothing in
here ever rounds.

A value group is a finitely generated subgroup of the reals inside such a
field.  Writing its generators as coordinate vectors (p, q) over Q turns it
into a rank <= 2 integer lattice after clearing denominators, so membership
and discreteness reduce to lattice arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._rational import Q, QZERO, qgcd, qsign

from .errors import FieldMismatch


def _is_square_free(n: int) -> bool:
    if n % 4 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % (f * f) == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    """Q when d is None, otherwise Q(sqrt(d)) with d square-free, d >= 2."""

    d: int | None = None

    def __post_init__(self):
        if self.d is not None:
            if not isinstance(self.d, int) or self.d < 2:
                raise ValueError(f"d must be an integer >= 2, got {self.d!r}")
            if not _is_square_free(self.d):
                raise ValueError(f"d must be square-free, got {self.d}")

    def __str__(self):
        return "Q" if self.d is None else f"Q(sqrt({self.d}))"


RATIONALS = FieldDescriptor(None)


def _merge_d(d1: int | None, d2: int | None) -> int | None:
    if d1 is None:
        return d2
    if d2 is None or d1 == d2:
        return d1
    raise FieldMismatch(f"cannot mix sqrt({d1}) and sqrt({d2}) elements")


class FieldElement:
    """p + q*sqrt(d), exact.  Elements with q = 0 are plain rationals (d = None)."""

    __slots__ = ("p", "q", "d")

    def __init__(self, p, q=0, d: int | None = None):
        p = Q(p)
        q = Q(q)
        if q == 0:
            d = None
        elif d is None:
            raise ValueError("irrational part present but no d given")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)

    @property
    def field(self) -> FieldDescriptor:
        return RATIONALS if self.d is None else FieldDescriptor(self.d)

    def is_rational(self) -> bool:
        return self.q == 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = as_fe(other)
        d = _merge_d(self.d, other.d)
        return FieldElement(self.p + other.p, self.q + other.q, d)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_fe(other)
        d = _merge_d(self.d, other.d)
        return FieldElement(self.p - other.p, self.q - other.q, d)

    def __rsub__(self, other):
        return as_fe(other).__sub__(self)

    def __mul__(self, other):
        other = as_fe(other)
        d = _merge_d(self.d, other.d)
        if d is None:
            return FieldElement(self.p * other.p)
        return FieldElement(
            self.p * other.p + self.q * other.q * d,
            self.p * other.q + self.q * other.p,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_fe(other)
        d = _merge_d(self.d, other.d)
        if other.p == 0 and other.q == 0:
            raise ZeroDivisionError("field element division by zero")
        if d is None:
            return FieldElement(self.p / other.p)
        # multiply by the conjugate; the norm is nonzero since sqrt(d) is irrational
        norm = other.p * other.p - other.q * other.q * d
        np = (self.p * other.p - self.q * other.q * d) / norm
        nq = (self.q * other.p - self.p * other.q) / norm
        return FieldElement(np, nq, d)

    def __rtruediv__(self, other):
        return as_fe(other).__truediv__(self)

    def __neg__(self):
        return FieldElement(-self.p, -self.q, self.d)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        out = FieldElement(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- order --------------------------------------------------------------

    def sign(self) -> int:
        sp = qsign(self.p)
        if self.q == 0:
            return sp
        sq = qsign(self.q)
        if sp == 0:
            return sq
        if sp == sq:
            return sp
        # opposite rational/irrational parts: compare p^2 against q^2 d
        left = self.p * self.p
        right = self.q * self.q * self.d
        if left == right:  # would mean sqrt(d) is rational
            raise AssertionError("square-free d produced a rational square root")
        return sp if left > right else sq

    def __eq__(self, other):
        try:
            other = as_fe(other)
        except (TypeError, ValueError):
            return NotImplemented
        if self.q != 0 and other.q != 0 and self.d != other.d:
            return False
        return self.p == other.p and self.q == other.q

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        return (self - as_fe(other)).sign() < 0

    def __le__(self, other):
        return (self - as_fe(other)).sign() <= 0

    def __gt__(self, other):
        return (self - as_fe(other)).sign() > 0

    def __ge__(self, other):
        return (self - as_fe(other)).sign() >= 0

    def __hash__(self):
        return hash((self.p, self.q, self.d))

    def __bool__(self):
        return self.p != 0 or self.q != 0

    # -- presentation --------------------------------------------------------

    def __float__(self):
        # display/rendering convenience only; core algorithms never call this
        val = float(int(self.p.numerator)) / float(int(self.p.denominator))
        if self.q != 0:
            val += (
                float(int(self.q.numerator))
                / float(int(self.q.denominator))
                * math.sqrt(self.d)
            )
        return val

    def __str__(self):
        if self.q == 0:
            return str(self.p)
        root = f"sqrt({self.d})"
        if self.q == 1:
            irr = root
        elif self.q == -1:
            irr = f"-{root}"
        else:
            irr = f"{self.q}*{root}"
        if self.p == 0:
            return irr
        sep = "-" if self.q < 0 else "+"
        mag = irr.lstrip("-")
        return f"{self.p} {sep} {mag}"

    def __repr__(self):
        return f"FieldElement({self.p!r}, {self.q!r}, d={self.d})"


def as_fe(x, d: int | None = None) -> FieldElement:
    """Coerce an int, rational, or FieldElement to a FieldElement."""
    if isinstance(x, FieldElement):
        return x
    return FieldElement(Q(x), 0, None) if d is None else FieldElement(Q(x), 0, d)


def fe(p, q=0, d: int | None = None) -> FieldElement:
    return FieldElement(p, q, d)


def sqrtd(d: int) -> FieldElement:
    return FieldElement(0, 1, d)


FE_ZERO = FieldElement(0)
FE_ONE = FieldElement(1)


def fe_sign(x: FieldElement) -> int:
    """Exact sign in {-1, 0, +1}."""
    return as_fe(x).sign()


# -- value groups -----------------------------------------------------------


def _lcm(a: int, b: int) -> int:
    return a * b // qgcd(a, b)


def _echelon2(vectors):
    """Canonical echelon basis of the Z-span of integer vectors in Z^2.

    Returns [] (rank 0), [(a, b)] with a > 0, or [(a, b), (0, c)] with
    a > 0, c > 0, 0 <= b < c; when rank 1 with a = 0 returns [(0, c)], c > 0.
    Every step is unimodular on the row pair, so the span never changes.
    """
    r0 = None  # pivot in column 0
    r1 = None  # pivot in column 1
    for v in vectors:
        x, y = v
        if x != 0:
            if r0 is None:
                r0 = (x, y)
                x, y = 0, 0
            else:
                x0, y0 = r0
                while x != 0:
                    k = x0 // x
                    x0, y0, x, y = x, y, x0 - k * x, y0 - k * y
                r0 = (x0, y0)
        if y != 0:
            r1 = (0, y) if r1 is None else (0, qgcd(r1[1], y))
    rows = []
    if r0 is not None:
        a, b = r0
        if a < 0:
            a, b = -a, -b
        if r1 is not None:
            c = abs(r1[1])
            b %= c
        rows.append((a, b))
    if r1 is not None:
        rows.append((0, abs(r1[1])))
    return rows


class ValueGroup:
    """Finitely generated subgroup of the reals inside one quadratic field.

    The empty generator list gives the trivial group {0} (the trivial
    valuation); it is considered discrete.
    """

    __slots__ = ("field", "generators", "_scale", "_basis")

    def __init__(self, field: FieldDescriptor, generators=()):
        gens = []
        for g in generators:
            g = as_fe(g)
            if g.d is not None and field.d != g.d:
                raise FieldMismatch(
                    f"generator {g} does not live in {field}"
                )
            gens.append(g)
        self.field = field
        self.generators = tuple(gens)

        scale = 1
        for g in gens:
            scale = _lcm(scale, int(g.p.denominator))
            scale = _lcm(scale, int(g.q.denominator))
        vecs = []
        for g in gens:
            vecs.append((int(g.p * scale), int(g.q * scale)))
        basis = _echelon2(vecs)
        # divide out common content so (scale, basis) is canonical per group
        if basis:
            content = scale
            for row in basis:
                for entry in row:
                    content = qgcd(content, entry)
            scale //= content
            basis = [(a // content, b // content) for a, b in basis]
        else:
            scale = 1
        self._scale = scale
        self._basis = tuple(basis)

    def rank(self) -> int:
        return len(self._basis)

    def contains(self, x) -> bool:
        x = as_fe(x)
        if x.d is not None and self.field.d != x.d:
            raise FieldMismatch(f"{x} does not live in {self.field}")
        xs = (x.p * self._scale, x.q * self._scale)
        if int(xs[0].denominator) != 1 or int(xs[1].denominator) != 1:
            return False
        X, Y = int(xs[0]), int(xs[1])
        rows = self._basis
        if not rows:
            return X == 0 and Y == 0
        if rows[0][0] != 0:
            a, b = rows[0]
            if X % a != 0:
                return False
            k = X // a
            Y -= k * b
            rows = rows[1:]
        elif X != 0:
            return False
        if not rows:
            return Y == 0
        return Y % rows[0][1] == 0

    def is_discrete(self) -> bool:
        return len(self._basis) <= 1

    def discrete_generator(self) -> FieldElement | None:
        """The positive g0 with Gamma = g0*Z, or None for the trivial group."""
        if not self.is_discrete():
            raise ValueError("group is dense; no single generator exists")
        if not self._basis:
            return None
        a, b = self._basis[0]
        g = FieldElement(Q(a, self._scale), Q(b, self._scale),
                         self.field.d if b else None)
        return -g if g.sign() < 0 else g

    def __eq__(self, other):
        if not isinstance(other, ValueGroup):
            return NotImplemented
        return (self.field == other.field
                and self._scale == other._scale
                and self._basis == other._basis)

    def __hash__(self):
        return hash((self.field, self._scale, self._basis))

    def __str__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"<{gens}>" if gens else "<0>"

    def __repr__(self):
        return f"ValueGroup({self.field}, [{', '.join(map(str, self.generators))}])"


def gamma_contains(gamma: ValueGroup, x) -> bool:
    return gamma.contains(x)


def gamma_is_discrete(gamma: ValueGroup) -> bool:
    return gamma.is_discrete()
