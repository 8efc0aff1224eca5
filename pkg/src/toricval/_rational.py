"""Exact rational arithmetic layer.

Everything in the package goes through ``Q`` so the whole toolkit can run on
gmpy2's C-backed rationals when available and fall back to the stdlib
otherwise.  The two types agree on str(), ordering, hashing and the
numerator/denominator attributes, which is all we rely on.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Q  # type: ignore[assignment]

QZERO = Q(0)
QONE = Q(1)


def qfloor(x) -> int:
    # mpz and int both floor-divide
    return int(x.numerator // x.denominator)


def qsign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def qstr(x) -> str:
    """Canonical "num/den" form, denominator always present."""
    return f"{int(x.numerator)}/{int(x.denominator)}"


def qgcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)
