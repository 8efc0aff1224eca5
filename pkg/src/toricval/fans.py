"""Fans of admissible cones: the common-face gluing condition, face closure,
slice complexes at s = 1, recession fans, products with the vertical ray, and
the fan-level finite-type test.

A fan is finite by construction.  Cones are deduplicated by canonical ray
sets, assembly order is deterministic (sorted canonical forms), and posets are
stored as the full strict-inclusion relation on indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .admissible import (
    AdmissibleCone,
    SlicePolyhedron,
    is_finite_type,
    make_admissible,
)
from .errors import DimensionMismatch, FieldMismatch, NotAFan
from .linalg import primitive_int_vector, vec
from .ordfield import FE_ZERO, ValueGroup
from .polyhedra import Cone, HalfSpace, vertical_normal


def _cone_sort_key(c: Cone):
    return (c.intrinsic_dim(), c.key())


def _inclusion_poset(cones):
    """All strict-inclusion pairs (i, j) with cones[i] a proper subset of
    cones[j].  Within a valid fan, inclusion between collected cones is
    face inclusion."""
    edges = []
    for i, a in enumerate(cones):
        for j, b in enumerate(cones):
            if i != j and a.key() != b.key() and b.contains_cone(a):
                edges.append((i, j))
    return tuple(edges)


class Fan:
    """A finite fan of admissible cones over one value group.

    maximal_cones: the deduplicated, non-dominated input cones.
    all_cones: face closure, sorted by (dimension, canonical form).
    poset: strict inclusions (i, j) on all_cones indices.
    """

    __slots__ = ("n", "gamma", "maximal_cones", "all_cones", "poset")

    def __init__(self, n, gamma, maximal_cones, all_cones, poset):
        self.n = n
        self.gamma = gamma
        self.maximal_cones = tuple(maximal_cones)
        self.all_cones = tuple(all_cones)
        self.poset = tuple(poset)

    def __eq__(self, other):
        return isinstance(other, Fan) and (
            self.n == other.n
            and self.gamma == other.gamma
            and [c.key() for c in self.all_cones]
            == [c.key() for c in other.all_cones]
        )

    def __hash__(self):
        return hash((self.n, self.gamma, tuple(c.key() for c in self.all_cones)))

    def __repr__(self):
        return (
            f"Fan(n={self.n}, maximal={len(self.maximal_cones)}, "
            f"cones={len(self.all_cones)})"
        )


def fan_from_cones(cones) -> Fan:
    """Validate the pairwise common-face condition and close under faces.

    Every pair of input cones must intersect in a common face; the offending
    pair is reported by input position in NotAFan.
    """
    cones = list(cones)
    if not cones:
        raise ValueError("a fan needs at least one cone")
    n = cones[0].n
    gamma = cones[0].gamma
    for c in cones[1:]:
        if c.n != n:
            raise DimensionMismatch(f"mixed lattice ranks {c.n} and {n}")
        if c.gamma != gamma:
            raise FieldMismatch("cones over different value groups")

    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            a, b = cones[i], cones[j]
            if a.key() == b.key():
                continue
            inter = a.cone.intersect(b.cone)
            if not (inter.is_face_of(a.cone) and inter.is_face_of(b.cone)):
                raise NotAFan(
                    i, j,
                    f"intersection with rays "
                    f"{[tuple(map(str, r)) for r in inter.rays]} "
                    f"is not a common face",
                )

    # deduplicate, then drop cones dominated by another input cone
    uniq = {}
    for c in cones:
        uniq.setdefault(c.key(), c)
    items = sorted(uniq.values(), key=lambda c: _cone_sort_key(c.cone))
    maximal = [
        c
        for c in items
        if not any(
            o.key() != c.key() and o.cone.contains_cone(c.cone) for o in items
        )
    ]

    closed = {}
    for c in maximal:
        faces, _ = c.faces()
        for f in faces:
            closed.setdefault(f.key(), f)
    all_cones = sorted(closed.values(), key=lambda c: _cone_sort_key(c.cone))
    poset = _inclusion_poset([c.cone for c in all_cones])
    return Fan(n, gamma, maximal, all_cones, poset)


@dataclass(frozen=True)
class SliceComplex:
    """The polyhedral complex fan ∩ {s = 1}.

    cells: deduplicated slice polyhedra of all fan cones meeting {s > 0},
    sorted canonically; poset: strict face inclusions on cell indices;
    vertices: the deduplicated union of cell vertex lists, one per
    irreducible component of the special fibre.
    """

    n: int
    cells: tuple
    poset: tuple
    vertices: tuple

    def component_count(self):
        return len(self.vertices)


def slice_complex(fan: Fan) -> SliceComplex:
    """Slice every fan cone at s = 1 and deduplicate the resulting faces.

    A pointed cone in {s >= 0} is the cone over its slice, so cells are in
    bijection with the fan cones not contained in {s = 0}; inclusion of cells
    mirrors inclusion of those cones.
    """
    by_key = {}
    for ac in fan.all_cones:
        cell = ac.slice()
        if cell is None:
            continue
        by_key.setdefault(cell.key(), (cell, ac.cone))
    pairs = sorted(by_key.values(), key=lambda t: _cone_sort_key(t[1]))
    cells = tuple(p[0] for p in pairs)
    poset = _inclusion_poset([p[1] for p in pairs])
    verts = set()
    for cell in cells:
        verts.update(cell.vertices)
    return SliceComplex(fan.n, cells, poset, tuple(sorted(verts)))


@dataclass(frozen=True)
class RationalFan:
    """A finite fan of pointed rational cones in R^n: face-closed cone list
    sorted canonically, plus the strict-inclusion poset."""

    n: int
    cones: tuple
    poset: tuple

    def __eq__(self, other):
        return isinstance(other, RationalFan) and (
            self.n == other.n
            and [c.key() for c in self.cones] == [c.key() for c in other.cones]
        )

    def __hash__(self):
        return hash((self.n, tuple(c.key() for c in self.cones)))


def rational_fan_from_cones(n, cones) -> RationalFan:
    """Validate and face-close a list of pointed rational cones in R^n.

    Accepts kernel cones or iterables of integer ray generators.
    """
    norm = []
    for c in cones:
        if not isinstance(c, Cone):
            c = Cone.from_rays(n, [vec(r) for r in c])
        if c.dim != n:
            raise DimensionMismatch(f"cone of dimension {c.dim}, expected {n}")
        if c.lineality:
            raise ValueError("fan cones must be pointed")
        for r in c.rays:
            primitive_int_vector(r)  # raises on an irrational generator
        norm.append(c)
    if not norm:
        raise ValueError("a fan needs at least one cone")
    for i in range(len(norm)):
        for j in range(i + 1, len(norm)):
            a, b = norm[i], norm[j]
            if a.key() == b.key():
                continue
            inter = a.intersect(b)
            if not (inter.is_face_of(a) and inter.is_face_of(b)):
                raise NotAFan(
                    i, j,
                    f"intersection with rays "
                    f"{[tuple(map(str, r)) for r in inter.rays]} "
                    f"is not a common face",
                )
    closed = {}
    for c in norm:
        faces, _ = c.face_lattice()
        for f in faces:
            closed.setdefault(f.key(), f)
    out = sorted(closed.values(), key=_cone_sort_key)
    return RationalFan(n, tuple(out), _inclusion_poset(out))


def recession_fan(fan: Fan) -> RationalFan:
    """The fan of recession cones: sigma ∩ {s = 0} in R^n for every fan cone,
    deduplicated and re-validated as a rational fan."""
    recs = []
    for ac in fan.maximal_cones:
        horiz = [r[:-1] for r in ac.cone.rays if not r[-1]]
        recs.append(Cone.from_rays(fan.n, horiz))
    return rational_fan_from_cones(fan.n, recs)


def product_fan(pi, gamma: ValueGroup) -> Fan:
    """The fan {sigma x R+ : sigma in pi} over gamma, all constants zero.

    pi is a RationalFan or a list of pointed rational cones (or ray lists).
    The lift of each cone is cross-checked against the cone generated by the
    lifted rays and the vertical ray.
    """
    if isinstance(pi, RationalFan):
        rf = pi
    else:
        pi = list(pi)
        n = pi[0].dim if isinstance(pi[0], Cone) else None
        if n is None:
            for c in pi:
                for r in c:
                    n = len(r)
                    break
                if n is not None:
                    break
        if n is None:
            raise ValueError("cannot infer the ambient dimension from pi")
        rf = rational_fan_from_cones(n, pi)
    n = rf.n
    lifted = []
    for c in rf.cones:
        hss = [HalfSpace(primitive_int_vector(f), FE_ZERO) for f in c.facets]
        for e in c.equations:
            ue = primitive_int_vector(e)
            hss.append(HalfSpace(ue, FE_ZERO))
            hss.append(HalfSpace(tuple(-x for x in ue), FE_ZERO))
        ac = make_admissible(n, hss, gamma)
        expected = Cone.from_rays(
            n + 1,
            [r + (FE_ZERO,) for r in c.rays] + [vec(vertical_normal(n))],
        )
        assert ac.cone == expected, "lifted cone disagrees with lifted rays"
        lifted.append(ac)
    return fan_from_cones(lifted)


def fan_finite_type(fan: Fan) -> bool:
    """True when every maximal cone has a finitely generated semigroup
    algebra; immediate for a discrete value group."""
    if fan.gamma.is_discrete():
        return True
    return all(is_finite_type(c) for c in fan.maximal_cones)
