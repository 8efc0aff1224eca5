"""Exact double description kernel and the cone type built on it.

A cone is kept in both representations at once: extreme rays plus a lineality
basis on the V side, facet normals plus an equation basis on the H side, each
canonical (rays scaled to leading coefficient +-1 and sorted, subspace bases in
reduced row echelon form).  Two cones are equal iff their canonical data match.

The converter is the incremental double description method.  Constraints are
inserted one at a time; while the current lineality space meets a constraint
the cone is reduced along it, afterwards rays are partitioned by sign and
adjacent positive/negative pairs are combined.  Adjacency uses the
combinatorial criterion: rays r1, r2 of the current cone are adjacent iff no
third ray is tight on every constraint that is tight on both.  That test is
exact on minimal ray lists, which the induction maintains.
"""

from __future__ import annotations

from .errors import DimensionMismatch
from .linalg import (
    canonical_ray,
    is_zero_vec,
    kernel_basis,
    rank,
    rref,
    vdot,
    vec,
    vneg,
    vscale,
    vsub,
    vzero,
)
from .ordfield import FE_ONE, FE_ZERO, FieldElement, as_fe


class HalfSpace:
    """{(w, s) : <u, w> + c*s >= 0} with u integer and c a field element."""

    __slots__ = ("u", "c")

    def __init__(self, u, c):
        u = tuple(int(x) for x in u)
        c = as_fe(c)
        if not any(u) and not c:
            raise ValueError("half-space needs u or c nonzero")
        self.u = u
        self.c = c

    @property
    def dim(self):
        return len(self.u) + 1

    def normal(self):
        return vec(self.u) + (self.c,)

    def __eq__(self, other):
        return isinstance(other, HalfSpace) and self.u == other.u and self.c == other.c

    def __hash__(self):
        return hash((self.u, self.c))

    def __repr__(self):
        return f"HalfSpace({self.u}, {self.c})"


def _unit_vectors(dim):
    rows = []
    for i in range(dim):
        v = [FE_ZERO] * dim
        v[i] = FE_ONE
        rows.append(tuple(v))
    return rows


def dd_pair(dim, normals):
    """V-representation of {x : a . x >= 0 for a in normals}.

    Returns (rays, lineality): canonical sorted extreme rays and a canonical
    basis of the lineality space.
    """
    lin = _unit_vectors(dim)
    rays = []  # [vector, tight-index-set] pairs
    processed = []
    for idx, a in enumerate(normals):
        a = vec(a)
        if len(a) != dim:
            raise DimensionMismatch(f"constraint of length {len(a)} in dimension {dim}")
        if is_zero_vec(a):
            continue
        hit = next((j for j, l in enumerate(lin) if vdot(a, l)), None)
        if hit is not None:
            l0 = lin.pop(hit)
            if vdot(a, l0).sign() < 0:
                l0 = vneg(l0)
            al0 = vdot(a, l0)
            lin = [vsub(l, vscale(vdot(a, l) / al0, l0)) for l in lin]
            for pair in rays:
                t = vdot(a, pair[0]) / al0
                pair[0] = canonical_ray(vsub(pair[0], vscale(t, l0)))
                pair[1] = pair[1] | {idx}
            rays.append([canonical_ray(l0), set(processed)])
        else:
            pos, zero, neg = [], [], []
            for pair in rays:
                s = vdot(a, pair[0]).sign()
                (pos if s > 0 else zero if s == 0 else neg).append(pair)
            if neg:
                combos = []
                for p in pos:
                    ap = vdot(a, p[0])
                    for m in neg:
                        meet = p[1] & m[1]
                        if any(
                            meet <= r[1]
                            for r in rays
                            if r is not p and r is not m
                        ):
                            continue
                        am = vdot(a, m[0])
                        w = vsub(vscale(ap, m[0]), vscale(am, p[0]))
                        combos.append([canonical_ray(w), meet | {idx}])
                for pair in zero:
                    pair[1].add(idx)
                rays = pos + zero + combos
            else:
                for pair in zero:
                    pair[1].add(idx)
        processed.append(idx)

    out_rays = sorted(pair[0] for pair in rays)
    out_lin, _ = rref(lin, dim)
    return tuple(out_rays), tuple(out_lin)


class Cone:
    """Polyhedral cone with canonical V- and H-representations."""

    __slots__ = ("dim", "rays", "lineality", "facets", "equations", "_faces")

    def __init__(self, dim, rays, lineality, facets, equations):
        self.dim = dim
        self.rays = tuple(rays)
        self.lineality = tuple(lineality)
        self.facets = tuple(facets)
        self.equations = tuple(equations)
        self._faces = None

    # -- construction --------------------------------------------------------

    @staticmethod
    def from_constraints(dim, normals):
        rays, lin = dd_pair(dim, normals)
        facets, eqs = dd_pair(
            dim, list(rays) + list(lin) + [vneg(l) for l in lin]
        )
        return Cone(dim, rays, lin, facets, eqs)

    @staticmethod
    def from_rays(dim, rays, lineality=()):
        rays = [vec(r) for r in rays]
        lineality = [vec(l) for l in lineality]
        facets, eqs = dd_pair(
            dim, rays + lineality + [vneg(l) for l in lineality]
        )
        crays, clin = dd_pair(
            dim, list(facets) + list(eqs) + [vneg(e) for e in eqs]
        )
        return Cone(dim, crays, clin, facets, eqs)

    # -- basic queries --------------------------------------------------------

    def all_constraints(self):
        return list(self.facets) + list(self.equations) + [vneg(e) for e in self.equations]

    def key(self):
        return (self.dim, self.rays, self.lineality)

    def is_pointed(self):
        return not self.lineality

    def intrinsic_dim(self):
        return rank(list(self.rays) + list(self.lineality), self.dim)

    def is_trivial(self):
        return not self.rays and not self.lineality

    def contains_point(self, x):
        x = vec(x)
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of length {len(x)} in dimension {self.dim}")
        return all(vdot(f, x).sign() >= 0 for f in self.facets) and all(
            not vdot(e, x) for e in self.equations
        )

    def contains_cone(self, other):
        return all(self.contains_point(r) for r in other.rays) and all(
            self.contains_point(l) and self.contains_point(vneg(l))
            for l in other.lineality
        )

    def intersect(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch("intersecting cones of different ambient dimension")
        return Cone.from_constraints(
            self.dim, self.all_constraints() + other.all_constraints()
        )

    def dual(self):
        """Dual cone, recomputed from the V-side (not a stored-data swap)."""
        normals = list(self.rays) + list(self.lineality) + [
            vneg(l) for l in self.lineality
        ]
        return Cone.from_constraints(self.dim, normals)

    # -- faces ----------------------------------------------------------------

    def face_lattice(self):
        """All faces (including {0}-or-lineality and the cone itself) and the
        full containment relation as (sub, super) index pairs."""
        if self._faces is not None:
            return self._faces
        nf = len(self.facets)
        tight_sets = {}
        for mask in range(1 << nf):
            chosen = [self.facets[j] for j in range(nf) if mask >> j & 1]
            tight = frozenset(
                i
                for i, r in enumerate(self.rays)
                if all(not vdot(f, r) for f in chosen)
            )
            tight_sets.setdefault(tight, None)
        keys = sorted(tight_sets, key=lambda s: (-len(s), sorted(s)))
        faces = [
            Cone.from_rays(self.dim, [self.rays[i] for i in s], self.lineality)
            for s in keys
        ]
        edges = [
            (i, j)
            for i, si in enumerate(keys)
            for j, sj in enumerate(keys)
            if i != j and si < sj
        ]
        self._faces = (faces, edges)
        return self._faces

    def is_face_of(self, other):
        if self.dim != other.dim:
            return False
        mine = self.key()
        faces, _ = other.face_lattice()
        return any(f.key() == mine for f in faces)

    # -- identity -------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return (
            f"Cone(dim={self.dim}, rays={[tuple(map(str, r)) for r in self.rays]}, "
            f"lineality={len(self.lineality)})"
        )


def dual_cone(cone: Cone) -> Cone:
    return cone.dual()


def vertical_normal(n):
    return tuple([FE_ZERO] * n) + (FE_ONE,)


def dd_convert(halfspaces, n):
    """V-representation of a half-space intersection inside {s >= 0}.

    The vertical constraint s >= 0 is structural and always appended; callers
    never supply it.  Returns (rays, lineality) in canonical form.
    """
    normals = [
        (h if isinstance(h, HalfSpace) else HalfSpace(*h)).normal()
        for h in halfspaces
    ]
    normals.append(vertical_normal(n))
    return dd_pair(n + 1, normals)
