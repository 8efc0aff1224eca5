"""Projective side: heighted point configurations, weight polytopes, regular
subdivisions from lifted lower hulls, and the orbit-face correspondence.

The lifted set conv{(u_j, lam) : lam >= a_j} is homogenized to a cone in
R^(n+2) with coordinates (x, lam, t); its vertical recession ray (0, 1, 0)
lies on every facet except the lower ones, so the lower facets are exactly
the facets whose inward normal has a positive lam-coefficient.  A worked 1-d
example: A = (0, 1, 2), a = (1, 0, 1) lifts to (0,1), (1,0), (2,1); the two
lower edges have inward normals (1, 1, 0) and (-1, 1, 2) (positive lam part),
while the top side of the hull is only supported by normals with lam <= 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, ValueNotInGamma
from .linalg import vdot, vec
from .ordfield import FE_ONE, FE_ZERO, FieldElement, ValueGroup, as_fe
from .polyhedra import Cone


class HeightedConfig:
    """A point configuration u_0..u_R in Z^n with heights in Gamma or
    infinity (encoded as None).  At least one height must be finite."""

    __slots__ = ("n", "points", "heights")

    def __init__(self, n, points, heights):
        if n < 1:
            raise ValueError(f"rank must be >= 1, got {n}")
        pts = []
        for j, u in enumerate(points):
            u = tuple(u)
            if len(u) != n:
                raise DimensionMismatch(
                    f"point {j} has length {len(u)}, expected {n}"
                )
            if not all(isinstance(x, int) for x in u):
                raise ValueError(f"point {j} must have integer coordinates")
            pts.append(u)
        hts = []
        for j, a in enumerate(heights):
            if a is None:
                hts.append(None)
            else:
                hts.append(as_fe(a))
        if len(hts) != len(pts):
            raise ValueError(
                f"{len(pts)} points but {len(hts)} heights"
            )
        if not pts:
            raise ValueError("a configuration needs at least one point")
        if all(a is None for a in hts):
            raise ValueError("at least one height must be finite")
        self.n = n
        self.points = tuple(pts)
        self.heights = tuple(hts)

    def finite_indices(self):
        return tuple(j for j, a in enumerate(self.heights) if a is not None)

    def __eq__(self, other):
        return isinstance(other, HeightedConfig) and (
            self.n == other.n
            and self.points == other.points
            and self.heights == other.heights
        )

    def __hash__(self):
        return hash((self.n, self.points, self.heights))

    def __repr__(self):
        return f"HeightedConfig(n={self.n}, R+1={len(self.points)})"


def heights_from_valuations(values, gamma: ValueGroup):
    """Validate coordinate valuations against the group and package them as
    heights (None encodes an infinite valuation, i.e. a zero coordinate)."""
    out = []
    for j, v in enumerate(values):
        if v is None:
            out.append(None)
            continue
        v = as_fe(v)
        if not gamma.contains(v):
            raise ValueNotInGamma(j, v)
        out.append(v)
    if not any(v is not None for v in out):
        raise ValueError("at least one valuation must be finite")
    return tuple(out)


def _hull_vertices(n, points):
    """Vertices of conv(points) for integer points, via the cone over the
    configuration at t = 1."""
    cone = Cone.from_rays(n + 1, [vec(u) + (FE_ONE,) for u in points])
    verts = []
    for r in cone.rays:
        t = r[-1]
        if t.sign() > 0:
            verts.append(tuple(x / t for x in r[:-1]))
    return verts


def _ccw_order(points):
    """Exact counterclockwise angular order around the centroid, starting at
    the lexicographically smallest point."""
    k = as_fe(len(points))
    cx = sum((p[0] for p in points), FE_ZERO) / k
    cy = sum((p[1] for p in points), FE_ZERO) / k

    def half(p):
        vx, vy = p[0] - cx, p[1] - cy
        # 0: positive x-axis and upper half; 1: negative x-axis and lower half
        if vy.sign() > 0 or (vy.sign() == 0 and vx.sign() > 0):
            return 0
        return 1

    def cross(p, q):
        px, py = p[0] - cx, p[1] - cy
        qx, qy = q[0] - cx, q[1] - cy
        return (px * qy - py * qx).sign()

    import functools

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return -1 if hp < hq else 1
        c = cross(p, q)
        return -c

    ordered = sorted(points, key=functools.cmp_to_key(cmp))
    start = min(range(len(ordered)), key=lambda i: ordered[i])
    return ordered[start:] + ordered[:start]


def weight_polytope(cfg: HeightedConfig):
    """Ordered vertex list of the convex hull of the finite-height points:
    ascending for n = 1, counterclockwise from the lexicographically smallest
    vertex for n = 2, lexicographic for n >= 3."""
    pts = [cfg.points[j] for j in cfg.finite_indices()]
    verts = _hull_vertices(cfg.n, pts)
    if cfg.n == 1:
        return tuple(sorted(verts))
    if cfg.n == 2 and len(verts) > 2:
        return tuple(_ccw_order(verts))
    return tuple(sorted(verts))


@dataclass(frozen=True)
class CellCertificate:
    """Affine function ell(x) = <phi, x> + beta with ell(u_j) <= a_j for all
    finite j and equality exactly on the tight set; the cell is every finite
    j with u_j in the convex hull of the tight points."""

    phi: tuple
    beta: FieldElement
    tight: tuple


@dataclass(frozen=True)
class Subdivision:
    """Regular subdivision of the weight polytope induced by the heights.

    cells: top cells as sorted index tuples (finite-height indices only).
    faces: all faces of all cells, deduplicated, sorted by decreasing
    dimension then lexicographically; face_dims aligned with faces.
    poset: strict inclusion pairs (i, j) on face indices.
    certificates: per top cell, the supporting affine function.
    """

    n: int
    support_vertices: tuple
    cells: tuple
    faces: tuple
    face_dims: tuple
    poset: tuple
    certificates: dict

    def top_cells(self):
        return self.cells


def _face_sort_key(dim, idxset):
    return (-dim, idxset)


def weight_subdivision(cfg: HeightedConfig) -> Subdivision:
    """Project the lower facets of the lifted hull
    conv{(u_j, lam) : lam >= a_j} to the weight polytope.

    A cell's index set contains every finite-height j whose point lies in the
    projected facet as a polyhedron, not only the lifted-hull vertices.
    """
    n = cfg.n
    finite = cfg.finite_indices()
    lifted = {
        j: vec(cfg.points[j]) + (cfg.heights[j], FE_ONE) for j in finite
    }
    rays = list(lifted.values()) + [
        tuple([FE_ZERO] * n) + (FE_ONE, FE_ZERO)
    ]
    hull = Cone.from_rays(n + 2, rays)

    cells = []
    certs = {}
    for normal in hull.facets:
        c = normal[n]
        if c.sign() <= 0:
            continue
        tight = tuple(
            j for j in finite if not vdot(normal, lifted[j])
        )
        phi = tuple(-x / c for x in normal[:n])
        beta = -normal[n + 1] / c
        member = Cone.from_rays(
            n + 1, [vec(cfg.points[j]) + (FE_ONE,) for j in tight]
        )
        cell = tuple(
            j
            for j in finite
            if j in tight
            or member.contains_point(vec(cfg.points[j]) + (FE_ONE,))
        )
        if cell not in certs:
            cells.append(cell)
            certs[cell] = CellCertificate(phi, beta, tight)
    cells.sort()

    # face closure: faces of the cone over each cell, keyed by index set
    faces = {}
    for cell in cells:
        over = Cone.from_rays(
            n + 1, [vec(cfg.points[j]) + (FE_ONE,) for j in cell]
        )
        kfaces, _ = over.face_lattice()
        for f in kfaces:
            if f.is_trivial():
                continue
            idx = tuple(
                j
                for j in cell
                if f.contains_point(vec(cfg.points[j]) + (FE_ONE,))
            )
            dim = f.intrinsic_dim() - 1
            faces.setdefault(idx, dim)

    ordered = sorted(faces.items(), key=lambda kv: _face_sort_key(kv[1], kv[0]))
    face_list = tuple(idx for idx, _ in ordered)
    dims = tuple(d for _, d in ordered)
    poset = []
    for i, a in enumerate(face_list):
        sa = set(a)
        for j, b in enumerate(face_list):
            if i != j and sa < set(b):
                poset.append((i, j))

    return Subdivision(
        n,
        weight_polytope(cfg),
        tuple(cells),
        face_list,
        dims,
        tuple(poset),
        certs,
    )


@dataclass(frozen=True)
class OrbitDescriptor:
    """One torus orbit per subdivision face: the coordinates that do not
    vanish on the orbit are exactly the finite-height indices lying in the
    face."""

    face: tuple
    dim: int
    nonzero_coords: frozenset


def orbit_correspondence(sub: Subdivision):
    """One descriptor per face, ordered by decreasing face dimension then
    lexicographically; inclusion of faces mirrors inclusion of coordinate
    supports."""
    out = []
    for idx, dim in zip(sub.faces, sub.face_dims):
        out.append(OrbitDescriptor(idx, dim, frozenset(idx)))
    return out
