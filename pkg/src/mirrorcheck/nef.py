"""Nef partitions, their duals, and the fibre/genus counts they control.

A nef partition splits the boundary lattice points of a reflexive polytope
into parts whose associated toric divisors are nef and Cartier.  The dual
partition consists of the polytopes

    nabla_i = { u : <u, v> >= -1 for v in E_i,  <u, v> >= 0 for v in E_j, j != i },

whose convex hull nabla = Conv(union nabla_i) is again reflexive.  The
difference between the lattice points of the polar polytope and of nabla
counts irreducible components of a distinguished pencil member on the
mirror, and (one less) the genus of the curve that must be blown up to
smooth the corresponding degeneration.

Individual nabla_i may fail to be full-dimensional (their vertex and
lattice-point data is exact regardless); the hull object is attached only
when the piece has full dimension.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    DegenerateConfiguration,
    DualityInconsistency,
    NablaNotContained,
    NotAPartition,
    NotBipartite,
    NotBoundaryPoint,
    NotCartier,
    NotNef,
    NotReflexive,
    NonIntegralVertex,
    PolytopeMismatch,
    UnsupportedRank,
)
from .intlinalg import dot, rank as mat_rank, solve_exact
from .polytopes import (
    LatticePolytope,
    Vec,
    dual_face,
    ell,
    ell_star_face,
    face_lattice,
    hull,
    is_reflexive,
    lattice_points,
    polar_dual,
    smallest_face_containing,
)


@dataclass(frozen=True)
class NefPartition:
    """A partition of the boundary lattice points of a reflexive polytope."""

    polytope: LatticePolytope
    parts: tuple[tuple[Vec, ...], ...]

    @property
    def k(self) -> int:
        return len(self.parts)

    def part_of(self, v: Vec) -> int:
        for i, part in enumerate(self.parts):
            if v in part:
                return i
        raise NotAPartition(f"{v} is in no part")

    def delta_generators(self, i: int) -> tuple[Vec, ...]:
        """Generating points of Delta_i = Conv(E_i and the origin)."""
        zero = (0,) * self.polytope.rank
        return tuple(sorted(set(self.parts[i]) | {zero}))

    def to_json(self) -> dict:
        return {
            "polytope": self.polytope.to_json(),
            "parts": [[list(v) for v in part] for part in self.parts],
        }


@dataclass(frozen=True)
class DualNefPartition:
    """The Batyrev-Borisov dual of a nef partition."""

    partition: NefPartition
    nabla_vertex_sets: tuple[tuple[Vec, ...], ...]
    nabla_point_sets: tuple[tuple[Vec, ...], ...]
    nabla: LatticePolytope
    nablas: tuple[Optional[LatticePolytope], ...] = field(default=())

    @property
    def k(self) -> int:
        return len(self.nabla_vertex_sets)

    def to_json(self) -> dict:
        pieces = []
        for vs, hull_obj in zip(self.nabla_vertex_sets, self.nablas):
            if hull_obj is not None:
                pieces.append(hull_obj.to_json())
            else:
                # Lower-dimensional piece: vertex data only, no facets.
                pieces.append({"rank": self.partition.polytope.rank,
                               "vertices": [list(v) for v in vs]})
        return {
            "nablas": pieces,
            "nabla": self.nabla.to_json(),
            "nabla_point_counts": [len(ps) for ps in self.nabla_point_sets],
        }


def _boundary_points(delta: LatticePolytope) -> tuple[Vec, ...]:
    return lattice_points(delta, "boundary")


def _check_partition(delta: LatticePolytope, parts: Sequence[Sequence[Sequence[int]]]):
    normalized = tuple(tuple(sorted(tuple(int(x) for x in v) for v in part)) for part in parts)
    if not normalized or any(not part for part in normalized):
        raise NotAPartition("every part must be non-empty")
    boundary = set(_boundary_points(delta))
    seen: set[Vec] = set()
    for part in normalized:
        for v in part:
            if v not in boundary:
                raise NotAPartition(f"{v} is not a boundary lattice point")
            if v in seen:
                raise NotAPartition(f"{v} appears in more than one part")
            seen.add(v)
    missing = boundary - seen
    if missing:
        raise NotAPartition(f"boundary points not covered: {sorted(missing)}")
    return normalized


def validate_nef_partition(delta: LatticePolytope,
                           parts: Sequence[Sequence[Sequence[int]]]) -> NefPartition:
    """Check the Cartier and nef conditions on the face fan of Delta.

    For every facet F and every part E_i there must be an integral linear
    functional taking value -1 on the boundary points of F in E_i and 0 on
    the other boundary points of F (Cartier on the cone over F); the same
    functional must satisfy <u, v> >= -1 on E_i and >= 0 elsewhere globally
    (upper convexity, i.e. nefness).  The dual partition is constructed as
    a cross-check and must come out reflexive.
    """
    if not is_reflexive(delta):
        raise NotReflexive("nef partitions live on reflexive polytopes")
    normalized = _check_partition(delta, parts)
    np_ = NefPartition(delta, normalized)
    boundary = _boundary_points(delta)
    d = delta.rank
    for fi, (n, c) in enumerate(delta.facets):
        on_facet = [v for v in boundary if dot(n, v) + c == 0]
        for i, part in enumerate(normalized):
            part_set = set(part)
            rows = [list(v) for v in on_facet]
            rhs = [-1 if v in part_set else 0 for v in on_facet]
            status, u = solve_exact(rows, rhs)
            if status != "unique" or any(x.denominator != 1 for x in u):
                raise NotCartier(
                    f"part {i} has no integral Cartier data on facet {fi} "
                    f"(normal {n})")
            u_int = [int(x) for x in u]
            for v in boundary:
                bound = -1 if v in part_set else 0
                if dot(u_int, v) < bound:
                    raise NotNef(
                        f"part {i} fails upper convexity at {v} "
                        f"against facet {fi} (normal {n})")
    dual = dual_nef_partition(np_)
    if not is_reflexive(dual.nabla):
        raise DualityInconsistency("dual partition is not reflexive")
    return np_


_BASIC_SOLUTION_CAP = 300_000


def _binomial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def dual_nef_partition(np_: NefPartition) -> DualNefPartition:
    """Compute the polytopes nabla_i by exact half-space intersection.

    Vertices are enumerated as basic solutions of the defining inequality
    system; a non-integral basic solution signals an invalid partition.
    When the number of d-subsets of constraints is too large for that,
    nabla_i is reconstructed from its lattice points instead
    (conv(nabla_i and N) = nabla_i holds for every valid partition, and
    validity is what validate_nef_partition certifies beforehand).
    Lattice points of each nabla_i are read off by filtering the lattice
    points of the polar polytope, which always contains them.
    """
    delta = np_.polytope
    d = delta.rank
    boundary = _boundary_points(delta)
    polar = polar_dual(delta)
    polar_points = lattice_points(polar, "all")
    enumerate_basic = _binomial(len(boundary), d) <= _BASIC_SOLUTION_CAP

    vertex_sets = []
    point_sets = []
    hulls: list[Optional[LatticePolytope]] = []
    for i, part in enumerate(np_.parts):
        part_set = set(part)
        constraints = [(list(v), -1 if v in part_set else 0) for v in boundary]

        def satisfies(u: Sequence) -> bool:
            return all(sum(a * b for a, b in zip(row, u)) >= bound
                       for row, bound in constraints)

        points = tuple(p for p in polar_points if satisfies(p))
        if enumerate_basic:
            vertices: set[Vec] = set()
            for combo in itertools.combinations(constraints, d):
                rows = [row for row, _ in combo]
                if mat_rank(rows) < d:
                    continue
                status, u = solve_exact(rows, [bound for _, bound in combo])
                if status != "unique":
                    continue
                if not satisfies(u):
                    continue
                if any(x.denominator != 1 for x in u):
                    raise NonIntegralVertex(
                        f"nabla_{i + 1} has a non-integral vertex at {tuple(u)}")
                vertices.add(tuple(int(x) for x in u))
            vset = tuple(sorted(vertices))
        else:
            vset = _extreme_of_points(points, d)
        vertex_sets.append(vset)
        point_sets.append(points)
        base = vset[0]
        rows = [[v[k] - base[k] for k in range(d)] for v in vset[1:]]
        hulls.append(hull(vset) if rows and mat_rank(rows) == d else None)

    nabla = hull([v for vs in vertex_sets for v in vs])
    if not is_reflexive(nabla):
        raise DualityInconsistency("nabla is not reflexive")
    zero = (0,) * d
    for vs in point_sets:
        if zero not in vs:
            raise DualityInconsistency("some nabla_i misses the origin")
    membership = {}
    for i, ps in enumerate(point_sets):
        for p in ps:
            if p != zero:
                membership.setdefault(p, []).append(i)
    for p in lattice_points(nabla, "all"):
        if p == zero:
            continue
        owners = membership.get(p, [])
        if len(owners) != 1:
            raise DualityInconsistency(
                f"lattice point {p} of nabla lies in {len(owners)} pieces")
    return DualNefPartition(np_, tuple(vertex_sets), tuple(point_sets), nabla, tuple(hulls))


def _extreme_of_points(points: tuple[Vec, ...], d: int) -> tuple[Vec, ...]:
    """Vertices of conv(points): hull when full-dimensional, else the
    Caratheodory filter (only viable for small degenerate pieces)."""
    if not points:
        raise DualityInconsistency("a nabla piece came out empty")
    base = points[0]
    rows = [[p[k] - base[k] for k in range(d)] for p in points[1:]]
    if rows and mat_rank(rows) == d:
        return hull(points).vertices
    if len(points) > 24:
        raise DualityInconsistency(
            "degenerate nabla piece too large for exact vertex recovery")
    from .polytopes import extreme_points

    return extreme_points(points)


def check_refinement(coarse: NefPartition, fine: NefPartition) -> bool:
    """True iff ``fine`` refines ``coarse`` by splitting its last part in two."""
    if coarse.polytope != fine.polytope:
        raise PolytopeMismatch("partitions of different polytopes")
    if fine.k != coarse.k + 1:
        return False
    for i in range(coarse.k - 1):
        if set(coarse.parts[i]) != set(fine.parts[i]):
            return False
    split = set(fine.parts[-2]) | set(fine.parts[-1])
    if set(fine.parts[-2]) & set(fine.parts[-1]):
        return False
    return split == set(coarse.parts[-1])


def _require_bipartite(dual: DualNefPartition) -> None:
    if dual.k != 2:
        raise NotBipartite(f"fibre counts need a bipartite partition, got k={dual.k}")


def complement_count(dual: DualNefPartition, polar: LatticePolytope) -> int:
    """Number of lattice points of the polar polytope outside nabla.

    This is the component count of the distinguished pencil member on the
    mirror; nabla must be contained in the polar polytope.
    """
    _require_bipartite(dual)
    for v in dual.nabla.vertices:
        if not polar.contains(v):
            raise NablaNotContained(f"nabla vertex {v} is outside the polar polytope")
    return ell(polar) - ell(dual.nabla)


def curve_invariant(dual: DualNefPartition, polar: LatticePolytope, dim_v: int) -> int:
    """Genus-type invariant of the blown-up locus, from lattice counts.

    For dim_v >= 3 this is complement_count - 1 (the genus of the curve cut
    out by the two partition divisors when dim_v = 3); for dim_v = 2 it is
    the complement count itself, the number of points in the intersection.
    """
    if dim_v < 2:
        raise UnsupportedRank("the invariant needs dim >= 2")
    count = complement_count(dual, polar)
    if count == 0:
        raise DegenerateConfiguration(
            "nabla equals the polar polytope; no refinement is visible on the mirror")
    return count if dim_v == 2 else count - 1


def divisor_component_count(sigma: Sequence[int], delta: LatticePolytope,
                            polar: LatticePolytope) -> Optional[int]:
    """Component count of a toric divisor's trace on the mirror hypersurface.

    Returns None when the trace is empty (sigma interior to a facet of the
    polar polytope); 1 + l*(G) * l*(G-dual) when sigma is interior to a
    codimension-2 face G; and 1 on faces of codimension >= 3.
    """
    s = tuple(int(x) for x in sigma)
    if not polar.on_boundary(s):
        raise NotBoundaryPoint(f"{s} is not a boundary lattice point of the polar polytope")
    face = smallest_face_containing(polar, s)
    codim = polar.rank - face.dim
    if codim == 1:
        return None
    if codim >= 3:
        return 1
    dual = dual_face(polar, face)
    return 1 + ell_star_face(polar, face) * ell_star_face(polar_dual(polar), dual)


def batyrev_hodge(delta: LatticePolytope) -> tuple[int, int]:
    """Hodge numbers of the anticanonical hypersurface family of Delta.

    Returns (h11, h_{d-2,1}) where d = dim of the hypersurface + 1.  Both
    values come from the same lattice-point formula,

        B(P) = l(P) - d - 1 - sum over facets l*(F)
                             + sum over codim-2 faces l*(F) l*(F-dual),

    evaluated at Delta and at its polar; mirror symmetry swaps the pair.
    For rank 3 the first value is the Picard rank of the generic K3 member.
    """
    if delta.rank not in (3, 4):
        raise UnsupportedRank("hypersurface Hodge numbers are computed for rank 3 and 4")
    if not is_reflexive(delta):
        raise NotReflexive("the formula needs a reflexive polytope")
    return _batyrev_value(delta), _batyrev_value(polar_dual(delta))


def _batyrev_value(p: LatticePolytope) -> int:
    d = p.rank
    total = ell(p) - d - 1
    dual = polar_dual(p)
    for face in face_lattice(p):
        if face.dim == d - 1:
            total -= ell_star_face(p, face)
        elif face.dim == d - 2:
            ls = ell_star_face(p, face)
            if ls:
                total += ls * ell_star_face(dual, dual_face(p, face))
    return total
