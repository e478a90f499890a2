"""Nef partition construction, duality and count tests.

The genus assertion for the rank-4 fixture is pinned by an adjunction
oracle computed inline: the curve cut out by the two partition divisors is
a (4, 5) complete intersection in projective 3-space, so
2g - 2 = deg * (4 + 5 - 4) with deg = 20.
"""

import pytest

from mirrorcheck import errors, nef, polytopes as pt

P1P1P1_PARTS = [[(1, 0, 0), (0, 1, 0), (0, 0, 1)],
                [(-1, 0, 0), (0, -1, 0), (0, 0, -1)]]
WP_PARTS = [[(1, 0, 0), (0, 1, 0), (-1, -1, -3), (0, 0, -1)], [(0, 0, 1)]]
QUINTIC_PARTS = [[(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (-1, -1, -1, -1)],
                 [(0, 0, 0, 1)]]


def quintic_genus_oracle():
    # Adjunction for the (4, 5) complete-intersection curve in P^3.
    degree = 4 * 5
    two_g_minus_2 = degree * (4 + 5 - 4)
    assert two_g_minus_2 == 100
    return two_g_minus_2 // 2 + 1


# --- validation ------------------------------------------------------------


def test_validate_p1p1p1(octahedron):
    np_ = nef.validate_nef_partition(octahedron, P1P1P1_PARTS)
    assert np_.k == 2


def test_validate_wp1113(wp1113_simplex):
    np_ = nef.validate_nef_partition(wp1113_simplex, WP_PARTS)
    assert [len(p) for p in np_.parts] == [4, 1]


def test_octahedron_singleton_part_is_valid(octahedron):
    # On a smooth ambient the toric divisor of a single ray is nef and
    # Cartier, so this partition must validate; the per-facet systems are
    # all solvable.
    boundary = pt.lattice_points(octahedron, "boundary")
    rest = [v for v in boundary if v != (1, 0, 0)]
    np_ = nef.validate_nef_partition(octahedron, [[(1, 0, 0)], rest])
    dual = nef.dual_nef_partition(np_)
    assert pt.is_reflexive(dual.nabla)


def test_not_a_partition(wp1113_simplex):
    # The spec's vertex-only description misses the boundary point
    # (0, 0, -1) and so is not a partition of the boundary lattice points.
    with pytest.raises(errors.NotAPartition):
        nef.validate_nef_partition(
            wp1113_simplex, [[(1, 0, 0), (0, 1, 0), (-1, -1, -3)], [(0, 0, 1)]])


def test_misassigned_facet_point_not_cartier(wp1113_simplex):
    with pytest.raises(errors.NotCartier):
        nef.validate_nef_partition(
            wp1113_simplex,
            [[(1, 0, 0), (0, 1, 0), (-1, -1, -3)], [(0, 0, 1), (0, 0, -1)]])


def test_cube_singleton_vertex_not_cartier(cube):
    boundary = pt.lattice_points(cube, "boundary")
    rest = [v for v in boundary if v != (1, 1, 1)]
    with pytest.raises(errors.NotCartier):
        nef.validate_nef_partition(cube, [[(1, 1, 1)], rest])


def test_hexagon_antipodal_pair_not_nef(hexagon):
    # The two rays span disjoint (-1)-curves on the del Pezzo surface of
    # degree 6; their sum is Cartier but fails upper convexity.
    with pytest.raises(errors.NotNef):
        nef.validate_nef_partition(
            hexagon, [[(1, 0), (-1, -1)], [(0, 1), (1, 1), (-1, 0), (0, -1)]])


# --- dual partitions -------------------------------------------------------


def test_dual_p1p1p1(octahedron):
    dual = nef.dual_nef_partition(nef.validate_nef_partition(octahedron, P1P1P1_PARTS))
    cube_neg = {(x, y, z) for x in (-1, 0) for y in (-1, 0) for z in (-1, 0)}
    assert set(dual.nabla_vertex_sets[0]) == cube_neg
    assert set(dual.nabla_vertex_sets[1]) == {tuple(-c for c in v) for v in cube_neg}
    assert pt.ell(dual.nabla) == 15


def test_dual_wp1113_exact_vertex_lists(wp1113_simplex):
    dual = nef.dual_nef_partition(nef.validate_nef_partition(wp1113_simplex, WP_PARTS))
    assert set(dual.nabla_vertex_sets[0]) == {
        (-1, -1, 0), (-1, -1, 1), (-1, 2, 0), (2, -1, 0)}
    assert set(dual.nabla_vertex_sets[1]) == {
        (0, 0, 0), (0, 0, -1), (3, 0, -1), (0, 3, -1)}


def test_dual_quintic_nabla2_is_simplex(quintic_simplex):
    dual = nef.dual_nef_partition(nef.validate_nef_partition(quintic_simplex, QUINTIC_PARTS))
    assert set(dual.nabla_vertex_sets[1]) == {
        (0, 0, 0, 0), (0, 0, 0, -1), (1, 0, 0, -1), (0, 1, 0, -1), (0, 0, 1, -1)}
    assert dual.nablas[1] is not None and len(dual.nablas[1].vertices) == 5


@pytest.mark.parametrize("fixture,parts", [
    ("octahedron", P1P1P1_PARTS),
    ("wp1113_simplex", WP_PARTS),
    ("quintic_simplex", QUINTIC_PARTS),
])
def test_nabla_point_identities(fixture, parts, request):
    poly = request.getfixturevalue(fixture)
    dual = nef.dual_nef_partition(nef.validate_nef_partition(poly, parts))
    counts = [len(ps) for ps in dual.nabla_point_sets]
    # Nonzero lattice points of nabla lie in exactly one piece.
    assert pt.ell(dual.nabla) == sum(counts) - (len(counts) - 1)
    zero = (0,) * poly.rank
    union = set()
    for ps in dual.nabla_point_sets:
        assert zero in ps
        union |= set(ps)
    assert union == set(pt.lattice_points(dual.nabla, "all"))


@pytest.mark.parametrize("fixture,parts", [
    ("octahedron", P1P1P1_PARTS),
    ("wp1113_simplex", WP_PARTS),
    ("quintic_simplex", QUINTIC_PARTS),
])
def test_duality_round_trip(fixture, parts, request):
    """The dual of the dual partition recovers Conv(E_i + {0})."""
    poly = request.getfixturevalue(fixture)
    np_ = nef.validate_nef_partition(poly, parts)
    dual = nef.dual_nef_partition(np_)
    zero = (0,) * poly.rank
    mirror_parts = [[p for p in ps if p != zero] for ps in dual.nabla_point_sets]
    back = nef.dual_nef_partition(nef.validate_nef_partition(dual.nabla, mirror_parts))
    for i in range(np_.k):
        delta_i = np_.delta_generators(i)
        assert set(back.nabla_vertex_sets[i]) == set(pt.extreme_points(delta_i))


def test_trivial_partition_dual_is_polar(octahedron):
    boundary = list(pt.lattice_points(octahedron, "boundary"))
    np_ = nef.validate_nef_partition(octahedron, [boundary])
    dual = nef.dual_nef_partition(np_)
    assert dual.nabla == pt.polar_dual(octahedron)


# --- refinement ------------------------------------------------------------


def test_refinement(octahedron):
    boundary = list(pt.lattice_points(octahedron, "boundary"))
    trivial = nef.validate_nef_partition(octahedron, [boundary])
    bipartite = nef.validate_nef_partition(octahedron, P1P1P1_PARTS)
    assert nef.check_refinement(trivial, bipartite)
    assert not nef.check_refinement(bipartite, bipartite)


def test_refinement_polytope_mismatch(octahedron, cube):
    boundary_o = list(pt.lattice_points(octahedron, "boundary"))
    trivial_o = nef.validate_nef_partition(octahedron, [boundary_o])
    boundary_c = list(pt.lattice_points(cube, "boundary"))
    trivial_c = nef.validate_nef_partition(cube, [boundary_c])
    with pytest.raises(errors.PolytopeMismatch):
        nef.check_refinement(trivial_o, trivial_c)


# --- counts ----------------------------------------------------------------


def test_complement_count_p1p1p1(octahedron):
    dual = nef.dual_nef_partition(nef.validate_nef_partition(octahedron, P1P1P1_PARTS))
    assert nef.complement_count(dual, pt.polar_dual(octahedron)) == 12


def test_complement_count_wp1113(wp1113_simplex):
    dual = nef.dual_nef_partition(nef.validate_nef_partition(wp1113_simplex, WP_PARTS))
    polar = pt.polar_dual(wp1113_simplex)
    assert nef.complement_count(dual, polar) == 18
    assert nef.curve_invariant(dual, polar, 2) == 18


def test_quintic_counts_match_adjunction(quintic_simplex):
    genus = quintic_genus_oracle()
    dual = nef.dual_nef_partition(nef.validate_nef_partition(quintic_simplex, QUINTIC_PARTS))
    polar = pt.polar_dual(quintic_simplex)
    assert nef.complement_count(dual, polar) == genus + 1 == 52
    assert nef.curve_invariant(dual, polar, 3) == genus == 51


def test_complement_requires_bipartite(octahedron):
    boundary = list(pt.lattice_points(octahedron, "boundary"))
    dual = nef.dual_nef_partition(nef.validate_nef_partition(octahedron, [boundary]))
    with pytest.raises(errors.NotBipartite):
        nef.complement_count(dual, pt.polar_dual(octahedron))


def test_degenerate_configuration_policy(octahedron):
    # A synthetic bipartite dual whose nabla fills the whole polar polytope:
    # complement 0 is reported, and the curve invariant refuses it.
    np_ = nef.validate_nef_partition(octahedron, P1P1P1_PARTS)
    polar = pt.polar_dual(octahedron)
    points = pt.lattice_points(polar, "all")
    fake = nef.DualNefPartition(np_, (polar.vertices, polar.vertices),
                                (points, points), polar, (polar, polar))
    assert nef.complement_count(fake, polar) == 0
    with pytest.raises(errors.DegenerateConfiguration):
        nef.curve_invariant(fake, polar, 3)


def test_nabla_not_contained(octahedron, cube):
    np_ = nef.validate_nef_partition(octahedron, P1P1P1_PARTS)
    dual = nef.dual_nef_partition(np_)
    with pytest.raises(errors.NablaNotContained):
        nef.complement_count(dual, pt.hull([(v[0], v[1], v[2]) for v in
                                            [(1,0,0),(-1,0,0),(0,1,0),(0,-1,0),(0,0,1),(0,0,-1)]]))


# --- Minkowski-sum interior identity ---------------------------------------


@pytest.mark.parametrize("fixture,parts", [
    ("octahedron", P1P1P1_PARTS),
    ("wp1113_simplex", WP_PARTS),
    ("quintic_simplex", QUINTIC_PARTS),
])
def test_interior_of_sum_identity(fixture, parts, request):
    """l*(nabla_i + polar) = l(nabla_i) and l*(2 polar) = l(polar)."""
    poly = request.getfixturevalue(fixture)
    polar = pt.polar_dual(poly)
    dual = nef.dual_nef_partition(nef.validate_nef_partition(poly, parts))
    for i in range(dual.k):
        piece = dual.nablas[i]
        assert piece is not None
        total = pt.minkowski_sum(piece, polar)
        assert pt.ell_interior(total) == len(dual.nabla_point_sets[i])
    assert pt.ell_interior(pt.dilate(polar, 2)) == pt.ell(polar)


# --- divisor component counts ----------------------------------------------


def test_divisor_components_on_cube_polar(octahedron, cube):
    # The cube is the polar polytope of the octahedron.
    assert nef.divisor_component_count((1, 1, 0), octahedron, cube) == 1
    assert nef.divisor_component_count((1, 1, 1), octahedron, cube) == 1
    assert nef.divisor_component_count((1, 0, 0), octahedron, cube) is None


def test_divisor_components_facet_interior(quartic_simplex):
    polar = pt.polar_dual(quartic_simplex)
    assert nef.divisor_component_count((1, 0, -1), quartic_simplex, polar) is None
    with pytest.raises(errors.NotBoundaryPoint):
        nef.divisor_component_count((0, 0, 0), quartic_simplex, polar)


def test_divisor_components_formula_on_edge(octahedron, cube):
    # Edge-interior point of the cube: 1 + l*(edge) * l*(dual edge).
    count = nef.divisor_component_count((1, 1, 0), octahedron, cube)
    edge = pt.smallest_face_containing(cube, (1, 1, 0))
    dual_edge = pt.dual_face(cube, edge)
    assert count == 1 + pt.ell_star_face(cube, edge) * pt.ell_star_face(
        pt.polar_dual(cube), dual_edge)


# --- hypersurface Hodge numbers ---------------------------------------------


def test_batyrev_quartic(quartic_simplex):
    assert nef.batyrev_hodge(quartic_simplex) == (1, 19)
    assert nef.batyrev_hodge(pt.polar_dual(quartic_simplex)) == (19, 1)


def test_batyrev_quintic(quintic_simplex):
    assert nef.batyrev_hodge(quintic_simplex) == (1, 101)


def test_batyrev_k3_fixtures(octahedron, cube, wp1113_simplex):
    assert nef.batyrev_hodge(octahedron) == (3, 17)
    assert nef.batyrev_hodge(cube) == (17, 3)
    assert nef.batyrev_hodge(wp1113_simplex) == (1, 19)


@pytest.mark.parametrize("fixture", ["octahedron", "cube", "quartic_simplex",
                                     "wp1113_simplex", "quintic_simplex"])
def test_batyrev_mirror_swap(fixture, request):
    poly = request.getfixturevalue(fixture)
    h11, h21 = nef.batyrev_hodge(poly)
    assert nef.batyrev_hodge(pt.polar_dual(poly)) == (h21, h11)


def test_batyrev_rejects_rank2(hexagon):
    with pytest.raises(errors.UnsupportedRank):
        nef.batyrev_hodge(hexagon)


@pytest.mark.parametrize("fixture,parts,expected_points", [
    ("octahedron", P1P1P1_PARTS, 12),
    ("wp1113_simplex", WP_PARTS, 18),
])
def test_complement_points_each_give_one_component(fixture, parts, expected_points, request):
    """Every lattice point of the polar outside nabla meets the mirror
    hypersurface in exactly one component; summing reproduces the
    complement count through the independent face machinery."""
    poly = request.getfixturevalue(fixture)
    polar = pt.polar_dual(poly)
    dual = nef.dual_nef_partition(nef.validate_nef_partition(poly, parts))
    nabla_points = set(pt.lattice_points(dual.nabla, "all"))
    outside = [p for p in pt.lattice_points(polar, "all") if p not in nabla_points]
    assert len(outside) == expected_points
    for sigma in outside:
        assert nef.divisor_component_count(sigma, poly, polar) == 1
