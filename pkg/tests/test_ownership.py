from patrolsim.generators import grid_triangulation
from patrolsim.ownership import (OwnerMap, assign_owners, verify_theorem1,
                                 verify_theorem2)


def test_single_square_owners():
    t = grid_triangulation(1, 1)
    result = assign_owners(t)
    assert isinstance(result, OwnerMap)
    # lower triangle owned by corner 0, upper by the diagonally opposite 3;
    # the two owners sit on the shared diagonal and are primal-adjacent
    assert result.triangle_owner == (0, 3)
    assert result.dual_edge_owners == ((0, 3),)
    assert verify_theorem1(t, result) == []


def test_owner_is_a_corner():
    t = grid_triangulation(4, 3)
    result = assign_owners(t)
    assert isinstance(result, OwnerMap)
    for ti, owner in enumerate(result.triangle_owner):
        assert owner in t.triangles[ti]


def test_grids_feasible_with_connected_owners():
    for w, h in ((2, 2), (3, 5), (6, 6)):
        t = grid_triangulation(w, h)
        result = assign_owners(t)
        assert isinstance(result, OwnerMap)
        assert verify_theorem1(t, result) == []
        report = verify_theorem2(t, result)
        assert report.violations == ()
        assert report.max_dual_edges_owned <= report.bound


def test_dual_edge_ownership_constant_on_grids():
    counts = set()
    for w in (4, 6, 8):
        t = grid_triangulation(w, w)
        result = assign_owners(t)
        counts.add(verify_theorem2(t, result).max_dual_edges_owned)
    assert counts == {6}


def test_theorem2_flags_corrupted_map():
    t = grid_triangulation(2, 2)
    good = assign_owners(t)
    assert isinstance(good, OwnerMap)
    bad = OwnerMap(triangle_owner=good.triangle_owner,
                   dual_edge_owners=((99, 99),) + good.dual_edge_owners[1:])
    report = verify_theorem2(t, bad)
    assert t.dual.edges[0] in report.violations
