import pytest

from towercalc.hilton import (
    GradedRankTable,
    SphereWedge,
    basic_product_dimensions,
    looped_product_ranks,
    serre_rank,
    wedge_pi_ranks,
)

from conftest import brute_wedge_table


def test_serre_rank_pattern():
    assert serre_rank(3, 3) == 1
    assert serre_rank(7, 4) == 1
    assert serre_rank(5, 3) == 0
    assert serre_rank(4, 4) == 1
    assert serre_rank(2, 2) == 1
    assert serre_rank(3, 2) == 1
    assert serre_rank(6, 4) == 0
    with pytest.raises(ValueError):
        serre_rank(1, 1)
    with pytest.raises(ValueError):
        serre_rank(0, 3)


def test_wedge_validation():
    with pytest.raises(ValueError):
        SphereWedge(())
    with pytest.raises(ValueError):
        SphereWedge((1, 3))
    assert SphereWedge((5, 3, 3)).dims == (3, 3, 5)
    assert SphereWedge.of_copies(3, 2).grouped() == ((3,), (2,))


def test_graded_table_range():
    t = GradedRankTable({3: 2}, 0, 5)
    assert t.rank(3) == 2
    assert t.rank(4) == 0
    with pytest.raises(ValueError):
        t.rank(6)
    with pytest.raises(ValueError):
        GradedRankTable({7: 1}, 0, 5)


def test_two_three_spheres_table():
    table = wedge_pi_ranks(SphereWedge((3, 3)), 9)
    assert table.entries == {3: 2, 5: 1, 7: 2, 9: 3}


def test_single_sphere_degenerates_to_serre():
    for m in (2, 3, 4, 5, 6):
        table = wedge_pi_ranks(SphereWedge((m,)), 15)
        expect = {q: serre_rank(q, m) for q in range(1, 16)}
        expect = {q: r for q, r in expect.items() if r}
        assert table.entries == expect


def test_two_two_spheres_low_degrees():
    table = wedge_pi_ranks(SphereWedge((2, 2)), 3)
    assert table.entries == {2: 2, 3: 3}


def test_tables_match_brute_enumeration():
    cases = [
        ((3, 3), 12),
        ((2, 2), 8),
        ((2, 3), 9),
        ((3, 3, 3), 9),
        ((2, 2, 4), 8),
        ((5, 5), 12),
        ((4,), 10),
    ]
    for dims, q_max in cases:
        assert wedge_pi_ranks(SphereWedge(dims), q_max).entries == brute_wedge_table(
            dims, q_max
        )


def test_truncation_soundness():
    for dims in ((3, 3), (2, 3), (2, 2, 2)):
        for q_max in (5, 9, 12):
            base = wedge_pi_ranks(SphereWedge(dims), q_max)
            widened = wedge_pi_ranks(SphereWedge(dims), q_max, _max_dim=q_max + 17)
            assert base.entries == widened.entries


def test_below_all_dims_is_empty():
    table = wedge_pi_ranks(SphereWedge((4, 5)), 3)
    assert table.entries == {}


def test_basic_product_dimensions_small():
    # two 3-spheres: one product sphere of dimension 1 + 2*weight per Lyndon count
    dims = basic_product_dimensions(SphereWedge((3, 3)), 9)
    assert dims == {3: 2, 5: 1, 7: 2, 9: 3}


def test_all_odd_wedges_are_odd_concentrated():
    for dims in ((3, 3), (3, 5), (5, 5, 7)):
        table = wedge_pi_ranks(SphereWedge(dims), 20)
        assert all(q % 2 == 1 for q in table.support())
        looped = looped_product_ranks(SphereWedge(dims), 2, 19)
        assert all(q % 2 == 0 for q in looped.support())


def test_looped_product_examples():
    w = SphereWedge((3, 3))
    looped = looped_product_ranks(w, 2, 8)
    assert looped.rank(4) == 2   # 2 * rank pi_5
    assert looped.rank(2) == 4   # 2 * rank pi_3
    single = looped_product_ranks(SphereWedge((4,)), 1, 6)
    assert single.rank(3) == 1
    with pytest.raises(ValueError):
        looped_product_ranks(w, 0, 5)


def test_looped_degree_shift_consistency():
    w = SphereWedge((2, 3))
    upstairs = wedge_pi_ranks(w, 11)
    looped = looped_product_ranks(w, 3, 10)
    for q in range(0, 11):
        assert looped.rank(q) == 3 * upstairs.rank(q + 1)
