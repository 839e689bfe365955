import itertools

import pytest
from hypothesis import given, strategies as st

from contactalg import (
    ContinuousMap,
    Element,
    FiniteSpace,
    InternalInconsistencyError,
    MismatchError,
    SetFamily,
    ValidationError,
    chain_space,
    check_dhlc_morphism,
    clopen_sets,
    closure,
    co_algebra,
    compose_diamond,
    cover_predicates,
    dim_cl,
    discrete_space,
    enumerate_topologies,
    extremal_relation,
    family_order,
    generate_topology,
    indiscrete_space,
    interior,
    is_connected,
    is_connected_space,
    is_pi_semiregular,
    is_semiregular,
    is_shrinking_of,
    is_swelling_of,
    lambda_t_map,
    particular_point_space,
    pi_weight_of_space,
    rc_algebra,
    regular_shrinking_dim_check,
    ro_algebra,
    sierpinski_space,
    stone_dual,
    weight_of_space,
)

from naive import naive_family_order


def circle_model() -> FiniteSpace:
    # two open arcs, two glue points
    return generate_topology(4, [0b0001, 0b0010, 0b0111, 0b1011])


def test_space_validation():
    with pytest.raises(ValidationError):
        FiniteSpace(2, {0b00, 0b01, 0b10, 0b11, 0b100})  # out of range
    with pytest.raises(ValidationError):
        FiniteSpace(2, {0b00, 0b11, 0b01, 0b10, 0b01 | 0b10} - {0b11})  # no X
    with pytest.raises(ValidationError):
        FiniteSpace(3, {0, 0b111, 0b001, 0b010})  # not closed under union


def test_space_equality():
    assert sierpinski_space() == FiniteSpace(2, {0, 0b10, 0b11})
    assert sierpinski_space() != discrete_space(2)


def test_closure_interior_sierpinski():
    X = sierpinski_space()
    assert closure(X, 0b10) == 0b11  # the open point is dense
    assert closure(X, 0b01) == 0b01
    assert interior(X, 0b01) == 0
    assert interior(X, 0b11) == 0b11


@given(st.integers(0, 15))
def test_closure_is_a_closure_operator(mask):
    X = circle_model()
    c = closure(X, mask)
    assert mask & ~c == 0
    assert closure(X, c) == c
    assert interior(X, X.full_mask ^ mask) == X.full_mask ^ c


def test_minimal_neighborhoods():
    X = chain_space(3)
    assert [X.minimal_neighborhood(p) for p in range(3)] == [0b001, 0b011, 0b111]


def test_generate_topology_closes():
    X = generate_topology(3, [0b011, 0b110])
    assert 0b010 in X.opens  # the intersection
    assert 0b111 in X.opens
    assert len(X.opens) == 5


def test_continuous_map_validation():
    sierp = sierpinski_space()
    # sending the closed point onto the open one and back is not continuous
    with pytest.raises(ValidationError):
        ContinuousMap(sierp, sierp, [1, 0])
    flip_ok = ContinuousMap(discrete_space(2), sierp, [1, 0])
    assert flip_ok.preimage(0b10) == 0b01


def test_map_composition():
    X, Y = discrete_space(3), discrete_space(2)
    f = ContinuousMap(X, Y, [0, 1, 1])
    g = ContinuousMap(Y, discrete_space(1), [0, 0])
    gf = g.after(f)
    assert gf.point_map == (0, 0, 0)
    with pytest.raises(MismatchError):
        f.after(g)


def test_rc_of_discrete_is_overlap():
    X = discrete_space(3)
    rc = rc_algebra(X)
    assert rc.algebra.atom_count == 3
    assert rc.lca.ca.contact.rows == extremal_relation(rc.algebra, "smallest").rows
    assert rc.lca.is_valid()


def test_rc_of_circle_model():
    rc = rc_algebra(circle_model())
    assert rc.algebra.atom_count == 2
    assert rc.regular_closed_sets() == [0b0000, 0b1101, 0b1110, 0b1111]
    # the two closed arcs touch at both glue points
    assert rc.lca.ca.contact.rows == (0b11, 0b11)
    assert not rc.lca.is_valid()


def test_rc_of_sierpinski():
    rc = rc_algebra(sierpinski_space())
    assert rc.regular_closed_sets() == [0b00, 0b11]
    assert rc.algebra.atom_count == 1


def test_rc_roundtrip():
    rc = rc_algebra(circle_model())
    for s in rc.regular_closed_sets():
        assert rc.to_set(rc.from_set(s)) == s
    with pytest.raises(ValidationError):
        rc.from_set(0b0001)


def test_ro_mirrors_rc():
    ro = ro_algebra(circle_model())
    assert ro.regular_open_sets() == [0b0000, 0b0001, 0b0010, 0b1111]
    assert ro.algebra.atom_count == ro.rc.algebra.atom_count
    # nu is the closure map
    ro_atom = Element(ro.algebra, 0b01)
    assert ro.rc.to_set(ro.nu(ro_atom)) in ro.rc.regular_closed_sets()


def test_ro_of_sierpinski_is_trivial():
    ro = ro_algebra(sierpinski_space())
    assert ro.regular_open_sets() == [0b00, 0b11]


def test_family_order_cases():
    X = discrete_space(3)
    assert family_order(SetFamily.of(X, [])) == -1
    assert family_order(SetFamily.of(X, [0], [1], [2])) == 0
    assert family_order(SetFamily.of(X, [0, 1], [1, 2])) == 1
    # duplicates collapse
    assert family_order(SetFamily.of(X, [0, 1], [0, 1], [2])) == 0
    with pytest.raises(ValidationError):
        family_order(SetFamily(X, ()))


@given(st.lists(st.integers(0, 15), min_size=1, max_size=5))
def test_family_order_matches_enumeration(masks):
    X = discrete_space(4)
    assert family_order(SetFamily(X, tuple(masks))) == naive_family_order(masks)


def test_cover_predicates_shrinking():
    X = discrete_space(3)
    G = SetFamily.of(X, [0, 1], [1, 2])
    F = SetFamily.of(X, [0], [1, 2])
    report = cover_predicates(F, G)
    assert report.is_cover and report.is_shrinking
    assert report.is_refinement
    assert is_shrinking_of(F, G)


def test_cover_predicates_swelling():
    X = discrete_space(3)
    F = SetFamily.of(X, [0, 1], [2])
    G = SetFamily.of(X, [0], [2])
    report = cover_predicates(F, G)
    assert report.is_swelling
    # a swelling may not create new intersections: these two do meet
    # although the originals were disjoint
    H = SetFamily.of(X, [0, 1], [1, 2])
    G2 = SetFamily.of(X, [0], [1])
    report2 = cover_predicates(H, G2)
    assert not report2.is_swelling
    assert report2.swelling_witness == (0, 1)


def test_cover_predicates_mismatch_is_none():
    X = discrete_space(3)
    F = SetFamily.of(X, [0], [1], [2])
    G = SetFamily.of(X, [0, 1], [1, 2])
    report = cover_predicates(F, G)
    assert report.is_refinement
    assert report.is_shrinking is None and report.is_swelling is None
    with pytest.raises(ValidationError):
        is_shrinking_of(F, G)
    with pytest.raises(ValidationError):
        is_swelling_of(F, G)


def test_cover_predicates_cross_space():
    with pytest.raises(MismatchError):
        cover_predicates(
            SetFamily.of(discrete_space(2), [0]),
            SetFamily.of(discrete_space(3), [0]),
        )


@pytest.mark.parametrize(
    "space,expected",
    [
        (discrete_space(0), -1),
        (discrete_space(1), 0),
        (discrete_space(4), 0),
        (sierpinski_space(), 0),
        (chain_space(4), 0),
        (indiscrete_space(3), 0),
        (particular_point_space(3), 1),
        (particular_point_space(4), 2),
    ],
)
def test_dim_cl_fixtures(space, expected):
    assert dim_cl(space, n_cap=3) == expected


def test_dim_cl_circle_model():
    assert dim_cl(circle_model(), n_cap=3) == 1


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_dim_cl_irredundant_equals_unrestricted(n):
    for X in enumerate_topologies(n):
        assert dim_cl(X, n_cap=3) == dim_cl(X, n_cap=3, all_covers=True)


def test_regular_shrinking_discrete():
    for n in range(4):
        report = regular_shrinking_dim_check(discrete_space(n), 0)
        assert report.holds and report.corollary_holds
        assert report.within_hypotheses


def test_regular_shrinking_needs_hypotheses():
    # outside T1 the regular-cover criterion can disagree with the
    # covering dimension; the report says so instead of asserting
    X = circle_model()
    report = regular_shrinking_dim_check(X, 0)
    assert report.holds
    assert not report.within_hypotheses
    assert dim_cl(X) == 1


def test_weight_fixtures():
    assert weight_of_space(sierpinski_space()) == 2
    assert weight_of_space(chain_space(3)) == 3
    assert weight_of_space(particular_point_space(4)) == 4
    assert weight_of_space(indiscrete_space(3)) == 1
    assert weight_of_space(discrete_space(4)) == 4


def test_pi_weight_fixtures():
    assert pi_weight_of_space(sierpinski_space()) == 1
    assert pi_weight_of_space(chain_space(3)) == 1
    assert pi_weight_of_space(particular_point_space(4)) == 1
    assert pi_weight_of_space(discrete_space(4)) == 4


def test_semiregularity():
    assert is_semiregular(discrete_space(3))
    assert not is_semiregular(sierpinski_space())
    assert not is_semiregular(particular_point_space(4))
    assert is_pi_semiregular(discrete_space(3))
    assert is_pi_semiregular(circle_model())
    assert not is_pi_semiregular(sierpinski_space())


def test_lambda_t_identity_and_composition():
    X, Y, Z = discrete_space(3), discrete_space(2), discrete_space(2)
    rx, ry, rz = rc_algebra(X), rc_algebra(Y), rc_algebra(Z)
    f = ContinuousMap(X, Y, [0, 0, 1])
    g = ContinuousMap(Y, Z, [1, 0])
    tf = lambda_t_map(f, ry, rx)
    tg = lambda_t_map(g, rz, ry)
    assert check_dhlc_morphism(tf).ok
    composite = lambda_t_map(g.after(f), rz, rx)
    assert compose_diamond(tf, tg).mapping == composite.mapping
    ident = lambda_t_map(ContinuousMap.identity(X), rx, rx)
    assert ident.mapping == tuple(range(rx.algebra.size))


def test_lambda_t_on_non_discrete():
    X = circle_model()
    collapse = ContinuousMap(X, indiscrete_space(1), [0] * 4)
    t = lambda_t_map(collapse)
    # the whole target pulls back to the whole source
    assert t(Element(t.source.algebra, 1)).mask == t.target.algebra.full_mask


def test_lambda_t_space_mismatch():
    X, Y = discrete_space(2), discrete_space(2)
    f = ContinuousMap(X, Y, [0, 1])
    with pytest.raises(MismatchError):
        lambda_t_map(f, rc_algebra(discrete_space(3)), rc_algebra(X))


def test_stone_dual_and_clopens():
    from contactalg import powerset_algebra

    X = stone_dual(powerset_algebra(3))
    assert X.is_discrete and X.point_count == 3
    assert len(clopen_sets(chain_space(3))) == 2
    assert len(clopen_sets(discrete_space(2))) == 4
    assert co_algebra(discrete_space(2)).atom_count == 2
    assert co_algebra(chain_space(3)).atom_count == 1


def test_connectedness():
    assert is_connected_space(chain_space(4))
    assert is_connected_space(circle_model())
    assert not is_connected_space(discrete_space(2))
    assert is_connected_space(discrete_space(1))
    assert is_connected_space(discrete_space(0))


def test_connectedness_matches_algebra():
    for n in range(4):
        for X in enumerate_topologies(n):
            assert is_connected_space(X) == is_connected(rc_algebra(X).ca)


def test_enumerate_topologies_counts():
    assert [sum(1 for _ in enumerate_topologies(n)) for n in range(5)] == [
        1,
        1,
        4,
        29,
        355,
    ]
    with pytest.raises(ValidationError):
        next(enumerate_topologies(5))
