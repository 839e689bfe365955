"""Acceptance gate: thirteen end-to-end checks, one test each.

Every test cross-ties at least two independently written parts of the
package (the algebra engine, the finite-topology side, the unpruned
reference in naive.py) or sweeps a full finite universe. Each carries
an explicit wall-clock budget; blowing the budget fails the test just
like a wrong value would.
"""

import time
from contextlib import contextmanager
from itertools import combinations

from contactalg import (
    ContactAlgebra,
    ContinuousMap,
    LcaMorphismTable,
    algebra_weight,
    all_contact_structures,
    all_dhlc_morphisms,
    all_homomorphisms,
    all_subalgebras,
    check_ca_morphism,
    check_lca_axioms,
    check_relative_monotonicity,
    compose_diamond,
    cycle_algebra,
    dim_a,
    dim_cl,
    dim_leq,
    discrete_space,
    enumerate_topologies,
    extremal_relation,
    is_connected,
    is_connected_space,
    is_pi_semiregular,
    is_way_below_dense,
    lambda_t_map,
    lca_query,
    nca_as_lca,
    path_algebra,
    pi_weight,
    pi_weight_of_space,
    powerset_algebra,
    query,
    rc_algebra,
    relative_lca,
    rho_from_subalgebra,
    weight_of_space,
    zero_dim_criterion,
)

from conftest import sampled_contact_algebras
from naive import naive_dim_leq


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"budget {seconds}s exceeded: {elapsed:.1f}s"


def overlap_lca(k):
    B = powerset_algebra(k)
    return nca_as_lca(ContactAlgebra(B, extremal_relation(B, "smallest")))


def test_01_extremal_structures_on_power_sets_are_zero_dimensional():
    with budget(10):
        for k in range(2, 6):
            B = powerset_algebra(k)
            for which in ("smallest", "largest"):
                ca = ContactAlgebra(B, extremal_relation(B, which))
                result = dim_a(query(ca, n_cap=1))
                assert result.value == 0, (k, which, result.value)


def test_02_dimension_minus_one_characterizes_the_degenerate_algebra():
    with budget(5):
        degenerate = powerset_algebra(0)
        (only,) = all_contact_structures(degenerate)
        assert dim_a(query(ContactAlgebra(degenerate, only))).value == -1
        # nothing else comes out at -1: exhaustive up to 3 atoms, sampled
        # relations above that
        for k in range(1, 4):
            B = powerset_algebra(k)
            for s in all_contact_structures(B):
                q = query(ContactAlgebra(B, s), n_cap=0)
                assert not dim_leq(q, -1).holds
        for k in (4, 5):
            for ca in sampled_contact_algebras(k, 20, seed=k):
                assert not dim_leq(query(ca, n_cap=0), -1).holds


def test_03_discrete_spaces_are_zero_dimensional_on_both_sides():
    # the left side runs the cover search on the space, the right side
    # the algebra engine on its regular-closed contact algebra
    with budget(30):
        for n in range(1, 6):
            X = discrete_space(n)
            assert dim_cl(X, n_cap=1) == 0
            assert dim_a(query(rc_algebra(X).ca, n_cap=1)).value == 0


def test_04_way_below_dense_subsets_leave_the_dimension_unchanged():
    with budget(60):
        dense_seen = 0
        for k in range(0, 4):
            B = powerset_algebra(k)
            pool = [B.element(m) for m in range(B.size)]
            ends = [pool[0], pool[-1]]
            middle = [x for x in pool if not x.is_zero and not x.is_one]
            for s in all_contact_structures(B):
                ca = ContactAlgebra(B, s)
                full = dim_a(query(ca, None, n_cap=2))
                for r in range(len(middle) + 1):
                    for extra in combinations(middle, r):
                        members = list(dict.fromkeys(ends)) + list(extra)
                        if not is_way_below_dense(ca, members):
                            continue
                        dense_seen += 1
                        part = dim_a(query(ca, members, n_cap=2))
                        assert part.value == full.value, (k, s.rows, members)
        assert dense_seen > 100


def test_05_relative_dimension_never_exceeds_the_ambient_one():
    with budget(120):
        survivors = 0
        for k in range(1, 5):
            B = powerset_algebra(k)
            for s in all_contact_structures(B):
                L = nca_as_lca(ContactAlgebra(B, s))
                if not check_lca_axioms(L).ok:
                    continue
                survivors += 1
                for m in range(1, B.size):
                    report = check_relative_monotonicity(L, B.element(m), n_cap=2)
                    assert report.holds and not report.vacuous, (k, s.rows, m)
        # every relation that survives the axioms gets swept, and at
        # least the overlap relation does survive on each atom count
        assert survivors >= 4


def test_06_contact_preserving_homomorphisms_are_injective():
    with budget(30):
        algebras = [powerset_algebra(k) for k in range(0, 4)]
        cas = [
            [ContactAlgebra(B, s) for s in all_contact_structures(B)]
            for B in algebras
        ]
        preserving = 0
        for i, B1 in enumerate(algebras):
            for j, B2 in enumerate(algebras):
                homs = list(all_homomorphisms(B1, B2))
                for src in cas[i]:
                    for tgt in cas[j]:
                        for h in homs:
                            if not check_ca_morphism(h, src, tgt, "preserves").ok:
                                continue
                            preserving += 1
                            assert len(set(h.mapping)) == B1.size
        assert preserving > 100


def test_07_diamond_composition_is_a_category_and_pullback_tables_respect_it():
    with budget(60):
        lcas = [overlap_lca(k) for k in (1, 2, 3)]
        morphs = {}
        for i, src in enumerate(lcas):
            for j, tgt in enumerate(lcas):
                morphs[i, j] = list(all_dhlc_morphisms(src, tgt))
        # identity laws
        for (i, j), fs in morphs.items():
            left = LcaMorphismTable.identity(lcas[j])
            right = LcaMorphismTable.identity(lcas[i])
            for f in fs:
                assert compose_diamond(left, f).mapping == f.mapping
                assert compose_diamond(f, right).mapping == f.mapping
        # associativity over all composable triples
        for (i, j), fs in morphs.items():
            for (j2, k2), gs in morphs.items():
                if j2 != j:
                    continue
                for (k3, l3), hs in morphs.items():
                    if k3 != k2:
                        continue
                    for g in gs:
                        hg = [compose_diamond(h, g) for h in hs]
                        for f in fs:
                            gf = compose_diamond(g, f)
                            for h, hg_one in zip(hs, hg):
                                assert (
                                    compose_diamond(h, gf).mapping
                                    == compose_diamond(hg_one, f).mapping
                                )
        # the pullback table of a composite of point maps is the diamond
        # composite of the pullback tables, contravariantly
        spaces = [discrete_space(n) for n in range(0, 4)]
        rcs = [rc_algebra(X) for X in spaces]
        for x, X in enumerate(spaces):
            ident = lambda_t_map(ContinuousMap.identity(X), rcs[x], rcs[x])
            assert ident.mapping == tuple(range(rcs[x].algebra.size))
            for y, Y in enumerate(spaces):
                for fm in _all_point_maps(X, Y):
                    f = ContinuousMap(X, Y, fm)
                    tf = lambda_t_map(f, rcs[y], rcs[x])
                    for z, Z in enumerate(spaces):
                        for gm in _all_point_maps(Y, Z):
                            g = ContinuousMap(Y, Z, gm)
                            tg = lambda_t_map(g, rcs[z], rcs[y])
                            direct = lambda_t_map(g.after(f), rcs[z], rcs[x])
                            assert (
                                compose_diamond(tf, tg).mapping == direct.mapping
                            )


def _all_point_maps(X, Y):
    if X.point_count == 0:
        yield ()
        return
    if Y.point_count == 0:
        return
    values = range(Y.point_count)
    maps = [()]
    for _ in range(X.point_count):
        maps = [m + (v,) for m in maps for v in values]
    yield from maps


def test_08_full_subalgebra_induces_overlap_and_proper_ones_break_an_axiom():
    with budget(30):
        for k in range(1, 5):
            B = powerset_algebra(k)
            overlap_rows = extremal_relation(B, "smallest").rows
            for sub in all_subalgebras(B):
                result = rho_from_subalgebra(B, sub)
                if len(sub.members) == B.size:
                    assert result.structure.rows == overlap_rows
                    assert result.s_part_matches
                    assert result.is_minimum_base
                    assert result.weight == B.size
                    assert not result.failed_axioms
                else:
                    assert "LL6" in result.failed_axioms
                    (ll6,) = [
                        r for r in result.way_below_reports if r.axiom == "LL6"
                    ]
                    assert ll6.witness


def test_09_regular_closed_algebras_of_discrete_spaces_are_zero_dimensional_duals():
    with budget(10):
        for n in range(0, 5):
            L = rc_algebra(discrete_space(n)).lca
            assert zero_dim_criterion(L)


def test_10_pi_weight_agrees_across_the_three_views():
    with budget(60):
        # on a power set the minimum dense set is the atom set
        for k in range(0, 6):
            assert pi_weight(powerset_algebra(k)) == k
        # on a space whose nonzero minimal opens have regular-closed
        # closures, space pi-weight transfers to the algebra side
        for n in range(0, 5):
            for X in enumerate_topologies(n):
                if is_pi_semiregular(X):
                    assert pi_weight_of_space(X) == pi_weight(rc_algebra(X).algebra)
        # density never beats the minimum base size on a valid structure
        for k in range(0, 5):
            B = powerset_algebra(k)
            for s in all_contact_structures(B):
                L = nca_as_lca(ContactAlgebra(B, s))
                if check_lca_axioms(L).ok:
                    assert pi_weight(B) <= algebra_weight(L).size


def test_11_optimized_dimension_verdicts_match_the_unpruned_reference():
    with budget(120):
        fixtures = [cycle_algebra(6), path_algebra(3), path_algebra(4)]
        for k in (2, 3):
            B = powerset_algebra(k)
            for which in ("smallest", "largest"):
                fixtures.append(ContactAlgebra(B, extremal_relation(B, which)))
        for ca in fixtures:
            members = [ca.algebra.element(m) for m in range(ca.algebra.size)]
            q = query(ca, None, n_cap=1)
            for n in (-1, 0, 1):
                assert dim_leq(q, n).holds == naive_dim_leq(ca, members, n)


def test_12_space_connectedness_matches_algebra_connectedness():
    with budget(10):
        for n in range(0, 5):
            for X in enumerate_topologies(n):
                assert is_connected_space(X) == is_connected(rc_algebra(X).ca)


def test_13_discrete_space_weight_stays_strictly_below_the_algebra_weight():
    with budget(10):
        for n in range(2, 5):
            X = discrete_space(n)
            w_space = weight_of_space(X)
            w_alg = algebra_weight(rc_algebra(X).lca).size
            assert w_space == n
            assert w_alg == 2**n
            assert w_space < w_alg
