import itertools

import pytest
from hypothesis import given, strategies as st

from contactalg import (
    BooleanHomomorphism,
    Element,
    FiniteBooleanAlgebra,
    MismatchError,
    ValidationError,
    all_homomorphisms,
    all_subalgebras,
    boolean_operation,
    check_homomorphism,
    generated_subalgebra,
    is_dense_subset,
    min_dense_cardinality,
    powerset_algebra,
    relative_algebra,
)

from naive import naive_min_dense

ALG4 = powerset_algebra(4)


def masks():
    return st.integers(min_value=0, max_value=ALG4.full_mask)


def elements():
    return masks().map(lambda m: Element(ALG4, m))


def test_sizes_and_degenerate():
    assert powerset_algebra(0).size == 1
    assert powerset_algebra(3).size == 8
    assert powerset_algebra(0).is_degenerate
    zero_alg = powerset_algebra(0)
    assert zero_alg.zero == zero_alg.one


def test_atom_cap():
    with pytest.raises(ValidationError):
        powerset_algebra(25)
    assert powerset_algebra(25, max_atoms=25).atom_count == 25


def test_element_basics(b3):
    x = b3.element(0b101)
    assert x.atom_indices() == (0, 2)
    assert (~x).mask == 0b010
    assert x.is_atom is False
    assert b3.element(0b100).is_atom
    assert repr(x) == "{0,2}"


def test_cross_algebra_operations_rejected(b3):
    other = powerset_algebra(3)
    with pytest.raises(MismatchError):
        b3.one & other.one


@given(elements(), elements(), elements())
def test_lattice_laws(x, y, z):
    assert x & (y | z) == (x & y) | (x & z)
    assert x | (y & z) == (x | y) & (x | z)
    assert ~(x & y) == ~x | ~y
    assert x & ~x == ALG4.zero
    assert x | ~x == ALG4.one
    assert (x <= y) == (x & y == x)


@given(elements(), elements())
def test_operation_dispatch(x, y):
    assert boolean_operation("join", x, y) == x | y
    assert boolean_operation("meet", x, y) == x & y
    assert boolean_operation("complement", x) == ~x


def test_operation_dispatch_unknown(b3):
    with pytest.raises(ValidationError):
        boolean_operation("nand", b3.zero, b3.one)


def test_relative_algebra_roundtrip(b3):
    u = b3.element(0b011)
    rel = relative_algebra(b3, u)
    assert rel.algebra.atom_count == 2
    for x in rel.algebra.elements():
        assert rel.restrict(rel.embed(x)) == x
        assert rel.embed(x) <= u
    # relative complement is complement-within-u
    inner = rel.algebra.element(0b01)
    assert rel.embed(~inner) == (~rel.embed(inner)) & u


def test_relative_algebra_degenerate(b3):
    rel = relative_algebra(b3, b3.zero)
    assert rel.algebra.is_degenerate


def test_dense_subsets(b3):
    atoms = list(b3.atoms())
    assert is_dense_subset(b3, atoms)
    assert not is_dense_subset(b3, atoms[:2])
    assert is_dense_subset(b3, [x for x in b3.elements() if not x.is_zero])
    # zero contributes nothing
    assert is_dense_subset(b3, atoms + [b3.zero])


def test_degenerate_dense():
    zero_alg = powerset_algebra(0)
    assert is_dense_subset(zero_alg, [])
    assert min_dense_cardinality(zero_alg).size == 0


@pytest.mark.parametrize("k", range(5))
def test_min_dense_is_atom_count(k):
    alg = powerset_algebra(k)
    result = min_dense_cardinality(alg)
    assert result.size == k
    assert is_dense_subset(alg, result.witness)


@pytest.mark.parametrize("k", range(4))
def test_min_dense_against_subset_search(k):
    alg = powerset_algebra(k)
    assert min_dense_cardinality(alg).size == naive_min_dense(alg)


def test_generated_subalgebra(b3):
    sub = generated_subalgebra(b3, [b3.element(0b001)])
    assert {x.mask for x in sub.members} == {0b000, 0b001, 0b110, 0b111}
    full = generated_subalgebra(b3, list(b3.atoms()))
    assert len(full.members) == 8


def test_subalgebra_count_is_bell_number():
    # subalgebras of a power set match partitions of the atom set
    assert sum(1 for _ in all_subalgebras(powerset_algebra(3))) == 5
    assert sum(1 for _ in all_subalgebras(powerset_algebra(4))) == 15


def test_subalgebras_are_closed(b3):
    for sub in all_subalgebras(b3):
        members = sub.members
        for x, y in itertools.product(members, repeat=2):
            assert x & y in members
            assert ~x in members


def test_homomorphism_checks(b3):
    b2 = powerset_algebra(2)
    h = BooleanHomomorphism.from_atom_map(b3, b2, (0, 1))
    assert check_homomorphism(h).ok
    assert h.is_surjective()
    assert not h.is_injective()
    # a non-homomorphic table is caught with a law name
    bad = BooleanHomomorphism(b2, b2, tuple([0] * b2.size))
    report = check_homomorphism(bad)
    assert not report.ok
    assert report.law == "one"


def test_all_homomorphisms_count():
    # maps of target atoms into source atoms classify the homomorphisms
    b2, b3 = powerset_algebra(2), powerset_algebra(3)
    homs = list(all_homomorphisms(b2, b3))
    assert len(homs) == 2**3
    for h in homs:
        assert check_homomorphism(h).ok
    assert len(list(all_homomorphisms(powerset_algebra(0), b2))) == 0
    assert len(list(all_homomorphisms(b2, powerset_algebra(0)))) == 1


def test_identity_hom(b3):
    ident = BooleanHomomorphism.identity(b3)
    assert check_homomorphism(ident).ok
    assert ident.is_injective() and ident.is_surjective()
