import pytest
from hypothesis import given, settings, strategies as st

from rbracks.constructions import named_group
from rbracks.errors import CapExceeded, PhiError
from rbracks.groups import (
    GroupAxiomError,
    automorphisms,
    center,
    centralizer,
    check_group_rb,
    check_relative_group_rb,
    conjugation_action,
    cyclic,
    derived_group_op,
    direct_product,
    elementary_operators,
    search_group_rb,
    symmetric,
    validate_group,
)
from rbracks.magma import CayleyTable, PhiAction

import oracles

GROUP_NAMES = ["C2", "C3", "C4", "C5", "C6", "S3", "C2xC2"]


def test_validate_cyclic_and_symmetric():
    G = validate_group(CayleyTable(oracles.cyclic_table(3)))
    assert G.identity == 0 and G.inverses == (0, 2, 1)
    S3 = symmetric(3)
    assert validate_group(S3.table).identity == S3.identity
    with pytest.raises(GroupAxiomError):
        validate_group(CayleyTable(((0, 0), (1, 1))))


def test_non_associative_table_rejected():
    # a Latin square with identity 0 that is not associative
    t = CayleyTable(
        ((0, 1, 2, 3, 4), (1, 0, 3, 4, 2), (2, 4, 0, 1, 3), (3, 2, 4, 0, 1), (4, 3, 1, 2, 0))
    )
    with pytest.raises(GroupAxiomError):
        validate_group(t)


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_named_groups_are_groups(name):
    G = named_group(name)
    assert validate_group(G.table).n == G.n


def test_centers():
    C3, S3 = cyclic(3), symmetric(3)
    assert center(C3) == (0, 1, 2)
    assert center(S3) == (S3.identity,)
    r = next(a for a in range(6) if S3.power(a, 3) == S3.identity and a != S3.identity)
    assert centralizer(S3, r) == tuple(sorted({S3.identity, r, S3.mul(r, r)}))


def test_group_automorphism_counts():
    assert len(automorphisms(cyclic(3))) == 2
    assert len(automorphisms(cyclic(2))) == 1
    assert len(automorphisms(symmetric(3))) == 6
    assert len(automorphisms(named_group("C2xC2"))) == 6


@pytest.mark.parametrize("name", GROUP_NAMES)
def test_elementary_operators(name):
    G = named_group(name)
    const, inversion = elementary_operators(G)
    assert check_group_rb(G, const, 1).holds and check_group_rb(G, const, -1).holds
    assert check_group_rb(G, inversion, 1).holds
    # weight -1 for inversion reduces to g h^-1 = h^-1 g
    assert check_group_rb(G, inversion, -1).holds == G.is_abelian()


def test_inversion_weight_minus_one_witness_on_s3():
    S3 = symmetric(3)
    rep = check_group_rb(S3, S3.inverses, -1)
    g, h = rep.witness
    assert S3.mul(g, S3.inv(h)) != S3.mul(S3.inv(h), g)


def test_identity_map_on_abelian_group():
    assert check_group_rb(cyclic(3), (0, 1, 2), 1).holds


@pytest.mark.parametrize("name", ["C2", "C3", "C4", "C5", "C6", "S3", "C2xC2"])
@pytest.mark.parametrize("weight", [1, -1])
def test_search_matches_straight_loop(name, weight):
    G = named_group(name)
    expected = oracles.group_rb_maps(G.table.rows(), weight)
    assert search_group_rb(G, weight) == expected


@pytest.mark.parametrize("n,count", [(2, 2), (3, 3), (5, 5)])
def test_weight_one_on_prime_cyclic_equals_endomorphisms(n, count):
    ends = oracles.group_endomorphisms(oracles.cyclic_table(n))
    assert len(ends) == count
    assert search_group_rb(cyclic(n), 1) == ends


def test_search_respects_cap():
    with pytest.raises(CapExceeded) as e:
        search_group_rb(symmetric(3), 1, max_space=10)
    assert e.value.required == 6**6


def test_derived_group_examples():
    C3 = cyclic(3)
    D = derived_group_op(C3, C3.inverses)
    assert D.table == C3.table
    S3 = symmetric(3)
    assert derived_group_op(S3, elementary_operators(S3)[0]).table == S3.table


def test_derived_group_on_all_s3_operators():
    S3 = symmetric(3)
    for B in search_group_rb(S3, 1):
        D = derived_group_op(S3, B)
        assert D.n == 6


def test_relative_group_rb_examples():
    G = symmetric(3)
    conjugation = conjugation_action(G)
    for B in search_group_rb(G, 1):
        assert check_relative_group_rb(G, G, conjugation, B)
    C3 = cyclic(3)
    triv = PhiAction.trivial(3, 3)
    assert check_relative_group_rb(C3, C3, triv, (0, 2, 1))
    assert not check_relative_group_rb(C3, C3, triv, (0, 0, 1))


def test_relative_group_rb_rejects_bad_action():
    C3 = cyclic(3)
    bad = PhiAction(((0, 2, 1), (0, 1, 2), (0, 1, 2)))
    with pytest.raises(PhiError):
        check_relative_group_rb(C3, C3, bad, (0, 0, 0))


@settings(max_examples=30)
@given(st.sampled_from(GROUP_NAMES), st.data())
def test_group_laws(name, data):
    G = named_group(name)
    a, b, c = (data.draw(st.integers(0, G.n - 1)) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == G.identity
    assert G.power(a, G.n) == G.identity


def test_direct_product_indexing():
    P = direct_product(cyclic(2), cyclic(3))
    assert P.is_abelian() and P.n == 6
    assert P.mul(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1
