import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rbracks import constructions as C
from rbracks.errors import AxiomError, PhiError, PreconditionError
from rbracks.groups import automorphisms as group_automorphisms, cyclic, elementary_operators, search_group_rb, symmetric
from rbracks.magma import PhiAction, are_isomorphic, classify, is_quandle, is_rack

import oracles

SWAP = (1, 0)


def test_basic_tables():
    assert C.dihedral(3).rows() == [[0, 2, 1], [2, 1, 0], [1, 0, 2]]
    assert C.core(cyclic(2)) == C.trivial(2)
    assert C.trivial(3).rows() == [[0, 0, 0], [1, 1, 1], [2, 2, 2]]


def test_conj_s3_orbits_are_conjugacy_classes():
    S3 = symmetric(3)
    r = classify(C.conj(S3))
    assert r.is_quandle
    assert sorted(len(o) for o in r.orbits) == [1, 2, 3]


@pytest.mark.parametrize("name", ["C2", "C3", "C4", "C5", "C6", "S3", "C2xC2"])
def test_group_quandles(name):
    G = C.named_group(name)
    for m in (-1, 1, 2, 3):
        assert is_quandle(C.conj(G, m))
    assert is_quandle(C.core(G))
    for f in group_automorphisms(G):
        assert is_quandle(C.alexander(G, f.images))


def test_conj_formula():
    S3 = symmetric(3)
    t = C.conj(S3, 2)
    for a, b in itertools.product(range(6), repeat=2):
        b2 = S3.power(b, 2)
        assert t(a, b) == S3.mul(S3.inv(b2), a, b2)


def test_alexander_rejects_non_automorphism():
    with pytest.raises(PreconditionError):
        C.alexander(cyclic(3), (0, 0, 0))


def test_products():
    t = C.dihedral(4)
    assert are_isomorphic(C.product(C.trivial(1), t), t) is not None
    P = C.product(C.dihedral(3), C.trivial(2))
    r = classify(P)
    assert r.n == 6 and r.is_quandle and not r.connected
    assert C.product(C.dihedral(2), C.dihedral(2)) == C.trivial(4)


def test_semidirect_identity_action():
    A, X = C.dihedral(3), C.trivial(2)
    t = C.semidirect_rack(A, X, PhiAction.trivial(3, 2))
    assert is_rack(t)
    for a, x, b, y in itertools.product(range(3), range(2), range(3), range(2)):
        assert t(a * 2 + x, b * 2 + y) == A(a, b) * 2 + x


def test_semidirect_inner_action_on_dihedral3():
    X = C.dihedral(3)
    t = C.semidirect_rack(X, X, PhiAction.inner(X))
    r = classify(t)
    assert r.n == 9 and r.q2 and r.q3


def test_semidirect_rejects_bad_action():
    X = C.dihedral(3)
    bad = PhiAction(((0, 2, 1), (0, 1, 2), (0, 1, 2)))
    with pytest.raises(PhiError) as e:
        C.semidirect_rack(X, X, bad)
    a, b = e.value.witness[-2:]
    assert 0 <= a < 3 and 0 <= b < 3


def test_holomorphs():
    assert C.holomorph(C.trivial(1)) == C.trivial(1)
    assert C.holomorph(C.trivial(2)).n == 4 and is_rack(C.holomorph(C.trivial(2)))
    group, auts = C.aut_group(C.dihedral(3))
    assert len(auts) == 6
    H = C.holomorph(C.dihedral(3))
    assert H.n == 18 and is_rack(H)


def test_union_examples():
    assert C.union(C.trivial(1), C.trivial(1), C.UnionSpec.trivial(1, 1)) == C.trivial(2)
    spec = C.UnionSpec((SWAP, SWAP), (SWAP, SWAP))
    U = C.union(C.trivial(2), C.trivial(2), spec)
    f = are_isomorphic(U, C.dihedral(4))
    assert f is not None
    assert f.images in oracles.isomorphisms(U.rows(), C.dihedral(4).rows())


def test_union_rejects_failed_condition():
    bad = C.UnionSpec((SWAP,) * 3, ((1, 0, 2),) * 2)
    assert [name for name, _ in C.union_violations(C.dihedral(3), C.trivial(2), bad)] == ["condition-i"]
    with pytest.raises(AxiomError):
        C.union(C.dihedral(3), C.trivial(2), bad)
    mixed = C.UnionSpec(((0, 1), SWAP), ((0, 1), (0, 1)))
    assert C.union_violations(C.trivial(2), C.trivial(2), mixed) == []


def _all_specs(n1, n2):
    p1 = list(itertools.permutations(range(n1)))
    p2 = list(itertools.permutations(range(n2)))
    for sigma in itertools.product(p2, repeat=n1):
        for tau in itertools.product(p1, repeat=n2):
            yield C.UnionSpec(sigma, tau)


@pytest.mark.parametrize("X1,X2", [(C.trivial(2), C.trivial(2)), (C.dihedral(3), C.trivial(1)), (C.trivial(1), C.dihedral(3)), (C.trivial(2), C.dihedral(3))])
def test_union_condition_is_exactly_the_rack_axioms(X1, X2):
    for spec in _all_specs(X1.n, X2.n):
        ok = not C.union_violations(X1, X2, spec)
        assert ok == oracles.is_rack(C.union_table(X1, X2, spec).rows())


def test_b_groupoid_examples():
    for name in ("S3", "C4", "C2xC2"):
        G = C.named_group(name)
        B0, Binv = elementary_operators(G)
        assert C.b_conjugation(G, Binv) == C.conj(G)
        assert C.b_conjugation(G, B0) == C.trivial(G.n)
        core0 = C.b_core(G, B0)
        assert all(core0(x, y) == G.inv(x) for x in range(G.n) for y in range(G.n))
        assert is_rack(core0)
        assert is_quandle(core0) == (name == "C2xC2")


def test_hypotheses_examples():
    C4 = C.named_group("C4")
    rep = C.constr_hypotheses(C4, elementary_operators(C4)[0])
    assert rep.h1 and rep.h2 and rep.conj_is_quandle
    V = C.named_group("C2xC2")
    rep = C.constr_hypotheses(V, elementary_operators(V)[0])
    assert rep.h3 and rep.h4 and rep.core_is_quandle
    S3 = symmetric(3)
    rep = C.constr_hypotheses(S3, elementary_operators(S3)[0])
    assert not rep.h1 and rep.conj_is_rack
    assert rep.failures == ()


def test_hypotheses_need_rb_operator():
    with pytest.raises(PreconditionError):
        C.constr_hypotheses(cyclic(3), (0, 0, 1))


def test_multi_op_examples():
    R5 = C.dihedral(5)
    assert C.multi_op([R5], 0, 0) == C.trivial(5)
    assert C.is_multiquandle([R5])
    with pytest.raises(PreconditionError):
        C.multi_op([R5, C.dihedral(3)], 0, 1)


@pytest.mark.parametrize("name", ["S3", "C4", "C2xC2", "C6"])
def test_multiquandle_closed_forms_agree_with_direct_check(name):
    G = C.named_group(name)
    found = search_group_rb(G, 1)
    for Bs, Bt in itertools.product(found[:6], repeat=2):
        family = [Bs, Bt]
        conj_tables = [C.b_conjugation(G, B) for B in family]
        if all(is_quandle(t) for t in conj_tables):
            assert C.conj_multiquandle_by_center(G, family) == C.is_multiquandle(conj_tables)
        core_tables = [C.b_core(G, B) for B in family]
        assert C.core_multiquandle_by_identity(G, family) == (
            C.multiquandle_violation(core_tables) is None
        )


@settings(max_examples=25)
@given(st.integers(1, 12))
def test_dihedral_is_core_of_cyclic(n):
    assert C.dihedral(n) == C.core(cyclic(n))


def test_named_group_errors():
    with pytest.raises(ValueError):
        C.named_group("Q8")
    assert C.named_group("C2xC3").n == 6
