"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` (the summary lines appear
at the end of the session) or ``python tests/test_acceptance.py``.
"""

import itertools
import sys
import time
from contextlib import contextmanager

import pytest

from rbracks import algebra as alg
from rbracks import constructions as C
from rbracks import groups
from rbracks import operators as ops
from rbracks.corpus import enumerate_racks, rack_corpus
from rbracks.magma import PhiAction, are_isomorphic, classify, is_homomorphism

import oracles
from conftest import ACCEPTANCE

# runtime ceilings in seconds, fixed up front
LIMIT_CONSTRUCTIONS = 10.0
LIMIT_DERIVED_AVERAGING = 60.0
LIMIT_S3_DERIVED_GROUPS = 5.0

CORPUS_MAX_N = 5
SMALL_GROUPS = ["C2", "C3", "C4", "C5", "C6", "S3"]


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    info = {}
    try:
        yield info
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        ACCEPTANCE[number] = f"[{number:2d}] FAIL  {title} ({elapsed:.2f}s): {type(exc).__name__}: {exc}"
        raise
    elapsed = time.perf_counter() - start
    detail = ", ".join(f"{k}={v}" for k, v in info.items())
    ACCEPTANCE[number] = f"[{number:2d}] PASS  {title} ({elapsed:.2f}s) {detail}".rstrip()


def _timed(info, limit):
    info["limit_s"] = limit


def test_01_construction_soundness():
    with criterion(1, "constructions classify as claimed") as info:
        start = time.perf_counter()
        quandles, racks = [], []
        for n in range(1, 7):
            quandles.append(C.trivial(n))
        for n in range(1, 13):
            quandles.append(C.dihedral(n))
        for name in SMALL_GROUPS:
            G = C.named_group(name)
            quandles += [C.conj(G, m) for m in (-2, -1, 1, 2, 3)]
            quandles.append(C.core(G))
            quandles += [C.alexander(G, f.images) for f in groups.automorphisms(G)]
        small = [C.trivial(1), C.trivial(2), C.dihedral(3), C.dihedral(4), C.conj(groups.symmetric(3))]
        quandles += [C.product(a, b) for a, b in itertools.product(small, repeat=2)]
        for A, X in itertools.product([C.trivial(2), C.dihedral(3), C.dihedral(4)], repeat=2):
            racks.append(C.semidirect_rack(A, X, PhiAction.trivial(A.n, X.n)))
        for X in (C.dihedral(3), C.dihedral(4), C.dihedral(5)):
            racks.append(C.semidirect_rack(X, X, PhiAction.inner(X)))
        for X in (C.trivial(2), C.trivial(3), C.dihedral(3)):
            racks.append(C.holomorph(X))
        unions = 0
        for X1, X2 in [(C.trivial(2), C.trivial(2)), (C.dihedral(3), C.trivial(2)), (C.trivial(1), C.dihedral(3))]:
            p1 = list(itertools.permutations(range(X1.n)))
            p2 = list(itertools.permutations(range(X2.n)))
            for sigma in itertools.product(p2, repeat=X1.n):
                for tau in itertools.product(p1, repeat=X2.n):
                    spec = C.UnionSpec(sigma, tau)
                    if not C.union_violations(X1, X2, spec):
                        quandles.append(C.union(X1, X2, spec))
                        unions += 1
        bad = [t.rows() for t in quandles if not classify(t).is_quandle]
        bad += [t.rows() for t in racks if not classify(t).is_rack]
        elapsed = time.perf_counter() - start
        info.update(quandles=len(quandles), racks=len(racks), unions=unions, failures=len(bad))
        _timed(info, LIMIT_CONSTRUCTIONS)
        assert not bad, bad[:3]
        assert elapsed < LIMIT_CONSTRUCTIONS, f"{elapsed:.2f}s"


def test_02_dihedral_facts():
    with criterion(2, "dihedral connectivity, commutativity, core involutarity") as info:
        for n in range(1, 13):
            r = classify(C.dihedral(n))
            assert r.connected == (n % 2 == 1), n
            assert r.involutary, n
        assert classify(C.dihedral(3)).commutative
        names = [f"C{n}" for n in range(1, 13)] + ["S3", "C2xC2", "C2xC4", "C2xC6", "C3xC3", "C2xC2xC2"]
        for name in names:
            assert classify(C.core(C.named_group(name))).involutary, name
        info.update(dihedral_n="1..12", core_groups=len(names))


def test_03_r3_censuses_match_oracle():
    with criterion(3, "R_3 averaging census and R_3/T_3 RB censuses match straight loops") as info:
        R3, T3 = C.dihedral(3), C.trivial(3)
        avg = [b.map for b in ops.census(R3, "averaging-right").operators]
        assert avg == oracles.averaging_maps(R3.rows())
        assert avg == [(0, 0, 0), (0, 1, 2), (1, 1, 1), (2, 2, 2)]
        for t in (R3, T3):
            assert [b.map for b in ops.census(t, "rb").operators] == oracles.rb_maps(t.rows())
        info.update(
            averaging_R3=len(avg),
            rb_R3=len(oracles.rb_maps(R3.rows())),
            rb_T3=len(oracles.rb_maps(T3.rows())),
        )


def test_04_derived_averaging_structure():
    with criterion(4, "derived structure of averaging operators on racks of size <= 5") as info:
        start = time.perf_counter()
        checked, failures = 0, []
        for name, t in rack_corpus(CORPUS_MAX_N):
            for b in ops.census(t, "averaging-right").operators:
                rep = ops.derived_averaging(t, b.map)
                checked += 1
                if not rep.ok:
                    failures.append((name, b.map))
        elapsed = time.perf_counter() - start
        info.update(racks=len(rack_corpus(CORPUS_MAX_N)), operators=checked, failures=len(failures))
        _timed(info, LIMIT_DERIVED_AVERAGING)
        assert not failures, failures[:5]
        assert elapsed < LIMIT_DERIVED_AVERAGING, f"{elapsed:.2f}s"


def test_05_graph_criterion():
    with criterion(5, "relative averaging iff graph is a subrack (inner action, size <= 4)") as info:
        maps = mismatches = 0
        for _, t in rack_corpus(4):
            inner = PhiAction.inner(t)
            for B in itertools.product(range(t.n), repeat=t.n):
                maps += 1
                pointwise = ops.averaging_violation(t, B) is None
                if pointwise != ops.graph_is_subrack(t, t, inner, B):
                    mismatches += 1
        info.update(maps=maps, mismatches=mismatches)
        assert mismatches == 0


def test_06_lambda_minus_one():
    with criterion(6, "set-map extensions are ARB only for weight -1 with a condition system") as info:
        scanned = arb = exceptions = 0
        for t in enumerate_racks(3):
            for B in itertools.product(range(3), repeat=3):
                scanned += 1
                R = alg.extend_operator(B, alg.QQ)
                rep = alg.condition_systems(t, B, alg.QQ)
                by_pair = rep.pointwise
                by_system = rep.first or rep.second
                minus_one = alg.is_algebraic_rb(R, -1, t)
                arb += minus_one
                if minus_one != by_pair or minus_one != by_system:
                    exceptions += 1
                if alg.is_algebraic_rb(R, 0, t) or alg.is_algebraic_rb(R, 1, t):
                    exceptions += 1
        info.update(maps=scanned, weight_minus_one=arb, exceptions=exceptions)
        assert exceptions == 0


def test_07_averaging_extension():
    with criterion(7, "averaging operators extend to algebra averaging over Q and F_7") as info:
        checked = 0
        for _, t in rack_corpus(CORPUS_MAX_N):
            for b in ops.census(t, "averaging-right").operators:
                for F in (alg.QQ, alg.GF(7)):
                    assert alg.averaging_extension_check(
                        t, b.map, F, alg.DEFAULT_SEED, alg.RANDOM_PAIRS
                    )
                    checked += 1
        info.update(checks=checked, random_pairs=alg.RANDOM_PAIRS, seed=alg.DEFAULT_SEED)


def test_08_identity_is_weight_minus_one():
    with criterion(8, "identity is algebraic RB of weight -1 on every corpus rack") as info:
        racks = 0
        for _, t in rack_corpus(CORPUS_MAX_N):
            for F in (alg.QQ, alg.GF(7)):
                assert alg.is_algebraic_rb(alg.extend_operator(range(t.n), F), -1, t)
            racks += 1
        info.update(racks=racks)


def test_09_group_rb():
    with criterion(9, "weight-1 censuses on C_2, C_3, C_5 and derived groups on S_3") as info:
        for n, expected in ((2, 2), (3, 3), (5, 5)):
            ends = oracles.group_endomorphisms(oracles.cyclic_table(n))
            found = groups.search_group_rb(groups.cyclic(n), 1)
            assert found == ends and len(found) == expected
            elementary = set(groups.elementary_operators(groups.cyclic(n)))
            info[f"C{n}_non_elementary"] = sum(b not in elementary for b in found)
        start = time.perf_counter()
        S3 = groups.symmetric(3)
        found = groups.search_group_rb(S3, 1)
        for B in found:
            D = groups.derived_group_op(S3, B)
            assert groups.check_group_rb(D, B, 1).holds
            assert groups.is_group_homomorphism(B, D, S3)
        elapsed = time.perf_counter() - start
        info.update(S3_operators=len(found))
        _timed(info, LIMIT_S3_DERIVED_GROUPS)
        assert elapsed < LIMIT_S3_DERIVED_GROUPS, f"{elapsed:.2f}s"


def test_10_groupoid_hypotheses_and_multiquandles():
    with criterion(10, "hypotheses imply groupoid status; centrality matches distributivity") as info:
        failures, pairs, disagreements = [], 0, 0
        for name in ("S3", "C2xC2"):
            G = C.named_group(name)
            found = groups.search_group_rb(G, 1)
            for B in found:
                rep = C.constr_hypotheses(G, B)
                failures += [(name, B, f) for f in rep.failures]
            for Bs, Bt in itertools.product(found, repeat=2):
                pairs += 1
                tables = [C.b_conjugation(G, Bs), C.b_conjugation(G, Bt)]
                if C.conj_multiquandle_by_center(G, [Bs, Bt]) != C.is_multiquandle(tables):
                    disagreements += 1
        info.update(implication_failures=len(failures), pairs=pairs, disagreements=disagreements)
        assert not failures, failures[:5]
        assert disagreements == 0


def test_11_union_reconstruction():
    with criterion(11, "T_2 glued to T_2 by swaps is isomorphic to R_4") as info:
        swap = (1, 0)
        U = C.union(C.trivial(2), C.trivial(2), C.UnionSpec((swap, swap), (swap, swap)))
        f = are_isomorphic(U, C.dihedral(4))
        assert f is not None
        assert is_homomorphism(f.images, U, C.dihedral(4))
        assert f.images in oracles.isomorphisms(U.rows(), C.dihedral(4).rows())
        info.update(isomorphism=list(f.images))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
