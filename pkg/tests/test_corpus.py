import itertools

import pytest

from rbracks.constructions import dihedral, trivial
from rbracks.corpus import canonical_form, enumerate_racks, rack_corpus
from rbracks.magma import are_isomorphic, is_quandle, is_rack, relabel

import oracles

# isomorphism-class counts of racks and quandles on 1..4 points
RACKS = {1: 1, 2: 2, 3: 6, 4: 19}
QUANDLES = {1: 1, 2: 1, 3: 3, 4: 7}


def _brute_force_classes(n, quandles_only):
    classes = []
    for cells in itertools.product(range(n), repeat=n * n):
        rows = [list(cells[i * n:(i + 1) * n]) for i in range(n)]
        ok = oracles.is_quandle(rows) if quandles_only else oracles.is_rack(rows)
        if ok and not any(oracles.isomorphisms(rows, c) for c in classes):
            classes.append(rows)
    return len(classes)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_counts_match_brute_force(n):
    assert len(enumerate_racks(n)) == _brute_force_classes(n, False) == RACKS[n]
    assert len(enumerate_racks(n, True)) == _brute_force_classes(n, True) == QUANDLES[n]


def test_counts_n4():
    assert len(enumerate_racks(4)) == RACKS[4]
    assert len(enumerate_racks(4, True)) == QUANDLES[4]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_representatives_are_pairwise_distinct_racks(n):
    reps = enumerate_racks(n)
    assert all(is_rack(t) for t in reps)
    for a, b in itertools.combinations(reps, 2):
        assert are_isomorphic(a, b) is None
    assert sum(is_quandle(t) for t in reps) == QUANDLES[n]


def test_canonical_form_is_invariant():
    t = dihedral(5)
    for f in itertools.islice(itertools.permutations(range(5)), 0, 120, 7):
        assert canonical_form(relabel(t, f)) == canonical_form(t)
    assert canonical_form(trivial(3)) != canonical_form(dihedral(3))


def test_corpus_names():
    names = [name for name, _ in rack_corpus(3)]
    assert names[0] == "rack1_0" and len(names) == 1 + 2 + 6
