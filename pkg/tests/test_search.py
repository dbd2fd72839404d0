import pytest

from rbracks.errors import CapExceeded
from rbracks.search import RULES, MapProblem, search_maps
from rbracks.constructions import dihedral

import oracles


def _problem(kind, t):
    return MapProblem(kind, t.n, t.n, (t.table,))


def test_rules_registered():
    for name in ("rb", "averaging-right", "averaging-left", "relative-rb", "relative-averaging",
                 "group-rb+1", "group-rb-1"):
        assert name in RULES


@pytest.mark.parametrize("workers", [1, 2, 4])
def test_worker_count_does_not_change_output(workers):
    t = dihedral(5)
    expected = oracles.averaging_maps(t.rows())
    assert search_maps(_problem("averaging-right", t), workers=workers) == expected


def test_prefix_pruning_agrees_with_full_check():
    t = dihedral(4)
    p = _problem("rb", t)
    found = search_maps(p)
    assert found == [B for B in oracles.all_maps(4) if p.check(B)]


def test_cap():
    with pytest.raises(CapExceeded) as e:
        search_maps(_problem("rb", dihedral(6)), max_space=1000)
    assert e.value.required == 6**6 and e.value.cap == 1000
    assert "6" in str(e.value)
