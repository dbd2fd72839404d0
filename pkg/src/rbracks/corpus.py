"""Enumeration of small racks up to isomorphism, used as a test corpus."""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .magma import CayleyTable


def canonical_form(t: CayleyTable) -> tuple:
    """Lexicographically least relabelled table; equal iff the tables are isomorphic."""
    n = t.n
    T = t.array
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    inv = np.argsort(perms, axis=1)
    # relabelled[k][a][b] = f(T[f^-1(a)][f^-1(b)]) with f = perms[k]
    rows = inv[:, :, None]
    cols = inv[:, None, :]
    relabelled = np.take_along_axis(perms, T[rows, cols].reshape(len(perms), -1), axis=1)
    best = min(map(tuple, relabelled.tolist()))
    return tuple(best[i * n:(i + 1) * n] for i in range(n))


def _labelled_racks(n: int, quandles_only: bool):
    """Yield every rack on ``[0, n)`` as a tuple of right translations."""
    perms = list(itertools.permutations(range(n)))
    cols = [None] * n

    def consistent(k):
        # S_{y*z} = S_z^-1 S_y S_z for every assigned triple involving column k
        for y in range(k + 1):
            for z in range(k + 1):
                pz = cols[z]
                w = pz[y]
                if w > k or k not in (y, z, w):
                    continue
                py, pw = cols[y], cols[w]
                for x in range(n):
                    if pw[pz[x]] != pz[py[x]]:
                        return False
        return True

    def rec(k):
        if k == n:
            yield tuple(cols)
            return
        for p in perms:
            if quandles_only and p[k] != k:
                continue
            cols[k] = p
            if consistent(k):
                yield from rec(k + 1)
        cols[k] = None

    yield from rec(0)


@lru_cache(maxsize=None)
def enumerate_racks(n: int, quandles_only: bool = False) -> tuple:
    """One representative (its canonical form) per isomorphism class, sorted."""
    seen = set()
    for cs in _labelled_racks(n, quandles_only):
        t = CayleyTable(tuple(tuple(cs[y][x] for y in range(n)) for x in range(n)))
        seen.add(canonical_form(t))
    return tuple(CayleyTable(c) for c in sorted(seen))


def rack_corpus(max_n: int) -> list:
    """``(name, table)`` for every rack of size ``1..max_n`` up to isomorphism."""
    out = []
    for n in range(1, max_n + 1):
        for i, t in enumerate(enumerate_racks(n)):
            out.append((f"rack{n}_{i}", t))
    return out
