"""Exhaustive search over maps ``[0, n) -> [0, m)`` defined by pairwise identities.

Candidates are explored in lexicographic order of their image sequences by
backtracking: after fixing ``B[0..k]`` every pair ``(x, y)`` whose identity
only touches fixed values is checked, so a failing prefix cuts its whole
subtree.  The space is split on a short prefix for parallel workers and the
pieces are concatenated in prefix order, so the output never depends on the
worker count.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import CapExceeded

DEFAULT_MAX_SPACE = int(os.environ.get("RBRACKS_MAX_SPACE", str(10**8)))

U = -1  # unassigned


# Each rule returns True/False, or None while a needed value is unassigned.

def _rack_rb(d, B, x, y):
    T = d[0]
    bx, by = B[x], B[y]
    if bx == U or by == U:
        return None
    w = B[T[T[x][by]][y]]
    return None if w == U else T[bx][by] == w


def _averaging_right(d, B, x, y):
    T = d[0]
    bx, by = B[x], B[y]
    if bx == U or by == U:
        return None
    w = B[T[x][by]]
    return None if w == U else T[bx][by] == w


def _averaging_left(d, B, x, y):
    T = d[0]
    bx, by = B[x], B[y]
    if bx == U or by == U:
        return None
    w = B[T[bx][y]]
    return None if w == U else T[bx][by] == w


def _relative_rb(d, B, x, y):
    X, A, P = d
    bx, by = B[x], B[y]
    if bx == U or by == U:
        return None
    w = B[X[P[by][x]][y]]
    return None if w == U else A[bx][by] == w


def _relative_averaging(d, B, x, y):
    X, A, P = d
    bx, by = B[x], B[y]
    if bx == U or by == U:
        return None
    w = B[P[by][x]]
    return None if w == U else A[bx][by] == w


def _group_rb_plus(d, B, g, h):
    G, inv = d
    bg, bh = B[g], B[h]
    if bg == U or bh == U:
        return None
    w = B[G[G[G[g][bg]][h]][inv[bg]]]
    return None if w == U else G[bg][bh] == w


def _group_rb_minus(d, B, g, h):
    G, inv = d
    bg, bh = B[g], B[h]
    if bg == U or bh == U:
        return None
    w = B[G[G[G[bg][h]][inv[bg]]][g]]
    return None if w == U else G[bg][bh] == w


RULES = {
    "rb": _rack_rb,
    "averaging-right": _averaging_right,
    "averaging-left": _averaging_left,
    "relative-rb": _relative_rb,
    "relative-averaging": _relative_averaging,
    "group-rb+1": _group_rb_plus,
    "group-rb-1": _group_rb_minus,
}


@dataclass(frozen=True)
class MapProblem:
    """A census task: the rule name, sizes, and plain-tuple data it reads."""

    rule: str
    n: int
    m: int
    data: tuple

    def check(self, B) -> bool:
        rule = RULES[self.rule]
        return all(rule(self.data, B, x, y) for x in range(self.n) for y in range(self.n))

    def prefix_ok(self, B, k: int) -> bool:
        rule = RULES[self.rule]
        d = self.data
        for x in range(k + 1):
            for y in range(k + 1):
                if rule(d, B, x, y) is False:
                    return False
        return True


def _extend(problem: MapProblem, prefix: tuple) -> list:
    n, m = problem.n, problem.m
    B = list(prefix) + [U] * (n - len(prefix))
    out = []
    if len(prefix) and not problem.prefix_ok(B, len(prefix) - 1):
        return out

    def rec(k):
        if k == n:
            out.append(tuple(B))
            return
        for v in range(m):
            B[k] = v
            if problem.prefix_ok(B, k):
                rec(k + 1)
        B[k] = U

    rec(len(prefix))
    return out


def _split_depth(n: int, m: int, workers: int) -> int:
    depth = 0
    while depth < n and m**depth < 4 * workers:
        depth += 1
    return depth


def search_maps(problem: MapProblem, workers: int = 1, max_space: int = DEFAULT_MAX_SPACE) -> list:
    """All maps satisfying ``problem``, sorted lexicographically."""
    space = problem.m**problem.n
    if space > max_space:
        raise CapExceeded(f"{problem.rule} census on {problem.n} points", space, max_space)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1:
        return _extend(problem, ())
    depth = _split_depth(problem.n, problem.m, workers)
    prefixes = list(itertools.product(range(problem.m), repeat=depth))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_extend, itertools.repeat(problem), prefixes)
        return [B for part in parts for B in part]
