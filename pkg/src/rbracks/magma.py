"""Finite binary structures stored as Cayley tables.

Elements are the integers ``0..n-1`` and ``table[x][y]`` is ``x * y``
(right-action convention: ``S_y`` is the column ``x -> x * y``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import AxiomError, CapExceeded, PhiError, PreconditionError, TableError

DEFAULT_MAX_ISO_N = int(os.environ.get("RBRACKS_MAX_ISO_N", "16"))


@dataclass(frozen=True)
class CayleyTable:
    table: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(rows)
        if n == 0:
            raise TableError("empty table")
        for x, row in enumerate(rows):
            if len(row) != n:
                raise TableError(f"row {x} has length {len(row)}, expected {n}")
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise TableError(f"entry table[{x}][{y}] = {v} outside [0, {n})")
        object.__setattr__(self, "table", rows)

    @classmethod
    def from_function(cls, n: int, op) -> "CayleyTable":
        return cls(tuple(tuple(op(x, y) for y in range(n)) for x in range(n)))

    @property
    def n(self) -> int:
        return len(self.table)

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    @cached_property
    def array(self) -> np.ndarray:
        a = np.array(self.table, dtype=np.int64)
        a.setflags(write=False)
        return a

    def rows(self) -> list:
        return [list(r) for r in self.table]


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{list(images)} is not a bijection of [0, {len(images)})")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def then(self, other: "Permutation") -> "Permutation":
        """Apply ``self`` first, then ``other`` (``x(fg) = (xf)g``)."""
        return Permutation(tuple(other.images[v] for v in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation(tuple(inv))

    def __iter__(self):
        return iter(self.images)

    def __len__(self) -> int:
        return self.n

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def cycles(self) -> list:
        seen, out = set(), []
        for start in range(self.n):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        return tuple(sorted(len(c) for c in self.cycles()))


@dataclass(frozen=True)
class StructureReport:
    n: int
    q1: bool
    q2: bool
    q3: bool
    lq2: bool
    lq3: bool
    is_rack: bool
    is_quandle: bool
    is_left_rack: bool
    commutative: bool
    involutary: Optional[bool]
    connected: bool
    orbits: tuple

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "Q1": self.q1,
            "Q2": self.q2,
            "Q3": self.q3,
            "LQ2": self.lq2,
            "LQ3": self.lq3,
            "is_rack": self.is_rack,
            "is_quandle": self.is_quandle,
            "is_left_rack": self.is_left_rack,
            "commutative": self.commutative,
            "involutary": self.involutary,
            "connected": self.connected,
            "orbits": [list(o) for o in self.orbits],
        }


# -- axiom scans -------------------------------------------------------------

def _q3_mismatch(T: np.ndarray) -> np.ndarray:
    # (x*y)*z vs (x*z)*(y*z), indexed [x, y, z]
    lhs = T[T]
    rhs = T[T[:, None, :], T[None, :, :]]
    return lhs != rhs


def _lq3_mismatch(T: np.ndarray) -> np.ndarray:
    # z*(x*y) vs (z*x)*(z*y), indexed [z, x, y]
    lhs = T[:, T]
    rhs = T[T[:, :, None], T[:, None, :]]
    return lhs != rhs


def _columns_bijective(T: np.ndarray) -> bool:
    n = T.shape[0]
    return bool(np.all(np.sort(T, axis=0) == np.arange(n)[:, None]))


def q1_violation(t: CayleyTable) -> Optional[int]:
    for x in range(t.n):
        if t.table[x][x] != x:
            return x
    return None


def q2_violation(t: CayleyTable) -> Optional[int]:
    """Return the first ``y`` whose right translation ``S_y`` is not a bijection."""
    for y in range(t.n):
        if len({t.table[x][y] for x in range(t.n)}) != t.n:
            return y
    return None


def q3_violation(t: CayleyTable) -> Optional[tuple]:
    bad = np.argwhere(_q3_mismatch(t.array))
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def is_rack(t: CayleyTable) -> bool:
    return _columns_bijective(t.array) and not _q3_mismatch(t.array).any()


def is_quandle(t: CayleyTable) -> bool:
    return q1_violation(t) is None and is_rack(t)


def require_rack(t: CayleyTable, what: str = "table") -> None:
    y = q2_violation(t)
    if y is not None:
        raise AxiomError("Q2", (y,), f"{what}: right translation S_{y} is not a bijection")
    w = q3_violation(t)
    if w is not None:
        raise AxiomError("Q3", w, f"{what}: right self-distributivity fails at {w}")


def orbits(t: CayleyTable) -> tuple:
    """Orbits under the translations ``y -> y * x`` (connected components)."""
    parent = list(range(t.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for y in range(t.n):
        for x in range(t.n):
            a, b = find(y), find(t.table[y][x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for v in range(t.n):
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(g) for g in groups.values()))


def classify(t: CayleyTable) -> StructureReport:
    T = t.array
    n = t.n
    q1 = bool(np.all(np.diag(T) == np.arange(n)))
    q2 = _columns_bijective(T)
    q3 = not _q3_mismatch(T).any()
    lq2 = _columns_bijective(T.T)
    lq3 = not _lq3_mismatch(T).any()
    rack = q2 and q3
    involutary = None
    if rack:
        # S_x^2 = id  <=>  (y*x)*x = y
        involutary = bool(np.all(T[T, np.arange(n)[None, :]] == np.arange(n)[:, None]))
    orb = orbits(t)
    return StructureReport(
        n=n,
        q1=q1,
        q2=q2,
        q3=q3,
        lq2=lq2,
        lq3=lq3,
        is_rack=rack,
        is_quandle=rack and q1,
        is_left_rack=lq2 and lq3,
        commutative=bool(np.all(T == T.T)),
        involutary=involutary,
        connected=len(orb) == 1,
        orbits=orb,
    )


# -- inner automorphisms ------------------------------------------------------

def inner_automorphism(t: CayleyTable, x: int) -> Permutation:
    """The right translation ``S_x: y -> y * x``."""
    col = tuple(t.table[y][x] for y in range(t.n))
    if len(set(col)) != t.n:
        raise AxiomError("Q2", (x,), f"S_{x} is not a bijection")
    return Permutation(col)


def closure(generators: Iterable[Permutation], n: int) -> tuple:
    """The finite permutation group generated by ``generators``, sorted."""
    ident = Permutation.identity(n)
    gens = list(dict.fromkeys(generators))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p.then(g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return tuple(sorted(seen))


def inner_group(t: CayleyTable) -> tuple:
    """``Inn(X)``: the group generated by all ``S_x``, in lexicographic order."""
    require_rack(t)
    return closure((inner_automorphism(t, x) for x in range(t.n)), t.n)


def is_subrack(t: CayleyTable, subset: Iterable[int]) -> bool:
    Y = set(subset)
    return all(t.table[a][b] in Y for a in Y for b in Y)


def is_normal_subrack(t: CayleyTable, subset: Iterable[int]) -> bool:
    """True iff ``y * x`` lies in ``subset`` for every ``y`` in it and every ``x``.

    Raises ``PreconditionError`` when ``subset`` is not closed under ``*``,
    which is a different failure from being closed but not normal.
    """
    require_rack(t)
    Y = sorted(set(subset))
    if not Y or any(not 0 <= y < t.n for y in Y):
        raise PreconditionError(f"subset {Y} is empty or out of range")
    if not is_subrack(t, Y):
        raise PreconditionError(f"{Y} is not a subrack")
    Ys = set(Y)
    return all(t.table[y][x] in Ys for y in Y for x in range(t.n))


def is_homomorphism(f: Sequence[int], t1: CayleyTable, t2: CayleyTable) -> bool:
    f = tuple(f)
    if len(f) != t1.n or any(not 0 <= v < t2.n for v in f):
        raise PreconditionError(f"map {list(f)} does not send [0,{t1.n}) into [0,{t2.n})")
    return all(
        f[t1.table[x][y]] == t2.table[f[x]][f[y]] for x in range(t1.n) for y in range(t1.n)
    )


def is_automorphism(p: Sequence[int], t: CayleyTable) -> bool:
    return len(set(p)) == t.n and is_homomorphism(p, t, t)


# -- isomorphism search --------------------------------------------------------

def _fiber_profile(values) -> tuple:
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    return tuple(sorted(counts.values()))


def element_invariants(t: CayleyTable) -> tuple:
    """Per-element data preserved by every isomorphism of magmas.

    For racks the column profile is the cycle type of ``S_x``.
    """
    n = t.n
    orbit_size = {}
    for orb in orbits(t):
        for v in orb:
            orbit_size[v] = len(orb)
    out = []
    for x in range(n):
        col = [t.table[y][x] for y in range(n)]
        row = t.table[x]
        if len(set(col)) == n:
            col_sig = ("cyc",) + Permutation(tuple(col)).cycle_type()
        else:
            col_sig = ("fib",) + _fiber_profile(col)
        out.append(
            (
                t.table[x][x] == x,
                orbit_size[x],
                col_sig,
                _fiber_profile(row),
                sum(1 for y in range(n) if row[y] == x),
                sum(1 for y in range(n) if t.table[y][x] == y),
            )
        )
    return tuple(out)


def _iso_search(t1: CayleyTable, t2: CayleyTable, find_all: bool, max_n: int):
    if t1.n != t2.n:
        return []
    n = t1.n
    if n > max_n:
        raise CapExceeded("isomorphism search", n, max_n)
    inv1, inv2 = element_invariants(t1), element_invariants(t2)
    if sorted(inv1) != sorted(inv2):
        return []
    A, B = t1.table, t2.table
    candidates = [[y for y in range(n) if inv2[y] == inv1[x]] for x in range(n)]
    results = []

    def propagate(f, used, assigned):
        # force f(a*b) = f(a)*f(b) until nothing new is implied
        changed = True
        while changed:
            changed = False
            for a in list(assigned):
                for b in list(assigned):
                    c = A[a][b]
                    img = B[f[a]][f[b]]
                    if f[c] == -1:
                        if used[img] or inv2[img] != inv1[c]:
                            return False
                        f[c] = img
                        used[img] = True
                        assigned.append(c)
                        changed = True
                    elif f[c] != img:
                        return False
        return True

    def dfs(f, used, assigned):
        if len(assigned) == n:
            results.append(Permutation(tuple(f)))
            return not find_all
        x = f.index(-1)
        for y in candidates[x]:
            if used[y]:
                continue
            f2, used2, assigned2 = f[:], used[:], assigned[:]
            f2[x] = y
            used2[y] = True
            assigned2.append(x)
            if propagate(f2, used2, assigned2) and dfs(f2, used2, assigned2):
                return True
        return False

    dfs([-1] * n, [False] * n, [])
    return sorted(results)


def are_isomorphic(
    t1: CayleyTable, t2: CayleyTable, max_n: int = DEFAULT_MAX_ISO_N
) -> Optional[Permutation]:
    """Lexicographically least isomorphism ``f`` with ``f(x*y) = f(x)*f(y)``, or None."""
    found = _iso_search(t1, t2, False, max_n)
    return found[0] if found else None


def automorphisms(t: CayleyTable, max_n: int = DEFAULT_MAX_ISO_N) -> list:
    """All automorphisms of ``t`` in lexicographic order."""
    return _iso_search(t, t, True, max_n)


def relabel(t: CayleyTable, f: Sequence[int]) -> CayleyTable:
    """The isomorphic copy of ``t`` obtained by renaming ``x`` to ``f[x]``."""
    n, f = t.n, tuple(f)
    inv = [0] * n
    for i, v in enumerate(f):
        inv[v] = i
    return CayleyTable.from_function(n, lambda a, b: f[t.table[inv[a]][inv[b]]])


# -- actions -------------------------------------------------------------------

@dataclass(frozen=True)
class PhiAction:
    """An assignment ``a -> Phi_a`` of permutations of a target carrier.

    ``perms[a](x)`` is ``x Phi_a``.  The same storage serves left actions on
    groups, where ``perms[g](h)`` reads as ``phi_g(h)``.
    """

    perms: tuple

    def __post_init__(self):
        perms = tuple(p if isinstance(p, Permutation) else Permutation(tuple(p)) for p in self.perms)
        if not perms:
            raise ValueError("empty action")
        if len({p.n for p in perms}) != 1:
            raise ValueError("action permutations act on carriers of different sizes")
        object.__setattr__(self, "perms", perms)

    @classmethod
    def trivial(cls, m: int, n: int) -> "PhiAction":
        return cls(tuple(Permutation.identity(n) for _ in range(m)))

    @classmethod
    def inner(cls, t: CayleyTable) -> "PhiAction":
        """``Phi_a = S_a`` for ``A = X``."""
        return cls(tuple(inner_automorphism(t, a) for a in range(t.n)))

    @property
    def m(self) -> int:
        return len(self.perms)

    @property
    def target_n(self) -> int:
        return self.perms[0].n

    def act(self, a: int, x: int) -> int:
        return self.perms[a].images[x]

    def is_trivial(self) -> bool:
        return all(p.is_identity() for p in self.perms)

    def rack_violation(self, A: CayleyTable, X: CayleyTable) -> Optional[tuple]:
        """First failure of ``Phi: A -> Conj(Aut(X))`` being a rack homomorphism.

        Returns ``("aut", a)`` if ``Phi_a`` is not an automorphism of ``X``
        or ``("hom", a, b)`` if ``Phi_{a*b} != Phi_b^-1 Phi_a Phi_b``.
        """
        if self.m != A.n or self.target_n != X.n:
            return ("size", self.m, self.target_n)
        for a, p in enumerate(self.perms):
            if not is_automorphism(p.images, X):
                return ("aut", a)
        for a in range(A.n):
            for b in range(A.n):
                pb = self.perms[b]
                if self.perms[A.table[a][b]] != pb.inverse().then(self.perms[a]).then(pb):
                    return ("hom", a, b)
        return None

    def validate(self, A: CayleyTable, X: CayleyTable) -> None:
        bad = self.rack_violation(A, X)
        if bad is not None:
            raise PhiError("Phi rack homomorphism", bad[1:], f"invalid action: {bad}")
