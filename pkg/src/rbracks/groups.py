"""Finite groups as validated Cayley tables, and Rota-Baxter operators on them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import AxiomError, ClaimFalsified, PhiError, PreconditionError
from .magma import DEFAULT_MAX_ISO_N, CayleyTable, PhiAction, Permutation
from .magma import automorphisms as _table_automorphisms
from .search import DEFAULT_MAX_SPACE, MapProblem, search_maps


class GroupAxiomError(AxiomError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    table: CayleyTable
    identity: int
    inverses: tuple

    @property
    def n(self) -> int:
        return self.table.n

    def mul(self, *xs: int) -> int:
        T = self.table.table
        acc = xs[0]
        for x in xs[1:]:
            acc = T[acc][x]
        return acc

    def inv(self, x: int) -> int:
        return self.inverses[x]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverses[x], -k
        acc = self.identity
        for _ in range(k):
            acc = self.table.table[acc][x]
        return acc

    def is_abelian(self) -> bool:
        T = self.table.table
        return all(T[a][b] == T[b][a] for a in range(self.n) for b in range(a))


def validate_group(t: CayleyTable) -> FiniteGroup:
    """Check the group axioms, raising ``GroupAxiomError`` with a witness."""
    T, n = t.table, t.n
    ids = [e for e in range(n) if all(T[e][x] == x and T[x][e] == x for x in range(n))]
    if not ids:
        raise GroupAxiomError("identity", (), "no two-sided identity element")
    e = ids[0]
    inverses = []
    for x in range(n):
        inv = [y for y in range(n) if T[x][y] == e and T[y][x] == e]
        if not inv:
            raise GroupAxiomError("inverse", (x,), f"element {x} has no inverse")
        inverses.append(inv[0])
    for a, b, c in itertools.product(range(n), repeat=3):
        if T[T[a][b]][c] != T[a][T[b][c]]:
            raise GroupAxiomError("associativity", (a, b, c))
    return FiniteGroup(t, e, tuple(inverses))


# -- standard groups -------------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    """``C_n`` as addition mod ``n``."""
    return validate_group(CayleyTable.from_function(n, lambda a, b: (a + b) % n))


def permutation_group(perms: Sequence[Permutation]) -> FiniteGroup:
    """The group on a closed list of permutations; ``perms[i] * perms[j]`` means i then j.

    Element ``i`` of the result is ``perms[i]``.
    """
    perms = list(perms)
    index = {p: i for i, p in enumerate(perms)}
    if len(index) != len(perms):
        raise ValueError("duplicate permutations")
    try:
        rows = [[index[p.then(q)] for q in perms] for p in perms]
    except KeyError:
        raise ValueError("permutations are not closed under composition") from None
    return validate_group(CayleyTable(rows))


def symmetric(k: int) -> FiniteGroup:
    """``S_k`` with elements in lexicographic order of their image tuples."""
    return permutation_group([Permutation(p) for p in itertools.permutations(range(k))])


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """``G x H`` with ``(g, h)`` at index ``g * |H| + h``."""
    m = H.n

    def op(a, b):
        return G.mul(a // m, b // m) * m + H.mul(a % m, b % m)

    return validate_group(CayleyTable.from_function(G.n * m, op))


# -- structure -------------------------------------------------------------------

def centralizer(G: FiniteGroup, a: int) -> tuple:
    T = G.table.table
    return tuple(x for x in range(G.n) if T[x][a] == T[a][x])


def center(G: FiniteGroup) -> tuple:
    T = G.table.table
    return tuple(x for x in range(G.n) if all(T[x][y] == T[y][x] for y in range(G.n)))


def automorphisms(G: FiniteGroup, max_n: int = DEFAULT_MAX_ISO_N) -> list:
    return _table_automorphisms(G.table, max_n)


def is_group_homomorphism(f: Sequence[int], G: FiniteGroup, H: FiniteGroup) -> bool:
    return all(f[G.mul(a, b)] == H.mul(f[a], f[b]) for a in range(G.n) for b in range(G.n))


# -- Rota-Baxter operators of weight +-1 --------------------------------------------

@dataclass(frozen=True)
class GroupRBReport:
    weight: int
    holds: bool
    witness: Optional[tuple] = None


def _rb_rhs_arg(G: FiniteGroup, B, g: int, h: int, weight: int) -> int:
    bg = B[g]
    if weight == 1:
        return G.mul(g, bg, h, G.inv(bg))
    return G.mul(bg, h, G.inv(bg), g)


def check_group_rb(G: FiniteGroup, B: Sequence[int], weight: int) -> GroupRBReport:
    """Check ``B(g)B(h) = B(g B(g) h B(g)^-1)`` (weight 1) or
    ``B(g)B(h) = B(B(g) h B(g)^-1 g)`` (weight -1) on all pairs."""
    if weight not in (1, -1):
        raise ValueError("weight must be +1 or -1")
    B = tuple(B)
    if len(B) != G.n or any(not 0 <= v < G.n for v in B):
        raise PreconditionError("operator does not map the carrier to itself")
    for g in range(G.n):
        for h in range(G.n):
            if G.mul(B[g], B[h]) != B[_rb_rhs_arg(G, B, g, h, weight)]:
                return GroupRBReport(weight, False, (g, h))
    return GroupRBReport(weight, True)


def elementary_operators(G: FiniteGroup) -> tuple:
    """``B_[0]`` (constant identity) and ``B_[-1]`` (inversion)."""
    return (tuple(G.identity for _ in range(G.n)), tuple(G.inverses))


def search_group_rb(
    G: FiniteGroup, weight: int, workers: int = 1, max_space: int = DEFAULT_MAX_SPACE
) -> list:
    """Every RB-operator of the given weight on ``G``, lexicographically sorted."""
    if weight not in (1, -1):
        raise ValueError("weight must be +1 or -1")
    rule = "group-rb+1" if weight == 1 else "group-rb-1"
    problem = MapProblem(rule, G.n, G.n, (G.table.table, G.inverses))
    return search_maps(problem, workers=workers, max_space=max_space)


def derived_group_op(G: FiniteGroup, B: Sequence[int]) -> FiniteGroup:
    """The group ``(G, o)`` with ``g o h = g B(g) h B(g)^-1``.

    Also confirms that ``B`` is a weight-1 RB-operator on ``(G, o)`` and a
    homomorphism ``(G, o) -> (G, .)``; a failure raises ``ClaimFalsified``.
    """
    B = tuple(B)
    if not check_group_rb(G, B, 1).holds:
        raise PreconditionError("B is not a weight-1 RB-operator")
    t = CayleyTable.from_function(G.n, lambda g, h: G.mul(g, B[g], h, G.inv(B[g])))
    try:
        D = validate_group(t)
    except GroupAxiomError as exc:
        raise ClaimFalsified("derived operation is a group", exc.witness) from exc
    rep = check_group_rb(D, B, 1)
    if not rep.holds:
        raise ClaimFalsified("B is an RB-operator on the derived group", rep.witness)
    if not is_group_homomorphism(B, D, G):
        raise ClaimFalsified("B is a homomorphism from the derived group")
    return D


def check_relative_group_rb(
    H: FiniteGroup, G: FiniteGroup, phi: PhiAction, B: Sequence[int]
) -> bool:
    """``B(h1)B(h2) = B(h1 phi_{B(h1)}(h2))`` where ``phi_g(h) = phi.perms[g](h)``.

    ``phi`` must be a homomorphism ``G -> Aut(H)`` under composition of maps.
    """
    if phi.m != G.n or phi.target_n != H.n:
        raise PhiError("size", (phi.m, phi.target_n), "action sizes do not match the groups")
    for g, p in enumerate(phi.perms):
        if not is_group_homomorphism(p.images, H, H):
            raise PhiError("automorphism", (g,), f"phi_{g} is not an automorphism of H")
    for g1 in range(G.n):
        for g2 in range(G.n):
            composed = phi.perms[g2].then(phi.perms[g1])  # phi_g1 after phi_g2
            if phi.perms[G.mul(g1, g2)] != composed:
                raise PhiError("homomorphism", (g1, g2), f"phi_{{{g1}*{g2}}} != phi_{g1} phi_{g2}")
    B = tuple(B)
    if len(B) != H.n or any(not 0 <= v < G.n for v in B):
        raise PreconditionError("B does not map H into G")
    for h1 in range(H.n):
        for h2 in range(H.n):
            if G.mul(B[h1], B[h2]) != B[H.mul(h1, phi.act(B[h1], h2))]:
                return False
    return True


def conjugation_action(G: FiniteGroup) -> PhiAction:
    """``phi_g(h) = g h g^-1``."""
    return PhiAction(
        tuple(Permutation(tuple(G.mul(g, h, G.inv(g)) for h in range(G.n))) for g in range(G.n))
    )
