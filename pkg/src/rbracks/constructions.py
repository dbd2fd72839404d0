"""Recipes that build racks and quandles from groups, actions and other racks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import AxiomError, ClaimFalsified, PreconditionError
from .groups import FiniteGroup, center, centralizer, check_group_rb, cyclic, permutation_group
from .magma import (
    DEFAULT_MAX_ISO_N,
    CayleyTable,
    Permutation,
    PhiAction,
    automorphisms,
    classify,
    is_automorphism,
    is_rack,
    require_rack,
)

# -- quandles from groups --------------------------------------------------------


def trivial(n: int) -> CayleyTable:
    """``T_n``: ``x * y = x``."""
    if n < 1:
        raise ValueError("n must be positive")
    return CayleyTable.from_function(n, lambda x, y: x)


def dihedral(n: int) -> CayleyTable:
    """``R_n``: ``x * y = 2y - x mod n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return CayleyTable.from_function(n, lambda x, y: (2 * y - x) % n)


def conj(G: FiniteGroup, m: int = 1) -> CayleyTable:
    """``Conj_m(G)``: ``a * b = b^-m a b^m``."""
    return CayleyTable.from_function(G.n, lambda a, b: G.mul(G.power(b, -m), a, G.power(b, m)))


def core(G: FiniteGroup) -> CayleyTable:
    """``Core(G)``: ``a * b = b a^-1 b``."""
    return CayleyTable.from_function(G.n, lambda a, b: G.mul(b, G.inv(a), b))


def alexander(G: FiniteGroup, phi: Sequence[int]) -> CayleyTable:
    """``Alex(G, phi)``: ``a * b = phi(a b^-1) b`` for an automorphism ``phi``."""
    phi = tuple(phi)
    if len(phi) != G.n or not is_automorphism(phi, G.table):
        raise PreconditionError(f"{list(phi)} is not an automorphism of the group")
    return CayleyTable.from_function(G.n, lambda a, b: G.mul(phi[G.mul(a, G.inv(b))], b))


# -- products --------------------------------------------------------------------


def product(t1: CayleyTable, t2: CayleyTable) -> CayleyTable:
    """Componentwise product; ``(i, j)`` sits at index ``i * n2 + j``."""
    n2 = t2.n

    def op(a, b):
        return t1(a // n2, b // n2) * n2 + t2(a % n2, b % n2)

    return CayleyTable.from_function(t1.n * n2, op)


def semidirect_rack(A: CayleyTable, X: CayleyTable, phi: PhiAction) -> CayleyTable:
    """``A x_Phi X`` with ``(a, x) o (b, y) = (a * b, x Phi_b)``; ``(a, x)`` at ``a * |X| + x``.

    Whether the result is a quandle is left to ``classify``; it is one
    exactly when both factors are quandles and every ``Phi_a`` is trivial.
    """
    require_rack(A, "A")
    require_rack(X, "X")
    phi.validate(A, X)
    nx = X.n
    t = CayleyTable.from_function(
        A.n * nx, lambda u, v: A(u // nx, v // nx) * nx + phi.act(v // nx, u % nx)
    )
    if not is_rack(t):
        raise ClaimFalsified("semidirect product of racks is a rack")
    return t


def aut_group(X: CayleyTable, max_n: int = DEFAULT_MAX_ISO_N):
    """``Aut(X)`` as a group; element ``i`` is the ``i``-th automorphism in lex order."""
    auts = automorphisms(X, max_n)
    return permutation_group(auts), auts


def holomorph(X: CayleyTable, max_n: int = DEFAULT_MAX_ISO_N) -> CayleyTable:
    """``Hol(X) = Conj(Aut(X)) x_id X``."""
    require_rack(X)
    G, auts = aut_group(X, max_n)
    return semidirect_rack(conj(G, 1), X, PhiAction(tuple(auts)))


# -- unions ------------------------------------------------------------------------


@dataclass(frozen=True)
class UnionSpec:
    """``sigma[y]`` permutes ``X_2`` for ``y`` in ``X_1``; ``tau[z]`` permutes ``X_1``."""

    sigma: tuple
    tau: tuple

    def __post_init__(self):
        object.__setattr__(self, "sigma", tuple(_perm(p) for p in self.sigma))
        object.__setattr__(self, "tau", tuple(_perm(p) for p in self.tau))

    @classmethod
    def trivial(cls, n1: int, n2: int) -> "UnionSpec":
        return cls(
            tuple(Permutation.identity(n2) for _ in range(n1)),
            tuple(Permutation.identity(n1) for _ in range(n2)),
        )


def _perm(p):
    return p if isinstance(p, Permutation) else Permutation(tuple(p))


def _conj_minus_one_violation(t: CayleyTable, images: tuple) -> Optional[tuple]:
    # images[x] must satisfy images[x*y] = images[y] o images[x] o images[y]^-1
    for x in range(t.n):
        for y in range(t.n):
            py = images[y]
            expect = py.inverse().then(images[x]).then(py)
            if images[t(x, y)] != expect:
                return (x, y)
    return None


def _first_triple(a, b, c, bad):
    for x in range(a):
        for y in range(b):
            for z in range(c):
                if bad(x, y, z):
                    return (x, y, z)
    return None


def union_violations(t1: CayleyTable, t2: CayleyTable, spec: UnionSpec) -> list:
    """Every failed union condition as ``(name, witness)``; empty when valid."""
    n1, n2 = t1.n, t2.n
    out = []
    if len(spec.sigma) != n1 or any(p.n != n2 for p in spec.sigma):
        return [("sigma-shape", (len(spec.sigma),))]
    if len(spec.tau) != n2 or any(p.n != n1 for p in spec.tau):
        return [("tau-shape", (len(spec.tau),))]
    for y, p in enumerate(spec.sigma):
        if not is_automorphism(p.images, t2):
            out.append(("sigma-automorphism", (y,)))
    for z, p in enumerate(spec.tau):
        if not is_automorphism(p.images, t1):
            out.append(("tau-automorphism", (z,)))
    w = _conj_minus_one_violation(t1, spec.sigma)
    if w:
        out.append(("sigma-homomorphism", w))
    w = _conj_minus_one_violation(t2, spec.tau)
    if w:
        out.append(("tau-homomorphism", w))
    # (i) tau(z)(x) * y = tau(sigma(y)(z))(x * y)
    w = _first_triple(
        n1, n1, n2, lambda x, y, z: t1(spec.tau[z](x), y) != spec.tau[spec.sigma[y](z)](t1(x, y))
    )
    if w:
        out.append(("condition-i", w))
    # (ii) sigma(z)(x) o y = sigma(tau(y)(z))(x o y)
    w = _first_triple(
        n2, n2, n1, lambda x, y, z: t2(spec.sigma[z](x), y) != spec.sigma[spec.tau[y](z)](t2(x, y))
    )
    if w:
        out.append(("condition-ii", w))
    return out


def union_table(t1: CayleyTable, t2: CayleyTable, spec: UnionSpec) -> CayleyTable:
    """The four-case operation on ``X_1 + X_2`` (``X_1`` first), without checks."""
    n1 = t1.n

    def op(a, b):
        if a < n1 and b < n1:
            return t1(a, b)
        if a >= n1 and b >= n1:
            return n1 + t2(a - n1, b - n1)
        if a < n1:
            return spec.tau[b - n1](a)
        return n1 + spec.sigma[b](a - n1)

    return CayleyTable.from_function(n1 + t2.n, op)


def union(t1: CayleyTable, t2: CayleyTable, spec: UnionSpec) -> CayleyTable:
    require_rack(t1, "X_1")
    require_rack(t2, "X_2")
    bad = union_violations(t1, t2, spec)
    if bad:
        name, witness = bad[0]
        raise AxiomError(name, witness, f"union condition {name} fails at {witness}")
    t = union_table(t1, t2, spec)
    if not is_rack(t):
        raise ClaimFalsified("union of racks satisfying (i), (ii) is a rack")
    return t


# -- groupoids attached to an RB-group ----------------------------------------------


def b_conjugation(G: FiniteGroup, B: Sequence[int]) -> CayleyTable:
    """``x *_B y = B(y) x B(y)^-1``."""
    B = tuple(B)
    return CayleyTable.from_function(G.n, lambda x, y: G.mul(B[y], x, G.inv(B[y])))


def b_core(G: FiniteGroup, B: Sequence[int]) -> CayleyTable:
    """``x *_B y = B(y) x^-1 B(y)``."""
    B = tuple(B)
    return CayleyTable.from_function(G.n, lambda x, y: G.mul(B[y], G.inv(x), B[y]))


@dataclass(frozen=True)
class HypothesisReport:
    h1: bool
    h2: bool
    h3: bool
    h4: bool
    conj_is_rack: bool
    conj_is_quandle: bool
    core_is_rack: bool
    core_is_quandle: bool
    failures: tuple = field(default=())

    def to_dict(self) -> dict:
        return {
            "H1": self.h1,
            "H2": self.h2,
            "H3": self.h3,
            "H4": self.h4,
            "conj_is_rack": self.conj_is_rack,
            "conj_is_quandle": self.conj_is_quandle,
            "core_is_rack": self.core_is_rack,
            "core_is_quandle": self.core_is_quandle,
            "implication_failures": list(self.failures),
        }


def constr_hypotheses(G: FiniteGroup, B: Sequence[int]) -> HypothesisReport:
    """Evaluate the four hypotheses on ``(G, B)`` and classify both groupoids.

    H1: ``B(b)^-1 b`` is central for all ``b``.  H2: ``B(a)`` commutes with ``a``.
    H3: ``B(c) B(b)^-1 B(c) = B(B(c)^-1 B(b)^-1 B(c)^-1)``.  H4: ``(a B(a))^2 = e``.
    ``failures`` lists each predicted implication that the direct
    classification contradicts.
    """
    B = tuple(B)
    if not check_group_rb(G, B, 1).holds:
        raise PreconditionError("B is not a weight-1 RB-operator")
    n, inv = G.n, G.inv
    Z = set(center(G))
    h1 = all(G.mul(inv(B[b]), b) in Z for b in range(n))
    h2 = all(B[a] in centralizer(G, a) for a in range(n))
    h3 = all(
        G.mul(B[c], inv(B[b]), B[c]) == B[G.mul(inv(B[c]), inv(B[b]), inv(B[c]))]
        for b in range(n)
        for c in range(n)
    )
    h4 = all(G.power(G.mul(a, B[a]), 2) == G.identity for a in range(n))
    rc, rk = classify(b_conjugation(G, B)), classify(b_core(G, B))
    failures = []
    if h1 and not rc.is_rack:
        failures.append("H1 => B-conjugation is a rack")
    if h1 and h2 and not rc.is_quandle:
        failures.append("H1 & H2 => B-conjugation is a quandle")
    if h3 and not rk.is_rack:
        failures.append("H3 => B-core is a rack")
    if h3 and h4 and not rk.is_quandle:
        failures.append("H3 & H4 => B-core is a quandle")
    return HypothesisReport(
        h1, h2, h3, h4, rc.is_rack, rc.is_quandle, rk.is_rack, rk.is_quandle, tuple(failures)
    )


# -- multi-quandles ------------------------------------------------------------------


def _same_carrier(ts: Sequence[CayleyTable]) -> int:
    sizes = {t.n for t in ts}
    if len(sizes) != 1:
        raise PreconditionError(f"tables on different carriers: sizes {sorted(sizes)}")
    return sizes.pop()


def multi_op(ts: Sequence[CayleyTable], s: int, t: int) -> CayleyTable:
    """``g *_s *_t h = (g *_s h) *_t h``."""
    n = _same_carrier(ts)
    A, B = ts[s], ts[t]
    return CayleyTable.from_function(n, lambda g, h: B(A(g, h), h))


def multiquandle_violation(ts: Sequence[CayleyTable]) -> Optional[tuple]:
    """First ``(s, t, g, h, q)`` breaking ``(g *_s h) *_t q = (g *_t q) *_s (h *_t q)``."""
    n = _same_carrier(ts)
    for s, S in enumerate(ts):
        for t, T in enumerate(ts):
            for g in range(n):
                for h in range(n):
                    for q in range(n):
                        if T(S(g, h), q) != S(T(g, q), T(h, q)):
                            return (s, t, g, h, q)
    return None


def is_multiquandle(ts: Sequence[CayleyTable]) -> bool:
    return multiquandle_violation(ts) is None


def conj_multiquandle_by_center(G: FiniteGroup, ops: Sequence[Sequence[int]]) -> bool:
    """Centrality test for the family of ``B_i``-conjugation operations.

    True iff ``B_t(q)^-1 B_s(B_t(q) h B_t(q)^-1)^-1 B_t(q) B_s(h)`` is central
    for all ``h, q`` and all ordered pairs ``(s, t)``.
    """
    Z = set(center(G))
    inv = G.inv
    for Bs in ops:
        for Bt in ops:
            for h in range(G.n):
                for q in range(G.n):
                    btq = Bt[q]
                    hq = G.mul(btq, h, inv(btq))
                    if G.mul(inv(btq), inv(Bs[hq]), btq, Bs[h]) not in Z:
                        return False
    return True


def core_multiquandle_by_identity(G: FiniteGroup, ops: Sequence[Sequence[int]]) -> bool:
    """Closed-form test for the family of ``B_i``-core operations.

    Checks ``B_t(q) B_s(h)^-1 g B_s(h)^-1 B_t(q) =
    B_s(B_t(q) h^-1 B_t(q)) B_t(q)^-1 g B_t(q)^-1 B_s(B_t(q) h^-1 B_t(q))``.
    """
    inv = G.inv
    for Bs in ops:
        for Bt in ops:
            for h in range(G.n):
                for q in range(G.n):
                    btq = Bt[q]
                    k = Bs[G.mul(btq, inv(h), btq)]
                    for g in range(G.n):
                        lhs = G.mul(btq, inv(Bs[h]), g, inv(Bs[h]), btq)
                        rhs = G.mul(k, inv(btq), g, inv(btq), k)
                        if lhs != rhs:
                            return False
    return True


GROUPS = {}


def named_group(name: str) -> FiniteGroup:
    """Small groups by name: ``C<n>``, ``S<k>``, ``C2xC2`` and other ``x``-products."""
    from .groups import direct_product, symmetric

    if name in GROUPS:
        return GROUPS[name]
    parts = name.split("x")
    if len(parts) > 1:
        G = named_group(parts[0])
        for p in parts[1:]:
            G = direct_product(G, named_group(p))
    elif name[:1] == "C" and name[1:].isdigit():
        G = cyclic(int(name[1:]))
    elif name[:1] == "S" and name[1:].isdigit():
        G = symmetric(int(name[1:]))
    else:
        raise ValueError(f"unknown group name {name!r}")
    GROUPS[name] = G
    return G
