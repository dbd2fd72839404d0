"""Rota-Baxter and averaging operators on racks, and the structures they induce."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .constructions import UnionSpec, product, semidirect_rack
from .errors import ClaimFalsified, PreconditionError
from .magma import (
    CayleyTable,
    PhiAction,
    StructureReport,
    classify,
    is_homomorphism,
    is_subrack,
    require_rack,
)
from .search import DEFAULT_MAX_SPACE, MapProblem, search_maps

KINDS = ("rb", "averaging-right", "averaging-left")
RELATIVE_KINDS = ("relative-rb", "relative-averaging")


@dataclass(frozen=True)
class OperatorMap:
    """A map ``[0, n) -> [0, m)`` given by its image sequence."""

    map: tuple
    m: int

    def __post_init__(self):
        images = tuple(int(v) for v in self.map)
        if any(not 0 <= v < self.m for v in images):
            raise ValueError(f"{list(images)} has entries outside [0, {self.m})")
        object.__setattr__(self, "map", images)

    @classmethod
    def endo(cls, images: Sequence[int]) -> "OperatorMap":
        return cls(tuple(images), len(images))

    @property
    def n(self) -> int:
        return len(self.map)

    def __getitem__(self, x: int) -> int:
        return self.map[x]

    def __iter__(self):
        return iter(self.map)

    def __len__(self):
        return len(self.map)


def _endo(X: CayleyTable, B) -> tuple:
    B = tuple(B)
    if len(B) != X.n or any(not 0 <= v < X.n for v in B):
        raise PreconditionError(f"{list(B)} is not a map of the {X.n}-element carrier to itself")
    return B


def _relative(X: CayleyTable, A: CayleyTable, phi: PhiAction, B) -> tuple:
    phi.validate(A, X)
    B = tuple(B)
    if len(B) != X.n or any(not 0 <= v < A.n for v in B):
        raise PreconditionError(f"{list(B)} does not map X into A")
    return B


# -- pointwise identities ------------------------------------------------------------


def rb_violation(X: CayleyTable, B) -> Optional[tuple]:
    """First ``(x, y)`` breaking ``B(x) * B(y) = B((x * B(y)) * y)``."""
    B = _endo(X, B)
    for x in range(X.n):
        for y in range(X.n):
            if X(B[x], B[y]) != B[X(X(x, B[y]), y)]:
                return (x, y)
    return None


def is_rack_rb(X: CayleyTable, B) -> bool:
    return rb_violation(X, B) is None


def averaging_violation(X: CayleyTable, B, side: str = "right") -> Optional[tuple]:
    """First failing pair of the right (``B(x*B(y))``) or left (``B(B(x)*y)``) identity."""
    B = _endo(X, B)
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    for x in range(X.n):
        for y in range(X.n):
            arg = X(x, B[y]) if side == "right" else X(B[x], y)
            if X(B[x], B[y]) != B[arg]:
                return (x, y)
    return None


def is_averaging(X: CayleyTable, B, side: str = "right") -> bool:
    return averaging_violation(X, B, side) is None


def is_relative_rb(X: CayleyTable, A: CayleyTable, phi: PhiAction, B) -> bool:
    """``B(x) * B(y) = B((x Phi_{B(y)}) . y)`` for all pairs."""
    B = _relative(X, A, phi, B)
    return all(
        A(B[x], B[y]) == B[X(phi.act(B[y], x), y)] for x in range(X.n) for y in range(X.n)
    )


def graph_is_subrack(X: CayleyTable, A: CayleyTable, phi: PhiAction, B) -> bool:
    """Whether ``{(B(x), x)}`` is closed in ``A x_Phi X``."""
    B = _relative(X, A, phi, B)
    S = semidirect_rack(A, X, phi)
    return is_subrack(S, [B[x] * X.n + x for x in range(X.n)])


def is_relative_averaging(X: CayleyTable, A: CayleyTable, phi: PhiAction, B) -> bool:
    """``B(x) * B(y) = B(x Phi_{B(y)})``, cross-checked against the graph criterion."""
    B = _relative(X, A, phi, B)
    pointwise = all(
        A(B[x], B[y]) == B[phi.act(B[y], x)] for x in range(X.n) for y in range(X.n)
    )
    if pointwise != graph_is_subrack(X, A, phi, B):
        raise ClaimFalsified("relative averaging <=> graph is a subrack", B)
    return pointwise


# -- derived structures --------------------------------------------------------------


@dataclass(frozen=True)
class DerivedRRBReport:
    table: CayleyTable
    condition: bool
    remark_condition: bool
    structure: StructureReport
    fixes_points: bool

    def to_dict(self) -> dict:
        return {
            "table": self.table.rows(),
            "condition": self.condition,
            "remark_condition": self.remark_condition,
            "structure": self.structure.to_dict(),
            "x_Phi_B(x)_eq_x": self.fixes_points,
        }


def derived_rrb(X: CayleyTable, A: CayleyTable, phi: PhiAction, B) -> DerivedRRBReport:
    """``x o y = (x Phi_{B(y)}) . y`` for a relative RB-operator ``B``.

    Reports the triple condition guaranteeing ``(X, o)`` is a rack (in its
    expanded and its compact form), the direct classification, and whether
    ``x Phi_{B(x)} = x`` everywhere.
    """
    require_rack(X, "X")
    require_rack(A, "A")
    B = _relative(X, A, phi, B)
    if not is_relative_rb(X, A, phi, B):
        raise PreconditionError("B is not a relative RB-operator")
    n = X.n
    act = phi.act
    t = CayleyTable.from_function(n, lambda x, y: X(act(B[y], x), y))
    cond = remark = True
    for x in range(n):
        for y in range(n):
            for z in range(n):
                w = t(y, z)
                lhs = X(act(B[z], act(B[y], x)), z)
                rhs = X(act(B[w], act(B[z], x)), act(B[w], z))
                cond = cond and lhs == rhs
                remark = remark and lhs == act(B[w], X(act(B[z], x), z))
    structure = classify(t)
    if cond != remark:
        raise ClaimFalsified("expanded and compact triple conditions agree")
    if cond and not structure.is_rack:
        raise ClaimFalsified("triple condition => (X, o) is a rack")
    fixes = all(act(B[x], x) == x for x in range(n))
    if cond and fixes and classify(X).is_quandle and classify(A).is_quandle and not structure.is_quandle:
        raise ClaimFalsified("x Phi_B(x) = x => (X, o) is a quandle")
    return DerivedRRBReport(t, cond, remark, structure, fixes)


def derived_rb(X: CayleyTable, B) -> DerivedRRBReport:
    """The RB-rack special case ``x o y = (x . B(y)) . y`` (inner action)."""
    return derived_rrb(X, X, PhiAction.inner(X), B)


@dataclass(frozen=True)
class DerivedAveragingReport:
    table: CayleyTable
    is_rack: bool
    is_quandle: bool
    quandle_predicted: bool
    averaging_on_derived: bool
    homomorphism: bool

    @property
    def ok(self) -> bool:
        return (
            self.is_rack
            and self.is_quandle == self.quandle_predicted
            and self.averaging_on_derived
            and self.homomorphism
        )

    def to_dict(self) -> dict:
        return {
            "table": self.table.rows(),
            "is_rack": self.is_rack,
            "is_quandle": self.is_quandle,
            "x_B(x)_eq_x": self.quandle_predicted,
            "averaging_on_derived": self.averaging_on_derived,
            "homomorphism": self.homomorphism,
        }


def derived_averaging(X: CayleyTable, B) -> DerivedAveragingReport:
    """``x o_B y = x . B(y)`` for a right averaging operator, with all three conclusions."""
    require_rack(X)
    B = _endo(X, B)
    if not is_averaging(X, B):
        raise PreconditionError("B is not a right averaging operator")
    t = CayleyTable.from_function(X.n, lambda x, y: X(x, B[y]))
    s = classify(t)
    return DerivedAveragingReport(
        table=t,
        is_rack=s.is_rack,
        is_quandle=s.is_quandle,
        quandle_predicted=all(X(x, B[x]) == x for x in range(X.n)),
        averaging_on_derived=s.is_rack and is_averaging(t, B),
        homomorphism=is_homomorphism(B, t, X),
    )


# -- censuses -------------------------------------------------------------------------


def structure_id(*tables: CayleyTable) -> str:
    payload = json.dumps([t.rows() for t in tables], separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass(frozen=True)
class OperatorCensus:
    structure: str
    kind: str
    operators: tuple
    space: int

    @property
    def count(self) -> int:
        return len(self.operators)


def census(
    X: CayleyTable, kind: str, workers: int = 1, max_space: int = DEFAULT_MAX_SPACE
) -> OperatorCensus:
    """Every operator of ``kind`` on the rack ``X`` in lexicographic order."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    require_rack(X)
    problem = MapProblem(kind, X.n, X.n, (X.table,))
    found = search_maps(problem, workers=workers, max_space=max_space)
    return OperatorCensus(
        structure_id(X), kind, tuple(OperatorMap(b, X.n) for b in found), X.n**X.n
    )


def relative_census(
    X: CayleyTable,
    A: CayleyTable,
    phi: PhiAction,
    kind: str,
    workers: int = 1,
    max_space: int = DEFAULT_MAX_SPACE,
) -> OperatorCensus:
    if kind not in RELATIVE_KINDS:
        raise ValueError(f"kind must be one of {RELATIVE_KINDS}")
    require_rack(X, "X")
    require_rack(A, "A")
    phi.validate(A, X)
    P = tuple(p.images for p in phi.perms)
    problem = MapProblem(kind, X.n, A.n, (X.table, A.table, P))
    found = search_maps(problem, workers=workers, max_space=max_space)
    return OperatorCensus(
        structure_id(X, A), kind, tuple(OperatorMap(b, A.n) for b in found), A.n**X.n
    )


# -- operators on products, images, unions -----------------------------------------------


def product_operator(B1, B2) -> OperatorMap:
    """``(x1, x2) -> (B1(x1), B2(x2))`` on ``product(X1, X2)``."""
    B1, B2 = tuple(B1), tuple(B2)
    n2 = len(B2)
    return OperatorMap.endo(tuple(B1[a // n2] * n2 + B2[a % n2] for a in range(len(B1) * n2)))


def projection_operator(X1: CayleyTable, X2: CayleyTable, i: int, fixed: int) -> OperatorMap:
    """``P_1(x, z) = (x, fixed)`` or ``P_2(x, z) = (fixed, z)``."""
    n2 = X2.n
    if i == 1:
        if not 0 <= fixed < n2:
            raise PreconditionError("fixed element must lie in the second factor")
        return OperatorMap.endo(tuple((a // n2) * n2 + fixed for a in range(X1.n * n2)))
    if i == 2:
        if not 0 <= fixed < X1.n:
            raise PreconditionError("fixed element must lie in the first factor")
        return OperatorMap.endo(tuple(fixed * n2 + a % n2 for a in range(X1.n * n2)))
    raise ValueError("i must be 1 or 2")


def check_product_operator(X1: CayleyTable, X2: CayleyTable, B1, B2, kind: str = "averaging") -> bool:
    """Componentwise operator of two averaging (or RB) operators keeps that property."""
    P = product(X1, X2)
    B = product_operator(B1, B2)
    check = is_averaging if kind == "averaging" else is_rack_rb
    if check(X1, B1) and check(X2, B2) and not check(P, B):
        raise ClaimFalsified(f"product of {kind} operators is {kind}")
    return check(P, B)


def image_subrack(X: CayleyTable, B) -> tuple:
    """``im B`` for an RB or averaging operator, verified closed under ``*``."""
    B = _endo(X, B)
    if not (is_rack_rb(X, B) or is_averaging(X, B, "right") or is_averaging(X, B, "left")):
        raise PreconditionError("B is neither an RB nor an averaging operator")
    image = tuple(sorted(set(B)))
    if not is_subrack(X, image):
        raise ClaimFalsified("image of the operator is a subrack", image)
    return image


@dataclass(frozen=True)
class UnionOperatorReport:
    operator: OperatorMap
    stated_conditions: bool
    direct: bool

    @property
    def agree(self) -> bool:
        return self.stated_conditions == self.direct


def union_operator(t1: CayleyTable, t2: CayleyTable, spec: UnionSpec, B1, B2) -> UnionOperatorReport:
    """Glue ``B1`` on ``X_1`` and ``B2`` on ``X_2`` into a map on the union.

    ``stated_conditions`` evaluates, for ``z1`` in ``X_1`` and ``z2`` in ``X_2``,
    ``tau_{B2(z2)}(B1(z1)) = B1(tau_{B2(z2)}(z1))`` and
    ``sigma_{B1(z1)}(B2(z2)) = B2(sigma_{B1(z1)}(z2))``; ``direct`` is the
    averaging identity checked on the union table itself.
    """
    from .constructions import union

    B1, B2 = _endo(t1, B1), _endo(t2, B2)
    if not (is_averaging(t1, B1) and is_averaging(t2, B2)):
        raise PreconditionError("B1 and B2 must be averaging operators on their parts")
    X = union(t1, t2, spec)
    n1 = t1.n
    B = OperatorMap.endo(B1 + tuple(n1 + v for v in B2))
    stated = all(
        spec.tau[B2[z2]](B1[z1]) == B1[spec.tau[B2[z2]](z1)]
        and spec.sigma[B1[z1]](B2[z2]) == B2[spec.sigma[B1[z1]](z2)]
        for z1 in range(n1)
        for z2 in range(t2.n)
    )
    return UnionOperatorReport(B, stated, is_averaging(X, B))
