"""Rack algebras ``k[X]`` over the rationals or a prime field, with exact arithmetic."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Optional, Sequence

import numpy as np

from .errors import CapExceeded, ClaimFalsified, PreconditionError
from .magma import CayleyTable, is_quandle, require_rack
from .search import DEFAULT_MAX_SPACE

DEFAULT_SEED = 20240229
RANDOM_PAIRS = 100


# -- fields ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalField:
    name = "Q"

    def __call__(self, v) -> Fraction:
        if isinstance(v, str):
            return Fraction(v)
        return Fraction(v)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def fmt(self, a):
        return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def random(self, rng: random.Random):
        return Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))

    def to_json(self) -> dict:
        return {"field": "Q"}


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        from sympy import isprime

        if not (2 <= self.p < 2**31 and isprime(self.p)):
            raise ValueError(f"{self.p} is not a prime below 2^31")

    @property
    def name(self) -> str:
        return f"F{self.p}"

    def __call__(self, v) -> int:
        if isinstance(v, Fraction):
            return v.numerator * pow(v.denominator, -1, self.p) % self.p
        if isinstance(v, str):
            return self(Fraction(v))
        return int(v) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def fmt(self, a):
        return a

    def random(self, rng: random.Random):
        return rng.randrange(1, self.p)

    def elements(self) -> range:
        return range(self.p)

    def to_json(self) -> dict:
        return {"field": "Fp", "p": self.p}


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(d: dict):
    if d.get("field") == "Q":
        return QQ
    if d.get("field") == "Fp":
        return GF(int(d["p"]))
    raise ValueError(f"unknown field {d.get('field')!r}")


# -- elements -------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraElement:
    """A finite sum ``sum c_i e_i`` with nonzero coefficients and sorted support."""

    field: object
    terms: tuple = ()

    @classmethod
    def from_dict(cls, field, coeffs: dict) -> "AlgebraElement":
        zero = field(0)
        return cls(field, tuple(sorted((int(i), c) for i, c in coeffs.items() if c != zero)))

    @classmethod
    def basis(cls, field, i: int, coeff=1) -> "AlgebraElement":
        return cls.from_dict(field, {i: field(coeff)})

    @classmethod
    def zero(cls, field) -> "AlgebraElement":
        return cls(field, ())

    def as_dict(self) -> dict:
        return dict(self.terms)

    def _same_field(self, other: "AlgebraElement"):
        if self.field != other.field:
            raise PreconditionError(f"field mismatch: {self.field.name} vs {other.field.name}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._same_field(other)
        F = self.field
        acc = dict(self.terms)
        for i, c in other.terms:
            acc[i] = F.add(acc[i], c) if i in acc else c
        return AlgebraElement.from_dict(F, acc)

    def __neg__(self) -> "AlgebraElement":
        F = self.field
        return AlgebraElement(F, tuple((i, F.neg(c)) for i, c in self.terms))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, s) -> "AlgebraElement":
        F = self.field
        s = F(s)
        return AlgebraElement.from_dict(F, {i: F.mul(s, c) for i, c in self.terms})

    def coefficient_sum(self):
        F = self.field
        acc = F(0)
        for _, c in self.terms:
            acc = F.add(acc, c)
        return acc

    def to_json(self) -> dict:
        d = self.field.to_json()
        d["terms"] = [[i, self.field.fmt(c)] for i, c in self.terms]
        return d

    @classmethod
    def from_json(cls, d: dict) -> "AlgebraElement":
        F = field_from_json(d)
        acc = {}
        for i, c in d["terms"]:
            acc[int(i)] = F.add(acc.get(int(i), F(0)), F(c))
        return cls.from_dict(F, acc)


def algebra_product(u: AlgebraElement, v: AlgebraElement, X: CayleyTable) -> AlgebraElement:
    """Bilinear extension of ``e_x e_y = e_{x * y}``."""
    u._same_field(v)
    F = u.field
    acc = {}
    for x, a in u.terms:
        if not 0 <= x < X.n:
            raise PreconditionError(f"basis index {x} outside the carrier")
        row = X.table[x]
        for y, b in v.terms:
            if not 0 <= y < X.n:
                raise PreconditionError(f"basis index {y} outside the carrier")
            z = row[y]
            c = F.mul(a, b)
            acc[z] = F.add(acc[z], c) if z in acc else c
    return AlgebraElement.from_dict(F, acc)


@dataclass(frozen=True)
class LinearOperator:
    """A linear map on ``k[X]`` fixed by the images of the basis elements."""

    images: tuple

    @property
    def field(self):
        return self.images[0].field

    def __call__(self, u: AlgebraElement) -> AlgebraElement:
        F = u.field
        acc = {}
        for x, a in u.terms:
            for z, c in self.images[x].terms:
                c = F.mul(a, c)
                acc[z] = F.add(acc[z], c) if z in acc else c
        return AlgebraElement.from_dict(F, acc)


def extend_operator(B: Sequence[int], field) -> LinearOperator:
    """``sum a_x e_x -> sum a_x e_{B(x)}``."""
    return LinearOperator(tuple(AlgebraElement.basis(field, b) for b in B))


def zero_operator(n: int, field) -> LinearOperator:
    return LinearOperator(tuple(AlgebraElement.zero(field) for _ in range(n)))


def scalar_operator(n: int, field, s) -> LinearOperator:
    return LinearOperator(tuple(AlgebraElement.basis(field, x, s) for x in range(n)))


# -- identities -----------------------------------------------------------------------


def _rb_holds(R: LinearOperator, lam, X: CayleyTable, a: AlgebraElement, b: AlgebraElement) -> bool:
    Ra, Rb = R(a), R(b)
    inner = algebra_product(Ra, b, X) + algebra_product(a, Rb, X) + algebra_product(a, b, X).scale(lam)
    return algebra_product(Ra, Rb, X) == R(inner)


def _averaging_holds(R: LinearOperator, X: CayleyTable, a, b) -> bool:
    return algebra_product(R(a), R(b), X) == R(algebra_product(a, R(b), X))


def random_element(field, n: int, rng: random.Random, terms: int = 3) -> AlgebraElement:
    idx = rng.sample(range(n), min(terms, n))
    return AlgebraElement.from_dict(field, {i: field.random(rng) for i in idx})


def _random_pairs(field, n: int, seed: int, count: int):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_element(field, n, rng), random_element(field, n, rng)


def _basis_then_random(holds, field, n, seed, pairs) -> bool:
    basis = [AlgebraElement.basis(field, x) for x in range(n)]
    on_basis = all(holds(a, b) for a in basis for b in basis)
    if on_basis:
        for a, b in _random_pairs(field, n, seed, pairs):
            if not holds(a, b):
                raise ClaimFalsified("identity on basis pairs extends bilinearly", (a, b))
    return on_basis


def is_algebraic_rb(
    R: LinearOperator, lam, X: CayleyTable, seed: int = DEFAULT_SEED, pairs: int = RANDOM_PAIRS
) -> bool:
    """``R(a)R(b) = R(R(a)b + aR(b) + lam ab)`` on basis pairs, then on seeded random pairs."""
    F = R.field
    lam = F(lam)
    return _basis_then_random(lambda a, b: _rb_holds(R, lam, X, a, b), F, X.n, seed, pairs)


def is_algebra_averaging(
    R: LinearOperator, X: CayleyTable, seed: int = DEFAULT_SEED, pairs: int = RANDOM_PAIRS
) -> bool:
    """``R(u)R(v) = R(u R(v))`` on basis pairs, then on seeded random pairs."""
    return _basis_then_random(lambda a, b: _averaging_holds(R, X, a, b), R.field, X.n, seed, pairs)


@lru_cache(maxsize=64)
def _dense_test_pairs(field, n: int, seed: int, count: int) -> tuple:
    """Basis pairs followed by the seeded random pairs, as integer row matrices.

    Over Q each element is scaled by the lcm of its denominators; both sides
    of a bilinear identity scale by the same factor, so equality is preserved.
    """
    def dense(u):
        d = lcm(*(c.denominator for _, c in u.terms)) if field is QQ and u.terms else 1
        row = [0] * n
        for i, c in u.terms:
            row[i] = int(c * d)
        return row

    basis = [[int(i == x) for i in range(n)] for x in range(n)]
    left = [a for a in basis for _ in basis]
    right = [b for _ in basis for b in basis]
    rand = list(_random_pairs(field, n, seed, count))
    left += [dense(a) for a, _ in rand]
    right += [dense(b) for _, b in rand]
    return np.array(left, dtype=np.int64), np.array(right, dtype=np.int64), n * n


def _set_map_averaging_dense(X: CayleyTable, B: Sequence[int], field, seed: int, pairs: int) -> bool:
    """Same verdict as ``is_algebra_averaging(extend_operator(B, field), X)``, batched."""
    n = X.n
    U, V, k = _dense_test_pairs(field, n, seed, pairs)
    P = np.zeros((n, n), dtype=np.int64)
    P[np.arange(n), list(B)] = 1
    M = np.zeros((n * n, n), dtype=np.int64)
    M[np.arange(n * n), X.array.ravel()] = 1

    def prod(a, b):
        return (a[:, :, None] * b[:, None, :]).reshape(len(a), -1) @ M

    RV = V @ P
    diff = prod(U @ P, RV) - prod(U, RV) @ P
    if isinstance(field, PrimeField):
        diff %= field.p
    bad = diff.any(axis=1)
    if bad[:k].any():
        return False
    if bad.any():
        raise ClaimFalsified("identity on basis pairs extends bilinearly", int(np.argmax(bad)) - k)
    return True


def averaging_extension_check(
    X: CayleyTable, B: Sequence[int], field, seed: int = DEFAULT_SEED, pairs: int = RANDOM_PAIRS
) -> bool:
    """Linear extension of a set-level averaging operator is an algebra averaging operator.

    Checked on all basis pairs and ``pairs`` seeded random pairs.
    """
    from .operators import is_averaging

    if not is_averaging(X, B):
        raise PreconditionError("B is not a right averaging operator on X")
    ok = _set_map_averaging_dense(X, tuple(B), field, seed, pairs)
    if not ok:
        raise ClaimFalsified("averaging operators extend linearly", tuple(B))
    return ok


@dataclass(frozen=True)
class ConditionSystems:
    first: bool       # B(x)*B(y) = B(B(x)*y) and B(x*y) = B(x*B(y)) for all pairs
    second: bool      # B(x)*B(y) = B(x*B(y)) and B(x*y) = B(B(x)*y) for all pairs
    pointwise: bool   # every pair satisfies at least one of the two systems
    arb_minus_one: bool

    def to_dict(self) -> dict:
        return {
            "first_system": self.first,
            "second_system": self.second,
            "pointwise": self.pointwise,
            "algebraic_rb_weight_-1": self.arb_minus_one,
        }


def condition_systems(X: CayleyTable, B: Sequence[int], field=QQ) -> ConditionSystems:
    """Which of the two paired identities hold, compared with the weight ``-1`` verdict.

    Over a field of characteristic other than 2 the extension of ``B`` is an
    algebraic RB-operator of weight ``-1`` exactly when every pair satisfies
    one of the two systems, and never for weights ``0`` or ``1``.
    """
    require_rack(X)
    B = tuple(B)
    T = X.table
    first = second = pointwise = True
    for x in range(X.n):
        for y in range(X.n):
            lhs, q = T[B[x]][B[y]], B[T[x][y]]
            p_left, p_right = B[T[B[x]][y]], B[T[x][B[y]]]
            s1 = lhs == p_left and q == p_right
            s2 = lhs == p_right and q == p_left
            first &= s1
            second &= s2
            pointwise &= s1 or s2
    R = extend_operator(B, field)
    arb = is_algebraic_rb(R, -1, X)
    odd = not (isinstance(field, PrimeField) and field.p == 2)
    if odd and arb != pointwise:
        raise ClaimFalsified("weight -1 extension <=> one system holds at every pair", B)
    if odd and (is_algebraic_rb(R, 0, X) or is_algebraic_rb(R, 1, X)):
        raise ClaimFalsified("no set-map extension is algebraic RB of weight 0 or 1", B)
    return ConditionSystems(first, second, pointwise, arb)


def quandle_arb_symmetry(X: CayleyTable, B: Sequence[int], field=QQ) -> bool:
    """``B(B(x) * x) = B(x * B(x))`` for a quandle ``B`` whose extension is weight ``-1`` ARB."""
    if not is_quandle(X):
        raise PreconditionError("X is not a quandle")
    B = tuple(B)
    if not is_algebraic_rb(extend_operator(B, field), -1, X):
        raise PreconditionError("extension of B is not an algebraic RB-operator of weight -1")
    ok = all(B[X(B[x], x)] == B[X(x, B[x])] for x in range(X.n))
    if not ok:
        raise ClaimFalsified("B(B(x)*x) = B(x*B(x))", B)
    return ok


# -- monomial operators ----------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOperator:
    """``e_x -> weights[x] e_{targets[x]}``; a zero weight pins the target to ``x``."""

    targets: tuple
    weights: tuple

    def linear(self, field) -> LinearOperator:
        return LinearOperator(
            tuple(AlgebraElement.basis(field, y, w) for y, w in zip(self.targets, self.weights))
        )

    def to_json(self, field) -> dict:
        return {"targets": list(self.targets), "weights": [field.fmt(w) for w in self.weights]}


def _monomial_pair_ok(T, F, lam, ys, bs, a, b) -> Optional[bool]:
    # R(e_a) R(e_b) vs R(R(e_a) e_b + e_a R(e_b) + lam e_a e_b); None if undetermined
    k = len(ys)
    if a >= k or b >= k:
        return None
    u, v, w = T[ys[a]][b], T[a][ys[b]], T[a][b]
    if u >= k or v >= k or w >= k:
        return None
    lhs = {}
    c = F.mul(bs[a], bs[b])
    if c:
        lhs[T[ys[a]][ys[b]]] = c
    rhs = {}
    for idx, coeff in ((u, F.mul(bs[a], bs[u])), (v, F.mul(bs[b], bs[v])), (w, F.mul(lam, bs[w]))):
        if coeff:
            z = ys[idx]
            rhs[z] = F.add(rhs.get(z, 0), coeff)
    rhs = {z: c for z, c in rhs.items() if c}
    return lhs == rhs


def monomial_rb_search(
    X: CayleyTable, p: int, lam, max_space: int = DEFAULT_MAX_SPACE
) -> list:
    """All distinct monomial operators on ``F_p[X]`` satisfying the weight-``lam`` identity.

    Operators are sorted by ``(targets, weights)``.
    """
    F = GF(p)
    lam = F(lam)
    n = X.n
    space = p**n * n**n
    if space > max_space:
        raise CapExceeded(f"monomial census on F_{p}[X], |X| = {n}", space, max_space)
    T = X.table
    out = []

    def rec(ys, bs):
        k = len(ys)
        for a in range(k):
            for b in range(k):
                if _monomial_pair_ok(T, F, lam, ys, bs, a, b) is False:
                    return
        if k == n:
            out.append(MonomialOperator(tuple(ys), tuple(bs)))
            return
        for y, w in [(k, 0)] + [(y, w) for y in range(n) for w in range(1, p)]:
            rec(ys + [y], bs + [w])

    rec([], [])
    return sorted(out, key=lambda m: (m.targets, m.weights))
