"""Command-line front end.

Exit status: 0 on success, 1 when a theorem cross-check fails on the given
input, 2 for usage and input problems (bad arguments, unreadable or
malformed files, exceeded caps, inputs outside an operation's domain).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import algebra, constructions as C, groups, operators as ops
from .errors import AxiomError, CapExceeded, ClaimFalsified, PreconditionError, TableError
from .io import (
    InputError,
    census_lines,
    dumps,
    load_json,
    operator_from_json,
    phi_from_json,
    read_table,
    table_from_json,
    table_to_json,
    union_spec_from_json,
    write_json,
)
from .magma import DEFAULT_MAX_ISO_N, PhiAction, are_isomorphic, classify, is_homomorphism, is_normal_subrack
from .search import DEFAULT_MAX_SPACE

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


@dataclass
class CommandConfig:
    command: str
    inputs: list = field(default_factory=list)
    output: Optional[str] = None
    kind: Optional[str] = None
    max_space: int = DEFAULT_MAX_SPACE
    max_n: int = DEFAULT_MAX_ISO_N
    field: str = "Q"
    p: Optional[int] = None
    workers: int = 1
    seed: int = algebra.DEFAULT_SEED

    def __post_init__(self):
        if self.max_space < 1 or self.max_n < 1:
            raise ValueError("caps must be positive")
        if self.workers < 1:
            raise ValueError("--workers must be at least 1")
        if self.field not in ("Q", "Fp"):
            raise ValueError("--field must be Q or Fp")
        if self.field == "Fp":
            if self.p is None:
                raise ValueError("--field Fp needs --p")
            algebra.GF(self.p)

    @property
    def scalar_field(self):
        return algebra.QQ if self.field == "Q" else algebra.GF(self.p)


def _group(arg: str) -> groups.FiniteGroup:
    """A group file, or a name such as ``C5``, ``S3``, ``C2xC2``."""
    if Path(arg).exists() or arg.lstrip().startswith("{"):
        kind, t = table_from_json(load_json(arg))
        return groups.validate_group(t)
    return C.named_group(arg)


def _operator(arg) -> tuple:
    return operator_from_json(load_json(arg))


def _emit(cfg: CommandConfig, obj) -> None:
    write_json(cfg.output, obj)


# -- build -----------------------------------------------------------------------------


def cmd_build(a, cfg: CommandConfig) -> int:
    what, args = a.construction, a.args
    kind = "rack"
    if what == "trivial":
        t = C.trivial(int(args[0]))
    elif what == "dihedral":
        t = C.dihedral(int(args[0]))
    elif what == "cyclic":
        t, kind = groups.cyclic(int(args[0])).table, "group"
    elif what == "symmetric":
        t, kind = groups.symmetric(int(args[0])).table, "group"
    elif what == "group":
        t, kind = _group(args[0]).table, "group"
    elif what == "derived-group":
        t, kind = groups.derived_group_op(_group(args[0]), _operator(a.operator)).table, "group"
    elif what == "conj":
        t = C.conj(_group(args[0]), a.m)
    elif what == "core":
        t = C.core(_group(args[0]))
    elif what == "alexander":
        t = C.alexander(_group(args[0]), _operator(a.phi))
    elif what == "product":
        t = C.product(read_table(args[0]), read_table(args[1]))
    elif what == "semidirect":
        A, X = read_table(args[0]), read_table(args[1])
        t = C.semidirect_rack(A, X, phi_from_json(load_json(a.phi)))
    elif what == "holomorph":
        t = C.holomorph(read_table(args[0]), cfg.max_n)
    elif what == "union":
        t = C.union(read_table(args[0]), read_table(args[1]), union_spec_from_json(load_json(a.spec)))
    elif what == "b-conjugation":
        t, kind = C.b_conjugation(_group(args[0]), _operator(a.operator)), "raw"
    elif what == "b-core":
        t, kind = C.b_core(_group(args[0]), _operator(a.operator)), "raw"
    elif what == "multi-op":
        ts = [read_table(x) for x in args]
        t, kind = C.multi_op(ts, a.s, a.t), "raw"
    else:
        raise PreconditionError(f"unknown construction {what!r}")
    if kind == "raw" and classify(t).is_rack:
        kind = "rack"
    _emit(cfg, table_to_json(t, kind))
    return EXIT_OK


# -- classify --------------------------------------------------------------------------


def cmd_classify(a, cfg: CommandConfig) -> int:
    t = read_table(a.table)
    report = classify(t).to_dict()
    if a.subset is not None:
        report["normal_subrack"] = is_normal_subrack(t, _operator(a.subset))
    if a.other is not None:
        f = are_isomorphic(t, read_table(a.other), cfg.max_n)
        report["isomorphism"] = None if f is None else list(f.images)
    _emit(cfg, report)
    return EXIT_OK


# -- search ----------------------------------------------------------------------------


def cmd_search(a, cfg: CommandConfig) -> int:
    if a.kind == "group-rb":
        G = _group(a.table)
        found = groups.search_group_rb(G, a.weight, cfg.workers, cfg.max_space)
        census = ops.OperatorCensus(
            ops.structure_id(G.table),
            f"group-rb{a.weight:+d}",
            tuple(ops.OperatorMap.endo(b) for b in found),
            G.n**G.n,
        )
    elif a.kind in ops.RELATIVE_KINDS:
        X = read_table(a.table)
        if a.relative is None:
            A, phi = X, PhiAction.inner(X)
        else:
            A = read_table(a.relative)
            phi = phi_from_json(load_json(a.phi)) if a.phi else PhiAction.trivial(A.n, X.n)
        census = ops.relative_census(X, A, phi, a.kind, cfg.workers, cfg.max_space)
    else:
        census = ops.census(read_table(a.table), a.kind, cfg.workers, cfg.max_space)
    text = "\n".join(census_lines(census)) + "\n"
    if cfg.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(cfg.output).write_text(text)
    return EXIT_OK


# -- verify ----------------------------------------------------------------------------

THEOREMS = {
    "averaging-derived": "averaging operator induces a rack o_B with B averaging and a homomorphism",
    "rb-derived": "RB-rack induces (x.B(y)).y, a rack under the triple condition",
    "rrb-derived": "relative RB-rack induces (x Phi_B(y)).y, a rack under the triple condition",
    "homomorphism-rrb": "rack homomorphisms are relative RB-operators for the trivial action",
    "graph-criterion": "relative averaging iff the graph is a subrack of the semidirect product",
    "semidirect": "semidirect product of racks is a rack",
    "image-subrack": "image of an RB or averaging operator is a subrack",
    "product-operator": "componentwise operator of averaging operators is averaging",
    "projection": "projections of a product of quandles are averaging operators",
    "union-averaging": "glued operator on a union is averaging iff the compatibility identities hold",
    "group-rb-derived": "RB-group induces a group g B(g) h B(g)^-1 with B an RB-homomorphism",
    "constr-hypotheses": "hypotheses on (G, B) make the B-conjugation and B-core groupoids racks/quandles",
    "multi-quandle-conj": "B-conjugation family is a multi-quandle iff the commutator element is central",
    "multi-quandle-core": "B-core family is a multi-quandle iff the closed-form identity holds",
    "lambda-condition": "set-map extension is algebraic RB iff weight -1 and a condition system holds",
    "quandle-arb-symmetry": "quandle ARB-operators satisfy B(B(x)*x) = B(x*B(x))",
    "identity-arb": "identity is an algebraic RB-operator of weight -1 on any rack algebra",
    "averaging-extension": "averaging operators extend linearly to algebra averaging operators",
}


def _verify(a, cfg: CommandConfig) -> tuple:
    """Return ``(passed, details)`` for the requested theorem."""
    name = a.theorem
    F = cfg.scalar_field
    if name == "averaging-derived":
        rep = ops.derived_averaging(read_table(a.inputs[0]), _operator(a.operator))
        return rep.ok, rep.to_dict()
    if name == "rb-derived":
        rep = ops.derived_rb(read_table(a.inputs[0]), _operator(a.operator))
        return True, rep.to_dict()
    if name in ("rrb-derived", "graph-criterion", "homomorphism-rrb"):
        X = read_table(a.inputs[0])
        A = read_table(a.inputs[1]) if len(a.inputs) > 1 else X
        if a.phi:
            phi = phi_from_json(load_json(a.phi))
        elif name == "homomorphism-rrb" or len(a.inputs) > 1:
            phi = PhiAction.trivial(A.n, X.n)
        else:
            phi = PhiAction.inner(X)
        B = _operator(a.operator)
        if name == "rrb-derived":
            return True, ops.derived_rrb(X, A, phi, B).to_dict()
        if name == "graph-criterion":
            pointwise = ops.is_relative_averaging(X, A, phi, B)
            return True, {"relative_averaging": pointwise, "graph_subrack": ops.graph_is_subrack(X, A, phi, B)}
        if not phi.is_trivial():
            raise PreconditionError("homomorphism-rrb needs the trivial action")
        hom = is_homomorphism(B, X, A)
        rrb = ops.is_relative_rb(X, A, phi, B)
        return (not hom) or rrb, {"homomorphism": hom, "relative_rb": rrb}
    if name == "semidirect":
        A, X = read_table(a.inputs[0]), read_table(a.inputs[1])
        phi = phi_from_json(load_json(a.phi))
        t = C.semidirect_rack(A, X, phi)
        s = classify(t)
        return s.is_rack, {"table": t.rows(), "structure": s.to_dict(), "phi_trivial": phi.is_trivial()}
    if name == "image-subrack":
        return True, {"image": list(ops.image_subrack(read_table(a.inputs[0]), _operator(a.operator)))}
    if name == "product-operator":
        X1, X2 = read_table(a.inputs[0]), read_table(a.inputs[1])
        B1, B2 = _operator(a.operator), _operator(a.operator2)
        ok = ops.check_product_operator(X1, X2, B1, B2)
        return True, {"operator": list(ops.product_operator(B1, B2)), "averaging": ok}
    if name == "projection":
        X1, X2 = read_table(a.inputs[0]), read_table(a.inputs[1])
        P = ops.projection_operator(X1, X2, a.factor, a.fixed)
        ok = ops.is_averaging(C.product(X1, X2), P)
        quandles = classify(X1).is_quandle and classify(X2).is_quandle
        return ok or not quandles, {"operator": list(P), "averaging": ok, "quandle_factors": quandles}
    if name == "union-averaging":
        X1, X2 = read_table(a.inputs[0]), read_table(a.inputs[1])
        spec = union_spec_from_json(load_json(a.spec))
        rep = ops.union_operator(X1, X2, spec, _operator(a.operator), _operator(a.operator2))
        return rep.agree, {
            "operator": list(rep.operator),
            "stated_conditions": rep.stated_conditions,
            "direct": rep.direct,
        }
    if name == "group-rb-derived":
        G, B = _group(a.inputs[0]), _operator(a.operator)
        D = groups.derived_group_op(G, B)
        return True, {"table": D.table.rows(), "identity": D.identity}
    if name == "constr-hypotheses":
        rep = C.constr_hypotheses(_group(a.inputs[0]), _operator(a.operator))
        return not rep.failures, rep.to_dict()
    if name in ("multi-quandle-conj", "multi-quandle-core"):
        G = _group(a.inputs[0])
        family = [operator_from_json(b) for b in load_json(a.operators)]
        for B in family:
            if not groups.check_group_rb(G, B, 1).holds:
                raise PreconditionError(f"{list(B)} is not a weight-1 RB-operator")
        if name == "multi-quandle-conj":
            tables = [C.b_conjugation(G, B) for B in family]
            closed = C.conj_multiquandle_by_center(G, family)
        else:
            tables = [C.b_core(G, B) for B in family]
            closed = C.core_multiquandle_by_identity(G, family)
        direct = C.is_multiquandle(tables)
        return closed == direct, {"direct": direct, "closed_form": closed}
    if name == "lambda-condition":
        rep = algebra.condition_systems(read_table(a.inputs[0]), _operator(a.operator), F)
        return True, rep.to_dict()
    if name == "quandle-arb-symmetry":
        ok = algebra.quandle_arb_symmetry(read_table(a.inputs[0]), _operator(a.operator), F)
        return ok, {"holds": ok}
    if name == "identity-arb":
        X = read_table(a.inputs[0])
        ok = algebra.is_algebraic_rb(algebra.extend_operator(range(X.n), F), -1, X, cfg.seed)
        return ok, {"holds": ok}
    if name == "averaging-extension":
        X, B = read_table(a.inputs[0]), _operator(a.operator)
        ok = algebra.averaging_extension_check(X, B, F, cfg.seed)
        return ok, {"holds": ok}
    raise PreconditionError(f"unknown theorem {name!r}")


def cmd_verify(a, cfg: CommandConfig) -> int:
    try:
        passed, details = _verify(a, cfg)
    except ClaimFalsified as exc:
        passed, details = False, {"falsified": exc.claim, "witness": repr(exc.witness)}
    _emit(
        cfg,
        {
            "theorem": a.theorem,
            "statement": THEOREMS.get(a.theorem, ""),
            "status": "PASS" if passed else "FAIL",
            "details": details,
        },
    )
    return EXIT_OK if passed else EXIT_FALSIFIED


# -- census report ---------------------------------------------------------------------


def cmd_census_report(a, cfg: CommandConfig) -> int:
    report = {"dihedral": [], "groups": [], "monomial": []}
    for n in range(1, a.dihedral_max_n + 1):
        X = C.dihedral(n)
        entry = {"n": n}
        for kind in ops.KINDS:
            cen = ops.census(X, kind, cfg.workers, cfg.max_space)
            entry[kind] = [list(b.map) for b in cen.operators]
        report["dihedral"].append(entry)
    for name in a.groups.split(",") if a.groups else []:
        G = C.named_group(name)
        elementary = set(groups.elementary_operators(G))
        for w in (1, -1):
            found = groups.search_group_rb(G, w, cfg.workers, cfg.max_space)
            report["groups"].append(
                {
                    "group": name,
                    "weight": w,
                    "count": len(found),
                    "non_elementary": [list(b) for b in found if b not in elementary],
                }
            )
    for p in [int(v) for v in a.primes.split(",")] if a.primes else []:
        for n in range(1, a.monomial_max_n + 1):
            X = C.dihedral(n)
            for lam in (-1, 0, 1):
                found = algebra.monomial_rb_search(X, p, lam, cfg.max_space)
                report["monomial"].append(
                    {"p": p, "n": n, "lambda": lam, "count": len(found)}
                )
    _emit(cfg, report)
    return EXIT_OK


# -- algebra ---------------------------------------------------------------------------


def cmd_algebra(a, cfg: CommandConfig) -> int:
    X = read_table(a.table)
    F = cfg.scalar_field
    if a.action == "product":
        u = algebra.AlgebraElement.from_json(load_json(a.u))
        v = algebra.AlgebraElement.from_json(load_json(a.v))
        _emit(cfg, algebra.algebra_product(u, v, X).to_json())
    elif a.action == "extend":
        R = algebra.extend_operator(_operator(a.operator), F)
        u = algebra.AlgebraElement.from_json(load_json(a.u))
        _emit(cfg, R(u).to_json())
    elif a.action == "rb-check":
        R = algebra.extend_operator(_operator(a.operator), F)
        ok = algebra.is_algebraic_rb(R, F(a.lam), X, cfg.seed)
        _emit(cfg, {"algebraic_rb": ok, "lambda": F.fmt(F(a.lam)), **F.to_json()})
    elif a.action == "averaging-check":
        R = algebra.extend_operator(_operator(a.operator), F)
        _emit(cfg, {"averaging": algebra.is_algebra_averaging(R, X, cfg.seed), **F.to_json()})
    elif a.action == "monomial-search":
        if cfg.field != "Fp":
            raise PreconditionError("monomial-search needs --field Fp --p P")
        found = algebra.monomial_rb_search(X, cfg.p, F(a.lam), cfg.max_space)
        lines = [dumps(m.to_json(F)) for m in found]
        lines.append(dumps({"summary": {"p": cfg.p, "lambda": F(a.lam), "count": len(found)}}))
        text = "\n".join(lines) + "\n"
        if cfg.output in (None, "-"):
            sys.stdout.write(text)
        else:
            Path(cfg.output).write_text(text)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rbracks", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    common.add_argument("--max-space", type=int, default=DEFAULT_MAX_SPACE,
                        help="census cap on candidate maps (env RBRACKS_MAX_SPACE)")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_ISO_N,
                        help="size cap for automorphism/isomorphism search")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--field", choices=("Q", "Fp"), default="Q")
    common.add_argument("--p", type=int, default=None, help="prime for --field Fp")
    common.add_argument("--seed", type=int, default=algebra.DEFAULT_SEED)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="build a table")
    b.add_argument("construction", choices=(
        "trivial", "dihedral", "cyclic", "symmetric", "group", "derived-group", "conj", "core",
        "alexander", "product", "semidirect", "holomorph", "union", "b-conjugation", "b-core",
        "multi-op"))
    b.add_argument("args", nargs="*")
    b.add_argument("-m", type=int, default=1, help="exponent for conj")
    b.add_argument("--phi", help="automorphism (alexander) or action file (semidirect)")
    b.add_argument("--spec", help="union spec file")
    b.add_argument("--operator", help="operator map, inline JSON or file")
    b.add_argument("-s", type=int, default=0)
    b.add_argument("-t", type=int, default=0)

    c = sub.add_parser("classify", parents=[common], help="classify a table")
    c.add_argument("table")
    c.add_argument("--subset", help="also test this subset for normality")
    c.add_argument("--other", help="also search an isomorphism to this table")

    s = sub.add_parser("search", parents=[common], help="operator census")
    s.add_argument("--kind", required=True, choices=ops.KINDS + ops.RELATIVE_KINDS + ("group-rb",))
    s.add_argument("table")
    s.add_argument("--relative", help="target rack A for relative kinds")
    s.add_argument("--phi", help="action file for relative kinds")
    s.add_argument("--weight", type=int, choices=(1, -1), default=1)

    v = sub.add_parser("verify", parents=[common], help="check a theorem on an input")
    v.add_argument("theorem", choices=sorted(THEOREMS))
    v.add_argument("inputs", nargs="+")
    v.add_argument("--operator")
    v.add_argument("--operator2")
    v.add_argument("--operators", help="JSON list of operator maps")
    v.add_argument("--phi")
    v.add_argument("--spec")
    v.add_argument("--factor", type=int, choices=(1, 2), default=1)
    v.add_argument("--fixed", type=int, default=0)

    r = sub.add_parser("census-report", parents=[common], help="censuses on dihedral quandles and groups")
    r.add_argument("--dihedral-max-n", type=int, default=6)
    r.add_argument("--groups", default="C2,C3,C5,S3")
    r.add_argument("--primes", default="2,3")
    r.add_argument("--monomial-max-n", type=int, default=3)

    al = sub.add_parser("algebra", parents=[common], help="rack algebra computations")
    al.add_argument("action", choices=("product", "extend", "rb-check", "averaging-check", "monomial-search"))
    al.add_argument("table")
    al.add_argument("--u")
    al.add_argument("--v")
    al.add_argument("--operator")
    al.add_argument("--lam", default="-1")
    return p


COMMANDS = {
    "build": cmd_build,
    "classify": cmd_classify,
    "search": cmd_search,
    "verify": cmd_verify,
    "census-report": cmd_census_report,
    "algebra": cmd_algebra,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = CommandConfig(
            command=a.command,
            output=a.output,
            kind=getattr(a, "kind", None),
            max_space=a.max_space,
            max_n=a.max_n,
            field=a.field,
            p=a.p,
            workers=a.workers,
            seed=a.seed,
        )
        return COMMANDS[a.command](a, cfg)
    except InputError as exc:
        print(f"rbracks: input error: {exc}", file=sys.stderr)
    except CapExceeded as exc:
        print(f"rbracks: cap exceeded: {exc}", file=sys.stderr)
    except (AxiomError, TableError) as exc:
        print(f"rbracks: invalid structure: {exc}", file=sys.stderr)
    except PreconditionError as exc:
        print(f"rbracks: precondition failed: {exc}", file=sys.stderr)
    except ClaimFalsified as exc:
        print(f"rbracks: FALSIFIED: {exc}", file=sys.stderr)
        return EXIT_FALSIFIED
    except (ValueError, IndexError) as exc:
        print(f"rbracks: usage error: {exc}", file=sys.stderr)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
