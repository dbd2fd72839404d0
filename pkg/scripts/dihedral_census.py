"""RB and averaging operator counts on dihedral quandles R_n, plus monomial censuses.

    python scripts/dihedral_census.py --max-n 7 --primes 2,3 --monomial-max-n 3
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from rbracks import algebra, operators as ops
from rbracks.constructions import dihedral


@dataclass
class CensusConfig:
    max_n: int = 7
    primes: tuple = (2, 3)
    monomial_max_n: int = 3
    workers: int = 1


def run(cfg: CensusConfig) -> dict:
    rows = []
    for n in range(1, cfg.max_n + 1):
        X = dihedral(n)
        row = {"n": n}
        t0 = time.perf_counter()
        for kind in ops.KINDS:
            row[kind] = ops.census(X, kind, cfg.workers).count
        row["seconds"] = round(time.perf_counter() - t0, 3)
        rows.append(row)
    mono = []
    for p in cfg.primes:
        for n in range(1, cfg.monomial_max_n + 1):
            for lam in (-1, 0, 1):
                found = algebra.monomial_rb_search(dihedral(n), p, lam)
                mono.append({"p": p, "n": n, "lambda": lam, "count": len(found)})
    return {"config": asdict(cfg), "dihedral": rows, "monomial": mono}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--primes", default="2,3")
    ap.add_argument("--monomial-max-n", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    a = ap.parse_args()
    cfg = CensusConfig(a.max_n, tuple(int(p) for p in a.primes.split(",")), a.monomial_max_n, a.workers)
    result = run(cfg)
    print(f"{'n':>3} {'rb':>8} {'avg-right':>10} {'avg-left':>9} {'sec':>7}")
    for r in result["dihedral"]:
        print(f"{r['n']:>3} {r['rb']:>8} {r['averaging-right']:>10} {r['averaging-left']:>9} {r['seconds']:>7}")
    for m in result["monomial"]:
        print(f"monomial F_{m['p']}[R_{m['n']}] lambda={m['lambda']}: {m['count']}")
    print(json.dumps(result, separators=(",", ":")))


if __name__ == "__main__":
    main()
