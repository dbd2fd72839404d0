"""Weight +-1 RB-operator counts on small groups, listing operators outside B(g)=e and B(g)=g^-1.

    python scripts/group_rb_census.py --groups C2,C3,C4,C5,C6,S3,C2xC2
"""

import argparse
from dataclasses import dataclass

from rbracks import groups
from rbracks.constructions import named_group


@dataclass
class GroupCensusConfig:
    groups: tuple = ("C2", "C3", "C4", "C5", "C6", "S3", "C2xC2")
    workers: int = 1
    show_maps: bool = False


def run(cfg: GroupCensusConfig) -> list:
    out = []
    for name in cfg.groups:
        G = named_group(name)
        elementary = set(groups.elementary_operators(G))
        ends = {f for f in _endomorphisms(G)}
        for w in (1, -1):
            found = groups.search_group_rb(G, w, cfg.workers)
            extra = [b for b in found if b not in elementary]
            out.append({
                "group": name,
                "weight": w,
                "count": len(found),
                "non_elementary": extra,
                "endomorphisms_among_found": sum(b in ends for b in found),
            })
    return out


def _endomorphisms(G):
    import itertools

    for f in itertools.product(range(G.n), repeat=G.n):
        if groups.is_group_homomorphism(f, G, G):
            yield f


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", default="C2,C3,C4,C5,C6,S3,C2xC2")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--show-maps", action="store_true")
    a = ap.parse_args()
    cfg = GroupCensusConfig(tuple(a.groups.split(",")), a.workers, a.show_maps)
    for r in run(cfg):
        print(f"{r['group']:>8} weight {r['weight']:+d}: {r['count']:3d} operators, "
              f"{len(r['non_elementary'])} non-elementary, {r['endomorphisms_among_found']} endomorphisms")
        if cfg.show_maps:
            for b in r["non_elementary"]:
                print("          ", list(b))


if __name__ == "__main__":
    main()
