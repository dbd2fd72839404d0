"""Tabulate hypothesis flags against the classified B-conjugation and B-core groupoids.

Each row is one weight-1 RB-operator; rows where a groupoid is a rack or
quandle without its hypotheses are data on whether the implications reverse.

    python scripts/groupoid_hypotheses_survey.py --groups S3,C2xC2,C4,C6
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from rbracks import groups
from rbracks.constructions import constr_hypotheses, named_group


@dataclass
class SurveyConfig:
    groups: tuple = ("S3", "C2xC2", "C4", "C6")


def run(cfg: SurveyConfig) -> dict:
    table = {}
    for name in cfg.groups:
        G = named_group(name)
        tally = Counter()
        for B in groups.search_group_rb(G, 1):
            r = constr_hypotheses(G, B)
            tally[(r.h1, r.h2, r.h3, r.h4, r.conj_is_rack, r.conj_is_quandle, r.core_is_rack, r.core_is_quandle)] += 1
            assert not r.failures, (name, B, r.failures)
        table[name] = tally
    return table


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", default="S3,C2xC2,C4,C6")
    a = ap.parse_args()
    flag = lambda v: "T" if v else "."
    header = "H1 H2 H3 H4 | conj rack/quandle | core rack/quandle | count"
    for name, tally in run(SurveyConfig(tuple(a.groups.split(",")))).items():
        print(f"== {name}")
        print(header)
        for key, count in sorted(tally.items(), reverse=True):
            h, g = key[:4], key[4:]
            print(" " + "  ".join(flag(v) for v in h) + "  |      " + f"{flag(g[0])}/{flag(g[1])}"
                  + "          |      " + f"{flag(g[2])}/{flag(g[3])}" + f"          | {count}")
        converse = sum(c for k, c in tally.items() if (k[4] and not k[0]) or (k[6] and not k[2]))
        print(f"rows where a groupoid is a rack without its hypothesis: {converse}")


if __name__ == "__main__":
    main()
