"""Print every closed-form table family next to its brute-force oracle.

    python scripts/print_tables.py [--n-max 5]
"""

import argparse

from signed_mahonian import genfun as gf
from signed_mahonian.genfun import CharacterSelector as Chi, GroupSelector as G

FAMILIES = {
    "mahonian": (gf.macmahon_poly, lambda n: gf.sn_distribution(n, "maj")),
    "signed-mahonian": (gf.gessel_simion_poly, lambda n: gf.sn_distribution(n, "maj", Chi.SIGN)),
    "fmaj-b": (gf.poincare_b_poly, lambda n: gf.bn_distribution(n, "fmaj")),
    "signed-fmaj-b": (lambda n: gf.signed_fmaj_closed(n, Chi.SIGN),
                      lambda n: gf.bn_distribution(n, "fmaj", Chi.SIGN)),
    "subgroup-an": (lambda n: gf.subgroup_dist(G.AN, n), lambda n: gf.subgroup_oracle(G.AN, n)),
    "subgroup-dn": (lambda n: gf.subgroup_dist(G.DN, n), lambda n: gf.subgroup_oracle(G.DN, n)),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=5)
    args = ap.parse_args()
    bad = 0
    for name, (closed, oracle) in FAMILIES.items():
        print(f"# {name}")
        for n in range(1, args.n_max + 1):
            c, o = closed(n), oracle(n)
            mark = "ok" if c == o else "MISMATCH"
            bad += c != o
            print(f"  n={n} [{mark}] {c}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
