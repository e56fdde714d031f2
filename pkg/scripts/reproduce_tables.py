#!/usr/bin/env python3
"""Print the count tables and the small worked listings.

    python3 scripts/reproduce_tables.py --n-max 7
"""

import argparse
from dataclasses import dataclass

from dnarayana.cli import catalan_table, narayana_table
from dnarayana.families import get_family
from dnarayana.monomials import enumerate_monomials, to_text
from dnarayana.permutations import enumerate_P, format_permutation


@dataclass
class TablesConfig:
    n_max: int = 7
    narayana_arities: tuple = (2, 3)
    catalan_arities: tuple = (2, 3, 4, 5, 6)
    listings: bool = True


def listings():
    print("ternary monomials with three operations, by number of L's")
    for k in range(4):
        ms = [to_text(m) for m in enumerate_monomials(3, 3, k)]
        print(f"  k={k} ({len(ms)}): {' '.join(ms)}")
    perms = [format_permutation(p) for r in range(1, 6) for p in enumerate_P(3, 5, r)]
    print(f"231-avoiding permutations of [5] with odd decreasing runs ({len(perms)}):")
    print("  " + " ".join(perms))
    fam = get_family("ldyck")
    paths = [fam.format(q, 3) for k in range(3) for q in fam.enumerate(3, 2, k)]
    print(f"labelled ternary Dyck paths of semilength 3 ({len(paths)}):")
    print("  " + " ".join(paths))


def run(cfg: TablesConfig):
    for d in cfg.narayana_arities:
        print(f"N_{d}(n,k)")
        print(narayana_table(d, cfg.n_max))
        print()
    print("C_d(n)")
    print(catalan_table(cfg.catalan_arities, cfg.n_max))
    if cfg.listings:
        print()
        listings()


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n-max", type=int, default=TablesConfig.n_max)
    p.add_argument("--no-listings", action="store_true")
    args = p.parse_args()
    run(TablesConfig(n_max=args.n_max, listings=not args.no_listings))


if __name__ == "__main__":
    main()
