#!/usr/bin/env python3
"""Tabulate enumerated f-vectors of the minimiser families against the closed forms.

For each d and s, prints f(M(s,d-s)) next to phi, and f(Pm), f(TA), f(Z)
pyramid towers next to zeta, marking every k where they differ.
"""
import argparse

from polyforge import families as fam
from polyforge.formulas import phi, zeta


def row(label, f, ref):
    marks = "".join(" " if a == b else "*" for a, b in zip(f, ref))
    print(f"  {label:14s} {list(f)!s:40s} {marks}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=6)
    args = ap.parse_args()
    for d in range(3, args.dmax + 1):
        for s in range(2, d + 1):
            print(f"d={d} s={s}  (* marks k with f_k != closed form)")
            row("phi", [phi(k, d, s) for k in range(d)], [phi(k, d, s) for k in range(d)])
            row("M(s,d-s)", fam.triplex(s, d - s).f_vector(), [phi(k, d, s) for k in range(d)])
            if s >= 3:
                z = [zeta(k, d, s) for k in range(d)]
                row("zeta", z, z)
                row("Pm(s-1,d+1-s)", fam.pentasm_pyr(s - 1, d + 1 - s).f_vector(), z)
                row("TA(s,d-s)", fam.ta_pyr(s, d - s).f_vector(), z)
                if s < d:
                    row("Z(s+1,d-s-1)", fam.z_pyr(s + 1, d - s - 1).f_vector(), z)


if __name__ == "__main__":
    main()
