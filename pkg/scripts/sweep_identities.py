#!/usr/bin/env python3
"""Run identity checks over a parameter grid and print one line per check.

    python scripts/sweep_identities.py --max-a 3 --max-b 2 --max-n 2 main lgv factorization

Exits 1 if any line is a FAIL.
"""

import argparse
import sys
from itertools import combinations

from lozenge.formulas import dented_half_count, vplus_tileable
from lozenge.identities import (
    KuoForm,
    Report,
    check_factorization,
    check_forced_dents,
    check_halfshift,
    check_kuo_four,
    single_dent_configuration,
    two_dent_configuration,
    vplus_families,
)
from lozenge.lgv import path_matrix_V, path_matrix_Vplus, path_matrix_VplusBar
from lozenge.oracle import count_tilings
from lozenge.poly import degree_bound_fplus
from lozenge.regions import V, Vplus, VplusBar, all_dent_vectors, symmetric_dented_hexagon

CHECKS = ("main", "lgv", "factorization", "kuo", "forced-dents", "halfshift")


def half_grid(max_b, max_n):
    for b in range(max_b + 1):
        for n in range(max_n + 1):
            for u in all_dent_vectors(b + 2 * n, n):
                yield b, u


def sweep(name, max_a, max_b, max_n) -> Report:
    rep = Report()
    if name == "halfshift":
        for b, u in half_grid(max_b, max_n):
            fam, bar = vplus_families(b, u)
            hint = degree_bound_fplus(b, len(u), u) if vplus_tileable(len(u), u) else None
            rep.extend(check_halfshift(fam, bar, hint, label=f"b={b} u={list(u)}"))
        return rep
    if name == "kuo":
        for a in range(max_a + 1):
            for b in range(max_b + 1):
                for n in range(2, max_n + 2):
                    for u in combinations(range(3, b + 2 * n), n):
                        r, quad = two_dent_configuration(a, b, u)
                        rep.extend(check_kuo_four(r, *quad, KuoForm.PRODUCT, label=f"a={a} b={b} u={list(u)}"))
                for u in range(3, b + 2):
                    r, quad = single_dent_configuration(a, b, u)
                    rep.extend(check_kuo_four(r, *quad, KuoForm.SUM, label=f"a={a} b={b} u=[{u}]"))
        return rep
    for a in range(max_a + 1):
        for b, u in half_grid(max_b, max_n):
            params = f"a={a} b={b} u={list(u)}"
            if name == "main":
                f0 = count_tilings(V(0, b, u))
                rep.add("main", params, count_tilings(V(a, b, u)), dented_half_count(a, b, u, f0))
            elif name == "lgv":
                rep.add("lgv-V", params, path_matrix_V(a, b, u).det(), count_tilings(V(a, b, u)))
                rep.add("lgv-Vplus", params, path_matrix_Vplus(a, b, u).det(), count_tilings(Vplus(a, b, u)))
                rep.add("lgv-VplusBar", params, path_matrix_VplusBar(a, b, u).det(), count_tilings(VplusBar(a, b, u)))
            elif name == "factorization":
                h = symmetric_dented_hexagon(2 * a, b, u)
                if len(h) and h.imbalance() == 0:
                    rep.extend(check_factorization(h, params))
            elif name == "forced-dents":
                rep.extend(check_forced_dents(a, b, u))
    return rep


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("checks", nargs="*", metavar="CHECK", help=f"any of {', '.join(CHECKS)}; default all")
    p.add_argument("--max-a", type=int, default=3)
    p.add_argument("--max-b", type=int, default=2)
    p.add_argument("--max-n", type=int, default=2)
    args = p.parse_args(argv)
    unknown = set(args.checks) - set(CHECKS)
    if unknown:
        p.error(f"unknown check {sorted(unknown)[0]!r}")
    ok = True
    for name in args.checks or CHECKS:
        rep = sweep(name, args.max_a, args.max_b, args.max_n)
        if rep.lines:
            print(rep.text())
        ok = ok and rep.ok
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
