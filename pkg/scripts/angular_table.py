#!/usr/bin/env python3
"""Tabulate spherical-harmonic Renyi entropies across routes.

Prints R_p[Y_lm] for every 0 <= m <= l <= lmax and each requested order,
together with the route that produced it, and cross-checks the exact
routes against quadrature when the order sits on the half-integer lattice.

    python3 scripts/angular_table.py --lmax 4 --orders 0.5,2,3
"""

import argparse
import math

from oscent.angular import (AngularState, lambda_quadrature, renyi_angular,
                            shannon_angular)


def parse_args():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lmax", type=int, default=4)
    ap.add_argument("--orders", type=str, default="0.5,1,2,3",
                    help="comma-separated entropy orders (1 = Shannon)")
    ap.add_argument("--check", action="store_true",
                    help="print the gap against direct quadrature")
    return ap.parse_args()


def main():
    args = parse_args()
    orders = [float(tok) for tok in args.orders.split(",") if tok]
    head = f"{'l':>3} {'m':>3} {'p':>6} {'entropy':>18} {'method':>14}"
    if args.check:
        head += f" {'quad gap':>10}"
    print(head)
    print("-" * len(head))
    for l in range(args.lmax + 1):
        for m in range(l + 1):
            state = AngularState(l, m)
            for p in orders:
                if abs(p - 1.0) < 1e-12:
                    val = shannon_angular(state)
                    row = f"{l:>3} {m:>3} {p:>6.3g} {val:>18.12f} {'shannon':>14}"
                    print(row)
                    continue
                res = renyi_angular(state, p)
                row = (f"{l:>3} {m:>3} {p:>6.3g} {res.renyi:>18.12f} "
                       f"{res.method:>14}")
                if args.check:
                    quad = lambda_quadrature(state, p)
                    gap = abs(res.lambda_value - quad.lambda_value)
                    row += f" {gap:>10.2e}"
                if res.warnings:
                    row += "  [|.|]"
                print(row)
    print()
    print(f"uniform bound ln(4 pi) = {math.log(4.0 * math.pi):.12f}; "
          "rows marked [|.|] integrate the absolute power of a "
          "sign-changing factor")


if __name__ == "__main__":
    main()
