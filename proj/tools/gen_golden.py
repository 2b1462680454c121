#!/usr/bin/env python3
"""Regenerate data/golden/*.json from closed-form expressions.

The tables are written from the explicit formulas, independently of the C++
library, so `plumbtau paper-examples` compares two separate derivations.
"""

import json
import math
import pathlib
from fractions import Fraction

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "golden"


def q(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def m3():
    return {"rows": [
        {"class": [-3, 0], "tau": q(2)},
        {"class": [-1, 2], "tau": q(1)},
        {"class": [3, 0], "tau": q(0)},
    ]}


def nk():
    rows = []
    for k in range(1, 31):
        s1 = Fraction(k * k + 3 * k, 9)
        rows.append({
            "k": k,
            "tau_s1": q(s1),
            "tau_s0": q(Fraction(k * k, 9)),
            "tau_s2": q(Fraction(k * k - 3 * k, 9)),
            "integrality_fires": s1.denominator != 1,
            "metaboliser_fires_at_s2": True,
        })
    return {"rows": rows}


def l2d():
    rows = []
    for d in range(1, 11):
        hi, lo = Fraction(d * (d + 1), 2), Fraction(d * (d - 1), 2)
        rows.append({
            "d": d,
            "tau_max": q(hi),
            "tau_min": q(lo),
            "difference": q(hi - lo),
            "pl_bound": math.ceil(Fraction(d, 2)),
            "self_intersection": q(-d * d),
            "chern_j1": q(-d),
            "chern_j2": q(d),
            "tau_disks_j1": q(Fraction(d * (d + 1), 2)),
            "tau_disks_j2": q(Fraction(d * (d - 1), 2)),
            "tau_curve": q(Fraction(d * (d + 1), 2)),
        })
    return {"rows": rows}


def m3d():
    rows = []
    for d in range(1, 11):
        rows.append({
            "d": d,
            "self_intersection": q(-2 * d * d),
            "chern_j1": q(-2 * d),
            "chern_j2": q(2 * d),
            "tau_curve": q(Fraction(d * (d + 3), 2)),
            "conjugate_lower": q(Fraction(d * (d - 1), 2)),
            "conjugate_upper": q(Fraction(3 * d * (d - 1), 2)),
        })
    return {"rows": rows}


def eq72():
    return {"target": q(-2), "solutions": [[-3, 0], [-1, 2], [1, -2], [3, 0]]}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, table in [("m3", m3()), ("nk", nk()), ("l2d", l2d()), ("m3d", m3d()), ("eq72", eq72())]:
        (OUT / f"{name}.json").write_text(json.dumps(table, indent=1) + "\n")


if __name__ == "__main__":
    main()
