from fractions import Fraction

import pandas as pd

from bounds.enumerators import (
    aggregate,
    distance_from_enumerators,
    macwilliams_residual,
    shadow_values,
)


def fraction_line(values):
    return ' '.join(str(Fraction(v)) for v in values)


def build_enumeration_payload(W, parameters):
    """
    Report dictionary for `enumerate`.

    Arguments:
    - W: WeightDistributionSet
    - parameters: code parameters text, e.g. "[[7,1:1]]"
    """
    residual = macwilliams_residual(W)
    A, B = aggregate(W)
    pairs = [
        {
            "a": a,
            "b": b,
            "A": list(dist.A),
            "B": list(dist.B),
            "macwilliams_residual": list(residual[(a, b)]),
            "shadow": list(shadow_values(dist.A, 2, W.n)),
        }
        for (a, b), dist in sorted(W.per_pair.items())
    ]
    return {
        "parameters": parameters,
        "n": W.n,
        "K": W.K,
        "M": W.M,
        "pairs": pairs,
        "A": list(A),
        "B": list(B),
        "shadow": list(shadow_values(A, 2, W.n)),
        "macwilliams_zero": all(not any(r) for r in residual.values()),
        "distance": distance_from_enumerators(W),
    }


def enumeration_lines(payload):
    lines = [f"{payload['parameters']}  n={payload['n']} K={payload['K']} M={payload['M']}"]
    for pair in payload["pairs"]:
        label = f"({pair['a']},{pair['b']})"
        lines.append(f"A{label}: {fraction_line(pair['A'])}")
        lines.append(f"B{label}: {fraction_line(pair['B'])}")
    lines.append(f"A: {fraction_line(payload['A'])}")
    lines.append(f"B: {fraction_line(payload['B'])}")
    lines.append(f"shadow: {fraction_line(payload['shadow'])}")
    lines.append(f"MacWilliams residual: {'0' if payload['macwilliams_zero'] else 'NONZERO'}")
    lines.append(f"distance (enumerators): {payload['distance']}")
    return lines


def build_lp_payload(result):
    return {
        "instance": result.instance,
        "status": result.status,
        "witness": result.witness,
        "certificate": result.certificate,
        "pivots": result.pivots,
    }


def lp_lines(result):
    inst = result.instance
    flags = f"shadow={'on' if inst.shadow else 'off'}, nested={'on' if inst.nested else 'off'}"
    lines = [f"{inst.label} [{flags}]: {result.status.label}"]
    values = result.witness if result.is_feasible else result.certificate
    title = "witness" if result.is_feasible else "certificate (Farkas multipliers)"
    lines.append(f"{title}:")
    for name, value in values.items():
        if value:
            lines.append(f"  {name} = {Fraction(value)}")
    return lines


def sweep_frame(table):
    """Pivot of the sweep: one block per n, rows k, columns m, cells F/I."""
    frame = pd.DataFrame([
        {"n": e.n, "k": e.k, "m": e.m, "status": "F" if e.feasible else "I"}
        for e in table.entries
    ])
    return frame.pivot_table(index=["n", "k"], columns="m", values="status", aggfunc="first", fill_value="")


def sweep_lines(table):
    lines = [f"d = {table.d}  (F feasible, I infeasible; rows k, columns m)"]
    if table.entries:
        lines.extend(sweep_frame(table).to_string().splitlines())
    for n in sorted({e.n for e in table.entries}):
        frontier = ', '.join(f"(K={K}, M={M})" for K, M in table.frontier(n))
        lines.append(f"n={n} frontier: {frontier or 'none'}")
    violations = table.monotonicity_violations()
    lines.append(f"monotonicity violations: {len(violations)}")
    return lines
