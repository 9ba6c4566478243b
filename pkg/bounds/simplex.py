"""
Exact phase-one simplex over Fractions.

Feasibility of {a_i·x (= | >=) b_i, x_j >= 0 except free variables}.
Bland's rule (lowest index enters, lowest basic index breaks ratio ties)
guarantees termination. An infeasible system comes back with Farkas
multipliers y satisfying
    y·A_j <= 0 on nonnegative columns, y·A_j = 0 on free columns,
    y_i >= 0 on '>=' rows, y·b > 0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

logger = logging.getLogger(__name__)

EQ = '=='
GE = '>='


@dataclass(frozen=True)
class LinearConstraint:
    coefficients: dict
    sense: str
    rhs: Fraction
    label: str

    def evaluate(self, point):
        return sum((c * point[j] for j, c in self.coefficients.items()), Fraction(0))

    def holds_at(self, point):
        value = self.evaluate(point)
        return value == self.rhs if self.sense == EQ else value >= self.rhs


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    point: tuple = None
    certificate: tuple = None
    pivots: int = 0


def violated_constraints(constraints, point, free=()):
    """Labels of constraints (or sign bounds) the point breaks."""
    free = set(free)
    broken = [c.label for c in constraints if not c.holds_at(point)]
    broken += [f"x{j} >= 0" for j, v in enumerate(point) if j not in free and v < 0]
    return broken


def certificate_is_valid(num_vars, constraints, y, free=()):
    free = set(free)
    if len(y) != len(constraints):
        return False
    for yi, c in zip(y, constraints):
        if c.sense == GE and yi < 0:
            return False
    column = [Fraction(0)] * num_vars
    for yi, c in zip(y, constraints):
        if yi:
            for j, a in c.coefficients.items():
                column[j] += yi * a
    for j, value in enumerate(column):
        if j in free and value != 0:
            return False
        if j not in free and value > 0:
            return False
    return sum((yi * c.rhs for yi, c in zip(y, constraints)), Fraction(0)) > 0


def solve_feasibility(num_vars, constraints, free=()):
    """Phase one on [structural | split free | surplus | artificial] columns."""
    free = sorted(set(free))
    m = len(constraints)
    negative_col = {j: num_vars + k for k, j in enumerate(free)}
    ge_rows = [i for i, c in enumerate(constraints) if c.sense == GE]
    surplus_col = {i: num_vars + len(free) + k for k, i in enumerate(ge_rows)}
    first_artificial = num_vars + len(free) + len(ge_rows)
    width = first_artificial + m

    tableau, rhs, flips = [], [], []
    for i, c in enumerate(constraints):
        row = [Fraction(0)] * width
        for j, a in c.coefficients.items():
            row[j] += a
            if j in negative_col:
                row[negative_col[j]] -= a
        if i in surplus_col:
            row[surplus_col[i]] = Fraction(-1)
        b = Fraction(c.rhs)
        flip = -1 if b < 0 else 1
        if flip < 0:
            row = [-v for v in row]
            b = -b
        row[first_artificial + i] = Fraction(1)
        tableau.append(row)
        rhs.append(b)
        flips.append(flip)
    basis = [first_artificial + i for i in range(m)]

    # reduced costs of min Σ artificials
    reduced = [Fraction(0)] * width
    for j in range(first_artificial):
        reduced[j] = -sum(tableau[i][j] for i in range(m))
    for i in range(m):
        reduced[first_artificial + i] = Fraction(0)

    pivots = 0
    while True:
        entering = next((j for j in range(first_artificial) if reduced[j] < 0), None)
        if entering is None:
            break
        leaving, best = None, None
        for i in range(m):
            a = tableau[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    leaving, best = i, ratio
        if leaving is None:
            # phase-one objective is bounded below, so an entering column always has a positive entry
            raise RuntimeError("unbounded phase-one direction")
        _pivot(tableau, rhs, reduced, leaving, entering)
        basis[leaving] = entering
        pivots += 1

    infeasibility = sum((rhs[i] for i in range(m) if basis[i] >= first_artificial), Fraction(0))
    logger.info(f"[LP] Phase one finished after {pivots} pivots, residual {infeasibility}")
    if infeasibility > 0:
        # π_i = 1 - reduced cost of artificial i; multipliers in the original row signs
        certificate = tuple(flips[i] * (1 - reduced[first_artificial + i]) for i in range(m))
        return FeasibilityResult(False, certificate=certificate, pivots=pivots)

    values = [Fraction(0)] * width
    for i, j in enumerate(basis):
        values[j] = rhs[i]
    point = [values[j] for j in range(num_vars)]
    for j, col in negative_col.items():
        point[j] -= values[col]
    return FeasibilityResult(True, point=tuple(point), pivots=pivots)


def _pivot(tableau, rhs, reduced, r, c):
    row = tableau[r]
    piv = row[c]
    nonzero = [j for j, v in enumerate(row) if v]
    for j in nonzero:
        row[j] /= piv
    rhs[r] /= piv
    for i, other in enumerate(tableau):
        if i == r:
            continue
        f = other[c]
        if f:
            for j in nonzero:
                other[j] -= f * row[j]
            rhs[i] -= f * rhs[r]
    f = reduced[c]
    if f:
        for j in nonzero:
            reduced[j] -= f * row[j]
