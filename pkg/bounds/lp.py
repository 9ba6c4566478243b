"""
Linear-programming bounds for ((n,K:M,d))_q hybrid codes.

Variables are the pair-class averages A^D_j, A^O_j, B^D_j, B^O_j
(j = 0..n): D over diagonal pairs (a, a), O over a ≠ b. The constraint set
is invariant under relabelling the M inner codes, so averaging any feasible
per-pair point over all relabellings gives a feasible symmetric point; the
classes lose nothing. A^O is free (off-diagonal A terms may be negative);
every other variable is nonnegative. The O class is dropped when M = 1.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from django.db import models

from bounds.enumerators import krawtchouk
from bounds.simplex import (
    EQ,
    GE,
    LinearConstraint,
    certificate_is_valid,
    solve_feasibility,
    violated_constraints,
)
from codes.conf import qec_setting
from codes.exceptions import InvalidInstance, LPVerificationError

logger = logging.getLogger(__name__)


class LPStatus(models.TextChoices):
    FEASIBLE = 'feasible', 'Feasible'
    INFEASIBLE = 'infeasible', 'Infeasible'


@dataclass(frozen=True)
class LPInstance:
    n: int
    K: int
    M: int
    d: int
    q: int = 2
    shadow: bool = None
    nested: bool = False

    def __post_init__(self):
        for name in ('n', 'K', 'M', 'q'):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise InvalidInstance(f"{name} must be a positive integer, got {value!r}")
        if not 1 <= self.d <= self.n + 1:
            raise InvalidInstance(f"d must lie in 1..{self.n + 1}, got {self.d}")
        if self.shadow is None:
            object.__setattr__(self, 'shadow', self.q == 2)
        if self.shadow and self.q != 2:
            raise InvalidInstance("shadow inequalities are stated for qubit codes only")

    @classmethod
    def stabilizer(cls, n, k, m, d, q=2, shadow=None, nested=True):
        """[[n,k:m,d]]_q: K = q^k, M = q^m, nested condition on by default."""
        return cls(n, q ** k, q ** m, d, q, shadow, nested)

    @property
    def label(self):
        suffix = '' if self.q == 2 else f"_{self.q}"
        return f"(({self.n},{self.K}:{self.M},{self.d})){suffix}"


@dataclass(frozen=True)
class ConstraintSystem:
    instance: LPInstance
    variables: tuple
    constraints: tuple
    free: tuple = ()

    def index(self, name):
        return self.variables.index(name)


@dataclass(frozen=True)
class LPResult:
    instance: LPInstance
    status: str
    witness: dict = field(default=None)
    certificate: dict = field(default=None)
    pivots: int = 0

    @property
    def is_feasible(self):
        return self.status == LPStatus.FEASIBLE


def _classes(M):
    return ('D', 'O') if M > 1 else ('D',)


def build_constraints(inst):
    n, K, M, d, q = inst.n, inst.K, inst.M, inst.d, inst.q
    classes = _classes(M)
    names = [f"{kind}{cls}[{j}]" for kind in ('A', 'B') for cls in classes for j in range(n + 1)]
    col = {name: i for i, name in enumerate(names)}

    def A(cls, j):
        return col[f"A{cls}[{j}]"]

    def B(cls, j):
        return col[f"B{cls}[{j}]"]

    rows = []

    def add(coefficients, sense, rhs, label):
        merged = {}
        for j, a in coefficients:
            merged[j] = merged.get(j, Fraction(0)) + Fraction(a)
        merged = {j: a for j, a in merged.items() if a}
        rows.append(LinearConstraint(merged, sense, Fraction(rhs), label))

    # A_j = (A^D_j + (M-1) A^O_j) / M,  B_j = B^D_j + (M-1) B^O_j
    def aggregate_A(j, scale=1):
        terms = [(A('D', j), Fraction(scale, M))]
        if M > 1:
            terms.append((A('O', j), Fraction(scale * (M - 1), M)))
        return terms

    def aggregate_B(j, scale=1):
        terms = [(B('D', j), scale)]
        if M > 1:
            terms.append((B('O', j), scale * (M - 1)))
        return terms

    for cls in classes:
        add([(A(cls, 0), 1)], EQ, 1, f"A{cls}_0 = 1")
    add([(B('D', 0), 1)], EQ, 1, "BD_0 = 1")
    if M > 1:
        add([(B('O', 0), 1)], EQ, 0, "BO_0 = 0")

    for j in range(1, min(d, n + 1)):
        add([(A('D', j), 1), (B('D', j), -1)], EQ, 0, f"AD_{j} = BD_{j}")
        if M > 1:
            add([(B('O', j), 1)], EQ, 0, f"BO_{j} = 0")

    for j in range(n + 1):
        add([(B('D', j), 1), (A('D', j), -1)], GE, 0, f"AD_{j} <= BD_{j}")
        if M > 1:
            add(aggregate_A(j), GE, 0, f"A_{j} >= 0")
            add(aggregate_B(j) + aggregate_A(j, -1), GE, 0, f"A_{j} <= B_{j}")
            if inst.nested:
                add([(A('D', j), 1)] + aggregate_A(j, -1), GE, 0, f"A_{j} <= AD_{j}")

    scale = Fraction(K, q ** n)
    for cls in classes:
        for j in range(n + 1):
            terms = [(B(cls, j), 1)]
            terms += [(A(cls, r), -scale * krawtchouk(q, n, j, r)) for r in range(n + 1)]
            add(terms, EQ, 0, f"MacWilliams {cls} j={j}")
        if inst.shadow:
            for j in range(n + 1):
                terms = [(A(cls, r), (-1) ** r * krawtchouk(q, n, j, r)) for r in range(n + 1)]
                add(terms, GE, 0, f"shadow {cls} j={j}")

    free = tuple(A('O', j) for j in range(n + 1)) if M > 1 else ()
    return ConstraintSystem(inst, tuple(names), tuple(rows), free)


def check_point(system, point):
    """Violated constraint labels for an assignment (dict by name or tuple)."""
    if isinstance(point, dict):
        point = tuple(Fraction(point[name]) for name in system.variables)
    return violated_constraints(system.constraints, point, system.free)


def check_certificate(system, certificate):
    if isinstance(certificate, dict):
        certificate = tuple(Fraction(certificate.get(c.label, 0)) for c in system.constraints)
    return certificate_is_valid(len(system.variables), system.constraints, certificate, system.free)


def feasible(inst):
    """Decide feasibility exactly and re-verify the witness or certificate."""
    system = build_constraints(inst)
    result = solve_feasibility(len(system.variables), system.constraints, system.free)
    if result.feasible:
        broken = check_point(system, result.point)
        if broken:
            raise LPVerificationError(f"LPVerificationError: witness breaks {broken[:3]}")
        witness = dict(zip(system.variables, result.point))
        logger.info(f"[LP] {inst.label} feasible after {result.pivots} pivots")
        return LPResult(inst, LPStatus.FEASIBLE, witness=witness, pivots=result.pivots)

    if not check_certificate(system, result.certificate):
        raise LPVerificationError("LPVerificationError: Farkas certificate does not verify")
    certificate = {
        c.label: y for c, y in zip(system.constraints, result.certificate) if y
    }
    logger.info(f"[LP] {inst.label} infeasible after {result.pivots} pivots")
    return LPResult(inst, LPStatus.INFEASIBLE, certificate=certificate, pivots=result.pivots)


def point_from_distributions(W):
    """LP assignment from a code's symmetrized per-pair distributions."""
    point = {}
    for key, values in W.symmetrized().items():
        for j, v in enumerate(values):
            point[f"{key}[{j}]"] = v
    return point


# ======================================================================
# Sweeps
# ======================================================================
@dataclass(frozen=True)
class SweepEntry:
    n: int
    k: int
    m: int
    K: int
    M: int
    feasible: bool


@dataclass(frozen=True)
class SweepTable:
    d: int
    entries: tuple

    def for_length(self, n):
        return [e for e in self.entries if e.n == n]

    def frontier(self, n):
        """Feasible (K, M) not dominated by another feasible point at this length."""
        feasible_points = {(e.k, e.m) for e in self.for_length(n) if e.feasible}
        return sorted(
            (1 << k, 1 << m)
            for k, m in feasible_points
            if (k + 1, m) not in feasible_points and (k, m + 1) not in feasible_points
        )

    def monotonicity_violations(self):
        """Infeasible points whose doubled K or M is reported feasible."""
        status = {(e.n, e.k, e.m): e.feasible for e in self.entries}
        violations = []
        for (n, k, m), ok in status.items():
            if ok:
                continue
            for nxt in ((n, k + 1, m), (n, k, m + 1)):
                if status.get(nxt):
                    violations.append(((n, k, m), nxt))
        return violations


def _sweep_task(args):
    n, k, m, d, q, nested = args
    inst = LPInstance.stabilizer(n, k, m, d, q=q, nested=nested)
    return SweepEntry(n, k, m, inst.K, inst.M, feasible(inst).is_feasible)


def sweep(n_values, d, q=2, nested=True, workers=None):
    """Feasibility over K = q^k, M = q^m with k + m <= n, for each length."""
    if workers is None:
        workers = qec_setting('THREADS')
    tasks = [
        (n, k, m, d, q, nested)
        for n in n_values if d <= n + 1
        for m in range(n + 1)
        for k in range(n - m + 1)
    ]
    logger.info(f"[LP] Sweeping {len(tasks)} instances at d={d}")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(_sweep_task, tasks))
    else:
        entries = [_sweep_task(t) for t in tasks]
    return SweepTable(d, tuple(entries))
