"""
Signed stabilizer groups.

A group is kept as its generators plus a signed, fully reduced row echelon
basis. Pivots are taken on the packed vector x | z << n, lowest bit first,
so X columns of qubit 0, 1, ... come before Z columns.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from codes import gf2
from codes.conf import qec_setting
from codes.exceptions import (
    AnticommutingPair,
    CapExceeded,
    DependentGeneratorWithSignConflict,
    InvalidParameter,
    LengthMismatch,
    NonHermitianGenerator,
)
from codes.pauli import PauliOperator, commutes, pauli_from_string

logger = logging.getLogger(__name__)


# ======================================================================
# Result types
# ======================================================================
@dataclass(frozen=True)
class NotInRowSpace:
    pass


@dataclass(frozen=True)
class InGroupWithPhase:
    """The unsigned operator lies in the group; `element` is the signed member."""

    phase: int
    element: PauliOperator


@dataclass(frozen=True)
class Found:
    weight: int
    witness: PauliOperator


@dataclass(frozen=True)
class NoneUpTo:
    w_max: int


@dataclass(frozen=True)
class LogicalPair:
    z: PauliOperator
    x: PauliOperator


# ======================================================================
# Stabilizer group
# ======================================================================
@dataclass(frozen=True, eq=False)
class StabilizerGroup:
    n: int
    generators: tuple
    basis: tuple
    pivots: tuple

    @classmethod
    def trivial(cls, n):
        return cls(n, (), (), ())

    @classmethod
    def from_strings(cls, rows):
        return build_group([pauli_from_string(r) for r in rows])

    @property
    def rank(self):
        return len(self.basis)

    @property
    def code_dimension_log2(self):
        return self.n - self.rank

    @property
    def vectors(self):
        return [b.symplectic for b in self.basis]

    def residual(self, v):
        return gf2.reduce(v, self.vectors, self.pivots)

    def row_space_contains(self, v):
        if isinstance(v, PauliOperator):
            v = v.symplectic
        return self.residual(v) == 0

    def contains(self, P):
        if P.n != self.n:
            raise LengthMismatch(self.n, P.n)
        v = P.symplectic
        element = PauliOperator.identity(self.n)
        for row, p in zip(self.basis, self.pivots):
            if (v >> p) & 1:
                v ^= row.symplectic
                element = element * row
        if v:
            return NotInRowSpace()
        return InGroupWithPhase(element.phase, element)

    def signed_element(self, v):
        """The signed group member with unsigned vector v, or None."""
        found = self.contains(PauliOperator.from_symplectic(self.n, v))
        return found.element if isinstance(found, InGroupWithPhase) else None

    def same_row_space(self, other):
        return self.n == other.n and self.vectors == other.vectors

    def __iter__(self):
        return enumerate_group(self)

    def __str__(self):
        return '<' + ', '.join(str(g) for g in self.generators) + '>'


def _signed_reduce(generators):
    """
    Signed Gaussian elimination.

    Each working row carries the mask of input rows it is a product of, so a
    combination collapsing onto -I can be named.
    """
    n = generators[0].n
    basis, pivots, masks = [], [], []
    dropped = []
    for idx, g in enumerate(generators):
        current, mask = g, 1 << idx
        for k, (row, p) in enumerate(zip(basis, pivots)):
            if (current.symplectic >> p) & 1:
                current = current * row
                mask ^= masks[k]
        v = current.symplectic
        if not v:
            rows = [i + 1 for i in range(len(generators)) if (mask >> i) & 1]
            if current.phase != 0:
                raise DependentGeneratorWithSignConflict(rows)
            dropped.append(idx + 1)
            continue
        p = gf2.lowest_bit(v)
        for k, row in enumerate(basis):
            if (row.symplectic >> p) & 1:
                basis[k] = row * current
                masks[k] ^= mask
        basis.append(current)
        pivots.append(p)
        masks.append(mask)
    if dropped:
        logger.warning(f"[STABILIZER] Dropped redundant generators {dropped} on n={n}")
    order = sorted(range(len(basis)), key=pivots.__getitem__)
    return tuple(basis[i] for i in order), tuple(pivots[i] for i in order), dropped


def build_group(generators):
    """
    Validate generators and build the signed reduced basis.

    Errors: NonHermitianGenerator, AnticommutingPair(i, j) (1-based),
    DependentGeneratorWithSignConflict. Consistent redundant generators are
    dropped with a warning, so `generators` holds exactly `rank` rows in
    input order.
    """
    generators = tuple(generators)
    if not generators:
        raise InvalidParameter("a stabilizer group needs at least one generator")
    n = generators[0].n
    for g in generators:
        if g.n != n:
            raise LengthMismatch(n, g.n)
    for idx, g in enumerate(generators):
        if not g.is_hermitian:
            raise NonHermitianGenerator(idx + 1)
    for i, j in combinations(range(len(generators)), 2):
        if not commutes(generators[i], generators[j]):
            raise AnticommutingPair(i + 1, j + 1)
    basis, pivots, dropped = _signed_reduce(generators)
    kept = tuple(g for idx, g in enumerate(generators, start=1) if idx not in dropped)
    return StabilizerGroup(n, kept, basis, pivots)


def syndrome(S, E):
    """1 for every generator of S anticommuting with E."""
    return tuple(0 if commutes(g, E) else 1 for g in S.generators)


# ======================================================================
# Centralizer and logical operators
# ======================================================================
def swap_halves(v, n):
    mask = (1 << n) - 1
    return (v >> n) | ((v & mask) << n)


def symplectic_product(u, v, n):
    return gf2.parity(u & swap_halves(v, n))


def commutant_vectors(vectors, n):
    """Basis of the symplectic complement of span(vectors) in GF(2)^{2n}."""
    return gf2.nullspace([swap_halves(v, n) for v in vectors], 2 * n)


def centralizer_basis(S):
    """Hermitian operators spanning C(S); there are 2n - rank of them."""
    return [PauliOperator.from_symplectic(S.n, v) for v in commutant_vectors(S.vectors, S.n)]


def logical_operators(S):
    """
    Canonical logical pairs (Z̄_j, X̄_j), j = 1..n - rank.

    Representatives of C(S)/S are taken from the centralizer basis reduced
    modulo S, then paired by symplectic Gram–Schmidt.
    """
    n = S.n
    span_rows, span_pivots = list(S.vectors), list(S.pivots)
    representatives = []
    for c in commutant_vectors(S.vectors, n):
        residual = gf2.reduce(c, span_rows, span_pivots)
        if not residual:
            continue
        representatives.append(residual)
        span_rows, span_pivots = gf2.row_reduce(span_rows + [residual])

    pairs = []
    pool = representatives
    while pool:
        a = pool.pop(0)
        partner = next((i for i, b in enumerate(pool) if symplectic_product(a, b, n)), None)
        if partner is None:
            raise RuntimeError("centralizer quotient is degenerate")
        b = pool.pop(partner)
        pool = [
            v ^ (a if symplectic_product(v, b, n) else 0) ^ (b if symplectic_product(v, a, n) else 0)
            for v in pool
        ]
        pairs.append(LogicalPair(
            z=PauliOperator.from_symplectic(n, a),
            x=PauliOperator.from_symplectic(n, b),
        ))
    return pairs


# ======================================================================
# Enumeration, intersection, traces
# ======================================================================
def _gray_code_walk(n, basis):
    element = PauliOperator.identity(n)
    yield element
    for step in range(1, 1 << len(basis)):
        element = element * basis[gf2.lowest_bit(step)]
        yield element


def enumerate_group(S, cap=None):
    """All 2^rank signed elements, identity first, in Gray-code order."""
    if cap is None:
        cap = 1 << qec_setting('GROUP_RANK_CAP')
    if (1 << S.rank) > cap:
        raise CapExceeded(f"CapExceeded: group of rank {S.rank} has more than {cap} elements")
    return _gray_code_walk(S.n, S.basis)


@dataclass(frozen=True, eq=False)
class GroupIntersection:
    """
    Unsigned intersection of two groups.

    `elements_a[i]` and `elements_b[i]` are the signed members of each group
    over the same unsigned basis vector.
    """

    n: int
    elements_a: tuple
    elements_b: tuple

    @property
    def rank(self):
        return len(self.elements_a)

    @property
    def basis_signs(self):
        return tuple(a.sign * b.sign for a, b in zip(self.elements_a, self.elements_b))

    @property
    def sign_sum(self):
        """Σ over the intersection of σ_a σ_b; the character sums to 2^rank or 0."""
        if all(s == 1 for s in self.basis_signs):
            return 1 << self.rank
        return 0

    def pairs(self, cap=None):
        if cap is None:
            cap = 1 << qec_setting('GROUP_RANK_CAP')
        if (1 << self.rank) > cap:
            raise CapExceeded(f"CapExceeded: intersection of rank {self.rank} exceeds {cap}")
        return zip(_gray_code_walk(self.n, self.elements_a), _gray_code_walk(self.n, self.elements_b))


def intersect(Sa, Sb):
    """Zassenhaus intersection of the unsigned groups, with both sign labellings."""
    if Sa.n != Sb.n:
        raise LengthMismatch(Sa.n, Sb.n)
    n = Sa.n
    width = 2 * n
    rows = [v | (v << width) for v in Sa.vectors] + list(Sb.vectors)
    basis, pivots = gf2.row_reduce(rows)
    common = [row >> width for row, p in zip(basis, pivots) if p >= width]
    common, _ = gf2.row_reduce(common)
    elements_a = tuple(Sa.signed_element(v) for v in common)
    elements_b = tuple(Sb.signed_element(v) for v in common)
    return GroupIntersection(n, elements_a, elements_b)


def signed_trace(Sa, Sb):
    """Tr(P_a P_b) for the stabilizer projectors P = 2^{-r} Σ s."""
    inter = intersect(Sa, Sb)
    return Fraction(inter.sign_sum * (1 << Sa.n), 1 << (Sa.rank + Sb.rank))


# ======================================================================
# Minimum weight scan
# ======================================================================
def _syndrome_table(n, checks):
    table = []
    for q in range(n):
        entries = []
        for xb, zb in ((1, 0), (1, 1), (0, 1)):
            v = (xb << q) | (zb << (q + n))
            syn = 0
            for k, u in enumerate(checks):
                syn |= symplectic_product(v, u, n) << k
            entries.append((syn, v))
        table.append(tuple(entries))
    return table


def _scan_supports(task):
    """First weight-w vector in the center span and outside `exclude`, by support order."""
    n, w, firsts, table, exclude_rows, exclude_pivots = task
    for first in firsts:
        for rest in combinations(range(first + 1, n), w - 1):
            options = [table[first]] + [table[q] for q in rest]
            for choice in product(*options):
                syn = 0
                for s, _ in choice:
                    syn ^= s
                if syn:
                    continue
                v = 0
                for _, bit in choice:
                    v |= bit
                if gf2.reduce(v, exclude_rows, exclude_pivots):
                    return v
    return None


def min_weight_outside(center_basis, exclude, w_max, workers=None):
    """
    Smallest weight E in span(center_basis) but outside `exclude`.

    Candidates are filtered by their syndrome against the symplectic
    complement of span(center_basis); only syndrome-free candidates pay for
    the membership test. With workers > 1 supports are split by their first
    qubit and the earliest hit in enumeration order is kept.
    """
    n = exclude.n
    if workers is None:
        workers = qec_setting('THREADS')
    checks = commutant_vectors([c.symplectic for c in center_basis], n)
    table = _syndrome_table(n, checks)
    exclude_rows, exclude_pivots = exclude.vectors, list(exclude.pivots)
    w_max = min(w_max, n)
    for w in range(1, w_max + 1):
        logger.info(f"[DISTANCE] Scanning weight {w} on n={n}")
        starts = list(range(n - w + 1))
        if workers > 1 and len(starts) > 1:
            tasks = [(n, w, [f], table, exclude_rows, exclude_pivots) for f in starts]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                hits = [v for v in pool.map(_scan_supports, tasks) if v is not None]
            hit = hits[0] if hits else None
        else:
            hit = _scan_supports((n, w, starts, table, exclude_rows, exclude_pivots))
        if hit is not None:
            return Found(w, PauliOperator.from_symplectic(n, hit))
    return NoneUpTo(w_max)
