"""
Hybrid stabilizer codes and unions of stabilizer codes.

A hybrid code is a quantum stabilizer S_Q plus m classical generators that
commute with S_Q and with each other. Classical message c selects the inner
code S_c = <S_Q, (-1)^{c_j} g_j>; the 2^m inner codes are pairwise
orthogonal and share one distance.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, product

from codes import gf2
from codes.conf import qec_setting
from codes.exceptions import (
    CapExceeded,
    DenseLimitExceeded,
    DependentGenerator,
    InsufficientLogicals,
    InvalidParameter,
    LengthMismatch,
    NotOrthogonal,
    RankDeficient,
)
from codes.pauli import PauliOperator, enumerate_paulis, pauli_from_string
from codes.stabilizer import (
    Found,
    InGroupWithPhase,
    StabilizerGroup,
    build_group,
    centralizer_basis,
    logical_operators,
    min_weight_outside,
    signed_trace,
)

logger = logging.getLogger(__name__)


# ======================================================================
# Results
# ======================================================================
@dataclass(frozen=True)
class Exact:
    d: int
    witness: PauliOperator


@dataclass(frozen=True)
class AtLeast:
    d: int


@dataclass(frozen=True)
class Degenerate:
    witness: PauliOperator


@dataclass(frozen=True)
class Nondegenerate:
    pass


def format_parameters(n, k, m=0, d=None):
    """[[n,k:m,d]], [[n,k,d]] when m = 0; d may be an int, '>=d' text or None."""
    inner = f"{n},{k}" if m == 0 else f"{n},{k}:{m}"
    if d is not None:
        inner += f",{d}"
    return f"[[{inner}]]"


def format_union_parameters(n, K, M, d=None):
    inner = f"{n},{K}:{M}"
    if d is not None:
        inner += f",{d}"
    return f"(({inner}))"


# ======================================================================
# Hybrid code
# ======================================================================
@dataclass(frozen=True, eq=False)
class HybridCode:
    n: int
    quantum: StabilizerGroup
    classical: tuple
    inner: StabilizerGroup

    @classmethod
    def from_generators(cls, quantum, classical=(), n=None):
        """
        Validate and build a hybrid code.

        Rows in errors count the quantum generators first, then the
        classical ones. Every generator must be independent.
        """
        quantum, classical = tuple(quantum), tuple(classical)
        everything = quantum + classical
        if not everything:
            if n is None:
                raise InvalidParameter("a code without generators needs an explicit n")
            trivial = StabilizerGroup.trivial(n)
            return cls(n, trivial, (), trivial)
        n = everything[0].n if n is None else n
        for g in everything:
            if g.n != n:
                raise LengthMismatch(n, g.n)
        inner = build_group(everything)
        if inner.rank != len(everything):
            raise DependentGenerator(range(1, len(everything) + 1))
        quantum_group = build_group(quantum) if quantum else StabilizerGroup.trivial(n)
        return cls(n, quantum_group, classical, inner)

    @classmethod
    def from_strings(cls, quantum, classical=()):
        return cls.from_generators(
            [pauli_from_string(r) for r in quantum],
            [pauli_from_string(r) for r in classical],
        )

    @property
    def r_q(self):
        return self.quantum.rank

    @property
    def m(self):
        return len(self.classical)

    @property
    def k(self):
        return self.n - self.r_q - self.m

    @property
    def K(self):
        return 1 << self.k

    @property
    def M(self):
        return 1 << self.m

    def parameters(self, d=None):
        return format_parameters(self.n, self.k, self.m, d)

    def inner_code(self, message):
        return inner_code(self, message)


def inner_code(H, message):
    """S_c: classical generator j is negated where c_j = 1."""
    message = tuple(message)
    if len(message) != H.m:
        raise LengthMismatch(H.m, len(message))
    signed = tuple(-g if bit else g for g, bit in zip(H.classical, message))
    return build_group(H.quantum.generators + signed)


def as_union(H, max_classical_bits=None):
    if max_classical_bits is None:
        max_classical_bits = qec_setting('UNION_MAX_CLASSICAL_BITS')
    if H.m > max_classical_bits:
        raise CapExceeded(f"CapExceeded: m={H.m} exceeds the union cap {max_classical_bits}")
    groups = [inner_code(H, c) for c in product((0, 1), repeat=H.m)]
    return StabilizerUnionCode(H.n, tuple(groups))


# ======================================================================
# Union of stabilizer codes
# ======================================================================
@dataclass(frozen=True, eq=False)
class StabilizerUnionCode:
    n: int
    inner_codes: tuple

    @classmethod
    def from_groups(cls, groups, check_orthogonality=True):
        groups = tuple(groups)
        if not groups:
            raise InvalidParameter("a union needs at least one inner code")
        n, rank = groups[0].n, groups[0].rank
        for S in groups:
            if S.n != n:
                raise LengthMismatch(n, S.n)
            if S.rank != rank:
                raise InvalidParameter(f"inner codes need equal rank, got {rank} and {S.rank}")
        if check_orthogonality:
            for a, b in combinations(range(len(groups)), 2):
                if not orthogonal_pair(groups[a], groups[b]):
                    raise NotOrthogonal(a + 1, b + 1)
        return cls(n, groups)

    @property
    def M(self):
        return len(self.inner_codes)

    @property
    def K(self):
        return 1 << (self.n - self.inner_codes[0].rank)

    def parameters(self, d=None):
        return format_union_parameters(self.n, self.K, self.M, d)


def orthogonal_pair(Sa, Sb):
    """Tr(P_a P_b) = 0, decided from the sign character on S̄_a ∩ S̄_b."""
    if Sa.n != Sb.n:
        raise LengthMismatch(Sa.n, Sb.n)
    if Sa.rank != Sb.rank:
        raise InvalidParameter("orthogonality is checked between codes of equal rank")
    return signed_trace(Sa, Sb) == 0


# ======================================================================
# Detectability and distance
# ======================================================================
def is_detectable(H, E):
    """E anticommutes with some quantum generator, or lies in S_0 up to phase."""
    if E.n != H.n:
        raise LengthMismatch(H.n, E.n)
    if any(not E.commutes_with(g) for g in H.quantum.generators):
        return True
    return H.inner.row_space_contains(E)


def distance(H, w_max=None, workers=None):
    """
    Smallest weight of an operator in C(S_Q) outside S_0.

    Returns Exact(d, witness), or AtLeast(w_max + 1) when nothing of weight
    up to w_max is undetectable.
    """
    if w_max is None:
        w_max = qec_setting('VERIFY_W_MAX')
    result = min_weight_outside(centralizer_basis(H.quantum), H.inner, w_max, workers=workers)
    if isinstance(result, Found):
        logger.info(f"[DISTANCE] {H.parameters(result.weight)} witness {result.witness}")
        return Exact(result.weight, result.witness)
    logger.info(f"[DISTANCE] {H.parameters()} distance above {result.w_max}")
    return AtLeast(result.w_max + 1)


def union_distance_dense(U, w_max=None, dense_limit=None):
    """Distance of a union of stabilizer codes from exact Knill–Laflamme checks."""
    from oracle.dense import Undetectable, code_basis, kl_check_basis

    if dense_limit is None:
        dense_limit = qec_setting('DENSE_LIMIT')
    if U.n > dense_limit:
        raise DenseLimitExceeded(U.n, dense_limit)
    if w_max is None:
        w_max = qec_setting('VERIFY_W_MAX')
    bases = [code_basis(S) for S in U.inner_codes]
    for w in range(1, min(w_max, U.n) + 1):
        for E in enumerate_paulis(U.n, w):
            if isinstance(kl_check_basis(bases, E), Undetectable):
                return Exact(w, E)
    return AtLeast(min(w_max, U.n) + 1)


def detectable_dimension(n, K, M, q=2):
    """Dimension of the detectable error space from the constraint count."""
    for name, value in (('n', n), ('K', K), ('M', M), ('q', q)):
        if not isinstance(value, int) or value < 1:
            raise InvalidParameter(f"{name} must be a positive integer, got {value!r}")
    return q ** (2 * n) - (M * K) ** 2 + M


def inner_degenerate(H, d):
    """Degenerate(witness) if S_0 holds a nonidentity element of weight < d."""
    for w in range(1, min(d, H.n + 1)):
        for E in enumerate_paulis(H.n, w):
            found = H.inner.contains(E)
            if isinstance(found, InGroupWithPhase):
                return Degenerate(found.element)
    return Nondegenerate()


# ======================================================================
# Trivial constructions
# ======================================================================
def from_quantum(Q, m):
    """[[n,k,d]] -> [[n,k-m:m,d]]: the first m logical Z̄ become classical."""
    k = Q.code_dimension_log2
    if not 0 <= m <= k:
        raise InsufficientLogicals(f"InsufficientLogicals: m={m} but only {k} logical qubits")
    logicals = logical_operators(Q)[:m]
    return HybridCode.from_generators(Q.generators, [pair.z for pair in logicals], n=Q.n)


def demote_logical(H):
    """[[n,k:m,d]] -> [[n,k-1:m+1,d]] using the first logical Z̄ of S_0."""
    logicals = logical_operators(H.inner)
    if not logicals:
        raise InsufficientLogicals(f"InsufficientLogicals: {H.parameters()} has no logical qubit")
    return HybridCode.from_generators(H.quantum.generators, H.classical + (logicals[0].z,), n=H.n)


def tensor_classical(base, G):
    """
    [[n1,k1:m1,d]] ⊗ [n2,m2] classical code -> [[n1+n2, k1 : m1+m2]].

    The new qubits get Z-type quantum generators for a basis of the dual
    code, and Z-type classical generators completing it to GF(2)^{n2}.
    `G` is a full-rank 0/1 generator matrix (rows, strings or numpy array).
    """
    if isinstance(base, StabilizerGroup):
        base = HybridCode.from_generators(base.generators, n=base.n)
    if len(G) == 0:
        raise InvalidParameter("the classical code needs at least one generator row")
    rows, n2 = gf2.rows_from_matrix(G)
    if gf2.rank(rows) != len(rows):
        raise RankDeficient(f"RankDeficient: generator matrix has rank {gf2.rank(rows)} < {len(rows)}")

    dual = gf2.nullspace(rows, n2)
    completion = []
    span_rows, span_pivots = gf2.row_reduce(dual)
    for i in range(n2):
        if len(span_rows) == n2:
            break
        if gf2.reduce(1 << i, span_rows, span_pivots):
            completion.append(1 << i)
            span_rows, span_pivots = gf2.row_reduce(span_rows + [1 << i])

    n = base.n + n2

    def z_type(bits):
        return PauliOperator(n, 0, bits << base.n)

    quantum = [g.embedded(n, 0) for g in base.quantum.generators] + [z_type(h) for h in dual]
    classical = [g.embedded(n, 0) for g in base.classical] + [z_type(c) for c in completion]
    code = HybridCode.from_generators(quantum, classical, n=n)
    logger.info(f"[TENSOR] {base.parameters()} with [{n2},{len(rows)}] -> {code.parameters()}")
    return code
