"""
Dense exact cross-checks for small codes.

Basis states |j⟩, j = 0..2^n - 1, with qubit 0 as the most significant
index bit. A Pauli acts by index arithmetic:
    i^phase X^x Z^z |j⟩ = i^{phase + 2 z·j} |j ⊕ x⟩.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from bounds.enumerators import PairDistribution, WeightDistributionSet
from codes.conf import qec_setting
from codes.exceptions import DenseLimitExceeded, EnumeratorError, LengthMismatch
from codes.stabilizer import build_group, enumerate_group, logical_operators
from oracle.matrices import GaussianRational, GaussianRationalMatrix, exact_rank

logger = logging.getLogger(__name__)

UNIT_RE = np.array([1, 0, -1, 0], dtype=np.int64)
UNIT_IM = np.array([0, 1, 0, -1], dtype=np.int64)


# ======================================================================
# Index arithmetic
# ======================================================================
def _check_limit(n, limit, default_key='DENSE_LIMIT'):
    if limit is None:
        limit = qec_setting(default_key)
    if n > limit:
        raise DenseLimitExceeded(n, limit)


def index_mask(bits, n):
    """Qubit mask (bit q = qubit q) -> index mask (qubit 0 is the top bit)."""
    out = 0
    for q in range(n):
        if (bits >> q) & 1:
            out |= 1 << (n - 1 - q)
    return out


def popcounts(dim):
    counts = np.zeros(dim, dtype=np.int64)
    idx = np.arange(dim, dtype=np.int64)
    while idx.any():
        counts += idx & 1
        idx = idx >> 1
    return counts


def pauli_action(E):
    """(targets, phases): E|j⟩ = i^{phases[j]} |targets[j]⟩."""
    dim = 1 << E.n
    idx = np.arange(dim, dtype=np.int64)
    xm, zm = index_mask(E.x, E.n), index_mask(E.z, E.n)
    phases = (E.phase + 2 * popcounts(dim)[idx & zm]) % 4
    return idx ^ xm, phases


def apply_pauli(E, re, im):
    """E applied to column vectors (or the columns of a matrix) of numerators."""
    targets, phases = pauli_action(E)
    u_re, u_im = UNIT_RE[phases], UNIT_IM[phases]
    if re.ndim == 2:
        u_re, u_im = u_re[:, None], u_im[:, None]
    out_re = np.empty_like(re)
    out_im = np.empty_like(im)
    out_re[targets] = u_re * re - u_im * im
    out_im[targets] = u_re * im + u_im * re
    return out_re, out_im


def pauli_matrix(E, dense_limit=None):
    _check_limit(E.n, dense_limit)
    dim = 1 << E.n
    targets, phases = pauli_action(E)
    matrix = GaussianRationalMatrix.zeros(dim)
    cols = np.arange(dim)
    matrix.re[targets, cols] = UNIT_RE[phases]
    matrix.im[targets, cols] = UNIT_IM[phases]
    return matrix


def projector(S, dense_limit=None):
    """P = 2^{-r} Σ_{s ∈ S} s."""
    _check_limit(S.n, dense_limit)
    dim = 1 << S.n
    cols = np.arange(dim)
    re = np.zeros((dim, dim), dtype=np.int64)
    im = np.zeros((dim, dim), dtype=np.int64)
    for s in enumerate_group(S):
        targets, phases = pauli_action(s)
        re[targets, cols] += UNIT_RE[phases]
        im[targets, cols] += UNIT_IM[phases]
    return GaussianRationalMatrix(re, im, 1 << S.rank).normalized()


# ======================================================================
# Code bases
# ======================================================================
@dataclass(frozen=True, eq=False)
class CodeBasis:
    """
    K basis vectors of one inner code as Gaussian-integer columns.

    Every column has squared norm `norm`; the orthonormal basis is the
    columns divided by sqrt(norm).
    """

    n: int
    re: np.ndarray
    im: np.ndarray
    norm: int

    @property
    def K(self):
        return self.re.shape[1]

    def gram(self):
        """Numerators of B†B."""
        return (
            self.re.T @ self.re + self.im.T @ self.im,
            self.re.T @ self.im - self.im.T @ self.re,
        )


def code_basis(S, dense_limit=None):
    """
    |ψ⟩ stabilized by <S, Z̄_1..Z̄_k>, then X̄^c|ψ⟩ for c ∈ {0,1}^k.

    The extended group has full rank, so its Z-type reduced rows fix one
    computational basis state |i⟩ in the code and |ψ⟩ ∝ Σ_s s|i⟩.
    """
    n = S.n
    _check_limit(n, dense_limit)
    pairs = logical_operators(S)
    extended = build_group(S.generators + tuple(p.z for p in pairs)) if pairs else S

    start = 0
    for row, pivot in zip(extended.basis, extended.pivots):
        if pivot < n:
            continue
        if row.phase == 2:
            start |= 1 << (pivot - n)
    start_index = index_mask(start, n)

    dim = 1 << n
    psi_re = np.zeros(dim, dtype=np.int64)
    psi_im = np.zeros(dim, dtype=np.int64)
    parity_table = popcounts(dim)
    for s in enumerate_group(extended):
        target = start_index ^ index_mask(s.x, n)
        phase = (s.phase + 2 * int(parity_table[start_index & index_mask(s.z, n)])) % 4
        psi_re[target] += UNIT_RE[phase]
        psi_im[target] += UNIT_IM[phase]
    g = np.gcd.reduce(np.concatenate([psi_re, psi_im]))
    psi_re, psi_im = psi_re // g, psi_im // g

    columns_re, columns_im = [], []
    for bits in product((0, 1), repeat=len(pairs)):
        vec_re, vec_im = psi_re, psi_im
        for bit, pair in zip(bits, pairs):
            if bit:
                vec_re, vec_im = apply_pauli(pair.x, vec_re, vec_im)
        columns_re.append(vec_re)
        columns_im.append(vec_im)
    norm = int(psi_re @ psi_re + psi_im @ psi_im)
    return CodeBasis(n, np.stack(columns_re, axis=1), np.stack(columns_im, axis=1), norm)


# ======================================================================
# Knill–Laflamme checks
# ======================================================================
@dataclass(frozen=True)
class OffDiagonal:
    a: int
    b: int


@dataclass(frozen=True)
class NonScalar:
    a: int


@dataclass(frozen=True)
class Detectable:
    scalars: tuple


@dataclass(frozen=True)
class Undetectable:
    reason: object


def kl_check(projectors, E):
    """P_b E P_a = λ_{E,a} δ_{ab} P_a for every pair, from full matrices."""
    dim = projectors[0].rows
    if dim != 1 << E.n:
        raise LengthMismatch(dim.bit_length() - 1, E.n)
    Em = pauli_matrix(E, dense_limit=E.n)
    scalars = []
    for a, Pa in enumerate(projectors):
        EPa = Em @ Pa
        for b, Pb in enumerate(projectors):
            block = Pb @ EPa
            if a != b:
                if not block.is_zero():
                    return Undetectable(OffDiagonal(a, b))
                continue
            lam = block.scalar_multiple_of(Pa)
            if lam is None:
                return Undetectable(NonScalar(a))
            scalars.append(lam)
    return Detectable(tuple(scalars))


def kl_check_basis(bases, E):
    """The same test on ⟨c_i^{(b)}|E|c_j^{(a)}⟩ with K·M basis vectors."""
    if bases[0].n != E.n:
        raise LengthMismatch(bases[0].n, E.n)
    B_re = np.concatenate([b.re for b in bases], axis=1)
    B_im = np.concatenate([b.im for b in bases], axis=1)
    EB_re, EB_im = apply_pauli(E, B_re, B_im)
    G_re = B_re.T @ EB_re + B_im.T @ EB_im
    G_im = B_re.T @ EB_im - B_im.T @ EB_re

    offsets = np.cumsum([0] + [b.K for b in bases])
    scalars = []
    for a, basis_a in enumerate(bases):
        cols = slice(offsets[a], offsets[a + 1])
        for b in range(len(bases)):
            rows = slice(offsets[b], offsets[b + 1])
            blk_re, blk_im = G_re[rows, cols], G_im[rows, cols]
            if a != b:
                if blk_re.any() or blk_im.any():
                    return Undetectable(OffDiagonal(a, b))
                continue
            c_re, c_im = blk_re[0, 0], blk_im[0, 0]
            off = ~np.eye(basis_a.K, dtype=bool)
            if blk_re[off].any() or blk_im[off].any():
                return Undetectable(NonScalar(a))
            if (np.diagonal(blk_re) != c_re).any() or (np.diagonal(blk_im) != c_im).any():
                return Undetectable(NonScalar(a))
            scalars.append(GaussianRational(
                Fraction(int(c_re), basis_a.norm),
                Fraction(int(c_im), basis_a.norm),
            ))
    return Detectable(tuple(scalars))


# ======================================================================
# Trace enumerators
# ======================================================================
def walsh_hadamard(values):
    """G(z) = Σ_u (-1)^{|z & u|} F(u) along the last axis."""
    out = np.array(values, dtype=np.int64)
    dim = out.shape[-1]
    lead = out.shape[:-1]
    h = 1
    while h < dim:
        blocks = out.reshape(lead + (dim // (2 * h), 2, h))
        first, second = blocks[..., 0, :], blocks[..., 1, :]
        out = np.stack((first + second, first - second), axis=-2).reshape(lead + (dim,))
        h *= 2
    return out


def _trace_table(P):
    """T[x, z] numerators of Tr(X^x Z^z P), index-space masks."""
    dim = P.rows
    idx = np.arange(dim)
    g_re = np.stack([P.re[idx, idx ^ x] for x in range(dim)])
    g_im = np.stack([P.im[idx, idx ^ x] for x in range(dim)])
    return walsh_hadamard(g_re), walsh_hadamard(g_im)


def _real_sum(total_re, total_im, denominator, label):
    if total_im:
        raise EnumeratorError(f"EnumeratorError: {label} is not real")
    return Fraction(total_re, denominator)


def weight_distributions_dense(projectors, K, dense_limit=None):
    """
    A^{(a,b)}_d = K^{-2} Σ_{wt E = d} Tr(E P_a) Tr(E† P_b)
    B^{(a,b)}_d = K^{-1} Σ_{wt E = d} Tr(E P_a E† P_b)
    over one Pauli per support pattern.
    """
    dim = projectors[0].rows
    n = dim.bit_length() - 1
    if dense_limit is None:
        dense_limit = qec_setting('DENSE_ENUMERATOR_LIMIT')
    _check_limit(n, dense_limit)
    idx = np.arange(dim)
    counts = popcounts(dim)
    weights = counts[idx[:, None] | idx[None, :]]
    tables = [_trace_table(P) for P in projectors]

    per_pair = {}
    M = len(projectors)
    for a, Pa in enumerate(projectors):
        for b, Pb in enumerate(projectors):
            ta_re, ta_im = tables[a]
            tb_re, tb_im = tables[b]
            prod_re = ta_re * tb_re + ta_im * tb_im
            prod_im = ta_im * tb_re - ta_re * tb_im
            a_den = K * K * Pa.denominator * Pb.denominator
            A = tuple(
                _real_sum(int(prod_re[weights == d].sum()), int(prod_im[weights == d].sum()),
                          a_den, f"A({a},{b})_{d}")
                for d in range(n + 1)
            )

            acc_re = np.zeros(n + 1, dtype=object)
            acc_im = np.zeros(n + 1, dtype=object)
            J = idx[:, None]
            U = idx[None, :]
            Kx = J ^ U
            for x in range(dim):
                lhs_re, lhs_im = Pa.re[J ^ x, Kx ^ x], Pa.im[J ^ x, Kx ^ x]
                rhs_re, rhs_im = Pb.re[Kx, J], Pb.im[Kx, J]
                F_re = (lhs_re * rhs_re - lhs_im * rhs_im).sum(axis=0)
                F_im = (lhs_re * rhs_im + lhs_im * rhs_re).sum(axis=0)
                T_re, T_im = walsh_hadamard(F_re), walsh_hadamard(F_im)
                row_weights = weights[x]
                for d in range(n + 1):
                    mask = row_weights == d
                    acc_re[d] += int(T_re[mask].sum())
                    acc_im[d] += int(T_im[mask].sum())
            b_den = K * Pa.denominator * Pb.denominator
            B = tuple(_real_sum(acc_re[d], acc_im[d], b_den, f"B({a},{b})_{d}") for d in range(n + 1))
            per_pair[(a, b)] = PairDistribution(A, B)
    logger.info(f"[ENUMERATORS] Dense distributions for n={n}, K={K}, M={M}")
    return WeightDistributionSet(n, K, M, per_pair)


# ======================================================================
# Detectable error space
# ======================================================================
def _independent_columns(P):
    """Columns of P (numerators) spanning its range, left to right."""
    chosen_re, chosen_im = [], []
    rank = 0
    for c in range(P.cols):
        col_re, col_im = P.re[:, c], P.im[:, c]
        if not col_re.any() and not col_im.any():
            continue
        trial_re = np.stack(chosen_re + [col_re])
        trial_im = np.stack(chosen_im + [col_im])
        if exact_rank(trial_re, trial_im) > rank:
            chosen_re.append(col_re)
            chosen_im.append(col_im)
            rank += 1
    return chosen_re, chosen_im


def detectable_space_dim_dense(projectors, dense_limit=None):
    """
    Dimension of {E : P_b E P_a = λ_a δ_ab P_a} by exact rank.

    Unknowns are the q^{2n} entries of E and the M scalars λ_a; one equation
    per pair of range vectors u ∈ C_b, v ∈ C_a:
        ⟨u|E|v⟩ - δ_ab λ_a ⟨u|v⟩ = 0.
    """
    dim = projectors[0].rows
    n = dim.bit_length() - 1
    if dense_limit is None:
        dense_limit = qec_setting('DENSE_DIMENSION_LIMIT')
    _check_limit(n, dense_limit)
    M = len(projectors)
    spans = [_independent_columns(P) for P in projectors]
    unknowns = dim * dim + M

    rows_re, rows_im = [], []
    for b, (us_re, us_im) in enumerate(spans):
        for a, (vs_re, vs_im) in enumerate(spans):
            for u_re, u_im in zip(us_re, us_im):
                for v_re, v_im in zip(vs_re, vs_im):
                    # conj(u) ⊗ v
                    row_re = np.zeros(unknowns, dtype=np.int64)
                    row_im = np.zeros(unknowns, dtype=np.int64)
                    row_re[:dim * dim] = (np.outer(u_re, v_re) + np.outer(u_im, v_im)).ravel()
                    row_im[:dim * dim] = (np.outer(u_re, v_im) - np.outer(u_im, v_re)).ravel()
                    if a == b:
                        row_re[dim * dim + a] = -int(u_re @ v_re + u_im @ v_im)
                        row_im[dim * dim + a] = -int(u_re @ v_im - u_im @ v_re)
                    rows_re.append(row_re)
                    rows_im.append(row_im)
    rank = exact_rank(np.stack(rows_re), np.stack(rows_im))
    logger.info(f"[DIMENSION] n={n}, M={M}: constraint rank {rank} over {unknowns} unknowns")
    return unknowns - rank
