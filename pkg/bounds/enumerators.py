"""
Weight enumerators of unions of stabilizer codes.

For inner codes S_a, S_b of rank r and the unsigned intersection
I = S̄_a ∩ S̄_b with sign character χ(v) = σ_a(v) σ_b(v):

    Tr(E P_a) Tr(E† P_b) = K² χ(v)   if E ~ v ∈ I, else 0
    A^{(a,b)}_d = Σ_{v ∈ I, wt v = d} χ(v)

    Tr(E P_a E† P_b) = 2^{-2r} Σ_{s ∈ S_a, t ∈ S_b} Tr(E s E† t)
                     = 2^{n-2r} Σ_{v ∈ I} χ(v) (-1)^{⟨E, v⟩}
    B^{(a,b)}_d = 2^{-r} Σ_{v ∈ I} χ(v) K_d(wt v)

using Σ_{wt E = d} (-1)^{⟨E, v⟩} = K_d(wt v). The dense oracle checks both.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from codes.conf import qec_setting
from codes.exceptions import CapExceeded, InvalidParameter, ShadowUndefined
from codes.stabilizer import intersect

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairDistribution:
    A: tuple
    B: tuple


@dataclass(frozen=True, eq=False)
class WeightDistributionSet:
    n: int
    K: int
    M: int
    per_pair: dict

    def pair(self, a, b):
        return self.per_pair[(a, b)]

    def aggregate(self):
        return aggregate(self)

    def symmetrized(self):
        """
        Class averages: diagonal pairs (a, a) and off-diagonal pairs (a ≠ b).

        Returns {'AD', 'BD', 'AO', 'BO'} sequences; the off-diagonal entries
        are absent when M = 1.
        """
        n, M = self.n, self.M
        diagonal = [self.per_pair[(a, a)] for a in range(M)]
        classes = {
            'AD': tuple(sum((p.A[j] for p in diagonal), Fraction(0)) / M for j in range(n + 1)),
            'BD': tuple(sum((p.B[j] for p in diagonal), Fraction(0)) / M for j in range(n + 1)),
        }
        if M > 1:
            off = [self.per_pair[(a, b)] for a in range(M) for b in range(M) if a != b]
            classes['AO'] = tuple(sum((p.A[j] for p in off), Fraction(0)) / len(off) for j in range(n + 1))
            classes['BO'] = tuple(sum((p.B[j] for p in off), Fraction(0)) / len(off) for j in range(n + 1))
        return classes


@lru_cache(maxsize=None)
def krawtchouk(q, n, j, r):
    """K_j(r) = Σ_k (-1)^k (q² - 1)^{j-k} C(r, k) C(n - r, j - k)."""
    if not (0 <= j <= n and 0 <= r <= n):
        raise InvalidParameter(f"Krawtchouk arguments j={j}, r={r} outside 0..{n}")
    return sum(
        (-1) ** k * (q * q - 1) ** (j - k) * comb(r, k) * comb(n - r, j - k)
        for k in range(j + 1)
    )


def pair_distributions(U, a, b, cap=None):
    """(A^{(a,b)}, B^{(a,b)}) summed over the signed intersection of S_a and S_b."""
    Sa, Sb = U.inner_codes[a], U.inner_codes[b]
    n = U.n
    if cap is None:
        cap = 1 << qec_setting('GROUP_RANK_CAP')
    inter = intersect(Sa, Sb)
    if (1 << inter.rank) > cap:
        raise CapExceeded(f"CapExceeded: intersection of rank {inter.rank} exceeds {cap}")
    counts = [0] * (n + 1)
    for elem_a, elem_b in inter.pairs(cap):
        counts[elem_a.weight] += elem_a.sign * elem_b.sign
    A = tuple(Fraction(c) for c in counts)
    B = tuple(
        Fraction(sum(krawtchouk(2, n, d, w) * counts[w] for w in range(n + 1)), 1 << Sa.rank)
        for d in range(n + 1)
    )
    return PairDistribution(A, B)


def weight_distributions(U, cap=None):
    """All M² pairs; (b, a) mirrors (a, b) since the character is symmetric."""
    per_pair = {}
    for a in range(U.M):
        for b in range(a, U.M):
            dist = pair_distributions(U, a, b, cap)
            per_pair[(a, b)] = dist
            per_pair[(b, a)] = dist
    logger.info(f"[ENUMERATORS] {U.parameters()} distributions over {U.M * U.M} pairs")
    return WeightDistributionSet(U.n, U.K, U.M, per_pair)


def aggregate(W):
    """A = M^{-2} Σ A^{(a,b)},  B = M^{-1} Σ B^{(a,b)}."""
    n, M = W.n, W.M
    A = [Fraction(0)] * (n + 1)
    B = [Fraction(0)] * (n + 1)
    for dist in W.per_pair.values():
        for j in range(n + 1):
            A[j] += dist.A[j]
            B[j] += dist.B[j]
    return tuple(x / (M * M) for x in A), tuple(x / M for x in B)


def macwilliams(A, K, q=2, n=None):
    """B_j = (K / q^n) Σ_r K_j(r) A_r."""
    n = len(A) - 1 if n is None else n
    if len(A) != n + 1:
        raise InvalidParameter(f"expected {n + 1} coefficients, got {len(A)}")
    scale = Fraction(K) / q ** n
    return tuple(
        scale * sum(krawtchouk(q, n, j, r) * Fraction(A[r]) for r in range(n + 1))
        for j in range(n + 1)
    )


def macwilliams_residual(W):
    """Per pair: transform of A^{(a,b)} minus B^{(a,b)} (all zero on real codes)."""
    residual = {}
    for key, dist in W.per_pair.items():
        transformed = macwilliams(dist.A, W.K, 2, W.n)
        residual[key] = tuple(t - b for t, b in zip(transformed, dist.B))
    return residual


def shadow_values(A, q=2, n=None):
    """S_j = Σ_r (-1)^r K_j(r) A_r; qubit codes only."""
    if q != 2:
        raise ShadowUndefined(f"ShadowUndefined: shadow inequalities hold for q=2, got q={q}")
    n = len(A) - 1 if n is None else n
    if len(A) != n + 1:
        raise InvalidParameter(f"expected {n + 1} coefficients, got {len(A)}")
    return tuple(
        sum((-1) ** r * krawtchouk(q, n, j, r) * Fraction(A[r]) for r in range(n + 1))
        for j in range(n + 1)
    )


def distance_from_enumerators(W):
    """Largest d with A^{(a,a)}_j = B^{(a,a)}_j and B^{(a,b)}_j = 0 (a ≠ b) for all j < d."""
    for j in range(1, W.n + 1):
        for (a, b), dist in W.per_pair.items():
            if a == b and dist.A[j] != dist.B[j]:
                return j
            if a != b and dist.B[j] != 0:
                return j
    return W.n + 1
