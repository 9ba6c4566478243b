"""
Exact Gaussian-rational matrices.

Entries are (re + i·im) / denominator with int64 numerator arrays and one
positive integer denominator per matrix. Nothing here rounds.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, 're', Fraction(self.re))
        object.__setattr__(self, 'im', Fraction(self.im))

    def __add__(self, other):
        other = _as_gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        other = _as_gaussian(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        other = _as_gaussian(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other):
        other = _as_gaussian(other)
        norm = other.re ** 2 + other.im ** 2
        if not norm:
            raise ZeroDivisionError("division by a zero Gaussian rational")
        num = self * other.conjugate()
        return GaussianRational(num.re / norm, num.im / norm)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational(other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    @property
    def is_real(self):
        return self.im == 0

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = '+' if self.im > 0 else '-'
        return f"{self.re}{sign}{abs(self.im)}i"


def _as_gaussian(value):
    if isinstance(value, GaussianRational):
        return value
    return GaussianRational(Fraction(value))


@dataclass(frozen=True, eq=False)
class GaussianRationalMatrix:
    re: np.ndarray
    im: np.ndarray
    denominator: int = 1

    def __post_init__(self):
        if self.re.shape != self.im.shape:
            raise ValueError("real and imaginary parts differ in shape")
        if self.denominator < 1:
            raise ValueError("denominator must be positive")

    # ------------------------------------------------------------------
    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls(np.zeros((rows, cols), dtype=np.int64), np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim, dtype=np.int64), np.zeros((dim, dim), dtype=np.int64))

    @property
    def rows(self):
        return self.re.shape[0]

    @property
    def cols(self):
        return self.re.shape[1]

    @property
    def shape(self):
        return self.re.shape

    # ------------------------------------------------------------------
    def normalized(self):
        """Divide numerators and denominator by their common factor."""
        g = math.gcd(int(np.gcd.reduce(self.re.ravel())), int(np.gcd.reduce(self.im.ravel())))
        g = math.gcd(g, self.denominator)
        if g <= 1:
            return self
        return GaussianRationalMatrix(self.re // g, self.im // g, self.denominator // g)

    def _scaled_to(self, denominator):
        factor = denominator // self.denominator
        return self.re * factor, self.im * factor

    def __add__(self, other):
        den = math.lcm(self.denominator, other.denominator)
        a_re, a_im = self._scaled_to(den)
        b_re, b_im = other._scaled_to(den)
        return GaussianRationalMatrix(a_re + b_re, a_im + b_im, den).normalized()

    def __sub__(self, other):
        den = math.lcm(self.denominator, other.denominator)
        a_re, a_im = self._scaled_to(den)
        b_re, b_im = other._scaled_to(den)
        return GaussianRationalMatrix(a_re - b_re, a_im - b_im, den).normalized()

    def __matmul__(self, other):
        re = self.re @ other.re - self.im @ other.im
        im = self.re @ other.im + self.im @ other.re
        return GaussianRationalMatrix(re, im, self.denominator * other.denominator).normalized()

    def conj_transpose(self):
        return GaussianRationalMatrix(self.re.T.copy(), -self.im.T, self.denominator)

    def entry(self, i, j):
        return GaussianRational(
            Fraction(int(self.re[i, j]), self.denominator),
            Fraction(int(self.im[i, j]), self.denominator),
        )

    def trace(self):
        return GaussianRational(
            Fraction(int(np.trace(self.re)), self.denominator),
            Fraction(int(np.trace(self.im)), self.denominator),
        )

    def is_zero(self):
        return not self.re.any() and not self.im.any()

    def equals(self, other):
        if self.shape != other.shape:
            return False
        return (self - other).is_zero()

    def is_hermitian(self):
        return self.equals(self.conj_transpose())

    def is_idempotent(self):
        return self.equals(self @ self)

    def scalar_multiple_of(self, other):
        """λ with self = λ·other, or None. `other` must be nonzero."""
        idx = np.argwhere((other.re != 0) | (other.im != 0))
        if not len(idx):
            raise ValueError("reference matrix is zero")
        i, j = idx[0]
        lam = self.entry(i, j) / other.entry(i, j)
        # self·den_o·q == other·den_s·p with λ = (p_re + i p_im) / q
        q = math.lcm(lam.re.denominator, lam.im.denominator)
        p_re, p_im = int(lam.re * q), int(lam.im * q)
        lhs_re = self.re * (other.denominator * q)
        lhs_im = self.im * (other.denominator * q)
        rhs_re = (other.re * p_re - other.im * p_im) * self.denominator
        rhs_im = (other.re * p_im + other.im * p_re) * self.denominator
        if np.array_equal(lhs_re, rhs_re) and np.array_equal(lhs_im, rhs_im):
            return lam
        return None

    def rank(self):
        return exact_rank(self.re, self.im)


def integer_rank(rows):
    """Rank of an integer matrix by fraction-free elimination on Python ints."""
    rows = [list(map(int, r)) for r in rows]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    rank = 0
    for c in range(len(rows[0])):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank]
        pc = p[c]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if not f:
                continue
            new = [pc * a - f * b for a, b in zip(rows[i], p)]
            g = math.gcd(*new)
            rows[i] = [a // g for a in new] if g > 1 else new
        rank += 1
        if rank == len(rows):
            break
    return rank


def exact_rank(re, im):
    """Complex rank of re + i·im: half the rank of [[re, -im], [im, re]]."""
    re = np.asarray(re, dtype=object)
    im = np.asarray(im, dtype=object)
    if re.ndim == 1:
        re, im = re[None, :], im[None, :]
    real_block = np.block([[re, -im], [im, re]])
    return integer_rank(real_block.tolist()) // 2
