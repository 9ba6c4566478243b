"""
Bit-packed linear algebra over GF(2).

A vector is a Python int; bit i is coordinate i. Pivots are chosen at the
lowest set bit, so a reduced basis is ordered by increasing pivot.
"""

import numpy as np


def parity(v):
    return v.bit_count() & 1


def lowest_bit(v):
    return (v & -v).bit_length() - 1


def row_reduce(rows):
    """
    Fully reduced row echelon form.

    Returns (basis, pivots) sorted by pivot; every pivot bit is set in its
    own row only. Zero and dependent rows are dropped.
    """
    basis = []
    pivots = []
    for row in rows:
        row = reduce(row, basis, pivots)
        if not row:
            continue
        p = lowest_bit(row)
        basis = [b ^ row if (b >> p) & 1 else b for b in basis]
        basis.append(row)
        pivots.append(p)
    order = sorted(range(len(basis)), key=pivots.__getitem__)
    return [basis[i] for i in order], [pivots[i] for i in order]


def reduce(v, basis, pivots):
    """Residual of v modulo a reduced basis (zero iff v is in the span)."""
    for row, p in zip(basis, pivots):
        if (v >> p) & 1:
            v ^= row
    return v


def rank(rows):
    return len(row_reduce(rows)[0])


def nullspace(rows, width):
    """Basis of {v : parity(v & row) = 0 for every row}, over `width` bits."""
    basis, pivots = row_reduce(rows)
    pivot_set = set(pivots)
    kernel = []
    for f in range(width):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(basis, pivots):
            if (row >> f) & 1:
                v |= 1 << p
        kernel.append(v)
    return kernel


def rows_from_matrix(matrix):
    """
    Pack a 0/1 matrix (nested lists, strings of digits or a numpy array).

    Returns (rows, width) with column c stored at bit c.
    """
    if len(matrix) and isinstance(matrix[0], str):
        matrix = [[int(ch) for ch in row.strip()] for row in matrix]
    array = np.asarray(matrix, dtype=np.int64)
    if array.ndim != 2:
        raise ValueError("expected a two-dimensional 0/1 matrix")
    array = array % 2
    rows = [sum(1 << int(c) for c in np.flatnonzero(row)) for row in array]
    return rows, array.shape[1]
