"""
Code families.

- dist2_family:  [[n, n-3 : 1, 2]] for odd n
- gottesman:     [[2^j, 2^j - j - 2, 3]] from the Hamming matrix
- seed_code:     the [[7,1:1,3]], [[9,2:2,3]], [[10,3:2,3]], [[11,4:2,3]] tables
- paste:         Gottesman blocks U_m..U_1 pasted onto a seed on V_a
- yu_excludes_stabilizer: length/generator arithmetic ruling out
                 [[n, n-s, 3]] stabilizer codes
"""

import hashlib
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from codes.exceptions import (
    CodeConstructionError,
    DistanceVerificationFailed,
    EvenLengthRejected,
    InvalidParameter,
)
from codes.hybrid import AtLeast, HybridCode, StabilizerUnionCode, distance
from codes.pauli import PauliOperator, pauli_from_string
from codes.stabilizer import NoneUpTo, StabilizerGroup, build_group, centralizer_basis, min_weight_outside

logger = logging.getLogger(__name__)


# ======================================================================
# Seed tables
# ======================================================================
@dataclass(frozen=True)
class SeedTable:
    quantum: tuple
    classical: tuple
    checksum: str
    normalizer: tuple = ()


SEED_TABLES = {
    7: SeedTable(
        quantum=('XIIZYYZ', 'ZXIXZIX', 'ZIXXIZX', 'ZIZZXII', 'IZIZIXX'),
        classical=('ZIIIIIX',),
        checksum='0403e3f016509b3099322870b8dca39026c4d5f92b621586ef604fd2f43d9485',
        normalizer=('IIIXZZX', 'IIIZXXI', 'IIIIXYY'),
    ),
    9: SeedTable(
        quantum=('XIIZYZXXY', 'ZXIZYXYIZ', 'IZXZZIXIX', 'IZZIYXXYI', 'ZZIXXIXZI'),
        classical=('ZIIIIXIII', 'IZIIIIXII'),
        checksum='70c16207f506b7e8ea10d5e7c7d317859364c16a6472a2514fa0f51f56089f5e',
    ),
    10: SeedTable(
        quantum=('XXIZIZYZYZ', 'XIYXIXZXXY', 'XZXYZYYIIY', 'IIZZXXYYII', 'ZIIIZZXXIX'),
        classical=('ZIIIIIIIIX', 'IIZZIIIIII'),
        checksum='5e72bab7d52f6d240b544ba787aab4fbecb8a78c027acdb0ea98e56240f0bea8',
    ),
    11: SeedTable(
        quantum=('IZXIXZIZXXX', 'IZZXIIZXXYY', 'ZIIZXXZXXXI', 'XXIXYXIYYYX', 'YYIXXYYZYIY'),
        classical=('ZIIIIIIIXII', 'IZIIIIIIXII'),
        checksum='ae6fbbbfdb69124ab8b8cab588091b058b838399ca9e3f145d6a490d647659fe',
    ),
}

SEED_PARAMETERS = {7: (7, 1, 1, 3), 9: (9, 2, 2, 3), 10: (10, 3, 2, 3), 11: (11, 4, 2, 3)}

FIVE_QUBIT_ROWS = ('XZZXI', 'IXZZX', 'XIXZZ', 'ZXIXZ')

# Two orthogonal [[6,1,3]] codes forming a ((6,2:2,1)) union
EXAMPLE_UNION_ROWS = (
    ('XXZIZI', 'ZXXZII', 'IZXXZI', 'ZIZXXI', 'IIIIIX'),
    ('YIZXXY', 'ZXIIXZ', 'IZXXXX', 'IIIZIZ', 'ZZZIZI'),
)


def _seed_table(a):
    try:
        return SEED_TABLES[a]
    except KeyError:
        raise InvalidParameter(f"no seed code of length {a}; choose from {sorted(SEED_TABLES)}")


def seed_checksum(a):
    table = _seed_table(a)
    return hashlib.sha256('\n'.join(table.quantum + table.classical).encode()).hexdigest()


def seed_code(a):
    table = _seed_table(a)
    return HybridCode.from_strings(table.quantum, table.classical)


def five_qubit_code():
    return StabilizerGroup.from_strings(FIVE_QUBIT_ROWS)


def example_union():
    return StabilizerUnionCode.from_groups(
        StabilizerGroup.from_strings(rows) for rows in EXAMPLE_UNION_ROWS
    )


# ======================================================================
# Distance-2 family
# ======================================================================
def dist2_family(n):
    """S_Q = {X^n, Z^{n-1} I}, S_C = {I^{n-1} X}."""
    if n < 3:
        raise InvalidParameter(f"the distance-2 family starts at n=3, got {n}")
    if n % 2 == 0:
        raise EvenLengthRejected(n)
    full = (1 << n) - 1
    last = 1 << (n - 1)
    quantum = [PauliOperator(n, x=full), PauliOperator(n, z=full ^ last)]
    classical = [PauliOperator(n, x=last)]
    return HybridCode.from_generators(quantum, classical)


def rains_odd_bound(n):
    """2^{n-2}(1 - 1/(n-1)): no ((n, K, 2)) quantum code of odd length exceeds it."""
    if n < 3 or n % 2 == 0:
        raise InvalidParameter(f"the odd-length bound needs odd n >= 3, got {n}")
    return Fraction(1 << (n - 2)) * (1 - Fraction(1, n - 1))


# ======================================================================
# Gottesman codes
# ======================================================================
@dataclass(frozen=True)
class HammingLayout:
    """
    Column t of the j x 2^j matrix is t in binary.

    bit_order 'msb': row i is the i-th most significant bit; 'lsb' the i-th
    least. first_row_term adds h_1 to every Z pattern.
    """

    bit_order: str
    first_row_term: bool

    @property
    def label(self):
        pattern = 'h(i-1)+h1+hj' if self.first_row_term else 'h(i-1)+hj'
        return f"{self.bit_order}, Z pattern {pattern}"


PASTING_LAYOUT = HammingLayout('msb', True)

GOTTESMAN_LAYOUTS = (
    PASTING_LAYOUT,
    HammingLayout('lsb', True),
    HammingLayout('msb', False),
    HammingLayout('lsb', False),
)


def hamming_rows(j, bit_order='msb'):
    """h_1..h_j as packed ints over 2^j columns (h_0 = 0 is prepended)."""
    columns = np.arange(1 << j, dtype=np.int64)
    if bit_order == 'msb':
        shifts = np.arange(j - 1, -1, -1)
    elif bit_order == 'lsb':
        shifts = np.arange(j)
    else:
        raise InvalidParameter(f"unknown bit order {bit_order!r}")
    bits = (columns[None, :] >> shifts[:, None]) & 1
    return [0] + [sum(1 << int(t) for t in np.flatnonzero(row)) for row in bits]


def gottesman_generators(j, layout=PASTING_LAYOUT):
    """All-X, all-Z, then S_i = X^{h_i} Z^{pattern_i} for i = 1..j."""
    if j < 3:
        raise InvalidParameter(f"Gottesman codes need j >= 3, got {j}")
    n = 1 << j
    h = hamming_rows(j, layout.bit_order)
    full = (1 << n) - 1
    rows = [PauliOperator(n, x=full), PauliOperator(n, z=full)]
    for i in range(1, j + 1):
        z = h[i - 1] ^ h[j]
        if layout.first_row_term:
            z ^= h[1]
        rows.append(PauliOperator.hermitian(n, h[i], z))
    return rows


@lru_cache(maxsize=None)
def _resolve_gottesman(j):
    for layout in GOTTESMAN_LAYOUTS:
        try:
            group = build_group(gottesman_generators(j, layout))
        except CodeConstructionError as exc:
            logger.warning(f"[GOTTESMAN] j={j} layout '{layout.label}' rejected: {exc}")
            continue
        scan = min_weight_outside(centralizer_basis(group), group, 2)
        if isinstance(scan, NoneUpTo) and group.rank == j + 2:
            if layout != PASTING_LAYOUT:
                logger.warning(f"[GOTTESMAN] j={j} verified with fallback layout '{layout.label}'")
            return group, layout
        logger.warning(f"[GOTTESMAN] j={j} layout '{layout.label}' has distance < 3")
    raise DistanceVerificationFailed(
        f"DistanceVerificationFailed: no Hamming layout gives distance 3 for j={j}"
    )


def gottesman(j):
    """[[2^j, 2^j - j - 2, 3]] stabilizer, verified by a weight <= 2 scan."""
    return _resolve_gottesman(j)[0]


def gottesman_layout(j):
    return _resolve_gottesman(j)[1]


# ======================================================================
# Pasting
# ======================================================================
@dataclass(frozen=True)
class PastingLayout:
    m: int
    a: int

    def __post_init__(self):
        if self.m < 0:
            raise InvalidParameter(f"m must be nonnegative, got {self.m}")
        _seed_table(self.a)

    @property
    def block_exponents(self):
        """j = 2k + 3 for U_m, ..., U_1."""
        return [2 * k + 3 for k in range(self.m, 0, -1)]

    @property
    def block_sizes(self):
        return [1 << j for j in self.block_exponents] + [self.a]

    @property
    def offsets(self):
        return [int(x) for x in np.cumsum([0] + self.block_sizes[:-1])]

    @property
    def n(self):
        return ((1 << (2 * self.m + 5)) - 32) // 3 + self.a

    @property
    def quantum_rows(self):
        return 2 * self.m + 5

    def block_rows(self, k):
        """Rows (0-based) carrying block U_k: from 2(m - k) through 2m + 4."""
        return range(2 * (self.m - k), self.quantum_rows)


def paste(m, a, verify=False):
    """
    Staircase layout: U_k contributes X_{U_k}, Z_{U_k} on rows 2(m-k), 2(m-k)+1
    and its 2k+3 S-rows below, so every block ends on the last row. The seed's
    five quantum rows sit on the last five rows over V_a; its classical rows
    stay on V_a.
    """
    layout = PastingLayout(m, a)
    if m == 0:
        return seed_code(a)
    n = layout.n
    rows_x = [0] * layout.quantum_rows
    rows_z = [0] * layout.quantum_rows

    def place(row, op, offset):
        rows_x[row] |= op.x << offset
        rows_z[row] |= op.z << offset

    for k, offset in zip(range(m, 0, -1), layout.offsets):
        block = gottesman_generators(2 * k + 3, PASTING_LAYOUT)
        for i, op in enumerate(block):
            place(2 * (m - k) + i, op, offset)

    seed = seed_code(a)
    seed_offset = layout.offsets[-1]
    for i, g in enumerate(seed.quantum.generators):
        place(2 * m + i, g, seed_offset)

    quantum = [PauliOperator.hermitian(n, x, z) for x, z in zip(rows_x, rows_z)]
    classical = [g.embedded(n, seed_offset) for g in seed.classical]
    code = HybridCode.from_generators(quantum, classical, n=n)
    logger.info(f"[PASTE] m={m}, a={a} -> {code.parameters(3)}")

    if verify:
        result = distance(code, w_max=2)
        if not isinstance(result, AtLeast):
            raise DistanceVerificationFailed(
                f"DistanceVerificationFailed: paste({m},{a}) has an undetectable error of weight {result.d}"
            )
    return code


# ======================================================================
# Nonexistence arithmetic
# ======================================================================
def ceil_log2(x):
    return (x - 1).bit_length()


def has_special_length(n):
    """n = 8(4^k - 1)/3 + b for some k >= 1, b in {-1, 1, 2}."""
    k = 1
    while True:
        base = 8 * ((4 ** k) - 1) // 3
        if base - 1 > n:
            return False
        if n - base in (-1, 1, 2):
            return True
        k += 1


def yu_excludes_stabilizer(n, s):
    """True when s generators are too few for an [[n, n-s, 3]] stabilizer code."""
    if n < 1 or s < 0:
        raise InvalidParameter(f"need n >= 1 and s >= 0, got n={n}, s={s}")
    required = ceil_log2(3 * n + 1)
    if has_special_length(n):
        required += 1
    return s < required
