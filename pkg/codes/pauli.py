"""
n-qubit Pauli operators in packed symplectic form.

An operator is i^phase X^x Z^z with x, z packed into ints (bit q = qubit q)
and phase in Z/4. Y = iXZ, so the Hermitian operator with a "+" sign and
support pattern (x, z) has phase = |x & z| mod 4.
"""

from dataclasses import dataclass
from itertools import combinations, product

from codes.exceptions import InvalidParameter, LengthMismatch, PauliParseError

# letter -> (x bit, z bit)
LETTER_BITS = {'I': (0, 0), 'X': (1, 0), 'Y': (1, 1), 'Z': (0, 1)}
BITS_LETTER = {bits: letter for letter, bits in LETTER_BITS.items()}

# printed sign prefix -> power of i
SIGN_PREFIXES = {'': 0, '+': 0, 'i': 1, '+i': 1, '-': 2, '-i': 3}
PREFIX_BY_EXPONENT = {0: '', 1: 'i', 2: '-', 3: '-i'}


@dataclass(frozen=True)
class PauliOperator:
    n: int
    x: int = 0
    z: int = 0
    phase: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter(f"a Pauli operator needs n >= 1 qubits, got {self.n}")
        if (self.x | self.z) >> self.n:
            raise InvalidParameter(f"support exceeds {self.n} qubits")
        object.__setattr__(self, 'phase', self.phase % 4)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def identity(cls, n):
        return cls(n)

    @classmethod
    def hermitian(cls, n, x, z):
        """The "+" signed Hermitian operator with support pattern (x, z)."""
        return cls(n, x, z, (x & z).bit_count())

    @classmethod
    def from_symplectic(cls, n, v, phase=None):
        """Build from the 2n-bit vector x | z << n (Hermitian "+" sign by default)."""
        mask = (1 << n) - 1
        x, z = v & mask, v >> n
        if phase is None:
            return cls.hermitian(n, x, z)
        return cls(n, x, z, phase)

    @classmethod
    def from_string(cls, text):
        return pauli_from_string(text)

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------
    @property
    def symplectic(self):
        return self.x | (self.z << self.n)

    @property
    def weight(self):
        return (self.x | self.z).bit_count()

    @property
    def y_count(self):
        return (self.x & self.z).bit_count()

    @property
    def sign_exponent(self):
        """Power of i relative to the "+" Hermitian operator with this support."""
        return (self.phase - self.y_count) % 4

    @property
    def is_hermitian(self):
        return self.sign_exponent % 2 == 0

    @property
    def sign(self):
        if not self.is_hermitian:
            raise InvalidParameter(f"{self} has an imaginary sign")
        return 1 if self.sign_exponent == 0 else -1

    @property
    def is_identity(self):
        return not (self.x | self.z)

    def unsigned(self):
        return PauliOperator.hermitian(self.n, self.x, self.z)

    def letter(self, q):
        return BITS_LETTER[((self.x >> q) & 1, (self.z >> q) & 1)]

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------
    def __mul__(self, other):
        return multiply(self, other)

    def __neg__(self):
        return PauliOperator(self.n, self.x, self.z, self.phase + 2)

    def commutes_with(self, other):
        return commutes(self, other)

    def embedded(self, n, offset):
        """This operator acting on qubits offset.. of an n-qubit register."""
        return PauliOperator(n, self.x << offset, self.z << offset, self.phase)

    def __str__(self):
        return pauli_to_string(self)


def pauli_from_string(text):
    """
    Parse "[sign]P_0P_1...P_{n-1}" with sign in {+, -, i, -i} (or empty).

    The unicode minus sign is accepted as "-".
    """
    if not isinstance(text, str):
        raise PauliParseError(f"expected text, got {type(text).__name__}")
    s = text.strip().replace('−', '-')
    body_start = 0
    while body_start < len(s) and s[body_start] in '+-i':
        body_start += 1
    prefix, body = s[:body_start], s[body_start:]
    if prefix not in SIGN_PREFIXES:
        raise PauliParseError(f"bad sign prefix {prefix!r} in {text!r}")
    if not body:
        raise PauliParseError(f"empty Pauli string {text!r}")
    x = z = 0
    for q, ch in enumerate(body):
        bits = LETTER_BITS.get(ch)
        if bits is None:
            raise PauliParseError(f"unexpected character {ch!r} at position {q} of {text!r}")
        x |= bits[0] << q
        z |= bits[1] << q
    phase = SIGN_PREFIXES[prefix] + (x & z).bit_count()
    return PauliOperator(len(body), x, z, phase)


def pauli_to_string(P):
    body = ''.join(P.letter(q) for q in range(P.n))
    return PREFIX_BY_EXPONENT[P.sign_exponent] + body


def _check_lengths(P, Q):
    if P.n != Q.n:
        raise LengthMismatch(P.n, Q.n)


def multiply(P, Q):
    """P·Q; moving X^xQ past Z^zP costs (-1)^{|zP & xQ|}."""
    _check_lengths(P, Q)
    phase = P.phase + Q.phase + 2 * (P.z & Q.x).bit_count()
    return PauliOperator(P.n, P.x ^ Q.x, P.z ^ Q.z, phase)


def commutes(P, Q):
    _check_lengths(P, Q)
    return ((P.x & Q.z).bit_count() + (Q.x & P.z).bit_count()) % 2 == 0


def weight(P):
    return P.weight


def single_qubit(n, q, letter):
    if not 0 <= q < n:
        raise InvalidParameter(f"qubit {q} outside 0..{n - 1}")
    xb, zb = LETTER_BITS[letter]
    return PauliOperator.hermitian(n, xb << q, zb << q)


def enumerate_paulis(n, w):
    """
    Every weight-w operator on n qubits, once per support pattern.

    Supports come in lexicographic order of their qubit sets; on a fixed
    support the letters run over X, Y, Z with the last qubit fastest. Each
    operator is the "+" signed Hermitian one.
    """
    if n < 1 or not 0 <= w <= n:
        raise InvalidParameter(f"weight {w} is outside 0..{n}")
    letters = (LETTER_BITS['X'], LETTER_BITS['Y'], LETTER_BITS['Z'])
    for support in combinations(range(n), w):
        for choice in product(letters, repeat=w):
            x = z = 0
            for q, (xb, zb) in zip(support, choice):
                x |= xb << q
                z |= zb << q
            yield PauliOperator.hermitian(n, x, z)
