"""
Domain errors.

Every error is a Django ValidationError carrying a message, a machine
readable `code` and the offending values in `params`. Management commands
turn them into CommandError exit statuses.
"""

from django.core.exceptions import ValidationError


class CodeConstructionError(ValidationError):
    """Base class for invalid Pauli data, groups, codes and bound instances."""

    default_code = 'invalid'

    def __init__(self, message, code=None, params=None):
        super().__init__(message, code=code or self.default_code, params=params)

    def __str__(self):
        return self.messages[0]


class PauliParseError(CodeConstructionError):
    default_code = 'pauli_parse'


class LengthMismatch(CodeConstructionError):
    default_code = 'length_mismatch'

    def __init__(self, expected, got):
        super().__init__(
            f"LengthMismatch: expected {expected} qubits, got {got}",
            params={'expected': expected, 'got': got},
        )
        self.expected = expected
        self.got = got


class InvalidParameter(CodeConstructionError):
    default_code = 'invalid_parameter'


class NonHermitianGenerator(CodeConstructionError):
    default_code = 'non_hermitian'

    def __init__(self, row):
        super().__init__(
            f"NonHermitianGenerator: row {row} has an imaginary sign",
            params={'row': row},
        )
        self.row = row


class AnticommutingPair(CodeConstructionError):
    """Two generators anticommute. Rows are 1-based."""

    default_code = 'anticommuting_pair'

    def __init__(self, i, j, message=None):
        super().__init__(
            message or f"AnticommutingPair({i},{j}): generators {i} and {j} anticommute",
            params={'i': i, 'j': j},
        )
        self.i = i
        self.j = j


class EvenLengthRejected(AnticommutingPair):
    default_code = 'even_length'

    def __init__(self, n):
        super().__init__(
            1, 2,
            message=f"AnticommutingPair(1,2): X^{n} and Z^{n - 1}I anticommute for even n={n}",
        )
        self.n = n


class DependentGeneratorWithSignConflict(CodeConstructionError):
    """A product of generators equals -I (rows are 1-based)."""

    default_code = 'sign_conflict'

    def __init__(self, rows):
        rows = tuple(rows)
        super().__init__(
            f"DependentGeneratorWithSignConflict: rows {list(rows)} multiply to -I",
            params={'rows': rows},
        )
        self.rows = rows


class DependentGenerator(CodeConstructionError):
    default_code = 'dependent_generator'

    def __init__(self, rows):
        rows = tuple(rows)
        super().__init__(
            f"DependentGenerator: rows {list(rows)} are not independent",
            params={'rows': rows},
        )
        self.rows = rows


class CapExceeded(CodeConstructionError):
    default_code = 'cap_exceeded'


class DenseLimitExceeded(CodeConstructionError):
    default_code = 'dense_limit'

    def __init__(self, n, limit):
        super().__init__(
            f"DenseLimitExceeded: n={n} is above the dense limit {limit}",
            params={'n': n, 'limit': limit},
        )
        self.n = n
        self.limit = limit


class NotOrthogonal(CodeConstructionError):
    default_code = 'not_orthogonal'

    def __init__(self, a, b):
        super().__init__(
            f"NotOrthogonal: inner codes {a} and {b} are not orthogonal",
            params={'a': a, 'b': b},
        )
        self.a = a
        self.b = b


class InsufficientLogicals(CodeConstructionError):
    default_code = 'insufficient_logicals'


class RankDeficient(CodeConstructionError):
    default_code = 'rank_deficient'


class DistanceVerificationFailed(CodeConstructionError):
    default_code = 'distance_failed'


class CodeFileError(CodeConstructionError):
    default_code = 'code_file'

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ShadowUndefined(CodeConstructionError):
    default_code = 'shadow_undefined'


class InvalidInstance(CodeConstructionError):
    default_code = 'invalid_instance'


class LPVerificationError(CodeConstructionError):
    default_code = 'lp_verification'


class EnumeratorError(CodeConstructionError):
    default_code = 'enumerator'
