"""
Code file reader and writer.

    # comment
    n: 7
    params: [[7,1:1,3]]
    quantum:
      XIIZYYZ
      ...
    classical:
      ZIIIIIX

A union of stabilizer codes uses one `inner:` section per inner code and
declares ((n,K:M,d)).
"""

import re
from dataclasses import dataclass, field
from pathlib import Path

from codes.exceptions import CodeConstructionError, CodeFileError
from codes.hybrid import HybridCode, StabilizerUnionCode
from codes.pauli import pauli_from_string
from codes.stabilizer import build_group

STABILIZER_PARAMS = re.compile(r'^\[\[(\d+),(\d+)(?::(\d+))?(?:,(\d+))?\]\]$')
UNION_PARAMS = re.compile(r'^\(\((\d+),(\d+)(?::(\d+))?(?:,(\d+))?\)\)$')
SECTIONS = ('quantum', 'classical', 'inner')
HEADER_KEYS = ('n', 'params', 'parameters')


@dataclass(frozen=True)
class DeclaredParameters:
    n: int
    K: int
    M: int
    d: int = None
    text: str = ''


def parse_parameters(text):
    text = text.replace(' ', '')
    match = STABILIZER_PARAMS.match(text)
    if match:
        n, k, m, d = match.groups()
        return DeclaredParameters(int(n), 1 << int(k), 1 << int(m or 0), int(d) if d else None, text)
    match = UNION_PARAMS.match(text)
    if match:
        n, K, M, d = match.groups()
        return DeclaredParameters(int(n), int(K), int(M or 1), int(d) if d else None, text)
    return None


@dataclass(frozen=True)
class CodeFile:
    n: int = None
    declared: DeclaredParameters = None
    quantum: tuple = ()
    classical: tuple = ()
    inner: tuple = ()
    comments: tuple = field(default=())

    @property
    def is_union(self):
        return bool(self.inner)

    def to_code(self):
        """HybridCode, or StabilizerUnionCode for files with inner sections."""
        if self.is_union:
            return StabilizerUnionCode.from_groups(build_group(rows) for rows in self.inner)
        return HybridCode.from_generators(self.quantum, self.classical, n=self.n)


def parse_code_file(text):
    n = None
    declared = None
    sections = {'quantum': [], 'classical': [], 'inner': []}
    comments = []
    current = None
    length = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line, _, comment = raw.partition('#')
        if comment.strip() and not line.strip():
            comments.append(comment.strip())
        line = line.strip()
        if not line:
            continue

        key, sep, value = line.partition(':')
        key, value = key.strip().lower(), value.strip()
        if sep and key in SECTIONS and not value:
            current = key
            if key == 'inner':
                sections['inner'].append([])
            continue
        if sep and key in HEADER_KEYS:
            if key == 'n':
                if not value.isdigit() or int(value) < 1:
                    raise CodeFileError(line_no, f"bad qubit count {value!r}")
                n = int(value)
            else:
                declared = parse_parameters(value)
                if declared is None:
                    raise CodeFileError(line_no, f"unreadable parameters {value!r}")
            continue
        if sep:
            raise CodeFileError(line_no, f"unknown header {key!r}")
        if current is None:
            raise CodeFileError(line_no, "Pauli row outside a quantum:, classical: or inner: section")

        try:
            op = pauli_from_string(line)
        except CodeConstructionError as exc:
            raise CodeFileError(line_no, str(exc))
        expected = n if n is not None else length
        if expected is not None and op.n != expected:
            raise CodeFileError(line_no, f"row has {op.n} qubits, expected {expected}")
        length = op.n
        if current == 'inner':
            sections['inner'][-1].append(op)
        else:
            sections[current].append(op)

    if sections['inner'] and (sections['quantum'] or sections['classical']):
        raise CodeFileError(0, "a file holds either inner: sections or quantum:/classical: sections")
    if any(not rows for rows in sections['inner']):
        raise CodeFileError(0, "empty inner: section")
    if n is None:
        n = length
    if n is None:
        raise CodeFileError(0, "no qubit count and no generator rows")
    return CodeFile(
        n=n,
        declared=declared,
        quantum=tuple(sections['quantum']),
        classical=tuple(sections['classical']),
        inner=tuple(tuple(rows) for rows in sections['inner']),
        comments=tuple(comments),
    )


def read_code_file(path):
    return parse_code_file(Path(path).read_text())


def dump_code_file(code, d=None, comments=()):
    """Canonical text: generators in their stored order, one per line."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"n: {code.n}")
    if isinstance(code, StabilizerUnionCode):
        lines.append(f"params: {code.parameters(d)}")
        for group in code.inner_codes:
            lines.append("inner:")
            lines.extend(f"  {g}" for g in group.generators)
    else:
        lines.append(f"params: {code.parameters(d)}")
        lines.append("quantum:")
        lines.extend(f"  {g}" for g in code.quantum.generators)
        if code.classical:
            lines.append("classical:")
            lines.extend(f"  {g}" for g in code.classical)
    return '\n'.join(lines) + '\n'


def write_code_file(path, code, d=None, comments=()):
    Path(path).write_text(dump_code_file(code, d, comments))
