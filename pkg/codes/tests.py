import os
import tempfile
from fractions import Fraction
from io import StringIO
from math import comb

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from codes.exceptions import (
    AnticommutingPair,
    CodeFileError,
    DependentGeneratorWithSignConflict,
    EvenLengthRejected,
    InsufficientLogicals,
    InvalidParameter,
    LengthMismatch,
    NonHermitianGenerator,
    NotOrthogonal,
    PauliParseError,
)
from codes.families import (
    EXAMPLE_UNION_ROWS,
    GOTTESMAN_LAYOUTS,
    PASTING_LAYOUT,
    SEED_PARAMETERS,
    SEED_TABLES,
    PastingLayout,
    dist2_family,
    example_union,
    five_qubit_code,
    gottesman,
    gottesman_layout,
    paste,
    rains_odd_bound,
    seed_checksum,
    seed_code,
    yu_excludes_stabilizer,
)
from codes.hybrid import (
    AtLeast,
    Degenerate,
    Exact,
    HybridCode,
    Nondegenerate,
    StabilizerUnionCode,
    as_union,
    demote_logical,
    detectable_dimension,
    distance,
    from_quantum,
    inner_code,
    inner_degenerate,
    is_detectable,
    orthogonal_pair,
    tensor_classical,
    union_distance_dense,
)
from codes.pauli import (
    commutes,
    enumerate_paulis,
    multiply,
    pauli_from_string,
    pauli_to_string,
    single_qubit,
    weight,
)
from codes.stabilizer import (
    Found,
    InGroupWithPhase,
    NoneUpTo,
    NotInRowSpace,
    StabilizerGroup,
    build_group,
    centralizer_basis,
    enumerate_group,
    intersect,
    logical_operators,
    min_weight_outside,
    signed_trace,
    syndrome,
)
from codes.utils.codefile import dump_code_file, parse_code_file, parse_parameters

GEN7_ROWS = SEED_TABLES[7].quantum + SEED_TABLES[7].classical


def P(text):
    return pauli_from_string(text)


class PauliAlgebraTests(SimpleTestCase):
    def test_parse_single_error(self):
        E = P('IIIIXI')
        self.assertEqual((E.x, E.z, E.weight), (1 << 4, 0, 1))

    def test_identity_has_weight_zero(self):
        E = P('IIIIII')
        self.assertTrue(E.is_identity)
        self.assertEqual(E.weight, 0)

    def test_signed_string(self):
        E = P('-YIZXXY')
        self.assertEqual(E.x, 0b111001)
        self.assertEqual(E.z, 0b100101)
        self.assertEqual(E.y_count, 2)
        self.assertEqual(E.sign, -1)
        self.assertEqual(pauli_to_string(E), '-YIZXXY')

    def test_unicode_minus_and_imaginary_prefixes(self):
        self.assertEqual(P('−Z'), -P('Z'))
        self.assertFalse(P('iX').is_hermitian)
        self.assertEqual(str(P('-iY')), '-iY')

    def test_parse_errors(self):
        for text in ('', 'XQZ', '--X', '+'):
            with self.assertRaises(PauliParseError):
                P(text)

    def test_multiplication_phases(self):
        self.assertTrue(multiply(P('X'), P('X')).is_identity)
        self.assertEqual(multiply(P('X'), P('X')).phase, 0)
        zx = P('Z') * P('X')
        xz = P('X') * P('Z')
        self.assertEqual(str(zx), 'iY')
        self.assertEqual(zx, -xz)

    def test_product_of_gen7_rows_stays_in_group(self):
        group = build_group([P(r) for r in GEN7_ROWS])
        product = P(GEN7_ROWS[0]) * P(GEN7_ROWS[1])
        self.assertTrue(product.is_hermitian)
        found = group.contains(product)
        self.assertIsInstance(found, InGroupWithPhase)
        self.assertEqual(found.element, product)

    def test_commutation(self):
        self.assertFalse(commutes(P('X'), P('Z')))
        self.assertTrue(commutes(P('XXXXX'), P('ZZZZI')))
        rows = [P(r) for r in GEN7_ROWS]
        self.assertTrue(all(commutes(a, b) for a in rows for b in rows))

    def test_weight(self):
        self.assertEqual(weight(P('ZZIIIIIIXII')), 3)

    def test_single_qubit(self):
        self.assertEqual(str(single_qubit(4, 2, 'Y')), 'IIYI')
        with self.assertRaises(InvalidParameter):
            single_qubit(3, 3, 'X')

    def test_enumeration_counts(self):
        self.assertEqual([str(E) for E in enumerate_paulis(1, 1)], ['X', 'Y', 'Z'])
        for n in range(1, 7):
            for w in range(n + 1):
                operators = list(enumerate_paulis(n, w))
                self.assertEqual(len(operators), comb(n, w) * 3 ** w, (n, w))
                self.assertEqual(len(set(operators)), len(operators))
        self.assertEqual(sum(1 for _ in enumerate_paulis(43, 2)), 8127)

    def test_enumeration_yields_plus_hermitian_representatives(self):
        for E in enumerate_paulis(4, 3):
            self.assertEqual(E.sign, 1)
            self.assertEqual(E.weight, 3)

    def test_multiplication_is_associative(self):
        operators = [P('II')] + [E for w in (1, 2) for E in enumerate_paulis(2, w)]
        operators += [P('iXI'), P('-YZ'), P('-iZZ')]
        for a in operators:
            for b in operators:
                for c in operators:
                    self.assertEqual((a * b) * c, a * (b * c))

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatch):
            multiply(P('XX'), P('X'))


class StabilizerGroupTests(SimpleTestCase):
    def test_gen7_is_a_valid_group(self):
        group = build_group([P(r) for r in GEN7_ROWS])
        self.assertEqual((group.n, group.rank), (7, 6))

    def test_bell_pair(self):
        self.assertEqual(StabilizerGroup.from_strings(['XX', 'ZZ']).rank, 2)

    def test_sign_conflict(self):
        with self.assertRaises(DependentGeneratorWithSignConflict) as ctx:
            StabilizerGroup.from_strings(['XX', 'YY', 'ZZ'])
        self.assertEqual(ctx.exception.rows, (1, 2, 3))

    def test_anticommuting_rows_are_one_based(self):
        with self.assertRaises(AnticommutingPair) as ctx:
            StabilizerGroup.from_strings(['XX', 'XZ'])
        self.assertEqual((ctx.exception.i, ctx.exception.j), (1, 2))
        self.assertIn('AnticommutingPair(1,2)', str(ctx.exception))

    def test_non_hermitian_generator(self):
        with self.assertRaises(NonHermitianGenerator):
            StabilizerGroup.from_strings(['ZI', 'iIZ'])

    def test_redundant_generator_is_dropped(self):
        group = StabilizerGroup.from_strings(['XX', 'ZZ', '-YY'])
        self.assertEqual(group.rank, 2)
        self.assertEqual(group.generators, (P('XX'), P('ZZ')))
        self.assertEqual(len(syndrome(group, P('XI'))), group.rank)

    def test_membership(self):
        group = build_group([P(r) for r in GEN7_ROWS])
        found = group.contains(P('ZIIIIIX'))
        self.assertEqual(found, InGroupWithPhase(0, P('ZIIIIIX')))
        self.assertEqual(group.contains(P('IIIIIII')).phase, 0)
        self.assertIsInstance(StabilizerGroup.from_strings(['XX']).contains(P('ZZ')), NotInRowSpace)

    def test_signed_membership(self):
        group = StabilizerGroup.from_strings(['XX', 'ZZ'])
        self.assertEqual(group.contains(P('YY')).element, P('-YY'))

    def test_centralizers(self):
        self.assertEqual(len(centralizer_basis(StabilizerGroup.from_strings(['Z']))), 1)
        bell = StabilizerGroup.from_strings(['XX', 'ZZ'])
        basis = centralizer_basis(bell)
        self.assertEqual(len(basis), 2)
        self.assertTrue(all(bell.row_space_contains(c) for c in basis))

    def test_gen7_centralizer_holds_normalizer_rows(self):
        S_Q = StabilizerGroup.from_strings(SEED_TABLES[7].quantum)
        basis = centralizer_basis(S_Q)
        self.assertEqual(len(basis), 9)
        for row in SEED_TABLES[7].normalizer + SEED_TABLES[7].classical:
            self.assertTrue(all(commutes(P(row), g) for g in S_Q.generators))

    def test_enumerate_group(self):
        self.assertEqual([str(s) for s in enumerate_group(StabilizerGroup.from_strings(['Z']))], ['I', 'Z'])
        for rows, expected in zip(EXAMPLE_UNION_ROWS, ([1, 1, 0, 0, 15, 15, 0], [1, 0, 1, 0, 11, 16, 3])):
            counts = [0] * 7
            elements = list(enumerate_group(StabilizerGroup.from_strings(rows)))
            self.assertEqual(len(elements), 32)
            for s in elements:
                counts[s.weight] += 1
            self.assertEqual(counts, expected)

    def test_enumerated_products_stay_in_group(self):
        group = five_qubit_code()
        elements = set(enumerate_group(group))
        sample = list(elements)[:6]
        for a in sample:
            for b in sample:
                self.assertIn(a * b, elements)

    def test_intersections(self):
        S = five_qubit_code()
        self.assertEqual(intersect(S, S).rank, S.rank)
        self.assertEqual(intersect(StabilizerGroup.from_strings(['XX']), StabilizerGroup.from_strings(['ZZ'])).rank, 0)
        Sa, Sb = (StabilizerGroup.from_strings(rows) for rows in EXAMPLE_UNION_ROWS)
        self.assertEqual(intersect(Sa, Sb).sign_sum, 0)

    def test_signed_trace(self):
        S = five_qubit_code()
        self.assertEqual(signed_trace(S, S), Fraction(2))
        Sa, Sb = (StabilizerGroup.from_strings(rows) for rows in EXAMPLE_UNION_ROWS)
        self.assertEqual(signed_trace(Sa, Sb), 0)

    def test_logical_operators(self):
        S = five_qubit_code()
        pairs = logical_operators(S)
        self.assertEqual(len(pairs), 1)
        z, x = pairs[0].z, pairs[0].x
        self.assertFalse(commutes(z, x))
        for g in S.generators:
            self.assertTrue(commutes(z, g) and commutes(x, g))
        self.assertFalse(S.row_space_contains(z))

    def test_syndrome(self):
        S = StabilizerGroup.from_strings(['ZZI', 'IZZ'])
        self.assertEqual(syndrome(S, P('XII')), (1, 0))
        self.assertEqual(syndrome(S, P('IXI')), (1, 1))
        overcomplete = StabilizerGroup.from_strings(['ZZI', 'IZZ', 'ZIZ'])
        self.assertEqual(overcomplete.rank, 2)
        self.assertEqual(syndrome(overcomplete, P('XII')), (1, 0))

    def test_min_weight_outside(self):
        H = seed_code(7)
        found = min_weight_outside(centralizer_basis(H.quantum), H.inner, 4)
        self.assertIsInstance(found, Found)
        self.assertEqual(found.weight, 3)
        S = five_qubit_code()
        self.assertEqual(min_weight_outside(list(S.generators), S, 3), NoneUpTo(3))

    def test_min_weight_outside_in_parallel_keeps_first_hit(self):
        H = dist2_family(7)
        serial = min_weight_outside(centralizer_basis(H.quantum), H.inner, 3, workers=1)
        parallel = min_weight_outside(centralizer_basis(H.quantum), H.inner, 3, workers=2)
        self.assertEqual(serial, parallel)


class HybridCodeTests(SimpleTestCase):
    def test_seed_parameters(self):
        for a, (n, k, m, d) in SEED_PARAMETERS.items():
            H = seed_code(a)
            self.assertEqual((H.n, H.k, H.m), (n, k, m))
            result = distance(H, w_max=3)
            self.assertIsInstance(result, Exact)
            self.assertEqual((result.d, result.witness.weight), (d, d))
        self.assertEqual(seed_code(7).parameters(3), '[[7,1:1,3]]')

    def test_inner_codes(self):
        H = seed_code(7)
        flipped = inner_code(H, (1,))
        self.assertEqual(str(flipped.generators[-1]), '-ZIIIIIX')
        self.assertTrue(H.inner.same_row_space(flipped))
        self.assertTrue(orthogonal_pair(H.inner, flipped))
        self.assertFalse(orthogonal_pair(H.inner, H.inner))

    def test_as_union(self):
        self.assertEqual(as_union(seed_code(7)).M, 2)
        union = as_union(seed_code(9))
        self.assertEqual(union.M, 4)
        self.assertTrue(all(S.rank == 7 for S in union.inner_codes))
        for a in range(4):
            for b in range(a + 1, 4):
                self.assertTrue(orthogonal_pair(union.inner_codes[a], union.inner_codes[b]))

    def test_union_of_a_code_with_itself_is_rejected(self):
        S = five_qubit_code()
        with self.assertRaises(NotOrthogonal):
            StabilizerUnionCode.from_groups([S, S])

    def test_detectability(self):
        H = seed_code(7)
        self.assertTrue(is_detectable(H, P('IIIIIII')))
        self.assertTrue(is_detectable(H, P('ZIIIIIX')))
        for w in (1, 2):
            self.assertTrue(all(is_detectable(H, E) for E in enumerate_paulis(7, w)))

    def test_distance_cap(self):
        self.assertEqual(distance(seed_code(7), w_max=2), AtLeast(3))

    def test_inner_degeneracy(self):
        for a, (_, _, _, d) in SEED_PARAMETERS.items():
            H = seed_code(a)
            result = inner_degenerate(H, d)
            self.assertIsInstance(result, Degenerate, a)
            self.assertEqual(result.witness.weight, 2, a)
            self.assertIsInstance(H.inner.contains(result.witness), InGroupWithPhase)
        self.assertEqual(inner_degenerate(seed_code(11), 3).witness, P('ZZIIIIIIIII'))
        self.assertEqual(inner_degenerate(dist2_family(5), 2), Degenerate(P('IIIIX')))
        bell = HybridCode.from_strings(['XX', 'ZZ'])
        self.assertEqual(inner_degenerate(bell, 2), Nondegenerate())

    def test_detectable_dimension(self):
        self.assertEqual(detectable_dimension(1, 1, 2), 2)
        self.assertEqual(detectable_dimension(7, 2, 2), 16370)
        self.assertEqual(detectable_dimension(3, 2, 1), 64 - 4 + 1)
        for n in range(1, 5):
            for K in (1, 2, 4):
                for M in (2, 4):
                    if K * M <= 2 ** n:
                        self.assertGreater(detectable_dimension(n, K, M), detectable_dimension(n, K * M, 1))

    def test_from_quantum(self):
        Q = five_qubit_code()
        H = from_quantum(Q, 1)
        self.assertEqual(H.parameters(), '[[5,0:1]]')
        self.assertEqual(distance(H, w_max=3).d, 3)
        self.assertEqual(from_quantum(Q, 0).parameters(), '[[5,1]]')
        with self.assertRaises(InsufficientLogicals):
            from_quantum(StabilizerGroup.from_strings(['XX', 'ZZ']), 1)

    def test_demote_logical(self):
        H = demote_logical(seed_code(7))
        self.assertEqual((H.k, H.m), (0, 2))

    def test_tensor_with_repetition_code(self):
        H = tensor_classical(five_qubit_code(), [[1, 1, 1]])
        self.assertEqual(H.parameters(), '[[8,1:1]]')
        self.assertEqual(distance(H, w_max=2), AtLeast(3))

    def test_tensor_with_bare_bit(self):
        H = tensor_classical(five_qubit_code(), ['1'])
        self.assertEqual(distance(H, w_max=3).d, 1)
        with self.assertRaises(InvalidParameter):
            tensor_classical(five_qubit_code(), [])

    def test_example_union_distance(self):
        U = example_union()
        self.assertEqual(U.parameters(), '((6,2:2))')
        result = union_distance_dense(U, w_max=3)
        self.assertEqual(result.d, 1)
        self.assertEqual(result.witness.weight, 1)

    def test_single_inner_code_distance(self):
        Sa = StabilizerGroup.from_strings(EXAMPLE_UNION_ROWS[0])
        U = StabilizerUnionCode.from_groups([Sa])
        self.assertEqual(union_distance_dense(U, w_max=3).d, 3)


class FamilyTests(SimpleTestCase):
    def test_distance_two_family(self):
        for n in range(5, 16, 2):
            H = dist2_family(n)
            self.assertEqual(H.parameters(), f"[[{n},{n - 3}:1]]")
            result = distance(H, w_max=2)
            self.assertIsInstance(result, Exact)
            self.assertEqual(result.d, 2)
        witness = distance(dist2_family(5), w_max=2).witness
        self.assertEqual(witness.z, 0)
        self.assertEqual(witness.weight, 2)

    def test_even_length_rejected(self):
        with self.assertRaises(EvenLengthRejected):
            dist2_family(4)
        with self.assertRaises(AnticommutingPair):
            dist2_family(6)

    def test_family_beats_odd_length_bound(self):
        for n in (5, 7, 9):
            H = dist2_family(n)
            self.assertGreater(H.K * H.M, rains_odd_bound(n))
        self.assertEqual(rains_odd_bound(5), 6)

    def test_gottesman(self):
        for j, k in ((3, 3), (4, 10), (5, 25)):
            S = gottesman(j)
            self.assertEqual((S.n, S.code_dimension_log2), (2 ** j, k))
        self.assertEqual(gottesman_layout(3), PASTING_LAYOUT)
        self.assertEqual(gottesman_layout(5), PASTING_LAYOUT)
        self.assertIn(gottesman_layout(4), GOTTESMAN_LAYOUTS)

    def test_seed_checksums(self):
        for a, table in SEED_TABLES.items():
            self.assertEqual(seed_checksum(a), table.checksum)
        with self.assertRaises(InvalidParameter):
            seed_code(8)

    def test_seed_classical_rows(self):
        self.assertEqual([str(g) for g in seed_code(9).classical], ['ZIIIIXIII', 'IZIIIIXII'])

    def test_pasting_parameters(self):
        expected = {7: '[[39,31:1,3]]', 9: '[[41,32:2,3]]', 10: '[[42,33:2,3]]', 11: '[[43,34:2,3]]'}
        for a, text in expected.items():
            self.assertEqual(paste(1, a, verify=True).parameters(3), text)
        self.assertEqual(PastingLayout(2, 11).n, 171)
        self.assertEqual(paste(0, 7).parameters(3), '[[7,1:1,3]]')

    def test_two_block_pasting(self):
        H = paste(2, 7, verify=True)
        self.assertEqual(H.parameters(3), '[[167,157:1,3]]')

    def test_pasting_layout(self):
        layout = PastingLayout(2, 9)
        self.assertEqual(layout.block_sizes, [128, 32, 9])
        self.assertEqual(layout.offsets, [0, 128, 160])
        self.assertEqual(list(layout.block_rows(1)), [2, 3, 4, 5, 6, 7, 8])

    def test_yu_arithmetic(self):
        self.assertTrue(yu_excludes_stabilizer(39, 7))
        self.assertTrue(yu_excludes_stabilizer(43, 7))
        self.assertFalse(yu_excludes_stabilizer(40, 8))
        for m in range(1, 4):
            for a in SEED_TABLES:
                self.assertTrue(yu_excludes_stabilizer(PastingLayout(m, a).n, 2 * m + 5))


class CodeFileTests(SimpleTestCase):
    GEN7_FILE = (
        "# seed code\n"
        "n: 7\n"
        "params: [[7,1:1,3]]\n"
        "quantum:\n"
        + ''.join(f"  {r}\n" for r in SEED_TABLES[7].quantum)
        + "classical:\n  ZIIIIIX\n"
    )

    def test_parse(self):
        parsed = parse_code_file(self.GEN7_FILE)
        self.assertEqual(parsed.n, 7)
        self.assertEqual(parsed.declared.text, '[[7,1:1,3]]')
        self.assertEqual((parsed.declared.K, parsed.declared.M, parsed.declared.d), (2, 2, 3))
        self.assertEqual(parsed.comments, ('seed code',))
        self.assertEqual(parsed.to_code().parameters(), '[[7,1:1]]')

    def test_round_trip(self):
        for code in (seed_code(11), dist2_family(9), paste(1, 7)):
            reread = parse_code_file(dump_code_file(code, 3)).to_code()
            self.assertEqual(reread.quantum.generators, code.quantum.generators)
            self.assertEqual(reread.classical, code.classical)

    def test_union_round_trip(self):
        U = example_union()
        parsed = parse_code_file(dump_code_file(U, 1))
        self.assertTrue(parsed.is_union)
        self.assertEqual(parsed.declared.text, '((6,2:2,1))')
        reread = parsed.to_code()
        self.assertEqual([S.generators for S in reread.inner_codes], [S.generators for S in U.inner_codes])

    def test_parameter_text(self):
        self.assertEqual(parse_parameters('[[8,3,3]]').K, 8)
        self.assertEqual(parse_parameters('((13,8:3,3))').M, 3)
        self.assertIsNone(parse_parameters('[8,3,3]'))

    def test_errors_carry_line_numbers(self):
        with self.assertRaises(CodeFileError) as ctx:
            parse_code_file("n: 3\nquantum:\n  XQZ\n")
        self.assertEqual(ctx.exception.line, 3)
        with self.assertRaises(CodeFileError) as ctx:
            parse_code_file("quantum:\n  XX\n  XXX\n")
        self.assertEqual(ctx.exception.line, 3)
        with self.assertRaises(CodeFileError):
            parse_code_file("XX\n")


class CommandTests(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w') as handle:
            handle.write(text)
        return path

    def test_verify_seed(self):
        out = StringIO()
        call_command('verify', self.write('gen7.code', CodeFileTests.GEN7_FILE), stdout=out)
        self.assertIn('[[7,1:1,3]] verified; inner code degenerate', out.getvalue())
        self.assertIn('declared [[7,1:1,3]]: match', out.getvalue())

    def test_verify_mismatch_exits_with_one(self):
        path = self.write('bad.code', CodeFileTests.GEN7_FILE.replace('[[7,1:1,3]]', '[[7,1:1,4]]'))
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', path, stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 1)

    def test_verify_anticommuting_rows_exit_with_two(self):
        path = self.write('ac.code', "quantum:\n  XX\n  XZ\n")
        with self.assertRaises(CommandError) as ctx:
            call_command('verify', path, stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('AnticommutingPair(1,2)', str(ctx.exception))

    def test_verify_json(self):
        out = StringIO()
        call_command('verify', self.write('gen7.code', CodeFileTests.GEN7_FILE), format='json', stdout=out)
        self.assertIn('"parameters":"[[7,1:1,3]]"', out.getvalue())
        self.assertIn('"matches_declared":true', out.getvalue())

    def test_verify_union_file(self):
        path = self.write('union.code', dump_code_file(example_union(), 1))
        out = StringIO()
        call_command('verify', path, w_max=2, stdout=out)
        self.assertIn('((6,2:2,1)) verified', out.getvalue())

    def test_verify_dense_cross_check(self):
        out = StringIO()
        call_command('verify', self.write('gen7.code', CodeFileTests.GEN7_FILE), dense=True, w_max=3, stdout=out)
        self.assertIn('dense distance: 3', out.getvalue())

    def test_verify_dense_cross_check_on_eleven_qubits(self):
        path = self.write('gen11.code', dump_code_file(seed_code(11), 3))
        out = StringIO()
        call_command('verify', path, dense=True, w_max=3, stdout=out)
        self.assertIn('[[11,4:2,3]] verified', out.getvalue())
        self.assertIn('dense distance: 3', out.getvalue())
        self.assertIn('inner codes orthogonal: yes', out.getvalue())

    def test_verify_many_classical_bits_skips_orthogonality(self):
        code = HybridCode.from_strings([], ['ZIIII', 'IZIII', 'IIZII', 'IIIZI', 'IIIIZ'])
        path = self.write('bits.code', dump_code_file(code))
        out = StringIO()
        call_command('verify', path, w_max=2, stdout=out)
        self.assertIn('[[5,0:5,1]] verified', out.getvalue())
        self.assertIn('inner codes orthogonal: not checked (m=5)', out.getvalue())
        out = StringIO()
        call_command('verify', path, w_max=2, format='json', stdout=out)
        self.assertIn('"orthogonal":null', out.getvalue())

    def test_family_dist2_verifies(self):
        path = os.path.join(self.tmp.name, 'dist2.code')
        call_command('family', 'dist2', n=9, out=path, stdout=StringIO())
        out = StringIO()
        call_command('verify', path, stdout=out)
        self.assertIn('[[9,6:1,2]] verified', out.getvalue())

    def test_family_paste_and_gottesman(self):
        out = StringIO()
        call_command('family', 'paste', m=1, a=10, stdout=out)
        self.assertIn('params: [[42,33:2,3]]', out.getvalue())
        out = StringIO()
        call_command('family', 'gottesman', j=3, stdout=out)
        self.assertIn('params: [[8,3,3]]', out.getvalue())
        self.assertIn('# layout:', out.getvalue())

    def test_family_seed_json(self):
        out = StringIO()
        call_command('family', 'seed', a=11, format='json', stdout=out)
        self.assertIn('"parameters":"[[11,4:2,3]]"', out.getvalue())

    def test_family_missing_parameter(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('family', 'dist2', stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
