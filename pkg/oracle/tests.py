from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from bounds.enumerators import weight_distributions
from codes.exceptions import DenseLimitExceeded
from codes.families import (
    EXAMPLE_UNION_ROWS,
    SEED_PARAMETERS,
    SEED_TABLES,
    dist2_family,
    example_union,
    five_qubit_code,
    seed_code,
)
from codes.hybrid import StabilizerUnionCode, as_union, distance, from_quantum, is_detectable, union_distance_dense
from codes.pauli import PauliOperator, commutes, enumerate_paulis, pauli_from_string
from codes.stabilizer import StabilizerGroup
from oracle.dense import (
    Detectable,
    OffDiagonal,
    Undetectable,
    code_basis,
    detectable_space_dim_dense,
    kl_check,
    kl_check_basis,
    pauli_matrix,
    projector,
    walsh_hadamard,
    weight_distributions_dense,
)
from oracle.matrices import GaussianRational, GaussianRationalMatrix, exact_rank, integer_rank


def P(text):
    return pauli_from_string(text)


def group(*rows):
    return StabilizerGroup.from_strings(rows)


def all_paulis(n):
    return [PauliOperator.identity(n)] + [E for w in range(1, n + 1) for E in enumerate_paulis(n, w)]


class ExactMatrixTests(SimpleTestCase):
    def test_gaussian_rationals(self):
        a = GaussianRational(1, 2)
        self.assertEqual(a * a.conjugate(), 5)
        self.assertEqual(a / a, 1)
        self.assertEqual(str(GaussianRational(Fraction(1, 2), -1)), '1/2-1i')

    def test_integer_rank(self):
        self.assertEqual(integer_rank([[2, 4], [1, 2]]), 1)
        self.assertEqual(integer_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 3)
        self.assertEqual(integer_rank([[0, 0]]), 0)

    def test_complex_rank(self):
        # second row is i times the first
        self.assertEqual(exact_rank([[1, 0], [0, -1]], [[0, 1], [1, 0]]), 1)
        self.assertEqual(GaussianRationalMatrix.identity(4).rank(), 4)


class PauliMatrixTests(SimpleTestCase):
    def test_single_qubit_y(self):
        Y = pauli_matrix(P('Y'))
        self.assertEqual(Y.entry(1, 0), GaussianRational(0, 1))
        self.assertEqual(Y.entry(0, 1), GaussianRational(0, -1))
        self.assertTrue(Y.is_hermitian())

    def test_qubit_zero_is_the_top_index_bit(self):
        self.assertEqual(pauli_matrix(P('XI')).entry(2, 0), 1)

    def test_products_match_matrix_products(self):
        a, b = P(SEED_TABLES[7].quantum[0]), P(SEED_TABLES[7].quantum[1])
        self.assertTrue(pauli_matrix(a * b).equals(pauli_matrix(a) @ pauli_matrix(b)))
        self.assertTrue(pauli_matrix(P('Z') * P('X')).equals(pauli_matrix(P('iY'))))

    def test_algebra_matches_matrices(self):
        for n in (1, 2, 3):
            operators = all_paulis(n)
            matrices = {E: pauli_matrix(E) for E in operators}
            for a in operators:
                for b in operators:
                    ab = matrices[a] @ matrices[b]
                    self.assertTrue(pauli_matrix(a * b).equals(ab), (str(a), str(b)))
                    self.assertEqual(commutes(a, b), ab.equals(matrices[b] @ matrices[a]), (str(a), str(b)))

    def test_dense_limit(self):
        with self.assertRaises(DenseLimitExceeded):
            pauli_matrix(PauliOperator.identity(13))
        with self.assertRaises(DenseLimitExceeded):
            projector(seed_code(11).inner, dense_limit=8)


class ProjectorTests(SimpleTestCase):
    def test_single_qubit_projector(self):
        Pz = projector(group('Z'))
        self.assertEqual([Pz.entry(0, 0), Pz.entry(1, 1), Pz.entry(0, 1)], [1, 0, 0])

    def test_projector_properties(self):
        Pf = projector(five_qubit_code())
        self.assertTrue(Pf.is_hermitian())
        self.assertTrue(Pf.is_idempotent())
        self.assertEqual(Pf.trace(), 2)

    def test_example_union_projectors(self):
        Pa, Pb = (projector(group(*rows)) for rows in EXAMPLE_UNION_ROWS)
        self.assertEqual(Pa.rank(), 2)
        self.assertEqual((Pa + Pb).trace(), 4)
        self.assertTrue((Pa @ Pb).is_zero())

    def test_projector_rank_matches_group_rank(self):
        groups = [group('Z'), group('XX', 'ZZ'), group('ZZI', 'IZZ'), five_qubit_code()]
        groups += [dist2_family(5).quantum, dist2_family(5).inner]
        groups += [group(*rows) for rows in EXAMPLE_UNION_ROWS]
        for S in groups:
            self.assertEqual(projector(S).rank(), 2 ** (S.n - S.rank), str(S))

    def test_inner_projectors_fill_union_dimension(self):
        for H in (dist2_family(5), from_quantum(five_qubit_code(), 1)):
            U = as_union(H)
            projectors = [projector(S) for S in U.inner_codes]
            self.assertEqual(sum(proj.rank() for proj in projectors), U.K * U.M)
            total = projectors[0]
            for proj in projectors[1:]:
                total = total + proj
            self.assertEqual(total.rank(), U.K * U.M)
        U = as_union(seed_code(7))
        traces = [projector(S).trace() for S in U.inner_codes]
        self.assertEqual(sum(t.re for t in traces), U.K * U.M)

    def test_code_basis(self):
        basis = code_basis(five_qubit_code())
        self.assertEqual(basis.K, 2)
        gram_re, gram_im = basis.gram()
        self.assertTrue(np.array_equal(gram_re, basis.norm * np.eye(2, dtype=np.int64)))
        self.assertFalse(gram_im.any())

    def test_code_basis_lies_in_the_code(self):
        S = five_qubit_code()
        basis = code_basis(S)
        P5 = projector(S)
        columns = GaussianRationalMatrix(basis.re, basis.im)
        self.assertTrue((P5 @ columns).equals(columns))


class KnillLaflammeTests(SimpleTestCase):
    def setUp(self):
        self.projectors = [projector(group(*rows)) for rows in EXAMPLE_UNION_ROWS]
        self.bases = [code_basis(group(*rows)) for rows in EXAMPLE_UNION_ROWS]

    def test_identity_is_detectable(self):
        result = kl_check(self.projectors, PauliOperator.identity(6))
        self.assertEqual(result, Detectable((1, 1)))
        self.assertEqual(kl_check_basis(self.bases, PauliOperator.identity(6)).scalars, (1, 1))

    def test_example_union_weight_one_failure(self):
        result = kl_check(self.projectors, P('IIIIXI'))
        self.assertIsInstance(result, Undetectable)
        self.assertIsInstance(result.reason, OffDiagonal)
        self.assertIsInstance(kl_check_basis(self.bases, P('IIIIXI')), Undetectable)

    def test_projector_and_basis_forms_agree(self):
        for E in enumerate_paulis(6, 1):
            self.assertEqual(
                type(kl_check(self.projectors, E)),
                type(kl_check_basis(self.bases, E)),
            )

    def test_classical_row_has_message_dependent_scalar(self):
        bases = [code_basis(S) for S in as_union(seed_code(7)).inner_codes]
        result = kl_check_basis(bases, P('ZIIIIIX'))
        self.assertEqual(result, Detectable((GaussianRational(1), GaussianRational(-1))))

    def test_dense_and_symplectic_detectability_agree(self):
        for H in (seed_code(7), dist2_family(5)):
            bases = [code_basis(S) for S in as_union(H).inner_codes]
            for w in (1, 2, 3):
                for E in enumerate_paulis(H.n, w):
                    dense = isinstance(kl_check_basis(bases, E), Detectable)
                    self.assertEqual(dense, is_detectable(H, E), str(E))

    def test_dense_and_symplectic_distance_agree_on_seeds(self):
        for a, (_, _, _, d) in SEED_PARAMETERS.items():
            H = seed_code(a)
            symplectic = distance(H, w_max=3)
            dense = union_distance_dense(as_union(H), w_max=3)
            self.assertEqual((symplectic.d, dense.d), (d, d), a)
            self.assertEqual(dense.witness.weight, d)


class DenseEnumeratorTests(SimpleTestCase):
    def test_walsh_hadamard(self):
        self.assertEqual(list(walsh_hadamard([1, 0, 0, 0])), [1, 1, 1, 1])
        self.assertEqual(list(walsh_hadamard([0, 1, 0, 0])), [1, -1, 1, -1])

    def test_single_qubit_code(self):
        W = weight_distributions_dense([projector(group('Z'))], K=1)
        self.assertEqual(W.pair(0, 0).A, (1, 1))
        self.assertEqual(W.pair(0, 0).B, (1, 1))

    def test_example_union_matches_group_computation(self):
        U = example_union()
        dense = weight_distributions_dense([projector(S) for S in U.inner_codes], K=U.K)
        symplectic = weight_distributions(U)
        self.assertEqual(dense.pair(0, 0).A, (1, 1, 0, 0, 15, 15, 0))
        self.assertEqual(dense.pair(1, 1).A, (1, 0, 1, 0, 11, 16, 3))
        for key, dist in symplectic.per_pair.items():
            self.assertEqual(dense.pair(*key), dist)

    def test_group_distributions_match_dense_up_to_seven_qubits(self):
        unions = [
            as_union(seed_code(7)),
            as_union(dist2_family(5)),
            as_union(dist2_family(7)),
            as_union(from_quantum(five_qubit_code(), 1)),
            StabilizerUnionCode.from_groups([five_qubit_code()]),
        ]
        for U in unions:
            dense = weight_distributions_dense([projector(S) for S in U.inner_codes], K=U.K)
            symplectic = weight_distributions(U)
            self.assertEqual(set(dense.per_pair), set(symplectic.per_pair))
            for key, dist in symplectic.per_pair.items():
                self.assertEqual(dense.pair(*key), dist, (U.parameters(), key))


class DetectableSpaceTests(SimpleTestCase):
    def check(self, groups, expected):
        projectors = [projector(S) for S in groups]
        self.assertEqual(detectable_space_dim_dense(projectors), expected)

    def test_one_qubit(self):
        self.check([group('Z'), group('-Z')], 2)

    def test_two_qubits(self):
        self.check([group('ZZ', 'ZI'), group('ZZ', '-ZI')], 14)

    def test_three_qubits(self):
        self.check([group('ZZI', 'IZZ'), group('ZZI', '-IZZ')], 50)

    def test_quantum_code_count(self):
        U = StabilizerUnionCode.from_groups([group('ZZI', 'IZZ')])
        self.check(U.inner_codes, 64 - 4 + 1)
