import os
import tempfile
from fractions import Fraction
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from bounds.enumerators import (
    aggregate,
    distance_from_enumerators,
    krawtchouk,
    macwilliams,
    macwilliams_residual,
    pair_distributions,
    shadow_values,
    weight_distributions,
)
from bounds.lp import (
    LPInstance,
    LPStatus,
    build_constraints,
    check_certificate,
    check_point,
    feasible,
    point_from_distributions,
    sweep,
)
from bounds.simplex import EQ, GE, LinearConstraint, certificate_is_valid, solve_feasibility, violated_constraints
from bounds.utils.report_builder import build_enumeration_payload, enumeration_lines, sweep_frame
from codes.exceptions import CapExceeded, InvalidInstance, InvalidParameter, ShadowUndefined
from codes.families import dist2_family, example_union, five_qubit_code, seed_code
from codes.hybrid import Exact, StabilizerUnionCode, as_union, distance, from_quantum, tensor_classical
from codes.stabilizer import StabilizerGroup
from codes.utils.codefile import dump_code_file

EXAMPLE_AA = (1, 1, 0, 0, 15, 15, 0)
EXAMPLE_BB = (1, 0, 1, 0, 11, 16, 3)
EXAMPLE_A = tuple(Fraction(v) for v in ('1', '1/4', '1/4', '0', '6', '31/4', '3/4'))


def F(*values):
    return tuple(Fraction(v) for v in values)


class KrawtchoukTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(krawtchouk(2, 6, 1, 0), 18)
        self.assertEqual(krawtchouk(2, 6, 1, 1), 14)
        self.assertTrue(all(krawtchouk(2, 6, 0, r) == 1 for r in range(7)))

    def test_arguments_out_of_range(self):
        with self.assertRaises(InvalidParameter):
            krawtchouk(2, 3, 4, 0)


class EnumeratorTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.example = weight_distributions(example_union())

    def test_example_pairs(self):
        self.assertEqual(self.example.pair(0, 0).A, F(*EXAMPLE_AA))
        self.assertEqual(self.example.pair(1, 1).A, F(*EXAMPLE_BB))
        self.assertEqual(self.example.pair(0, 1), self.example.pair(1, 0))

    def test_example_aggregate(self):
        A, B = aggregate(self.example)
        self.assertEqual(A, EXAMPLE_A)
        self.assertEqual(A[0], 1)
        self.assertEqual(sum(B), 256)

    def test_stabilizer_distributions_satisfy_macwilliams(self):
        for residual in macwilliams_residual(self.example).values():
            self.assertFalse(any(residual))
        self.assertEqual(macwilliams(F(*EXAMPLE_AA), 2), self.example.pair(0, 0).B)

    def test_macwilliams_of_full_space(self):
        self.assertEqual(macwilliams(F(1, 0, 0, 0), 8), F(1, 9, 27, 27))

    def test_macwilliams_inverts_with_reciprocal_dimension(self):
        A = F(*EXAMPLE_AA)
        self.assertEqual(macwilliams(macwilliams(A, 2), Fraction(1, 2)), A)

    def test_single_qubit_code(self):
        U = StabilizerUnionCode.from_groups([StabilizerGroup.from_strings(['Z'])])
        W = weight_distributions(U)
        self.assertEqual((W.pair(0, 0).A, W.pair(0, 0).B), (F(1, 1), F(1, 1)))
        self.assertTrue(all(s >= 0 for s in shadow_values(W.pair(0, 0).A)))

    def test_shadow(self):
        A, _ = aggregate(self.example)
        self.assertTrue(all(s >= 0 for s in shadow_values(A)))
        W = weight_distributions(as_union(seed_code(9)))
        for dist in W.per_pair.values():
            self.assertTrue(all(s >= 0 for s in shadow_values(dist.A)))
        with self.assertRaises(ShadowUndefined):
            shadow_values(A, q=3)

    def test_distance_from_enumerators(self):
        self.assertEqual(distance_from_enumerators(self.example), 1)
        self.assertEqual(distance_from_enumerators(weight_distributions(as_union(seed_code(7)))), 3)
        self.assertEqual(distance_from_enumerators(weight_distributions(as_union(seed_code(11)))), 3)

    def test_enumerator_distance_matches_search(self):
        cases = {
            '[[9,2:2]]': (seed_code(9), 3),
            '[[10,3:2]]': (seed_code(10), 3),
            '[[5,2:1]]': (dist2_family(5), 2),
            '[[9,6:1]]': (dist2_family(9), 2),
            '[[5,0:1]]': (from_quantum(five_qubit_code(), 1), 3),
            '[[8,1:1]]': (tensor_classical(five_qubit_code(), [[1, 1, 1]]), 3),
        }
        for label, (H, d) in cases.items():
            self.assertEqual(H.parameters(), label)
            searched = distance(H, w_max=d)
            self.assertIsInstance(searched, Exact, label)
            self.assertEqual(searched.d, d, label)
            self.assertEqual(distance_from_enumerators(weight_distributions(as_union(H))), d, label)

    def test_seed_aggregate_inequalities(self):
        W = weight_distributions(as_union(seed_code(7)))
        A, B = aggregate(W)
        self.assertTrue(all(0 <= a <= b for a, b in zip(A, B)))
        for j in range(3):
            self.assertEqual(W.pair(0, 0).A[j], W.pair(0, 0).B[j])

    def test_report_lines(self):
        payload = build_enumeration_payload(self.example, '((6,2:2,1))')
        self.assertTrue(payload['macwilliams_zero'])
        lines = enumeration_lines(payload)
        self.assertEqual(lines[0], '((6,2:2,1))  n=6 K=2 M=2')
        self.assertIn('A(0,0): 1 1 0 0 15 15 0', lines)

    def test_cap(self):
        with self.assertRaises(CapExceeded):
            pair_distributions(example_union(), 0, 0, cap=2)

    def test_symmetrized_classes(self):
        classes = weight_distributions(as_union(seed_code(7))).symmetrized()
        self.assertEqual(set(classes), {'AD', 'BD', 'AO', 'BO'})
        self.assertEqual(classes['AD'][0], 1)
        self.assertEqual(classes['BO'][0], 0)
        single = StabilizerUnionCode.from_groups([StabilizerGroup.from_strings(['Z'])])
        self.assertEqual(set(weight_distributions(single).symmetrized()), {'AD', 'BD'})


class SimplexTests(SimpleTestCase):
    def test_infeasible_system_has_certificate(self):
        constraints = [LinearConstraint({0: Fraction(1)}, EQ, Fraction(-1), 'x = -1')]
        result = solve_feasibility(1, constraints)
        self.assertFalse(result.feasible)
        self.assertTrue(certificate_is_valid(1, constraints, result.certificate))

    def test_free_variable(self):
        constraints = [LinearConstraint({0: Fraction(1)}, EQ, Fraction(-1), 'x = -1')]
        result = solve_feasibility(1, constraints, free=(0,))
        self.assertTrue(result.feasible)
        self.assertEqual(result.point, (-1,))

    def test_feasible_point_satisfies_every_row(self):
        constraints = [
            LinearConstraint({0: Fraction(1), 1: Fraction(1)}, GE, Fraction(2), 'x + y >= 2'),
            LinearConstraint({0: Fraction(1)}, EQ, Fraction(1), 'x = 1'),
            LinearConstraint({1: Fraction(-1)}, GE, Fraction(-3), 'y <= 3'),
        ]
        result = solve_feasibility(2, constraints)
        self.assertTrue(result.feasible)
        self.assertEqual(violated_constraints(constraints, result.point), [])

    def test_conflicting_inequalities(self):
        constraints = [
            LinearConstraint({0: Fraction(1)}, GE, Fraction(3), 'x >= 3'),
            LinearConstraint({0: Fraction(-1)}, GE, Fraction(-2), 'x <= 2'),
        ]
        result = solve_feasibility(1, constraints)
        self.assertFalse(result.feasible)
        self.assertTrue(certificate_is_valid(1, constraints, result.certificate))


class LPBoundTests(SimpleTestCase):
    def assertStatus(self, inst, status):
        result = feasible(inst)
        self.assertEqual(result.status, status, inst.label)
        return result

    def test_variable_layout(self):
        system = build_constraints(LPInstance(7, 2, 2, 3))
        self.assertEqual(len(system.variables), 32)
        self.assertEqual(len(system.free), 8)
        quantum = build_constraints(LPInstance(7, 2, 1, 3))
        self.assertEqual(len(quantum.variables), 16)
        self.assertEqual(quantum.free, ())

    def test_invalid_instances(self):
        with self.assertRaises(InvalidInstance):
            LPInstance(5, 2, 2, 9)
        with self.assertRaises(InvalidInstance):
            LPInstance(5, 2, 2, 3, q=3, shadow=True)
        self.assertFalse(LPInstance(5, 3, 3, 3, q=3).shadow)

    def test_ruled_out_hybrid_codes(self):
        for n, k, m, d in ((10, 4, 1, 3), (12, 5, 1, 3), (10, 2, 1, 4)):
            result = self.assertStatus(LPInstance.stabilizer(n, k, m, d), LPStatus.INFEASIBLE)
            system = build_constraints(result.instance)
            self.assertTrue(check_certificate(system, result.certificate))

    def test_seed_parameters_are_feasible(self):
        for n, k, m in ((7, 1, 1), (9, 2, 2), (11, 4, 2)):
            result = self.assertStatus(LPInstance.stabilizer(n, k, m, 3), LPStatus.FEASIBLE)
            system = build_constraints(result.instance)
            self.assertEqual(check_point(system, result.witness), [])

    def test_nonadditive_candidates_are_feasible(self):
        self.assertStatus(LPInstance(10, 8, 6, 3), LPStatus.FEASIBLE)
        self.assertStatus(LPInstance(13, 8, 3, 3), LPStatus.FEASIBLE)

    def test_real_code_distributions_are_feasible_points(self):
        for a, (n, k, m) in ((7, (7, 1, 1)), (9, (9, 2, 2))):
            W = weight_distributions(as_union(seed_code(a)))
            system = build_constraints(LPInstance.stabilizer(n, k, m, 3))
            self.assertEqual(check_point(system, point_from_distributions(W)), [])

    def test_example_union_point(self):
        W = weight_distributions(example_union())
        system = build_constraints(LPInstance(6, 2, 2, 1))
        self.assertEqual(check_point(system, point_from_distributions(W)), [])

    def test_sweep(self):
        table = sweep(range(4, 5), 1)
        self.assertEqual(len(table.entries), 15)
        self.assertTrue(all(e.feasible for e in table.entries))
        self.assertEqual(table.monotonicity_violations(), [])
        self.assertEqual(table.frontier(4), [(1, 16), (2, 8), (4, 4), (8, 2), (16, 1)])
        frame = sweep_frame(table)
        self.assertEqual(frame.loc[(4, 0), 4], 'F')


class CommandTests(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w') as handle:
            handle.write(text)
        return path

    def test_enumerate_example_union(self):
        out = StringIO()
        call_command('enumerate', self.write('union.code', dump_code_file(example_union(), 1)), stdout=out)
        self.assertIn('A: 1 1/4 1/4 0 6 31/4 3/4', out.getvalue())
        self.assertIn('MacWilliams residual: 0', out.getvalue())
        self.assertIn('distance (enumerators): 1', out.getvalue())

    def test_enumerate_single_qubit(self):
        out = StringIO()
        call_command('enumerate', self.write('z.code', "quantum:\n  Z\n"), stdout=out)
        self.assertIn('A: 1 1\n', out.getvalue())
        self.assertIn('B: 1 1\n', out.getvalue())

    def test_enumerate_json(self):
        out = StringIO()
        call_command('enumerate', self.write('gen9.code', dump_code_file(seed_code(9), 3)),
                     format='json', stdout=out)
        self.assertIn('"M":4', out.getvalue())
        self.assertIn('"distance":3', out.getvalue())

    def test_enumerate_parse_error(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('enumerate', self.write('bad.code', "quantum:\n  XQ\n"), stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_lp_infeasible_exits_with_one(self):
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command('lp', n=10, k=4, m=1, d=3, stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('Infeasible', out.getvalue())
        self.assertIn('certificate', out.getvalue())

    def test_lp_feasible(self):
        out = StringIO()
        call_command('lp', n=7, k=1, m=1, d=3, stdout=out)
        self.assertIn('((7,2:2,3)) [shadow=on, nested=on]: Feasible', out.getvalue())

    def test_lp_dimensions_given_directly(self):
        out = StringIO()
        call_command('lp', n=13, K=8, M=3, d=3, format='json', stdout=out)
        self.assertIn('"status":"feasible"', out.getvalue())
        self.assertIn('"nested":false', out.getvalue())

    def test_lp_invalid_instance(self):
        with self.assertRaises(CommandError) as ctx:
            call_command('lp', n=3, k=1, m=1, d=9, stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)

    def test_lp_requires_both_dimensions(self):
        for options in ({'k': 1}, {'m': 1}, {'K_value': 2}):
            with self.assertRaises(CommandError) as ctx:
                call_command('lp', n=7, d=3, stdout=StringIO(), **options)
            self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaisesMessage(CommandError, '--m or --M'):
            call_command('lp', n=7, k=1, d=3, stdout=StringIO())

    def test_sweep(self):
        out = StringIO()
        call_command('sweep', n_min=4, n_max=4, d=1, stdout=out, stderr=StringIO())
        self.assertIn('n=4 frontier: (K=1, M=16), (K=2, M=8)', out.getvalue())
        self.assertIn('15 instances decided', out.getvalue())

    def test_sweep_json(self):
        out = StringIO()
        call_command('sweep', n_min=3, n_max=3, d=1, format='json', stdout=out, stderr=StringIO())
        self.assertIn('"monotonicity_violations":0', out.getvalue())
