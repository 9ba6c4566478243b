import argparse

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from bounds.lp import LPInstance, feasible
from bounds.serializers import LPResultSerializer
from bounds.utils.report_builder import build_lp_payload, lp_lines
from codes.exceptions import CodeConstructionError


class Command(BaseCommand):
    help = 'Decide the linear-programming bound for a ((n,K:M,d)) hybrid code'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--n', type=int, required=True)
        parser.add_argument('--d', type=int, required=True)
        size = parser.add_mutually_exclusive_group()
        size.add_argument('--k', type=int, help='Logical qubits (K = q^k)')
        size.add_argument('--K', type=int, dest='K_value', help='Code dimension K')
        classical = parser.add_mutually_exclusive_group()
        classical.add_argument('--m', type=int, help='Classical bits (M = q^m)')
        classical.add_argument('--M', type=int, dest='M_value', help='Number of inner codes M')
        parser.add_argument('--q', type=int, default=2, help='Local dimension')
        parser.add_argument(
            '--nested', action=argparse.BooleanOptionalAction, default=None,
            help='Add A_j <= AD_j (default: on when --k or --m is given)',
        )
        parser.add_argument(
            '--shadow', action=argparse.BooleanOptionalAction, default=None,
            help='Shadow inequalities (default: on for q=2)',
        )
        parser.add_argument('--format', choices=['plain', 'json'], default='plain')

    def handle(self, *args, **options):
        if options['k'] is None and options['K_value'] is None:
            raise CommandError("one of --k or --K is required", returncode=2)
        if options['m'] is None and options['M_value'] is None:
            raise CommandError("one of --m or --M is required (--m 0 for a quantum code)", returncode=2)
        q = options['q']
        K = q ** options['k'] if options['k'] is not None else options['K_value']
        M = q ** options['m'] if options['m'] is not None else options['M_value']
        nested = options['nested']
        if nested is None:
            nested = options['k'] is not None or options['m'] is not None

        try:
            inst = LPInstance(options['n'], K, M, options['d'], q, options['shadow'], nested)
            result = feasible(inst)
        except CodeConstructionError as exc:
            raise CommandError(str(exc), returncode=2)

        if options['format'] == 'json':
            data = LPResultSerializer(build_lp_payload(result)).data
            self.stdout.write(JSONRenderer().render(data).decode())
        else:
            lines = lp_lines(result)
            style = self.style.SUCCESS if result.is_feasible else self.style.WARNING
            self.stdout.write(style(lines[0]))
            for line in lines[1:]:
                self.stdout.write(line)

        if not result.is_feasible:
            raise CommandError(f"{inst.label} is infeasible", returncode=1)
