import argparse

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from bounds.lp import sweep
from bounds.serializers import SweepEntrySerializer
from bounds.utils.report_builder import sweep_lines
from codes.exceptions import CodeConstructionError


class Command(BaseCommand):
    help = 'Sweep LP feasibility over K = 2^k, M = 2^m for a range of lengths'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--n-min', type=int, required=True)
        parser.add_argument('--n-max', type=int, required=True)
        parser.add_argument('--d', type=int, required=True)
        parser.add_argument('--q', type=int, default=2)
        parser.add_argument('--nested', action=argparse.BooleanOptionalAction, default=True)
        parser.add_argument('--threads', type=int, default=None, help='Worker processes')
        parser.add_argument('--format', choices=['plain', 'json'], default='plain')

    def handle(self, *args, **options):
        if options['n_min'] > options['n_max']:
            raise CommandError("--n-min must not exceed --n-max", returncode=2)
        lengths = range(options['n_min'], options['n_max'] + 1)
        self.stderr.write(self.style.WARNING(
            f"Sweeping n={options['n_min']}..{options['n_max']} at d={options['d']}..."
        ))
        try:
            table = sweep(lengths, options['d'], q=options['q'], nested=options['nested'],
                          workers=options['threads'])
        except CodeConstructionError as exc:
            raise CommandError(str(exc), returncode=2)

        if options['format'] == 'json':
            data = {
                'd': table.d,
                'entries': SweepEntrySerializer(table.entries, many=True).data,
                'frontier': {
                    str(n): [list(point) for point in table.frontier(n)]
                    for n in lengths
                },
                'monotonicity_violations': len(table.monotonicity_violations()),
            }
            self.stdout.write(JSONRenderer().render(data).decode())
            return

        self.stdout.write('=' * 60)
        for line in sweep_lines(table):
            self.stdout.write(line)
        self.stdout.write('=' * 60)
        self.stdout.write(self.style.SUCCESS(f"{len(table.entries)} instances decided"))
