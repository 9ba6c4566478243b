from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from bounds.enumerators import weight_distributions
from bounds.serializers import EnumerationReportSerializer
from bounds.utils.report_builder import build_enumeration_payload, enumeration_lines
from codes.exceptions import CodeConstructionError
from codes.hybrid import HybridCode, as_union
from codes.utils.codefile import read_code_file


class Command(BaseCommand):
    help = 'Print the weight enumerators of a code file as exact fractions'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('path', help='Code file')
        parser.add_argument('--format', choices=['plain', 'json'], default='plain')

    def handle(self, *args, **options):
        try:
            code = read_code_file(options['path']).to_code()
            union = as_union(code) if isinstance(code, HybridCode) else code
            W = weight_distributions(union)
        except OSError as exc:
            raise CommandError(f"cannot read {options['path']}: {exc}", returncode=2)
        except CodeConstructionError as exc:
            raise CommandError(str(exc), returncode=2)

        payload = build_enumeration_payload(W, code.parameters())
        if options['format'] == 'json':
            data = EnumerationReportSerializer(payload).data
            self.stdout.write(JSONRenderer().render(data).decode())
            return

        self.stdout.write('=' * 60)
        for line in enumeration_lines(payload):
            self.stdout.write(line)
        self.stdout.write('=' * 60)
        if not payload['macwilliams_zero']:
            self.stderr.write(self.style.ERROR('MacWilliams residual is nonzero'))
