from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from codes.exceptions import CodeConstructionError
from codes.families import (
    dist2_family,
    gottesman,
    gottesman_layout,
    paste,
    seed_checksum,
    seed_code,
)
from codes.hybrid import HybridCode
from codes.serializers import CodeSummarySerializer
from codes.utils.codefile import dump_code_file, parse_code_file


class Command(BaseCommand):
    help = 'Write a code file for one of the built-in code families'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=['dist2', 'paste', 'gottesman', 'seed'])
        parser.add_argument('--n', type=int, help='Length of the distance-2 code (odd)')
        parser.add_argument('--m', type=int, help='Number of pasted Gottesman blocks')
        parser.add_argument('--a', type=int, help='Seed length: 7, 9, 10 or 11')
        parser.add_argument('--j', type=int, help='Gottesman code of length 2^j')
        parser.add_argument('--out', help='Output path (standard output when omitted)')
        parser.add_argument('--verify', action='store_true', help='Scan weights <= 2 before writing')
        parser.add_argument('--format', choices=['plain', 'json'], default='plain')

    def handle(self, *args, **options):
        kind = options['kind']
        try:
            code, d, comments, layout = self.build(kind, options)
        except CodeConstructionError as exc:
            raise CommandError(str(exc), returncode=2)

        text = dump_code_file(code, d, comments)
        reread = parse_code_file(text).to_code()
        if (reread.quantum.generators, reread.classical) != (code.quantum.generators, code.classical):
            raise CommandError(f"{kind}: written file does not parse back to the same code", returncode=1)

        if options['out']:
            with open(options['out'], 'w') as handle:
                handle.write(text)

        if options['format'] == 'json':
            data = CodeSummarySerializer({
                'parameters': code.parameters(d),
                'n': code.n,
                'quantum': list(code.quantum.generators),
                'classical': list(code.classical),
                'layout': layout,
                'path': options['out'],
            }).data
            self.stdout.write(JSONRenderer().render(data).decode())
        elif options['out']:
            self.stdout.write(self.style.SUCCESS(f"{code.parameters(d)} written to {options['out']}"))
        else:
            self.stdout.write(text, ending='')

    def build(self, kind, options):
        """(code, declared distance, comments, layout label)"""
        if kind == 'dist2':
            n = self.require(options, 'n')
            return dist2_family(n), 2, [f"distance-2 family, n={n}"], None
        if kind == 'seed':
            a = self.require(options, 'a')
            return seed_code(a), 3, [f"seed code, a={a}", f"sha256 {seed_checksum(a)}"], None
        if kind == 'gottesman':
            j = self.require(options, 'j')
            group = gottesman(j)
            layout = gottesman_layout(j).label
            code = HybridCode.from_generators(group.generators, n=group.n)
            return code, 3, [f"Gottesman code, j={j}", f"layout: {layout}"], layout
        m, a = self.require(options, 'm'), self.require(options, 'a')
        code = paste(m, a, verify=options['verify'])
        return code, 3, [f"pasted code, m={m}, a={a}"], None

    @staticmethod
    def require(options, name):
        value = options.get(name)
        if value is None:
            raise CommandError(f"--{name} is required for this family", returncode=2)
        return value
