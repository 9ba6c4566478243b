import logging
from itertools import combinations

from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from codes.conf import qec_setting
from codes.exceptions import CodeConstructionError
from codes.hybrid import (
    Degenerate,
    Exact,
    HybridCode,
    as_union,
    distance,
    inner_degenerate,
    orthogonal_pair,
    union_distance_dense,
)
from codes.serializers import VerificationReportSerializer
from codes.utils.codefile import read_code_file

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Verify the parameters of a hybrid code or union code file'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('path', help='Code file')
        parser.add_argument('--w-max', type=int, default=None, help='Largest weight scanned')
        parser.add_argument('--dense', action='store_true', help='Cross-check with the dense oracle')
        parser.add_argument('--format', choices=['plain', 'json'], default='plain')
        parser.add_argument('--threads', type=int, default=None, help='Worker processes for scans')

    def handle(self, *args, **options):
        try:
            code_file = read_code_file(options['path'])
            code = code_file.to_code()
        except OSError as exc:
            raise CommandError(f"cannot read {options['path']}: {exc}", returncode=2)
        except CodeConstructionError as exc:
            raise CommandError(str(exc), returncode=2)

        w_max = options['w_max'] or qec_setting('VERIFY_W_MAX')
        try:
            if isinstance(code, HybridCode):
                report = self.verify_hybrid(code, w_max, options)
            else:
                report = self.verify_union(code, w_max)
        except CodeConstructionError as exc:
            raise CommandError(str(exc), returncode=2)

        declared = code_file.declared
        report['declared'] = declared.text if declared else None
        report['matches_declared'] = self.matches(report, declared)

        if options['format'] == 'json':
            data = VerificationReportSerializer(report).data
            self.stdout.write(JSONRenderer().render(data).decode())
        else:
            self.write_plain(report)

        if not report['matches_declared']:
            raise CommandError(
                f"declared {declared.text} does not match computed {report['parameters']}",
                returncode=1,
            )

    # ------------------------------------------------------------------
    def verify_hybrid(self, H, w_max, options):
        result = distance(H, w_max=w_max, workers=options['threads'])
        exact = isinstance(result, Exact)
        d_text = str(result.d) if exact else f">={result.d}"

        degeneracy = inner_degenerate(H, result.d)
        # None when m > 4: not checked
        orthogonal = None
        dense_distance = None
        if H.m <= 4:
            union = as_union(H)
            orthogonal = all(
                orthogonal_pair(union.inner_codes[a], union.inner_codes[b])
                for a, b in combinations(range(union.M), 2)
            )
            if options['dense'] and H.n <= qec_setting('DENSE_LIMIT'):
                dense = union_distance_dense(union, w_max=w_max)
                dense_distance = dense.d
        elif options['dense']:
            self.stderr.write(self.style.WARNING(f"dense cross-check skipped: m={H.m} inner codes"))

        return {
            'kind': 'hybrid',
            'parameters': H.parameters(d_text),
            'n': H.n,
            'k': H.k,
            'm': H.m,
            'K': H.K,
            'M': H.M,
            'distance': result.d,
            'distance_exact': exact,
            'witness': result.witness if exact else None,
            'dense_distance': dense_distance,
            'degenerate': isinstance(degeneracy, Degenerate),
            'degeneracy_witness': degeneracy.witness if isinstance(degeneracy, Degenerate) else None,
            'orthogonal': orthogonal,
        }

    def verify_union(self, U, w_max):
        result = union_distance_dense(U, w_max=w_max)
        exact = isinstance(result, Exact)
        d_text = str(result.d) if exact else f">={result.d}"
        return {
            'kind': 'union',
            'parameters': U.parameters(d_text),
            'n': U.n,
            'k': None,
            'm': None,
            'K': U.K,
            'M': U.M,
            'distance': result.d,
            'distance_exact': exact,
            'witness': result.witness if exact else None,
            'dense_distance': result.d,
            'degenerate': None,
            'degeneracy_witness': None,
            'orthogonal': True,
        }

    @staticmethod
    def matches(report, declared):
        if declared is None:
            return True
        if (declared.n, declared.K, declared.M) != (report['n'], report['K'], report['M']):
            return False
        if declared.d is not None:
            return report['distance_exact'] and report['distance'] == declared.d
        return True

    def write_plain(self, report):
        summary = f"{report['parameters']} verified"
        if report['degenerate']:
            summary += f"; inner code degenerate (witness {report['degeneracy_witness']})"
        elif report['degenerate'] is False:
            summary += "; inner code nondegenerate"
        self.stdout.write(self.style.SUCCESS(summary))
        if report['witness'] is not None:
            self.stdout.write(f"undetectable witness: {report['witness']}")
        if report['dense_distance'] is not None and report['kind'] == 'hybrid':
            self.stdout.write(f"dense distance: {report['dense_distance']}")
        if report['orthogonal'] is None:
            self.stdout.write(f"inner codes orthogonal: not checked (m={report['m']})")
        else:
            self.stdout.write(f"inner codes orthogonal: {'yes' if report['orthogonal'] else 'NO'}")
        if report['declared']:
            status = 'match' if report['matches_declared'] else 'MISMATCH'
            self.stdout.write(f"declared {report['declared']}: {status}")
