"""Access to the HYBRIDQEC_CONFIG settings block."""

import os

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    'DENSE_LIMIT': 12,
    'DENSE_ENUMERATOR_LIMIT': 8,
    'DENSE_DIMENSION_LIMIT': 4,
    'GROUP_RANK_CAP': 26,
    'UNION_MAX_CLASSICAL_BITS': 12,
    'VERIFY_W_MAX': 4,
    'THREADS': 1,
}


def qec_setting(name):
    """
    Return a toolkit setting.

    Library code also runs without a configured Django project (plain
    imports, worker processes); the built-in defaults apply there, with
    HYBRIDQEC_THREADS still honoured.
    """
    try:
        overrides = getattr(settings, 'HYBRIDQEC_CONFIG', {})
    except ImproperlyConfigured:
        overrides = {}
        if name == 'THREADS' and os.getenv('HYBRIDQEC_THREADS'):
            return int(os.environ['HYBRIDQEC_THREADS'])
    return overrides.get(name, DEFAULTS[name])
