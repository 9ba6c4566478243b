from django.apps import AppConfig


class CodesConfig(AppConfig):
    """
    Configuration for the codes application.

    Provides the Pauli algebra, stabilizer groups, hybrid codes, the
    constructive code families and the `verify` and `family` commands.
    """

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'codes'
    verbose_name = 'Hybrid Stabilizer Codes'
