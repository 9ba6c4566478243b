from django.apps import AppConfig


class BoundsConfig(AppConfig):
    """
    Configuration for the bounds application.

    Provides weight enumerators, the exact LP solver and the `enumerate`,
    `lp` and `sweep` commands.
    """

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'bounds'
    verbose_name = 'Enumerators and LP Bounds'
