from django.apps import AppConfig


class OracleConfig(AppConfig):
    """Dense Gaussian-rational oracle: projectors, bases, KL checks, traces."""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'oracle'
    verbose_name = 'Dense Oracle'
