"""
Function space app configuration.
"""
from django.apps import AppConfig


class FunctionSpaceConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.function_space'
    verbose_name = 'Function space'
