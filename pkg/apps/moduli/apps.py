"""
Moduli app configuration.
"""
from django.apps import AppConfig


class ModuliConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.moduli'
    verbose_name = 'Moduli'
