"""
Net builder app configuration.
"""
from django.apps import AppConfig


class NetBuilderConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.net_builder'
    verbose_name = 'Net builder'
