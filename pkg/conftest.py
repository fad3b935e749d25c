"""Configure Django for the test suite, matching manage.py's default settings."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings.production')
django.setup()
