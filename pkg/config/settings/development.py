"""
Development settings for NCK.
"""
from .base import *  # noqa: F401, F403

DEBUG = True

# Show solver fallbacks while iterating
LOGGING['loggers']['apps']['level'] = 'DEBUG'  # noqa: F405
