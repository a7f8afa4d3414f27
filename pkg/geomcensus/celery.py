"""
Celery configuration for the geomcensus project.
"""
import os

from celery import Celery

# Set the default Django settings module
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'geomcensus.settings')

app = Celery('geomcensus')

# Load config from Django settings with CELERY_ prefix
app.config_from_object('django.conf:settings', namespace='CELERY')

# Census shard tasks live in census/tasks.py
app.autodiscover_tasks()
