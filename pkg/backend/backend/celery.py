import os

from celery import Celery

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "backend.settings")

app = Celery("ss_gamma")

app.config_from_object("django.conf:settings", namespace="CELERY")

app.autodiscover_tasks(["api.v1"], related_name="task")
