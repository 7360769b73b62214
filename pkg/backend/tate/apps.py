from django.apps import AppConfig


class TateConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "tate"
    verbose_name = "Локальные множители Тейта"
