from django.apps import AppConfig


class PadicConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "padic"
    verbose_name = "p-адические числа"
