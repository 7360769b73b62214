from django.apps import AppConfig


class ShimuraConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "shimura"
    verbose_name = "Интегралы типа Шимуры"
