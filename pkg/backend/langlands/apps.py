from django.apps import AppConfig


class LanglandsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "langlands"
    verbose_name = "Параметры Ленглендса"
