from django.apps import AppConfig


class WeilrepConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "weilrep"
    verbose_name = "Представление Вейля"
