from django.apps import AppConfig


class MetaplecticConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "metaplectic"
    verbose_name = "Метаплектическая группа Mp(2)"
