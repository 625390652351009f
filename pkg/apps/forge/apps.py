from django.apps import AppConfig


class ForgeConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.forge"
    verbose_name = "Task forge"
