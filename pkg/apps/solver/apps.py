from django.apps import AppConfig


class TopologySolverConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "apps.solver"
    verbose_name = "Topology solver"
