from django.apps import AppConfig


class KolamConfig(AppConfig):
    name = "kolam"
    verbose_name = "Hridaya Kolam generator"
