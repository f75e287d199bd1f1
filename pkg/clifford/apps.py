from django.apps import AppConfig


class CliffordConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'clifford'
    verbose_name = 'Cl(1,1) algebra'
