from django.apps import AppConfig


class TaylorConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'taylor'
    verbose_name = 'Taylor decompositions'
