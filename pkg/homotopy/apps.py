from django.apps import AppConfig


class HomotopyConfig(AppConfig):
    name = 'homotopy'
    verbose_name = 'Digital homotopies'
