from django.apps import AppConfig


class ListcoreConfig(AppConfig):
    name = "listcore"
