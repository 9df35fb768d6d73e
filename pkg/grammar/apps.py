from django.apps import AppConfig
class GrammarConfig(AppConfig):
    name = 'grammar'
    verbose_name = 'Action grammar encoding'
