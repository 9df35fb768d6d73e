import logging
from django.apps import AppConfig
from django.conf import settings
logger = logging.getLogger(__name__)
class CoreConfig(AppConfig):
    name = 'core'
    def ready(self):
        """Executado quando o Django inicializa"""
        self.check_grammar_defaults()
    def check_grammar_defaults(self):
        """Valida os defaults de ACTION_GRAMMAR lidos do ambiente"""
        from core.exceptions import InvalidSpec
        defaults = settings.ACTION_GRAMMAR
        if defaults['MODE'] not in ('ff', 'aff'):
            raise InvalidSpec(f"GRAMMAR_MODE inválido: {defaults['MODE']}. Use 'ff' ou 'aff'")
        if not 1 <= defaults['BASE_P'] <= 4:
            raise InvalidSpec(f"GRAMMAR_BASE_P inválido: {defaults['BASE_P']}. Use 1..4")
        if defaults['K_MIN'] > defaults['K_MAX']:
            raise InvalidSpec("GRAMMAR_K_MIN não pode exceder GRAMMAR_K_MAX")
        logger.debug(f"[CORE] Defaults carregados: {defaults}")
