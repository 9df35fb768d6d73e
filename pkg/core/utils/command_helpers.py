"""
Base dos management commands do pipeline
Precedência de configuração: flags > arquivo --config (YAML) > settings/ambiente.
Exit codes: 0 sucesso, 1 uso, 2 erro de dados, 3 invariante interna.
"""
import logging
import sys
from pathlib import Path
import yaml
from django.conf import settings
from django.core.management.base import BaseCommand, CommandError, CommandParser
from core.exceptions import DataError, InvariantViolation
from core.serializers import RunConfigSerializer
logger = logging.getLogger(__name__)
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3
FLAG_DESTINATIONS = {
    'mode': ('--mode', {'choices': ['ff', 'aff']}),
    'base_p': ('--base', {'type': int}),
    'alignment': ('--align', {'choices': ['cut', 'resample']}),
    'kernel': ('--kernel', {}),
    'encoding': ('--encoding', {'choices': ['integer', 'one_hot']}),
    'scope': ('--scope', {'choices': ['task', 'behavior']}),
    'seed': ('--seed', {'type': int}),
    'k_min': ('--k-min', {'type': int}),
    'k_max': ('--k-max', {'type': int}),
    'repeats': ('--repeats', {'type': int}),
    'c': ('--C', {'type': float}),
    'n_jobs': ('--n-jobs', {'type': int}),
    'init_convention': ('--init-convention', {'choices': ['least_aligned_axis', 'osculating']}),
    'resample_test_unit': ('--resample-test-unit', {'choices': ['train', 'independent']}),
    'input_path': ('--in', {}),
    'output_path': ('--out', {}),
}
class UsageErrorParser(CommandParser):
    """Erros de argparse viram exit code 1 em vez do 2 padrão"""
    def error(self, message):
        if self.called_from_command_line:
            self.print_usage(sys.stderr)
            self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")
        raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)
def default_run_config():
    """Defaults de ACTION_GRAMMAR com chaves em minúsculas"""
    config = {key.lower(): value for key, value in settings.ACTION_GRAMMAR.items()}
    config['input_path'] = None
    config['output_path'] = None
    return config
def load_config_file(path):
    path = Path(path)
    if not path.exists():
        raise CommandError(f"Arquivo de configuração não encontrado: {path}", returncode=EXIT_USAGE)
    try:
        content = yaml.safe_load(path.read_text(encoding='utf-8')) or {}
    except yaml.YAMLError as e:
        raise CommandError(f"YAML inválido em {path}: {e}", returncode=EXIT_USAGE)
    if not isinstance(content, dict):
        raise CommandError(f"{path} deve conter um mapeamento chave: valor", returncode=EXIT_USAGE)
    return {str(key).lower().replace('-', '_'): value for key, value in content.items()}
def resolve_run_config(options, file_config=None):
    """
    Mescla defaults, arquivo YAML e flags e valida com RunConfigSerializer
    Args:
        options: dict de opções do comando (None = flag ausente)
        file_config: dict lido do --config
    Returns:
        dict validado
    """
    config = default_run_config()
    unknown = sorted(set(file_config or {}) - set(config))
    if unknown:
        raise CommandError(f"Chaves desconhecidas no arquivo de configuração: {unknown}", returncode=EXIT_USAGE)
    config.update(file_config or {})
    for key in FLAG_DESTINATIONS:
        if options.get(key) is not None:
            config[key] = options[key]
    serializer = RunConfigSerializer(data=config)
    if not serializer.is_valid():
        raise CommandError(f"Configuração inválida: {dict(serializer.errors)}", returncode=EXIT_USAGE)
    return dict(serializer.validated_data)
class GrammarCommand(BaseCommand):
    """
    Comando base: adiciona as flags comuns, resolve o RunConfig e traduz
    exceções do domínio em exit codes.
    """
    run_flags = ()
    requires_system_checks = []
    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.__class__ = UsageErrorParser
        return parser
    def add_arguments(self, parser):
        parser.add_argument('--config', help='Arquivo YAML com parâmetros da execução')
        for key in self.run_flags:
            flag, extra = FLAG_DESTINATIONS[key]
            parser.add_argument(flag, dest=key, default=None, **extra)
        self.add_command_arguments(parser)
    def add_command_arguments(self, parser):
        pass
    def handle(self, *args, **options):
        file_config = load_config_file(options['config']) if options.get('config') else None
        config = resolve_run_config(options, file_config)
        try:
            return self.run(config, options)
        except InvariantViolation as e:
            logger.error(f"[CMD] Invariante violada: {e}", exc_info=True)
            raise CommandError(f"Erro interno: {e}", returncode=EXIT_INTERNAL)
        except DataError as e:
            logger.error(f"[CMD] Erro de dados: {e}")
            raise CommandError(str(e), returncode=EXIT_DATA)
    def run(self, config, options):
        raise NotImplementedError
    def require_path(self, value, flag):
        """Caminho obrigatório: ausência é erro de uso, inexistência é erro de dados"""
        if value is None:
            data_dir = Path(settings.GRAMMAR_DATA_DIR)
            if flag == '--in' and data_dir.exists():
                return data_dir
            raise CommandError(f"{flag} é obrigatório", returncode=EXIT_USAGE)
        return Path(value)
