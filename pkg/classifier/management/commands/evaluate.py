"""
Validação cruzada repetida (2..20 folds) de um corpus, ou grade de comparação
entre escopos, modos, kernels e alinhamentos com --grid
"""
from core.serializers import ALIGNMENT_CHOICES, KERNEL_CHOICES, MODE_CHOICES, SCOPE_CHOICES
from core.utils.command_helpers import EXIT_USAGE, GrammarCommand
from django.core.management.base import CommandError
from classifier.services import EvaluationService, format_grid_table, format_report_table
from classifier.utils.model_store import ModelStore
from grammar.utils.file_handler import CorpusFileHandler
def _choice_list(value, choices, flag):
    if not value:
        return None
    items = [item.strip() for item in value.split(',') if item.strip()]
    invalid = [item for item in items if item not in choices]
    if invalid:
        raise CommandError(f"{flag}: valores inválidos {invalid}. Use {choices}", returncode=EXIT_USAGE)
    return items
class Command(GrammarCommand):
    help = 'Avalia a classificação com validação cruzada repetida e grava o relatório JSON'
    run_flags = (
        'input_path', 'output_path', 'mode', 'base_p', 'alignment', 'kernel', 'encoding', 'scope',
        'seed', 'k_min', 'k_max', 'repeats', 'c', 'n_jobs', 'init_convention', 'resample_test_unit',
    )
    def add_command_arguments(self, parser):
        parser.add_argument('--combine', nargs='+', help='Diretórios de corpora adicionais unidos ao --in (ex.: AB, ABC)')
        parser.add_argument('--grid', action='store_true', help='Avalia todas as combinações de --scopes x --modes x --kernels x --alignments')
        parser.add_argument('--modes', help='Lista separada por vírgula, ex.: ff,aff')
        parser.add_argument('--kernels', help='Lista separada por vírgula, ex.: linear,polynomial')
        parser.add_argument('--alignments', help='Lista separada por vírgula, ex.: cut,resample')
        parser.add_argument('--scopes', help='Lista separada por vírgula, ex.: task,behavior')
        parser.add_argument('--progress', action='store_true', help='Mostra barra de progresso')
    def run(self, config, options):
        source = self.require_path(config['input_path'], '--in')
        scopes = _choice_list(options.get('scopes'), SCOPE_CHOICES, '--scopes') if options.get('grid') else None
        require = 'task' in (scopes or [config['scope']])
        corpus = CorpusFileHandler.load_corpus(source, require_task_labels=require)
        if options.get('combine'):
            extra = [CorpusFileHandler.load_corpus(path, require_task_labels=require) for path in options['combine']]
            corpus = CorpusFileHandler.combine_corpora([corpus, *extra])
        service = EvaluationService(config)
        if not options.get('grid'):
            report = service.evaluate(corpus, progress=options.get('progress', False))
            if config['output_path']:
                ModelStore.save_report(report, config['output_path'])
            self.stdout.write(format_report_table(report))
            return
        reports = service.evaluate_grid(
            corpus,
            modes=_choice_list(options.get('modes'), MODE_CHOICES, '--modes'),
            kernels=_choice_list(options.get('kernels'), KERNEL_CHOICES, '--kernels'),
            alignments=_choice_list(options.get('alignments'), ALIGNMENT_CHOICES, '--alignments'),
            scopes=scopes,
            progress=options.get('progress', False),
        )
        if config['output_path']:
            ModelStore.save_report_grid(reports, config['output_path'])
        self.stdout.write(format_grid_table(reports))
