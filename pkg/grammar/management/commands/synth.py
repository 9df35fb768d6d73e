from core.utils.command_helpers import GrammarCommand
from grammar.utils.file_handler import CorpusFileHandler
from grammar.utils.synthetic import SYNTHETIC_KINDS, generate_synthetic
class Command(GrammarCommand):
    help = 'Gera um corpus sintético de montagem (CSV + rótulos) para testes e demonstrações'
    run_flags = ('seed', 'output_path')
    def add_command_arguments(self, parser):
        parser.add_argument('--kind', required=True, choices=sorted(SYNTHETIC_KINDS))
        parser.add_argument('--n', dest='n_trials', type=int, default=10, help='Número de trials')
        parser.add_argument('--noise-sigma', dest='noise_sigma', type=float, default=0.0, help='Ruído gaussiano por coordenada (metros)')
    def run(self, config, options):
        output = self.require_path(config['output_path'], '--out')
        corpus = generate_synthetic(options['kind'], options['n_trials'], options['noise_sigma'], config['seed'])
        CorpusFileHandler.save_corpus(corpus, output)
        self.stdout.write(f"{len(corpus)} trials '{options['kind']}' (dataset {corpus.dataset_id}) gravados em {output}")
