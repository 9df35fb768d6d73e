from core.utils.command_helpers import GrammarCommand
from grammar.services.encoding_service import EncodingService
from grammar.utils.file_handler import CorpusFileHandler, GrammarFileHandler
class Command(GrammarCommand):
    help = 'Codifica e alinha um corpus (corte ou reamostragem) em gramáticas de mesmo comprimento'
    run_flags = ('input_path', 'output_path', 'mode', 'base_p', 'alignment', 'scope', 'init_convention')
    def run(self, config, options):
        source = self.require_path(config['input_path'], '--in')
        output = self.require_path(config['output_path'], '--out')
        corpus = CorpusFileHandler.load_corpus(source)
        aligned = EncodingService(config).align_corpus(corpus, config['scope'])
        extra = {
            'dataset_id': corpus.dataset_id,
            'alignment': aligned.method.value,
            'length': aligned.length,
            'unit_length': aligned.unit_length,
            'truncated': list(aligned.truncated),
        }
        GrammarFileHandler.save_grammar_set(aligned.grammars, output, extra)
        self.stdout.write(f"{len(aligned)} gramáticas alinhadas ({aligned.method.value}) com {aligned.length} símbolos em {output}")
