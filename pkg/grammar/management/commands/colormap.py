from core.utils.command_helpers import GrammarCommand
from grammar.services.encoding_service import EncodingService
from grammar.utils.colormap import emit_colormap
from grammar.utils.file_handler import CorpusFileHandler
class Command(GrammarCommand):
    help = 'Gera o mapa de cores (PGM) das gramáticas alinhadas de um corpus'
    run_flags = ('input_path', 'output_path', 'mode', 'base_p', 'alignment', 'scope', 'init_convention')
    def run(self, config, options):
        source = self.require_path(config['input_path'], '--in')
        output = self.require_path(config['output_path'], '--out')
        corpus = CorpusFileHandler.load_corpus(source)
        aligned = EncodingService(config).align_corpus(corpus, config['scope'])
        emit_colormap(aligned, output)
        self.stdout.write(f"Colormap {aligned.length}x{len(aligned)} gravado em {output}")
