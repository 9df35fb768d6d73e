"""
Codifica um corpus em gramáticas de ação, uma por trial ou por comportamento
"""
from core.utils.command_helpers import GrammarCommand
from grammar.serializers import GrammarSummarySerializer
from grammar.services.encoding_service import EncodingService
from grammar.utils.file_handler import CorpusFileHandler, GrammarFileHandler
class Command(GrammarCommand):
    help = 'Codifica trajetórias em gramáticas FF/AFF-DCC'
    run_flags = ('input_path', 'output_path', 'mode', 'base_p', 'scope', 'init_convention')
    def run(self, config, options):
        source = self.require_path(config['input_path'], '--in')
        output = self.require_path(config['output_path'], '--out')
        corpus = CorpusFileHandler.load_corpus(source)
        service = EncodingService(config)
        use_boundaries = config['scope'] == 'behavior'
        grammars = service.encode_corpus(corpus, use_boundaries=use_boundaries)
        extra = {
            'dataset_id': corpus.dataset_id,
            'mode': service.mode.value,
            'base_p': service.base_p,
            'alphabet_size': service.alphabet_size,
            'init_convention': service.convention.value,
        }
        realignments = service.count_realignments(corpus, use_boundaries)
        if realignments:
            extra['realignments'] = realignments
        GrammarFileHandler.save_grammar_set(grammars, output, extra)
        if options['verbosity'] > 1:
            for row in GrammarSummarySerializer(grammars, many=True).data:
                self.stdout.write(f"{row['source_trial']}\t{row['behavior_label'] or '-'}\t{row['length']}\t{row['distinct_symbols']}")
        self.stdout.write(f"{len(grammars)} gramáticas {service.mode.value.upper()}-DCC{service.alphabet_size} gravadas em {output}")
