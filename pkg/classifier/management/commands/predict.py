from core.utils.command_helpers import GrammarCommand
from classifier.services import PredictionService
from classifier.utils.model_store import ModelStore
from grammar.utils.file_handler import CorpusFileHandler
class Command(GrammarCommand):
    help = 'Classifica trajetórias (um CSV ou um diretório) com um modelo treinado'
    run_flags = ('input_path',)
    def add_command_arguments(self, parser):
        parser.add_argument('--model', required=True, help='Modelo JSON gravado por train')
    def run(self, config, options):
        source = self.require_path(config['input_path'], '--in')
        model = ModelStore.load_model(options['model'])
        service = PredictionService(model)
        for traj in CorpusFileHandler.load_corpus(source):
            for result in service.predict_trajectory(traj):
                name = result['trial'] if result['behavior'] is None else f"{result['trial']}/{result['behavior']}"
                self.stdout.write(f"{name}\t{result['label']}\t{result['decision']:.6f}")
