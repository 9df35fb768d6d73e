from core.utils.command_helpers import GrammarCommand
from classifier.services import TrainingService
from classifier.utils.model_store import ModelStore
from grammar.utils.file_handler import CorpusFileHandler
class Command(GrammarCommand):
    help = 'Treina um SVM sobre todas as gramáticas de um corpus e grava o modelo em JSON'
    run_flags = ('input_path', 'output_path', 'mode', 'base_p', 'alignment', 'kernel', 'encoding', 'scope', 'c', 'init_convention')
    def run(self, config, options):
        source = self.require_path(config['input_path'], '--in')
        output = self.require_path(config['output_path'], '--out')
        corpus = CorpusFileHandler.load_corpus(source, require_task_labels=config['scope'] == 'task')
        model, aligned = TrainingService(config).train(corpus)
        ModelStore.save_model(model, output)
        self.stdout.write(
            f"Modelo {model.kernel} ({', '.join(model.classes)}) treinado com {len(aligned)} amostras "
            f"de {aligned.length} símbolos, gravado em {output}"
        )
