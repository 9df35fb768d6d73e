"""
Service de treino e predição sobre corpora de trajetórias
"""
import logging
from core.exceptions import MissingBoundaries
from grammar.grammar_scripts import AlignMethod, FrameMode, InitConvention, Scope, build_samples, encode_curve, resample_curve
from grammar.grammar_scripts.dcc_codec import alphabet_size
from grammar.services.encoding_service import EncodingService
from ..svm_scripts import feature_matrix, featurize, fit_length, predict, train_svm
from ..svm_scripts.features import encode_symbols
logger = logging.getLogger(__name__)
def train_params_from_config(config):
    """Hiperparâmetros do solver a partir do RunConfig"""
    return {
        'C': config['c'],
        'degree': config['poly_degree'],
        'coef0': config['poly_coef0'],
        'gamma': config.get('gamma'),
        'epochs': config['linear_epochs'],
        'tol': config['smo_tol'],
        'max_iter': config['smo_max_iter'],
    }
class TrainingService:
    """Codifica, alinha, featuriza e treina um SvmModel"""
    def __init__(self, config):
        self.config = config
        self.encoder = EncodingService(config)
    def train(self, corpus):
        """
        Treina com todos os trials do corpus
        Args:
            corpus: Corpus rotulado
        Returns:
            tuple: (SvmModel, AlignedSet de treino)
        """
        samples = build_samples(corpus, self.config['scope'])
        aligned = self.encoder.align_samples(samples)
        X, labels = feature_matrix(featurize(aligned, self.config['encoding']))
        model = train_svm(
            X,
            labels,
            kernel=self.config['kernel'],
            encoding=self.config['encoding'],
            alphabet_size=alphabet_size(self.encoder.base_p),
            base_p=self.encoder.base_p,
            mode=self.encoder.mode.value,
            scope=self.config['scope'],
            alignment=self.encoder.alignment.value,
            unit_length=aligned.unit_length,
            metadata={
                'dataset_id': corpus.dataset_id,
                'grammar_length': aligned.length,
                'init_convention': self.encoder.convention.value,
                'motion_epsilon': self.encoder.motion_epsilon,
                'seed': self.config['seed'],
            },
            **train_params_from_config(self.config),
        )
        return model, aligned
class PredictionService:
    """Classifica trajetórias novas com os parâmetros gravados no modelo"""
    def __init__(self, model):
        self.model = model
        self.mode = FrameMode(model.mode or 'ff')
        self.base_p = int(model.base_p or 1)
        self.scope = Scope(model.scope or 'task')
        self.alignment = AlignMethod(model.alignment or 'cut')
        self.convention = InitConvention(model.metadata.get('init_convention', InitConvention.OSCULATING.value))
        self.motion_epsilon = float(model.metadata.get('motion_epsilon', 1e-6))
    def _grammars(self, traj):
        if self.scope is Scope.BEHAVIOR:
            pieces = [(traj.segment(b.start, b.end), b.label) for b in traj.behavior_boundaries]
            if not pieces:
                raise MissingBoundaries(f"Trial {traj.trial_id} sem fronteiras para um modelo de comportamento")
        else:
            pieces = [(traj, None)]
        grammars = []
        for piece, behavior in pieces:
            if self.alignment is AlignMethod.RESAMPLE and self.model.unit_length:
                piece = resample_curve(piece, self.model.unit_length, self.motion_epsilon)
            grammars.append(encode_curve(piece, self.mode, self.base_p, self.scope, behavior, self.convention, self.motion_epsilon))
        return grammars
    def predict_trajectory(self, traj):
        """
        Returns:
            list: dicts com trial, behavior, label e decision (um por gramática)
        """
        size = alphabet_size(self.base_p)
        length = self.model.grammar_length
        results = []
        for grammar in self._grammars(traj):
            if len(grammar) < length:
                logger.warning(f"[PREDICT] Gramática de {traj.trial_id} com {len(grammar)} símbolos completada até {length} com o símbolo nulo")
            symbols = fit_length(grammar.symbols, length, size - 1)
            label, decision = predict(self.model, encode_symbols(symbols, self.model.encoding, size))
            results.append({
                'trial': traj.trial_id,
                'behavior': grammar.behavior_label,
                'label': label,
                'decision': decision,
            })
        return results
