"""
Service de codificação e alinhamento de gramáticas
"""
import logging
from grammar.grammar_scripts import (
    AlignMethod,
    FrameMode,
    InitConvention,
    Scope,
    align_cut,
    align_resample,
    build_samples,
    encode_curve,
    segment_and_encode,
)
from grammar.grammar_scripts.dcc_codec import alphabet_size
from grammar.grammar_scripts.frame_engine import compute_frames
logger = logging.getLogger(__name__)
class EncodingService:
    """Frames + DCC + alinhamento com os parâmetros de um RunConfig"""
    def __init__(self, config):
        self.mode = FrameMode(config['mode'])
        self.base_p = int(config['base_p'])
        self.alignment = AlignMethod(config['alignment'])
        self.convention = InitConvention(config['init_convention'])
        self.motion_epsilon = float(config['motion_epsilon'])
    def encode_corpus(self, corpus, use_boundaries=False):
        """
        Codifica todos os trials do corpus
        Args:
            corpus: Corpus
            use_boundaries: uma gramática por comportamento em vez de uma por trial
        Returns:
            list: ActionGrammar em ordem de trial
        """
        grammars = []
        for traj in corpus:
            grammars.extend(segment_and_encode(traj, self.mode, self.base_p, use_boundaries, self.convention, self.motion_epsilon))
        logger.info(f"[ENCODE] {len(grammars)} gramáticas {self.mode.value.upper()}-DCC{self.alphabet_size} geradas")
        return grammars
    @property
    def alphabet_size(self):
        return alphabet_size(self.base_p)
    def count_realignments(self, corpus, use_boundaries=False):
        """
        Realinhamentos AFF por gramática (vazio em modo FF). Com fronteiras a
        contagem é feita em cada segmento, com chave trial/comportamento.
        """
        if self.mode is not FrameMode.AFF:
            return {}
        counts = {}
        for traj in corpus:
            if use_boundaries:
                pieces = [(f"{traj.trial_id}/{b.label}", traj.segment(b.start, b.end)) for b in traj.behavior_boundaries]
            else:
                pieces = [(traj.trial_id, traj)]
            for key, curve in pieces:
                counts[key] = len(compute_frames(curve, self.mode, self.base_p, self.convention, self.motion_epsilon).realignment_events)
        logger.info(f"[ENCODE] AFF p={self.base_p}: {sum(counts.values())} realinhamentos em {len(counts)} gramáticas")
        return counts
    def encode_sample(self, sample):
        return encode_curve(sample.trajectory, self.mode, self.base_p, sample.scope, sample.behavior_label, self.convention, self.motion_epsilon)
    def align_samples(self, samples, unit_length=None):
        """
        Alinha um conjunto de amostras (treino ou teste) pelo método configurado
        Args:
            samples: lista de LabeledSample
            unit_length: unidade de reamostragem reaproveitada (None = calcular no conjunto)
        Returns:
            AlignedSet
        """
        samples = list(samples)
        if self.alignment is AlignMethod.RESAMPLE:
            scope = samples[0].scope if samples else Scope.TASK
            return align_resample(
                [s.trajectory for s in samples],
                self.mode,
                self.base_p,
                unit_length=unit_length,
                scope=scope,
                behavior_labels=[s.behavior_label for s in samples],
                convention=self.convention,
                motion_epsilon=self.motion_epsilon,
            )
        return align_cut([self.encode_sample(s) for s in samples])
    def align_corpus(self, corpus, scope):
        """Alinha um corpus inteiro (rótulos de tarefa opcionais)"""
        return self.align_samples(build_samples(corpus, scope, require_labels=False))
