"""
Direct Curve Coding (DCC): conjuntos canônicos de direções e codificação de
sequências de frames em gramáticas de ação (strings de símbolos inteiros).
Direções são expressas na base local (t, n, b) do frame anterior:
    0 = +t (frente), 1 = -t, 2 = +n (cima), 3 = -n (baixo), 4 = +b, 5 = -b
Bases superiores acrescentam normalize(v_a + v_b) para cada par não paralelo
da base anterior, em ordem fixa, sem duplicatas (tolerância 1e-9).
O símbolo nulo é sempre o último id do alfabeto.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple
import numpy as np
from core.exceptions import EmptyInput, InvalidBase, InvariantViolation, MissingBoundaries
from .constants import (
    DEFAULT_MOTION_EPSILON,
    PARALLEL_TOLERANCE,
    SUPPORTED_BASES,
    UNIT_TOLERANCE,
    FrameMode,
    InitConvention,
    Scope,
)
from .frame_engine import aff_threshold, compute_frames
logger = logging.getLogger(__name__)
FORWARD_SYMBOL = 0
SYMBOL_NAMES = ('forward', 'backward', 'up', 'down', 'left', 'right')
ORTHOGONAL_BASE = np.array([
    [1.0, 0.0, 0.0],
    [-1.0, 0.0, 0.0],
    [0.0, 1.0, 0.0],
    [0.0, -1.0, 0.0],
    [0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0],
])
@dataclass(frozen=True, eq=False)
class DirectionSet:
    base_p: int
    vectors: np.ndarray
    threshold: float
    @property
    def null_symbol(self):
        return int(self.vectors.shape[0])
    @property
    def alphabet_size(self):
        return int(self.vectors.shape[0]) + 1
    def __len__(self):
        return self.alphabet_size
def _partition_once(vectors):
    """Uma iteração da partição recursiva: união com as somas normalizadas"""
    size = len(vectors)
    out = np.empty((size + size * (size - 1) // 2, 3))
    out[:size] = vectors
    count = size
    for a in range(size):
        for b in range(a + 1, size):
            if np.linalg.norm(np.cross(vectors[a], vectors[b])) < PARALLEL_TOLERANCE:
                continue
            candidate = vectors[a] + vectors[b]
            candidate = candidate / np.linalg.norm(candidate)
            if np.any(np.linalg.norm(out[:count] - candidate, axis=1) < UNIT_TOLERANCE):
                continue
            out[count] = candidate
            count += 1
    return out[:count].copy()
@lru_cache(maxsize=None)
def build_direction_set(base_p):
    """
    Constrói o conjunto de direções da base p (1..4).
    Returns:
        DirectionSet imutável; alfabetos de 7, 19, 91 e 2851 símbolos
    """
    if base_p not in SUPPORTED_BASES:
        raise InvalidBase(f"Base DCC {base_p} não suportada. Use {SUPPORTED_BASES}")
    vectors = ORTHOGONAL_BASE.copy()
    for _ in range(base_p - 1):
        vectors = _partition_once(vectors)
    vectors.setflags(write=False)
    logger.debug(f"[DCC] Base p={base_p}: {len(vectors)} direções + símbolo nulo")
    return DirectionSet(base_p, vectors, aff_threshold(base_p))
def alphabet_size(base_p):
    return build_direction_set(base_p).alphabet_size
@dataclass(frozen=True)
class ActionGrammar:
    symbols: Tuple[int, ...]
    base_p: int
    scope: Scope = Scope.TASK
    source_trial: Optional[str] = None
    behavior_label: Optional[str] = None
    task_label: Optional[str] = None
    mode: FrameMode = FrameMode.FF
    def __post_init__(self):
        object.__setattr__(self, 'symbols', tuple(int(s) for s in self.symbols))
        object.__setattr__(self, 'scope', Scope(self.scope))
        object.__setattr__(self, 'mode', FrameMode(self.mode))
        size = alphabet_size(self.base_p)
        if any(s < 0 or s >= size for s in self.symbols):
            raise InvariantViolation(f"Gramática de {self.source_trial} com símbolo fora do alfabeto DCC{size}")
    def __len__(self):
        return len(self.symbols)
    @property
    def label(self):
        """Rótulo de classificação conforme o escopo"""
        return self.behavior_label if self.scope is Scope.BEHAVIOR else self.task_label
    def as_text(self):
        return ','.join(str(s) for s in self.symbols)
def encode_step(current_tangent, previous_frame, dirset, null_motion=False):
    """
    d = argmax_i <v_i, t> com v_i no referencial do frame anterior.
    Empates ficam com o menor id (np.argmax).
    """
    if null_motion or current_tangent is None:
        return dirset.null_symbol
    local = previous_frame.matrix @ np.asarray(current_tangent, dtype=float)
    return int(np.argmax(dirset.vectors @ local))
def encode_trajectory(frames, dirset, scope=Scope.TASK, behavior_label=None, task_label=None):
    """Um símbolo por transição de frame: len(gramática) = len(frames) - 1"""
    if len(frames) == 0:
        raise EmptyInput(f"Sequência de frames vazia para {frames.trial_id}")
    if frames.mode is FrameMode.AFF and frames.base_p != dirset.base_p:
        raise InvalidBase(f"Frames AFF p={frames.base_p} codificados com DCC p={dirset.base_p}")
    symbols = []
    previous = frames.frames[0]
    for frame in frames.frames[1:]:
        symbols.append(encode_step(frame.tangent, previous, dirset, frame.null_motion))
        previous = frame
    return ActionGrammar(
        tuple(symbols),
        dirset.base_p,
        Scope(scope),
        frames.trial_id,
        behavior_label,
        task_label,
        frames.mode,
    )
def encode_curve(traj, mode, base_p, scope=Scope.TASK, behavior_label=None, convention=InitConvention.OSCULATING, motion_epsilon=DEFAULT_MOTION_EPSILON):
    """Frames + DCC de uma trajetória inteira"""
    dirset = build_direction_set(base_p)
    frames = compute_frames(traj, mode, base_p, convention, motion_epsilon)
    return encode_trajectory(frames, dirset, scope, behavior_label, traj.task_label)
def segment_and_encode(traj, mode, base_p, use_boundaries, convention=InitConvention.OSCULATING, motion_epsilon=DEFAULT_MOTION_EPSILON):
    """
    Gramáticas por comportamento (um frame inicial por segmento) ou uma
    gramática da tarefa inteira.
    Raises:
        MissingBoundaries: sem fronteiras, ou segmento com menos de 3 pontos
    """
    if not use_boundaries:
        return [encode_curve(traj, mode, base_p, Scope.TASK, None, convention, motion_epsilon)]
    if not traj.behavior_boundaries:
        raise MissingBoundaries(f"Trajetória {traj.trial_id} sem fronteiras de comportamento")
    grammars = []
    for boundary in traj.behavior_boundaries:
        segment = traj.segment(boundary.start, boundary.end)
        if len(segment) < 3:
            raise MissingBoundaries(
                f"Trajetória {traj.trial_id}: segmento '{boundary.label}' [{boundary.start}, {boundary.end}] tem {len(segment)} pontos, mínimo 3"
            )
        grammars.append(encode_curve(segment, mode, base_p, Scope.BEHAVIOR, boundary.label, convention, motion_epsilon))
    return grammars
