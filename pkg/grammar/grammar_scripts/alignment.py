"""
Alinhamento de gramáticas para vetores de tamanho fixo: corte no menor
comprimento ou reamostragem por comprimento de arco (sDCC).
"""
import logging
from dataclasses import dataclass, replace
from typing import Optional, Tuple
import numpy as np
from core.exceptions import DegenerateInput, EmptyInput, InvalidSpec
from .constants import DEFAULT_MOTION_EPSILON, AlignMethod, InitConvention, Scope
from .dcc_codec import encode_curve
from .trajectory import Trajectory
logger = logging.getLogger(__name__)
@dataclass(frozen=True)
class AlignedSet:
    grammars: Tuple
    method: AlignMethod
    unit_length: Optional[float] = None
    truncated: Tuple[int, ...] = ()
    segment_counts: Tuple[int, ...] = ()
    @property
    def length(self):
        return len(self.grammars[0].symbols) if self.grammars else 0
    @property
    def base_p(self):
        return self.grammars[0].base_p
    @property
    def scope(self):
        return self.grammars[0].scope
    def __len__(self):
        return len(self.grammars)
def align_cut(grammars, unit_length=None, segment_counts=()):
    """
    Trunca todas as gramáticas no menor comprimento presente.
    Args:
        grammars: lista de ActionGrammar com mesma base e escopo
    Returns:
        AlignedSet com a contagem de símbolos descartados por gramática
    """
    grammars = list(grammars)
    if not grammars:
        raise EmptyInput("Nenhuma gramática para alinhar")
    if any(len(g) == 0 for g in grammars):
        empty = [g.source_trial for g in grammars if len(g) == 0]
        raise EmptyInput(f"Gramáticas vazias: {empty}")
    if len({g.base_p for g in grammars}) > 1 or len({g.scope for g in grammars}) > 1:
        raise InvalidSpec("Gramáticas com bases ou escopos diferentes não podem ser alinhadas")
    shortest = min(len(g) for g in grammars)
    truncated = tuple(len(g) - shortest for g in grammars)
    if any(truncated):
        logger.warning(f"[ALIGN] Corte em {shortest} símbolos descartou {sum(truncated)} símbolos de {sum(1 for n in truncated if n)} gramáticas")
    aligned = tuple(g if len(g) == shortest else _truncate(g, shortest) for g in grammars)
    method = AlignMethod.RESAMPLE if unit_length is not None else AlignMethod.CUT
    return AlignedSet(aligned, method, unit_length, truncated, tuple(segment_counts))
def _truncate(grammar, length):
    return replace(grammar, symbols=grammar.symbols[:length])
def resampling_unit(trajectories):
    """Comprimento médio das curvas dividido pelo número médio de frames"""
    lengths = np.array([traj.arc_length() for traj in trajectories])
    frames = np.array([len(traj) - 1 for traj in trajectories], dtype=float)
    if np.any(lengths <= 0.0) or np.any(frames <= 0):
        raise DegenerateInput("Curva de comprimento zero no conjunto de reamostragem")
    return float(lengths.mean() / frames.mean())
def resample_curve(traj, unit_length, motion_epsilon=DEFAULT_MOTION_EPSILON):
    """
    Reamostra a curva em passos de arco s = 0, u, 2u, ... por interpolação
    linear. O último segmento parcial é mantido se tiver pelo menos u/2.
    """
    chords = traj.chord_lengths()
    keep = np.concatenate([[True], chords >= motion_epsilon])
    positions = traj.positions[keep]
    times = traj.times[keep]
    arc = np.concatenate([[0.0], np.cumsum(chords[chords >= motion_epsilon])])
    total = float(arc[-1])
    if total <= 0.0:
        raise DegenerateInput(f"Trajetória {traj.trial_id} tem comprimento zero")
    full_steps = int(np.floor(total / unit_length + 1e-9))
    stations = unit_length * np.arange(full_steps + 1)
    if total - stations[-1] >= unit_length / 2.0:
        stations = np.append(stations, total)
    resampled = np.column_stack([np.interp(stations, arc, positions[:, axis]) for axis in range(3)])
    return Trajectory(
        np.interp(stations, arc, times),
        resampled,
        trial_id=traj.trial_id,
        task_label=traj.task_label,
    )
def align_resample(trajectories, mode, base_p, unit_length=None, scope=Scope.TASK, behavior_labels=None, convention=InitConvention.OSCULATING, motion_epsilon=DEFAULT_MOTION_EPSILON):
    """
    Reamostragem conjunta do conjunto (treino ou teste): calcula a unidade de
    arco (ou reutiliza unit_length), re-segmenta, recodifica e fecha
    diferenças residuais com align_cut.
    Args:
        trajectories: curvas do conjunto
        unit_length: unidade já calculada (ex.: a do treino no modelo)
        behavior_labels: rótulos paralelos quando scope é BEHAVIOR
    """
    trajectories = list(trajectories)
    if not trajectories:
        raise EmptyInput("Nenhuma trajetória para reamostrar")
    if unit_length is None:
        unit_length = resampling_unit(trajectories)
    elif unit_length <= 0:
        raise InvalidSpec(f"Unidade de reamostragem inválida: {unit_length}")
    logger.info(f"[ALIGN] Reamostragem de {len(trajectories)} curvas com unidade {unit_length:.6g}")
    labels = behavior_labels if behavior_labels is not None else [None] * len(trajectories)
    grammars = []
    counts = []
    for traj, label in zip(trajectories, labels):
        resampled = resample_curve(traj, unit_length, motion_epsilon)
        if len(resampled) < 3:
            raise DegenerateInput(f"Trajetória {traj.trial_id}: {len(resampled) - 1} segmentos após reamostragem, mínimo 2")
        counts.append(len(resampled) - 1)
        grammars.append(encode_curve(resampled, mode, base_p, scope, label, convention, motion_epsilon))
    return align_cut(grammars, unit_length=unit_length, segment_counts=counts)
