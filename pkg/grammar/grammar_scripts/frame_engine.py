"""
Frames de Frenet discretos (FF) e acumulados (AFF) sobre trajetórias 3D.
Convenções:
- o frame k fica ancorado no ponto k e sua tangente é a corda x_{k+1} - x_k,
  então n pontos geram n - 1 frames;
- n_k = normalize(t_{k-1} x t_k), b_k = t_k x n_k (triedro destro);
- passos colineares herdam a normal anterior;
- cordas menores que motion_epsilon reemitem o frame corrente marcado como
  movimento nulo.
"""
import logging
import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple
import numpy as np
from core.exceptions import DegenerateInput, InvalidBase, InvariantViolation
from .constants import (
    DEFAULT_MOTION_EPSILON,
    PARALLEL_TOLERANCE,
    SUPPORTED_BASES,
    UNIT_TOLERANCE,
    FrameMode,
    InitConvention,
)
logger = logging.getLogger(__name__)
WORLD_AXES = np.eye(3)
@dataclass(frozen=True, eq=False)
class Frame:
    anchor_index: int
    tangent: np.ndarray
    normal: np.ndarray
    binormal: np.ndarray
    null_motion: bool = False
    @property
    def matrix(self):
        """Linhas (t, n, b): leva vetores do mundo para a base local"""
        return np.vstack([self.tangent, self.normal, self.binormal])
    def check(self, tol=UNIT_TOLERANCE):
        t, n, b = self.tangent, self.normal, self.binormal
        for name, vector in (('tangent', t), ('normal', n), ('binormal', b)):
            if abs(np.linalg.norm(vector) - 1.0) > tol:
                raise InvariantViolation(f"Frame {self.anchor_index}: {name} sem norma unitária")
        if max(abs(t @ n), abs(t @ b), abs(n @ b)) > tol:
            raise InvariantViolation(f"Frame {self.anchor_index}: vetores não ortogonais")
        if np.linalg.norm(np.cross(t, n) - b) > tol:
            raise InvariantViolation(f"Frame {self.anchor_index}: triedro não é destro")
@dataclass(frozen=True)
class FrameSequence:
    frames: Tuple[Frame, ...]
    mode: FrameMode
    base_p: int
    realignment_events: Tuple[int, ...] = ()
    trial_id: Optional[str] = None
    def __len__(self):
        return len(self.frames)
    def check(self, tol=UNIT_TOLERANCE):
        previous = -1
        for frame in self.frames:
            if frame.anchor_index <= previous:
                raise InvariantViolation("Frames fora de ordem de ancoragem")
            previous = frame.anchor_index
            frame.check(tol)
def aff_threshold(base_p):
    """alpha_p = pi / 2^(p+1)"""
    _require_base(base_p)
    return math.pi / 2 ** (base_p + 1)
def _require_base(base_p):
    if base_p not in SUPPORTED_BASES:
        raise InvalidBase(f"Base DCC {base_p} não suportada. Use {SUPPORTED_BASES}")
def _unit(vector):
    return vector / np.linalg.norm(vector)
def _is_parallel(u, v):
    return np.linalg.norm(np.cross(u, v)) < PARALLEL_TOLERANCE
def _frame_from_axis(anchor_index, tangent):
    """Normal a partir do eixo do mundo menos alinhado com a tangente (empate: x, y, z)"""
    axis = WORLD_AXES[int(np.argmin(np.abs(WORLD_AXES @ tangent)))]
    binormal = _unit(np.cross(tangent, axis))
    normal = np.cross(binormal, tangent)
    return Frame(anchor_index, tangent, normal, np.cross(tangent, normal))
def _turn_frame(anchor_index, held, tangent):
    """Frame com tangente nova e normal = held.t x t; colinear herda a normal"""
    cross = np.cross(held.tangent, tangent)
    if np.linalg.norm(cross) < PARALLEL_TOLERANCE:
        normal = held.normal - (held.normal @ tangent) * tangent
        if np.linalg.norm(normal) < PARALLEL_TOLERANCE:
            return _frame_from_axis(anchor_index, tangent)
        normal = _unit(normal)
    else:
        normal = _unit(cross)
    return Frame(anchor_index, tangent, normal, np.cross(tangent, normal))
def _first_distinct_chord(positions, motion_epsilon):
    origin = positions[0]
    for index in range(1, len(positions)):
        chord = positions[index] - origin
        if np.linalg.norm(chord) >= motion_epsilon:
            return index, chord
    return None, None
def initial_frame(traj, convention=InitConvention.OSCULATING, motion_epsilon=DEFAULT_MOTION_EPSILON):
    """
    Frame no índice 0 com tangente na corda inicial.
    Args:
        traj: Trajectory com ao menos 2 pontos distintos
        convention: LEAST_ALIGNED_AXIS usa o eixo do mundo menos alinhado;
            OSCULATING usa o plano da primeira corda não paralela e cai no
            eixo quando a curva é reta
    Returns:
        Frame ortonormal destro
    """
    positions = traj.positions
    if len(positions) < 2:
        raise DegenerateInput(f"Trajetória {traj.trial_id}: menos de 2 pontos")
    index, chord = _first_distinct_chord(positions, motion_epsilon)
    if index is None:
        raise DegenerateInput(f"Trajetória {traj.trial_id}: nenhum ponto distinto do inicial")
    tangent = _unit(chord)
    if InitConvention(convention) is InitConvention.OSCULATING:
        for k in range(index, len(positions) - 1):
            later = positions[k + 1] - positions[k]
            length = np.linalg.norm(later)
            if length < motion_epsilon or _is_parallel(tangent, later / length):
                continue
            normal = _unit(np.cross(tangent, later / length))
            return Frame(0, tangent, normal, np.cross(tangent, normal))
    return _frame_from_axis(0, tangent)
def _unit_chords(traj, motion_epsilon):
    if len(traj) < 3:
        raise DegenerateInput(f"Trajetória {traj.trial_id}: {len(traj)} pontos, mínimo 3")
    chords = np.diff(traj.positions, axis=0)
    lengths = np.linalg.norm(chords, axis=1)
    moving = lengths >= motion_epsilon
    units = np.zeros_like(chords)
    units[moving] = chords[moving] / lengths[moving, None]
    return units, moving
def compute_ff(traj, base_p=1, convention=InitConvention.OSCULATING, motion_epsilon=DEFAULT_MOTION_EPSILON):
    """Um frame por passo: frame inicial + um por corda interior"""
    units, moving = _unit_chords(traj, motion_epsilon)
    held = initial_frame(traj, convention, motion_epsilon)
    frames = [held]
    for k in range(1, len(units)):
        if not moving[k]:
            frames.append(replace(held, anchor_index=k, null_motion=True))
            continue
        held = _turn_frame(k, held, units[k])
        frames.append(held)
    return FrameSequence(tuple(frames), FrameMode.FF, base_p, (), traj.trial_id)
def compute_aff(traj, base_p, convention=InitConvention.OSCULATING, motion_epsilon=DEFAULT_MOTION_EPSILON):
    """
    Frames acumulados: o frame mantém a orientação até que o ângulo entre a
    tangente retida e a corda corrente passe de alpha_p = pi / 2^(p+1).
    O ângulo é medido direto contra a tangente retida, não somado passo a passo.
    """
    alpha = aff_threshold(base_p)
    units, moving = _unit_chords(traj, motion_epsilon)
    held = initial_frame(traj, convention, motion_epsilon)
    frames = [held]
    events = []
    for k in range(1, len(units)):
        if not moving[k]:
            frames.append(replace(held, anchor_index=k, null_motion=True))
            continue
        angle = math.acos(float(np.clip(held.tangent @ units[k], -1.0, 1.0)))
        if angle > alpha:
            held = _turn_frame(k, held, units[k])
            events.append(k)
            frames.append(held)
        else:
            frames.append(replace(held, anchor_index=k, null_motion=False))
    logger.debug(f"[FRAMES] AFF p={base_p} em {traj.trial_id}: {len(events)} realinhamentos em {len(frames)} frames")
    return FrameSequence(tuple(frames), FrameMode.AFF, base_p, tuple(events), traj.trial_id)
def compute_frames(traj, mode, base_p, convention=InitConvention.OSCULATING, motion_epsilon=DEFAULT_MOTION_EPSILON):
    if FrameMode(mode) is FrameMode.AFF:
        return compute_aff(traj, base_p, convention, motion_epsilon)
    _require_base(base_p)
    return compute_ff(traj, base_p, convention, motion_epsilon)
