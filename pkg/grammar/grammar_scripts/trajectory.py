"""
Tipos de domínio para trajetórias 3D amostradas
"""
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional, Tuple
import numpy as np
from core.exceptions import DimensionMismatch, InvalidBoundaries, InvalidSpec, NonFinite, NonMonotoneTime
class Point3(NamedTuple):
    t: float
    x: float
    y: float
    z: float
@dataclass(frozen=True)
class BehaviorBoundary:
    label: str
    start: float
    end: float
@dataclass(frozen=True, eq=False)
class Trajectory:
    """
    Sequência de pontos (x, y, z) com tempo monotônico.
    times: array (n,), positions: array (n, 3). Fronteiras de comportamento
    são opcionais e precisam estar ordenadas, sem sobreposição e dentro de
    [t_0, t_final].
    """
    times: np.ndarray
    positions: np.ndarray
    trial_id: str = ''
    task_label: Optional[str] = None
    behavior_boundaries: Tuple[BehaviorBoundary, ...] = field(default_factory=tuple)
    def __post_init__(self):
        times = np.asarray(self.times, dtype=float).reshape(-1)
        positions = np.asarray(self.positions, dtype=float)
        if positions.size == 0:
            positions = positions.reshape(0, 3)
        if positions.ndim != 2 or positions.shape[1] != 3:
            raise DimensionMismatch(f"Trajetória {self.trial_id}: posições com forma {positions.shape}, esperado (n, 3)")
        if times.shape[0] != positions.shape[0]:
            raise DimensionMismatch(f"Trajetória {self.trial_id}: {times.shape[0]} tempos para {positions.shape[0]} pontos")
        if not (np.all(np.isfinite(times)) and np.all(np.isfinite(positions))):
            raise NonFinite(f"Trajetória {self.trial_id} contém coordenadas não finitas")
        if times.size > 1 and np.any(np.diff(times) < 0):
            bad = int(np.argmax(np.diff(times) < 0)) + 1
            raise NonMonotoneTime(f"Trajetória {self.trial_id}: tempo decresce no ponto {bad}")
        times.setflags(write=False)
        positions.setflags(write=False)
        object.__setattr__(self, 'times', times)
        object.__setattr__(self, 'positions', positions)
        object.__setattr__(self, 'behavior_boundaries', tuple(self.behavior_boundaries))
        self._validate_boundaries()
    def _validate_boundaries(self):
        previous_end = None
        for boundary in self.behavior_boundaries:
            if boundary.start > boundary.end:
                raise InvalidBoundaries(f"Trajetória {self.trial_id}: '{boundary.label}' termina antes de começar")
            if previous_end is not None and boundary.start < previous_end:
                raise InvalidBoundaries(f"Trajetória {self.trial_id}: '{boundary.label}' sobrepõe o comportamento anterior")
            if self.times.size and (boundary.start < self.times[0] or boundary.end > self.times[-1]):
                raise InvalidBoundaries(f"Trajetória {self.trial_id}: '{boundary.label}' fora do intervalo de tempo")
            previous_end = boundary.end
    @classmethod
    def from_points(cls, points, **kwargs):
        rows = np.asarray([tuple(p) for p in points], dtype=float).reshape(-1, 4)
        return cls(times=rows[:, 0], positions=rows[:, 1:], **kwargs)
    def __len__(self):
        return int(self.times.shape[0])
    @property
    def points(self):
        return [Point3(float(t), *map(float, p)) for t, p in zip(self.times, self.positions)]
    def chord_lengths(self):
        return np.linalg.norm(np.diff(self.positions, axis=0), axis=1)
    def arc_length(self):
        return float(self.chord_lengths().sum())
    def segment(self, start, end):
        """Pontos com start <= t <= end (pontos de fronteira são compartilhados)"""
        mask = (self.times >= start) & (self.times <= end)
        return Trajectory(self.times[mask], self.positions[mask], trial_id=self.trial_id, task_label=self.task_label)
    def transformed(self, rotation=None, translation=None, scale=1.0):
        """Imagem da trajetória por p -> scale * R p + v"""
        positions = self.positions * float(scale)
        if rotation is not None:
            positions = positions @ np.asarray(rotation, dtype=float).T
        if translation is not None:
            positions = positions + np.asarray(translation, dtype=float)
        return replace(self, positions=positions)
    def with_labels(self, task_label=None, behavior_boundaries=None):
        return replace(
            self,
            task_label=task_label if task_label is not None else self.task_label,
            behavior_boundaries=behavior_boundaries if behavior_boundaries is not None else self.behavior_boundaries,
        )
@dataclass(frozen=True)
class Corpus:
    """Conjunto de trials com ids únicos; dataset_id A, B, C ou combinações"""
    trajectories: Tuple[Trajectory, ...]
    dataset_id: str = ''
    metadata: dict = field(default_factory=dict)
    def __post_init__(self):
        object.__setattr__(self, 'trajectories', tuple(self.trajectories))
        ids = [traj.trial_id for traj in self.trajectories]
        duplicated = sorted({trial for trial in ids if ids.count(trial) > 1})
        if duplicated:
            raise InvalidSpec(f"Corpus {self.dataset_id} com trial ids repetidos: {duplicated}")
    def __len__(self):
        return len(self.trajectories)
    def __iter__(self):
        return iter(self.trajectories)
    @property
    def trial_ids(self):
        return [traj.trial_id for traj in self.trajectories]
