"""
Amostras rotuladas para classificação: uma por trial (escopo task) ou uma
por segmento de comportamento (escopo behavior).
"""
from dataclasses import dataclass
from typing import Optional
from core.exceptions import MissingBoundaries, MissingLabel
from .constants import Scope
from .trajectory import Trajectory
@dataclass(frozen=True)
class LabeledSample:
    trajectory: Trajectory
    label: Optional[str]
    scope: Scope
    behavior_label: Optional[str] = None
    @property
    def trial_id(self):
        return self.trajectory.trial_id
def build_samples(corpus, scope, require_labels=True):
    """
    Args:
        corpus: Corpus
        scope: task (uma amostra por trial) ou behavior (uma por segmento)
        require_labels: exige rótulo de tarefa no escopo task (alinhamento e colormap dispensam)
    """
    scope = Scope(scope)
    samples = []
    for traj in corpus:
        if scope is Scope.TASK:
            if require_labels and traj.task_label is None:
                raise MissingLabel(f"Trial {traj.trial_id} sem rótulo de tarefa")
            samples.append(LabeledSample(traj, traj.task_label, scope))
            continue
        if not traj.behavior_boundaries:
            raise MissingBoundaries(f"Trial {traj.trial_id} sem fronteiras de comportamento")
        for boundary in traj.behavior_boundaries:
            segment = traj.segment(boundary.start, boundary.end)
            if len(segment) < 3:
                raise MissingBoundaries(f"Trial {traj.trial_id}: segmento '{boundary.label}' com {len(segment)} pontos, mínimo 3")
            samples.append(LabeledSample(segment, boundary.label, scope, boundary.label))
    return samples
