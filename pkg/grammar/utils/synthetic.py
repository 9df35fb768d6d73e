"""
Gerador de corpora sintéticos de montagem em escala de bancada (metros, dt = 10 ms)
Cada trial tem 4 comportamentos com pontos de fronteira compartilhados:
    approach   curva de Bezier quadrática descendo até perto da peça
    alignment  deslocamento inclinado (1, 0, -0.5)
    insertion  descida vertical
    mating     pequeno empurrão seguido de repouso (movimento nulo)
Tipos:
    smooth_approach     sucesso, curva nominal (dataset A)
    controlled_failure  falha, desvio lateral em +y na aproximação (dataset B)
    sharp_contact       sucesso com vibração de contato em alignment/insertion (dataset C)
"""
import logging
from dataclasses import replace
import numpy as np
from core.exceptions import InvalidSpec
from grammar.grammar_scripts import BehaviorBoundary, Corpus, Trajectory
from grammar.grammar_scripts.constants import BEHAVIOR_LABELS
logger = logging.getLogger(__name__)
SAMPLE_PERIOD = 0.01
SYNTHETIC_KINDS = {
    'smooth_approach': {'dataset_id': 'A', 'task_label': 'success'},
    'controlled_failure': {'dataset_id': 'B', 'task_label': 'failure'},
    'sharp_contact': {'dataset_id': 'C', 'task_label': 'success'},
}
APPROACH_POINTS = 60
ALIGNMENT_POINTS = 30
INSERTION_POINTS = 30
MATING_PUSH_POINTS = 10
MATING_HOLD_POINTS = 10
FAILURE_JOG_SAMPLE = 30
FAILURE_OFFSET_RANGE = (0.008, 0.012)
CONTACT_JITTER_AMPLITUDE = 0.0005
def _bezier(p0, p1, p2, count):
    s = np.linspace(0.0, 1.0, count)[:, None]
    return (1 - s) ** 2 * p0 + 2 * (1 - s) * s * p1 + s ** 2 * p2
def _line(start, direction, length, count):
    direction = np.asarray(direction, dtype=float)
    direction = direction / np.linalg.norm(direction)
    s = np.linspace(0.0, length, count)[:, None]
    return start + s * direction
def nominal_phases():
    """Fases nominais; cada fase começa no último ponto da anterior"""
    approach = _bezier(np.array([0.0, 0.0, 0.20]), np.array([0.10, 0.0, 0.20]), np.array([0.10, 0.0, 0.02]), APPROACH_POINTS)
    alignment = _line(approach[-1], (1.0, 0.0, -0.5), 0.015, ALIGNMENT_POINTS)
    insertion = _line(alignment[-1], (0.0, 0.0, -1.0), 0.015, INSERTION_POINTS)
    push = _line(insertion[-1], (0.0, 0.0, -1.0), 0.002, MATING_PUSH_POINTS)
    mating = np.vstack([push, np.repeat(push[-1:], MATING_HOLD_POINTS, axis=0)])
    return [approach, alignment, insertion, mating]
def _assemble(phases, trial_id, task_label):
    positions = [phases[0]]
    edges = [(0, len(phases[0]) - 1)]
    for phase in phases[1:]:
        start = edges[-1][1]
        positions.append(phase[1:])
        edges.append((start, start + len(phase) - 1))
    positions = np.vstack(positions)
    times = SAMPLE_PERIOD * np.arange(len(positions))
    boundaries = tuple(
        BehaviorBoundary(label, float(times[first]), float(times[last]))
        for label, (first, last) in zip(BEHAVIOR_LABELS, edges)
    )
    return Trajectory(times, positions, trial_id=trial_id, task_label=task_label, behavior_boundaries=boundaries)
def _inject_failure_offset(phases, rng):
    offset = rng.uniform(*FAILURE_OFFSET_RANGE)
    lateral = np.zeros(len(phases[0]))
    lateral[FAILURE_JOG_SAMPLE] = offset / 2.0
    lateral[FAILURE_JOG_SAMPLE + 1:] = offset
    phases[0] = phases[0] + np.outer(lateral, (0.0, 1.0, 0.0))
    for index in range(1, len(phases)):
        phases[index] = phases[index] + np.array([0.0, offset, 0.0])
    return phases
def _inject_contact_jitter(phases, rng):
    amplitude = CONTACT_JITTER_AMPLITUDE * rng.uniform(0.8, 1.2)
    for index in (1, 2):
        count = len(phases[index])
        wave = amplitude * np.sin(0.5 * np.pi * np.arange(count))
        wave[0] = wave[-1] = 0.0
        phases[index] = phases[index] + np.outer(wave, (0.0, 1.0, 0.0))
    return phases
def generate_synthetic(kind, n_trials, noise_sigma=0.0, seed=7):
    """
    Gera um corpus determinístico para (kind, n_trials, noise_sigma, seed)
    Args:
        kind: smooth_approach | controlled_failure | sharp_contact
        n_trials: >= 1
        noise_sigma: desvio do ruído gaussiano por coordenada (metros)
        seed: semente do gerador
    Returns:
        Corpus com dataset_id A, B ou C
    """
    if kind not in SYNTHETIC_KINDS:
        raise InvalidSpec(f"Tipo sintético inválido: {kind}. Use {sorted(SYNTHETIC_KINDS)}")
    if int(n_trials) < 1:
        raise InvalidSpec(f"n_trials deve ser >= 1, recebido {n_trials}")
    if noise_sigma < 0:
        raise InvalidSpec(f"noise_sigma deve ser >= 0, recebido {noise_sigma}")
    info = SYNTHETIC_KINDS[kind]
    rng = np.random.default_rng(seed)
    trajectories = []
    for index in range(int(n_trials)):
        phases = nominal_phases()
        if kind == 'controlled_failure':
            phases = _inject_failure_offset(phases, rng)
        elif kind == 'sharp_contact':
            phases = _inject_contact_jitter(phases, rng)
        traj = _assemble(phases, f"{kind}_{index:03d}", info['task_label'])
        if noise_sigma > 0:
            traj = replace(traj, positions=traj.positions + rng.normal(0.0, noise_sigma, size=traj.positions.shape))
        trajectories.append(traj)
    metadata = {'kind': kind, 'seed': int(seed), 'noise_sigma': float(noise_sigma), 'sample_period': SAMPLE_PERIOD}
    logger.info(f"[SYNTH] {n_trials} trials '{kind}' gerados (seed={seed}, sigma={noise_sigma})")
    return Corpus(tuple(trajectories), info['dataset_id'], metadata)
