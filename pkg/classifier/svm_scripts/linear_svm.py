"""
SVM linear no primal: subgradiente determinístico (lote completo) sobre
    lambda/2 ||w||^2 + 1/m sum max(0, 1 - y_i <w, x_i>)
com lambda = 1 / (C m) e viés como feature aumentada regularizada.
Passo eta_t = 1 / (lambda t), projeção na bola de raio 1/sqrt(lambda) e
retorno da melhor iteração. objective_history guarda o objetivo bruto de
cada época e best_objective_history o mínimo acumulado.
"""
import logging
from dataclasses import dataclass
from typing import Tuple
import numpy as np
logger = logging.getLogger(__name__)
@dataclass(frozen=True)
class PrimalSolution:
    weights: np.ndarray
    bias: float
    objective_history: Tuple[float, ...]
    best_objective_history: Tuple[float, ...]
    best_epoch: int
def _augment(X):
    return np.hstack([X, np.ones((X.shape[0], 1))])
def primal_objective(w_aug, X_aug, y, lam):
    margins = y * (X_aug @ w_aug)
    return float(0.5 * lam * (w_aug @ w_aug) + np.maximum(0.0, 1.0 - margins).mean())
def train_primal(X, y, C=1.0, epochs=1000):
    """
    Args:
        X: array (m, d)
        y: array (m,) com valores -1/+1
    Returns:
        PrimalSolution com decisão <w, x> - bias
    """
    X_aug = _augment(np.asarray(X, dtype=float))
    y = np.asarray(y, dtype=float)
    m = X_aug.shape[0]
    lam = 1.0 / (C * m)
    radius = 1.0 / np.sqrt(lam)
    w = np.zeros(X_aug.shape[1])
    best_w = w.copy()
    best_objective = primal_objective(w, X_aug, y, lam)
    best_epoch = 0
    history = []
    best_history = []
    for t in range(1, epochs + 1):
        active = y * (X_aug @ w) < 1.0
        gradient = lam * w - (y[active, None] * X_aug[active]).sum(axis=0) / m
        w = w - gradient / (lam * t)
        norm = np.linalg.norm(w)
        if norm > radius:
            w = w * (radius / norm)
        objective = primal_objective(w, X_aug, y, lam)
        history.append(objective)
        if objective < best_objective:
            best_objective = objective
            best_w = w.copy()
            best_epoch = t
        best_history.append(best_objective)
    logger.debug(f"[SVM] primal: objetivo {best_objective:.6g} na época {best_epoch}/{epochs}")
    return PrimalSolution(best_w[:-1].copy(), float(-best_w[-1]), tuple(history), tuple(best_history), best_epoch)
