"""
SVM no dual por SMO com par de violação máxima (seleção de primeira ordem)
    min 1/2 a^T Q a - e^T a,  Q_ij = y_i y_j K_ij,  0 <= a_i <= C,  y^T a = 0
Decisão: f(x) = sum_i a_i y_i K(x_i, x) - rho
"""
import logging
from dataclasses import dataclass
import numpy as np
logger = logging.getLogger(__name__)
TAU = 1e-12
@dataclass(frozen=True)
class DualSolution:
    alphas: np.ndarray
    rho: float
    iterations: int
    converged: bool
def _select_pair(alphas, y, G, C):
    minus_yg = -y * G
    up = ((y > 0) & (alphas < C)) | ((y < 0) & (alphas > 0))
    low = ((y > 0) & (alphas > 0)) | ((y < 0) & (alphas < C))
    if not up.any() or not low.any():
        return None, None, 0.0
    up_idx = np.flatnonzero(up)
    low_idx = np.flatnonzero(low)
    i = int(up_idx[np.argmax(minus_yg[up_idx])])
    j = int(low_idx[np.argmin(minus_yg[low_idx])])
    return i, j, float(minus_yg[i] - minus_yg[j])
def _rho(alphas, y, G, C):
    yG = y * G
    free = (alphas > 0) & (alphas < C)
    if free.any():
        return float(yG[free].mean())
    at_upper = alphas >= C
    ub_mask = (at_upper & (y < 0)) | (~at_upper & (y > 0))
    lb_mask = (at_upper & (y > 0)) | (~at_upper & (y < 0))
    ub = yG[ub_mask].min() if ub_mask.any() else np.inf
    lb = yG[lb_mask].max() if lb_mask.any() else -np.inf
    return float((ub + lb) / 2.0)
def train_dual(K, y, C=1.0, tol=1e-3, max_iter=100000):
    """
    Args:
        K: matriz de kernel (m, m)
        y: array (m,) com -1/+1
    Returns:
        DualSolution (alphas em [0, C])
    """
    y = np.asarray(y, dtype=float)
    m = len(y)
    alphas = np.zeros(m)
    G = -np.ones(m)
    diag = np.diag(K)
    converged = False
    iteration = 0
    while iteration < max_iter:
        i, j, gap = _select_pair(alphas, y, G, C)
        if i is None or gap < tol:
            converged = True
            break
        a = diag[i] + diag[j] - 2.0 * K[i, j]
        if a <= 0:
            a = TAU
        room_i = C - alphas[i] if y[i] > 0 else alphas[i]
        room_j = alphas[j] if y[j] > 0 else C - alphas[j]
        step = min(gap / a, room_i, room_j)
        alphas[i] += y[i] * step
        alphas[j] -= y[j] * step
        G += y * step * (K[:, i] - K[:, j])
        iteration += 1
    if not converged:
        logger.warning(f"[SVM] SMO atingiu max_iter={max_iter} sem convergir (tol={tol})")
    np.clip(alphas, 0.0, C, out=alphas)
    return DualSolution(alphas, _rho(alphas, y, G, C), iteration, converged)
