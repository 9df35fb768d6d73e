"""
Modelo SVM (binário ou one-vs-rest) sobre vetores de gramática
"""
import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple
import numpy as np
from core.exceptions import DimensionMismatch, InvalidSpec, InvariantViolation, NonFinite, SingleClass
from .kernels import KERNELS, PRIMAL_KERNELS, kernel_matrix, resolve_gamma
from .linear_svm import train_primal
from .smo_svm import train_dual
logger = logging.getLogger(__name__)
@dataclass(frozen=True, eq=False)
class BinaryMachine:
    """
    Uma máquina binária: decisão = <w, x> - bias (primal) ou
    sum_i coef_i K(sv_i, x) - bias (dual), coef_i = alpha_i y_i.
    """
    positive_class: str
    bias: float
    weights: Optional[np.ndarray] = None
    dual_coef: Optional[np.ndarray] = None
    support_vectors: Optional[np.ndarray] = None
    iterations: int = 0
@dataclass(frozen=True, eq=False)
class SvmModel:
    kernel: str
    classes: Tuple[str, ...]
    machines: Tuple[BinaryMachine, ...]
    c: float
    degree: int
    coef0: float
    gamma: float
    feature_dim: int
    encoding: str = 'integer'
    alphabet_size: Optional[int] = None
    base_p: Optional[int] = None
    mode: Optional[str] = None
    scope: Optional[str] = None
    alignment: Optional[str] = None
    unit_length: Optional[float] = None
    metadata: dict = field(default_factory=dict)
    @property
    def is_binary(self):
        return len(self.classes) == 2
    @property
    def grammar_length(self):
        """Comprimento de gramática esperado pelo modelo"""
        if self.encoding == 'one_hot' and self.alphabet_size:
            return self.feature_dim // self.alphabet_size
        return self.feature_dim
def _check_features(X):
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] == 0:
        raise InvalidSpec("Matriz de features vazia ou mal formada")
    if not np.all(np.isfinite(X)):
        raise NonFinite("Features contêm valores não finitos")
    return X
def _train_binary(X, y_signed, positive_class, kernel, C, degree, coef0, gamma, epochs, tol, max_iter):
    if kernel in PRIMAL_KERNELS:
        solution = train_primal(X, y_signed, C=C, epochs=epochs)
        return BinaryMachine(positive_class, solution.bias, weights=solution.weights, iterations=solution.best_epoch)
    K = kernel_matrix(X, X, kernel, degree, coef0, gamma)
    solution = train_dual(K, y_signed, C=C, tol=tol, max_iter=max_iter)
    if np.any(solution.alphas < 0) or np.any(solution.alphas > C):
        raise InvariantViolation("Coeficientes duais fora de [0, C]")
    support = solution.alphas > 0
    return BinaryMachine(
        positive_class,
        solution.rho,
        dual_coef=(solution.alphas * y_signed)[support],
        support_vectors=X[support].copy(),
        iterations=solution.iterations,
    )
def train_svm(X, labels, kernel='linear', C=1.0, degree=3, coef0=1.0, gamma=None, epochs=1000, tol=1e-3, max_iter=100000, **model_info):
    """
    Treina SVM binário ou one-vs-rest
    Args:
        X: array (m, d) de features
        labels: rótulos categóricos (m,)
        kernel: linear | svc_linear | polynomial | rbf
        model_info: metadados do pipeline gravados no modelo (encoding, base_p, ...)
    Returns:
        SvmModel
    """
    if kernel not in KERNELS:
        raise InvalidSpec(f"Kernel inválido: {kernel}. Use {KERNELS}")
    X = _check_features(X)
    labels = np.asarray([str(label) for label in labels])
    if labels.shape[0] != X.shape[0]:
        raise DimensionMismatch(f"{X.shape[0]} vetores para {labels.shape[0]} rótulos")
    classes = tuple(sorted(set(labels.tolist())))
    if len(classes) < 2:
        raise SingleClass(f"Apenas uma classe presente: {classes}")
    gamma = resolve_gamma(gamma, X.shape[1])
    targets = classes[1:] if len(classes) == 2 else classes
    machines = tuple(
        _train_binary(X, np.where(labels == target, 1.0, -1.0), target, kernel, C, degree, coef0, gamma, epochs, tol, max_iter)
        for target in targets
    )
    logger.info(f"[SVM] Modelo {kernel} treinado: {X.shape[0]} vetores, dimensão {X.shape[1]}, classes {list(classes)}")
    return SvmModel(kernel, classes, machines, float(C), int(degree), float(coef0), float(gamma), int(X.shape[1]), **model_info)
def decision_function(model, X):
    """Valores de decisão (n, n_machines)"""
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[None, :]
    if X.shape[1] != model.feature_dim:
        raise DimensionMismatch(f"Vetor de dimensão {X.shape[1]}, modelo espera {model.feature_dim}")
    if not np.all(np.isfinite(X)):
        raise NonFinite("Features contêm valores não finitos")
    columns = []
    for machine in model.machines:
        if machine.weights is not None:
            columns.append(X @ machine.weights - machine.bias)
        elif machine.support_vectors is None or len(machine.support_vectors) == 0:
            columns.append(np.full(X.shape[0], -machine.bias))
        else:
            K = kernel_matrix(machine.support_vectors, X, model.kernel, model.degree, model.coef0, model.gamma)
            columns.append(machine.dual_coef @ K - machine.bias)
    return np.column_stack(columns)
def predict_many(model, X):
    decisions = decision_function(model, X)
    if model.is_binary:
        labels = [model.classes[1] if d > 0 else model.classes[0] for d in decisions[:, 0]]
        return labels, decisions[:, 0]
    winners = np.argmax(decisions, axis=1)
    labels = [model.machines[w].positive_class for w in winners]
    return labels, decisions[np.arange(len(winners)), winners]
def predict(model, feature):
    """
    Args:
        feature: vetor (d,) ou FeatureVector
    Returns:
        tuple: (rótulo, valor de decisão)
    """
    values = getattr(feature, 'values', feature)
    labels, decisions = predict_many(model, np.asarray(values, dtype=float)[None, :])
    return labels[0], float(decisions[0])
