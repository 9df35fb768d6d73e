"""
Kernels do SVM
linear      solver primal (subgradiente, estilo liblinear)
svc_linear  solver dual SMO com kernel linear (estilo libsvm)
polynomial  (gamma <x, y> + coef0)^degree
rbf         exp(-gamma ||x - y||^2)
"""
from sklearn.metrics.pairwise import pairwise_kernels
from core.exceptions import InvalidSpec
KERNELS = ('linear', 'svc_linear', 'polynomial', 'rbf')
PRIMAL_KERNELS = ('linear',)
def resolve_gamma(gamma, feature_dim):
    """gamma padrão = 1 / dimensão"""
    return float(gamma) if gamma is not None else 1.0 / max(int(feature_dim), 1)
def kernel_matrix(X, Y, kernel, degree=3, coef0=1.0, gamma=None):
    if kernel not in KERNELS:
        raise InvalidSpec(f"Kernel inválido: {kernel}. Use {KERNELS}")
    gamma = resolve_gamma(gamma, X.shape[1])
    if kernel in ('linear', 'svc_linear'):
        return pairwise_kernels(X, Y, metric='linear')
    if kernel == 'polynomial':
        return pairwise_kernels(X, Y, metric='poly', degree=degree, gamma=gamma, coef0=coef0)
    return pairwise_kernels(X, Y, metric='rbf', gamma=gamma)
