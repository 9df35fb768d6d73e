from .kernels import KERNELS, kernel_matrix
from .linear_svm import train_primal
from .smo_svm import train_dual
from .model import BinaryMachine, SvmModel, decision_function, predict, predict_many, train_svm
from .features import FeatureVector, featurize, feature_matrix, fit_length
from .cross_validation import Aggregate, FoldCell, FoldReport, cross_validate, stratified_folds
__all__ = [
    'KERNELS', 'kernel_matrix', 'train_primal', 'train_dual',
    'BinaryMachine', 'SvmModel', 'decision_function', 'predict', 'predict_many', 'train_svm',
    'FeatureVector', 'featurize', 'feature_matrix', 'fit_length',
    'Aggregate', 'FoldCell', 'FoldReport', 'cross_validate', 'stratified_folds',
]
