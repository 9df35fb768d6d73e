"""
Validação cruzada repetida de 2 a 20 folds
Para cada (k, repetição): embaralhamento semeado por (seed, k, repetição),
split estratificado, alinhamento/featurização, treino e acurácia agregada
sobre todos os folds. Agregados avg/min/max por k e no total.
"""
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Tuple
import numpy as np
from joblib import Parallel, delayed
from sklearn.model_selection import StratifiedKFold
from tqdm import tqdm
from core.exceptions import EmptyInput, InsufficientData
from grammar.grammar_scripts import AlignMethod
from grammar.grammar_scripts.dcc_codec import alphabet_size
from .features import encode_symbols, feature_matrix, featurize, fit_length
from .model import predict_many, train_svm
logger = logging.getLogger(__name__)
@dataclass(frozen=True)
class Aggregate:
    avg: float
    min: float
    max: float
    @classmethod
    def of(cls, values):
        values = [float(v) for v in values]
        low, high = min(values), max(values)
        return cls(min(max(float(np.mean(values)), low), high), low, high)
@dataclass(frozen=True)
class FoldCell:
    k: int
    effective_k: int
    repeat: int
    accuracy: float
    fold_sizes: Tuple[int, ...]
@dataclass(frozen=True)
class FoldReport:
    dataset_id: str
    kernel: str
    alignment: str
    mode: str
    base_p: int
    scope: str
    encoding: str
    seed: int
    repeats: int
    k_min: int
    k_max: int
    n_samples: int
    cells: Tuple[FoldCell, ...]
    per_k: Dict[int, Aggregate]
    overall: Aggregate
    metadata: dict = field(default_factory=dict)
def cell_seed(seed, k, repeat):
    """Semente independente por célula: mesma em execução serial ou paralela"""
    return int(np.random.SeedSequence([int(seed), int(k), int(repeat)]).generate_state(1)[0])
def check_class_balance(labels):
    counts = Counter(labels)
    if len(counts) < 2:
        raise InsufficientData(f"Validação cruzada exige ao menos 2 classes, encontrado {dict(counts)}")
    small = {label: n for label, n in counts.items() if n < 2}
    if small:
        raise InsufficientData(f"Classes com menos de 2 exemplos: {small}")
    return counts
def effective_folds(k, labels):
    """k limitado ao tamanho da maior classe (e ao número de amostras)"""
    counts = Counter(labels)
    return max(2, min(int(k), len(labels), max(counts.values())))
def stratified_folds(labels, k, repeat, seed):
    """Índices de teste de cada fold para a célula (k, repeat)"""
    labels = np.asarray(labels)
    splitter = StratifiedKFold(n_splits=effective_folds(k, labels.tolist()), shuffle=True, random_state=cell_seed(seed, k, repeat))
    return [test for _, test in splitter.split(np.zeros(len(labels)), labels)]
def cut_fold_features(grammars, train_idx, test_idx, encoding):
    """Corte no menor comprimento do treino; o teste é truncado ou completado com o nulo"""
    length = min(len(grammars[i]) for i in train_idx)
    size = alphabet_size(grammars[0].base_p)
    X_train = np.vstack([encode_symbols(grammars[i].symbols[:length], encoding, size) for i in train_idx])
    X_test = np.vstack([encode_symbols(fit_length(grammars[i].symbols, length, size - 1), encoding, size) for i in test_idx])
    return X_train, X_test
def resample_fold_features(samples, train_idx, test_idx, encoder, encoding, resample_test_unit):
    train_set = encoder.align_samples([samples[i] for i in train_idx])
    test_unit = train_set.unit_length if resample_test_unit == 'train' else None
    test_set = encoder.align_samples([samples[i] for i in test_idx], unit_length=test_unit)
    size = alphabet_size(train_set.base_p)
    X_train, _ = feature_matrix(featurize(train_set, encoding))
    X_test = np.vstack([
        encode_symbols(fit_length(g.symbols, train_set.length, size - 1), encoding, size)
        for g in test_set.grammars
    ])
    return X_train, X_test
def _run_cell(samples, labels, k, repeat, seed, encoder, grammars, encoding, resample_test_unit, train_params):
    labels = np.asarray(labels)
    folds = stratified_folds(labels, k, repeat, seed)
    correct = 0
    for test_idx in folds:
        train_idx = np.setdiff1d(np.arange(len(labels)), test_idx)
        if grammars is not None:
            X_train, X_test = cut_fold_features(grammars, train_idx, test_idx, encoding)
        else:
            X_train, X_test = resample_fold_features(samples, train_idx, test_idx, encoder, encoding, resample_test_unit)
        model = train_svm(X_train, labels[train_idx], **train_params)
        predicted, _ = predict_many(model, X_test)
        correct += int(np.sum(np.asarray(predicted) == labels[test_idx]))
    return FoldCell(int(k), len(folds), int(repeat), correct / len(labels), tuple(len(f) for f in folds))
def cross_validate(samples, encoder, kernel='linear', k_min=2, k_max=20, repeats=10, seed=7, encoding='integer', train_params=None, n_jobs=1, dataset_id='', resample_test_unit='train', progress=False):
    """
    Protocolo de avaliação repetida
    Args:
        samples: lista de LabeledSample
        encoder: EncodingService (modo, base, alinhamento)
        train_params: C, degree, coef0, gamma, epochs, tol, max_iter
        n_jobs: células (k, repetição) em paralelo; ordem de saída canônica
    Returns:
        FoldReport
    """
    samples = list(samples)
    labels = [sample.label for sample in samples]
    check_class_balance(labels)
    largest = max(Counter(labels).values())
    if k_max > largest:
        logger.warning(f"[CV] k até {k_max} excede a maior classe ({largest} amostras); k efetivo limitado a {largest}")
    params = dict(train_params or {})
    params['kernel'] = kernel
    grammars = None
    if encoder.alignment is AlignMethod.CUT:
        grammars = tuple(encoder.encode_sample(sample) for sample in samples)
        empty = [g.source_trial for g in grammars if len(g) == 0]
        if empty:
            raise EmptyInput(f"Gramáticas vazias: {empty}")
    grid = [(k, repeat) for k in range(k_min, k_max + 1) for repeat in range(repeats)]
    jobs = (
        delayed(_run_cell)(samples, labels, k, repeat, seed, encoder, grammars, encoding, resample_test_unit, params)
        for k, repeat in tqdm(grid, desc='cross-validation', disable=not progress)
    )
    cells = tuple(Parallel(n_jobs=n_jobs)(jobs))
    per_k = {k: Aggregate.of([c.accuracy for c in cells if c.k == k]) for k in range(k_min, k_max + 1)}
    overall = Aggregate.of([c.accuracy for c in cells])
    for k, aggregate in per_k.items():
        logger.info(f"[CV] k={k}: avg={aggregate.avg:.4f} min={aggregate.min:.4f} max={aggregate.max:.4f}")
    return FoldReport(
        dataset_id=dataset_id,
        kernel=kernel,
        alignment=encoder.alignment.value,
        mode=encoder.mode.value,
        base_p=encoder.base_p,
        scope=samples[0].scope.value,
        encoding=encoding,
        seed=int(seed),
        repeats=int(repeats),
        k_min=int(k_min),
        k_max=int(k_max),
        n_samples=len(samples),
        cells=cells,
        per_k=per_k,
        overall=overall,
    )
