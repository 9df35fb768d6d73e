"""
Vetores de features a partir de gramáticas alinhadas
integer  id do símbolo por posição
one_hot  bloco indicador de tamanho do alfabeto por posição
"""
import logging
from dataclasses import dataclass
from typing import Optional
import numpy as np
from core.exceptions import EmptyInput, InvalidSpec
from grammar.grammar_scripts.dcc_codec import alphabet_size
logger = logging.getLogger(__name__)
ENCODINGS = ('integer', 'one_hot')
@dataclass(frozen=True, eq=False)
class FeatureVector:
    values: np.ndarray
    label: Optional[str]
    source_trial: Optional[str] = None
def encode_symbols(symbols, encoding, size):
    symbols = np.asarray(symbols, dtype=np.int64)
    if encoding == 'integer':
        return symbols.astype(float)
    if encoding == 'one_hot':
        block = np.zeros((len(symbols), size))
        block[np.arange(len(symbols)), symbols] = 1.0
        return block.reshape(-1)
    raise InvalidSpec(f"Codificação inválida: {encoding}. Use {ENCODINGS}")
def fit_length(symbols, length, null_symbol):
    """Trunca ou completa com o símbolo nulo até length"""
    symbols = tuple(symbols)
    if len(symbols) >= length:
        return symbols[:length]
    return symbols + (null_symbol,) * (length - len(symbols))
def featurize(aligned, encoding='integer'):
    if len(aligned) == 0:
        raise EmptyInput("Conjunto alinhado vazio")
    size = alphabet_size(aligned.base_p)
    return [
        FeatureVector(encode_symbols(g.symbols, encoding, size), g.label, g.source_trial)
        for g in aligned.grammars
    ]
def feature_matrix(features):
    X = np.vstack([f.values for f in features])
    labels = [f.label for f in features]
    return X, labels
