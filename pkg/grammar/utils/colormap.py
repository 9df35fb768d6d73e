"""
Mapa de cores das gramáticas alinhadas (portable graymap, P5)
Uma linha de pixels por trial, uma coluna por posição da gramática.
"""
import logging
from pathlib import Path
import numpy as np
from PIL import Image
from core.exceptions import EmptyInput, StorageError
from grammar.grammar_scripts.dcc_codec import alphabet_size
logger = logging.getLogger(__name__)
def brightness_step(size):
    """Níveis de brilho = tamanho do alfabeto: brilho = símbolo * floor(255 / alfabeto)"""
    return 255 // size
def colormap_array(aligned):
    """
    Brilho = símbolo * floor(255 / alfabeto); o símbolo nulo fica no nível
    mais claro. Alfabetos com mais de 255 símbolos (DCC2851) zerariam o passo
    e passam a escala linear símbolo * 255 // nulo, com níveis compartilhados.
    """
    if len(aligned) == 0 or aligned.length == 0:
        raise EmptyInput("Conjunto alinhado vazio, nada para desenhar")
    size = alphabet_size(aligned.base_p)
    symbols = np.array([g.symbols for g in aligned.grammars], dtype=np.int64)
    step = brightness_step(size)
    if step == 0:
        logger.warning(f"[IO] Alfabeto DCC{size} excede 255 níveis de cinza; símbolos vizinhos compartilham brilho")
        return (symbols * 255 // (size - 1)).astype(np.uint8)
    return (symbols * step).astype(np.uint8)
def emit_colormap(aligned, path):
    """
    Grava o mapa de cores em PGM binário
    Args:
        aligned: AlignedSet
        path: arquivo de saída
    Returns:
        Path gravado
    """
    pixels = colormap_array(aligned)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        Image.fromarray(pixels).save(path, format='PPM')
    except OSError as e:
        raise StorageError(f"Erro ao gravar colormap em {path}: {e}")
    logger.info(f"[IO] Colormap {pixels.shape[1]}x{pixels.shape[0]} gravado em {path}")
    return path
