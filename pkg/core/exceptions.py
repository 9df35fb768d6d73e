"""
Hierarquia de erros do pipeline de gramáticas de ação.
DataError cobre entradas inválidas (exit code 2); InvariantViolation indica
falha interna (exit code 3).
"""
class ActionGrammarError(Exception):
    """Erro base do projeto"""
class DataError(ActionGrammarError):
    """Entrada inválida ou inconsistente"""
class DegenerateInput(DataError):
    """Trajetória sem movimento suficiente para definir frames"""
class InvalidBase(DataError):
    """Base DCC fora de 1..4"""
class EmptyInput(DataError):
    pass
class MissingBoundaries(DataError):
    """Fronteiras de comportamento ausentes ou com menos de 3 pontos"""
class InvalidBoundaries(DataError):
    """Fronteiras sobrepostas, fora de ordem ou fora do intervalo da trajetória"""
class SingleClass(DataError):
    pass
class NonFinite(DataError):
    pass
class DimensionMismatch(DataError):
    pass
class InsufficientData(DataError):
    pass
class InvalidSpec(DataError):
    pass
class MissingLabel(DataError):
    pass
class NonMonotoneTime(DataError):
    pass
class ParseError(DataError):
    """Linha malformada em arquivo de entrada"""
    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        location = f"{path}:{line}: " if path is not None and line is not None else (f"{path}: " if path is not None else '')
        super().__init__(f"{location}{message}")
class StorageError(DataError):
    """Falha de leitura/escrita de arquivo"""
class InvariantViolation(ActionGrammarError):
    """Invariante interna quebrada (bug, não erro de dado)"""
