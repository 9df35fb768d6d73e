"""
Enumerações e tolerâncias compartilhadas pelo pipeline de codificação
"""
from enum import Enum
class FrameMode(str, Enum):
    FF = 'ff'
    AFF = 'aff'
class InitConvention(str, Enum):
    """Convenção de escolha da normal do frame inicial"""
    LEAST_ALIGNED_AXIS = 'least_aligned_axis'
    OSCULATING = 'osculating'
class Scope(str, Enum):
    TASK = 'task'
    BEHAVIOR = 'behavior'
class AlignMethod(str, Enum):
    CUT = 'cut'
    RESAMPLE = 'resample'
DEFAULT_MOTION_EPSILON = 1e-6
PARALLEL_TOLERANCE = 1e-9
UNIT_TOLERANCE = 1e-9
SUPPORTED_BASES = (1, 2, 3, 4)
BEHAVIOR_LABELS = ('approach', 'alignment', 'insertion', 'mating')
