from .training_service import PredictionService, TrainingService, train_params_from_config
from .evaluation_service import EvaluationService, format_grid_table, format_report_table
__all__ = [
    'PredictionService', 'TrainingService', 'train_params_from_config',
    'EvaluationService', 'format_grid_table', 'format_report_table',
]
