"""
Service de avaliação: validação cruzada repetida e grade de comparação
"""
import logging
from itertools import product
from grammar.grammar_scripts import build_samples
from grammar.services.encoding_service import EncodingService
from ..svm_scripts import cross_validate
from .training_service import train_params_from_config
logger = logging.getLogger(__name__)
class EvaluationService:
    """Executa o protocolo de avaliação com os parâmetros de um RunConfig"""
    def __init__(self, config):
        self.config = config
    def evaluate(self, corpus, progress=False, **overrides):
        """
        Validação cruzada de k_min a k_max folds com `repeats` repetições
        Args:
            corpus: Corpus rotulado
            progress: barra de progresso tqdm
            overrides: chaves do RunConfig substituídas nesta execução (mode, kernel, alignment...)
        Returns:
            FoldReport
        """
        config = {**self.config, **overrides}
        samples = build_samples(corpus, config['scope'])
        encoder = EncodingService(config)
        logger.info(
            f"[CV] Avaliando {corpus.dataset_id or 'corpus'}: {len(samples)} amostras, "
            f"{encoder.mode.value.upper()}-DCC{encoder.alphabet_size}, kernel {config['kernel']}, alinhamento {config['alignment']}"
        )
        report = cross_validate(
            samples,
            encoder,
            kernel=config['kernel'],
            k_min=config['k_min'],
            k_max=config['k_max'],
            repeats=config['repeats'],
            seed=config['seed'],
            encoding=config['encoding'],
            train_params=train_params_from_config(config),
            n_jobs=config['n_jobs'],
            dataset_id=corpus.dataset_id,
            resample_test_unit=config['resample_test_unit'],
            progress=progress,
        )
        report.metadata.update({'init_convention': config['init_convention'], 'c': config['c']})
        return report
    def evaluate_grid(self, corpus, modes=None, kernels=None, alignments=None, scopes=None, progress=False):
        """
        Avalia todas as combinações escopo x modo x kernel x alinhamento
        Returns:
            list: FoldReport na ordem (escopo, modo, kernel, alinhamento)
        """
        modes = modes or [self.config['mode']]
        kernels = kernels or [self.config['kernel']]
        alignments = alignments or [self.config['alignment']]
        scopes = scopes or [self.config['scope']]
        return [
            self.evaluate(corpus, progress=progress, scope=scope, mode=mode, kernel=kernel, alignment=alignment)
            for scope, mode, kernel, alignment in product(scopes, modes, kernels, alignments)
        ]
def report_label(report):
    return f"{report.mode.upper()}-DCC p={report.base_p} {report.kernel} {report.scope} {report.alignment}"
def format_report_table(report):
    """Tabela avg/min/max por k e total, acurácias em porcentagem"""
    lines = [
        f"{report.dataset_id or '-'} {report_label(report)} ({report.scope}, {report.n_samples} amostras, {report.repeats} repetições)",
        f"{'k':>5} {'avg':>8} {'min':>8} {'max':>8}",
    ]
    for k in sorted(report.per_k):
        aggregate = report.per_k[k]
        lines.append(f"{k:>5} {100 * aggregate.avg:>8.2f} {100 * aggregate.min:>8.2f} {100 * aggregate.max:>8.2f}")
    overall = report.overall
    lines.append(f"{'all':>5} {100 * overall.avg:>8.2f} {100 * overall.min:>8.2f} {100 * overall.max:>8.2f}")
    return '\n'.join(lines)
def _row_key(report):
    return f"{report.mode.upper()}-DCC p={report.base_p} {report.scope} {report.alignment}"
def format_grid_table(reports):
    """
    Duas tabelas para a grade:
    comparação de kernels (linhas modo x escopo x alinhamento, colunas kernels, avg %)
    e desempenho geral (avg/min/max por configuração, cabeçalho com o corpus)
    """
    kernels = list(dict.fromkeys(r.kernel for r in reports))
    rows = list(dict.fromkeys(_row_key(r) for r in reports))
    cells = {(_row_key(r), r.kernel): r.overall for r in reports}
    width = max([len(row) for row in rows] + [13])
    lines = ['kernel comparison (avg %)', f"{'configuration':<{width}} " + ' '.join(f"{k:>10}" for k in kernels)]
    for row in rows:
        values = [f"{100 * cells[(row, k)].avg:>10.2f}" if (row, k) in cells else f"{'-':>10}" for k in kernels]
        lines.append(f"{row:<{width}} " + ' '.join(values))
    corpus = reports[0].dataset_id or '-' if reports else '-'
    label_width = max([len(report_label(r)) for r in reports] + [13])
    lines += ['', f"overall performance (corpus {corpus})", f"{'configuration':<{label_width}} {'avg':>8} {'min':>8} {'max':>8}"]
    for report in reports:
        overall = report.overall
        lines.append(f"{report_label(report):<{label_width}} {100 * overall.avg:>8.2f} {100 * overall.min:>8.2f} {100 * overall.max:>8.2f}")
    return '\n'.join(lines)
