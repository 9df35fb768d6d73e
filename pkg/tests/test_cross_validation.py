"""
Testes do protocolo de validação cruzada repetida
"""
import numpy as np
from django.test import SimpleTestCase
from core.exceptions import InsufficientData
from classifier.serializers import FoldReportSerializer
from classifier.services import EvaluationService, format_grid_table, format_report_table
from classifier.svm_scripts import Aggregate, cross_validate, stratified_folds
from classifier.svm_scripts.cross_validation import cell_seed, cut_fold_features, effective_folds
from core.utils.command_helpers import default_run_config
from grammar.grammar_scripts import ActionGrammar, build_samples
from grammar.services.encoding_service import EncodingService
from grammar.utils.file_handler import CorpusFileHandler
from grammar.utils.synthetic import generate_synthetic
from tests.curves import labeled_corpus, staircase, straight_line
def run_config(**overrides):
    config = default_run_config()
    config.update({'k_min': 2, 'k_max': 4, 'repeats': 2, 'seed': 7, 'linear_epochs': 300})
    config.update(overrides)
    return config
def separable_corpus(count=6):
    return labeled_corpus([(straight_line, 'straight', count), (staircase, 'turn', count)])
class FoldPartitionTests(SimpleTestCase):
    def test_two_folds_of_ten(self):
        labels = ['a'] * 10 + ['b'] * 10
        folds = stratified_folds(labels, 2, 0, seed=7)
        self.assertEqual([len(f) for f in folds], [10, 10])
        self.assertEqual(sorted(np.concatenate(folds).tolist()), list(range(20)))
    def test_folds_partition_for_every_k(self):
        labels = ['a'] * 12 + ['b'] * 9
        for k in range(2, 21):
            folds = stratified_folds(labels, k, 1, seed=3)
            sizes = [len(f) for f in folds]
            self.assertEqual(sorted(np.concatenate(folds).tolist()), list(range(21)))
            self.assertLessEqual(max(sizes) - min(sizes), 1)
    def test_k_capped_at_largest_class(self):
        self.assertEqual(effective_folds(20, ['a'] * 12 + ['b'] * 9), 12)
        self.assertEqual(effective_folds(5, ['a'] * 12 + ['b'] * 9), 5)
    def test_cell_seeds_are_independent(self):
        seeds = {cell_seed(7, k, r) for k in range(2, 21) for r in range(10)}
        self.assertEqual(len(seeds), 190)
        self.assertEqual(cell_seed(7, 3, 1), cell_seed(7, 3, 1))
class AggregateTests(SimpleTestCase):
    def test_avg_within_bounds(self):
        aggregate = Aggregate.of([0.9, 0.9, 0.9])
        self.assertTrue(aggregate.min <= aggregate.avg <= aggregate.max)
        self.assertEqual(Aggregate.of([0.5, 1.0]), Aggregate(0.75, 0.5, 1.0))
class CrossValidateTests(SimpleTestCase):
    def test_separable_corpus_is_perfect(self):
        report = EvaluationService(run_config()).evaluate(separable_corpus())
        self.assertEqual(report.overall, Aggregate(1.0, 1.0, 1.0))
        self.assertEqual(sorted(report.per_k), [2, 3, 4])
        self.assertEqual(len(report.cells), 3 * 2)
    def test_resample_alignment_is_perfect(self):
        report = EvaluationService(run_config(alignment='resample', kernel='svc_linear')).evaluate(separable_corpus())
        self.assertEqual(report.overall.min, 1.0)
        self.assertEqual(report.alignment, 'resample')
    def test_identical_grammars_are_chance(self):
        corpus = labeled_corpus([(straight_line, 'success', 10), (straight_line, 'failure', 10)])
        report = EvaluationService(run_config(k_min=2, k_max=2)).evaluate(corpus)
        self.assertLessEqual(abs(report.overall.avg - 0.5), 0.15)
    def test_seeded_determinism(self):
        service = EvaluationService(run_config())
        first = FoldReportSerializer(service.evaluate(separable_corpus())).data
        second = FoldReportSerializer(service.evaluate(separable_corpus())).data
        self.assertEqual(first, second)
    def test_parallel_matches_serial(self):
        corpus = labeled_corpus([(straight_line, 'straight', 5), (staircase, 'turn', 5)])
        serial = EvaluationService(run_config(n_jobs=1)).evaluate(corpus)
        parallel = EvaluationService(run_config(n_jobs=2)).evaluate(corpus)
        self.assertEqual(serial.cells, parallel.cells)
    def test_single_class(self):
        corpus = labeled_corpus([(straight_line, 'success', 6)])
        with self.assertRaises(InsufficientData):
            EvaluationService(run_config()).evaluate(corpus)
    def test_class_with_one_member(self):
        corpus = labeled_corpus([(straight_line, 'success', 6), (staircase, 'failure', 1)])
        with self.assertRaises(InsufficientData):
            EvaluationService(run_config()).evaluate(corpus)
    def test_grid_covers_every_combination(self):
        service = EvaluationService(run_config(k_max=2, repeats=1))
        reports = service.evaluate_grid(separable_corpus(4), modes=['ff', 'aff'], kernels=['linear', 'rbf'])
        self.assertEqual([(r.mode, r.kernel) for r in reports], [('ff', 'linear'), ('ff', 'rbf'), ('aff', 'linear'), ('aff', 'rbf')])
    def test_grid_covers_both_scopes(self):
        corpus = CorpusFileHandler.combine_corpora([
            generate_synthetic('smooth_approach', 3, seed=1),
            generate_synthetic('controlled_failure', 3, seed=2),
        ])
        service = EvaluationService(run_config(k_max=2, repeats=1))
        reports = service.evaluate_grid(corpus, kernels=['linear', 'svc_linear'], scopes=['task', 'behavior'])
        self.assertEqual(
            [(r.scope, r.kernel) for r in reports],
            [('task', 'linear'), ('task', 'svc_linear'), ('behavior', 'linear'), ('behavior', 'svc_linear')],
        )
        self.assertEqual([r.n_samples for r in reports], [6, 6, 24, 24])
        comparison = format_grid_table(reports).splitlines()[2:4]
        self.assertIn(' task ', comparison[0])
        self.assertIn(' behavior ', comparison[1])
    def test_table_lists_each_k(self):
        table = format_report_table(EvaluationService(run_config()).evaluate(separable_corpus()))
        lines = table.splitlines()
        self.assertEqual(len(lines), 2 + 3 + 1)
        self.assertIn('100.00', lines[-1])
    def test_direct_call_with_encoder(self):
        config = run_config()
        samples = build_samples(separable_corpus(), 'task')
        report = cross_validate(samples, EncodingService(config), k_min=2, k_max=2, repeats=1, seed=1, dataset_id='T')
        self.assertEqual(report.dataset_id, 'T')
        self.assertEqual(report.n_samples, 12)
        self.assertEqual(report.cells[0].fold_sizes, (6, 6))
    def test_full_protocol_on_separable_corpus(self):
        config = run_config(k_min=2, k_max=20, repeats=10, linear_epochs=200)
        report = EvaluationService(config).evaluate(separable_corpus(20))
        self.assertEqual(sorted(report.per_k), list(range(2, 21)))
        self.assertEqual(len(report.cells), 19 * 10)
        for aggregate in report.per_k.values():
            self.assertEqual(aggregate, Aggregate(1.0, 1.0, 1.0))
        self.assertEqual(report.overall, Aggregate(1.0, 1.0, 1.0))
        for cell in report.cells:
            self.assertEqual(cell.effective_k, cell.k)
            self.assertEqual(sum(cell.fold_sizes), 40)
            self.assertLessEqual(max(cell.fold_sizes) - min(cell.fold_sizes), 1)
class CutFoldTests(SimpleTestCase):
    def test_cut_length_comes_from_training_fold(self):
        grammars = tuple(
            ActionGrammar((symbol,) * length, base_p=1, source_trial=f"t{index}")
            for index, (symbol, length) in enumerate([(0, 5), (1, 6), (2, 3)])
        )
        X_train, X_test = cut_fold_features(grammars, [0, 1], [2], 'integer')
        self.assertEqual(X_train.shape, (2, 5))
        np.testing.assert_array_equal(X_test, [[2, 2, 2, 6, 6]])
    def test_long_test_grammar_is_truncated(self):
        grammars = tuple(ActionGrammar((3,) * length, base_p=1, source_trial=f"t{length}") for length in (4, 4, 9))
        _, X_test = cut_fold_features(grammars, [0, 1], [2], 'one_hot')
        self.assertEqual(X_test.shape, (1, 4 * 7))
