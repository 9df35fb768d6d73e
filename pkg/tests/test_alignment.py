"""
Testes de alinhamento por corte e por reamostragem
"""
import numpy as np
from django.test import SimpleTestCase
from core.exceptions import DegenerateInput, EmptyInput, InvalidSpec
from grammar.grammar_scripts import ActionGrammar, AlignMethod, FrameMode, Scope, align_cut, align_resample, resample_curve
from grammar.grammar_scripts.alignment import resampling_unit
from grammar.grammar_scripts.frame_engine import compute_aff
from tests.curves import from_positions, helix, polyline, straight_line
def grammar(length, trial='t', base_p=1, scope=Scope.TASK, symbol=0):
    return ActionGrammar((symbol,) * length, base_p=base_p, scope=scope, source_trial=trial, behavior_label='approach' if scope is Scope.BEHAVIOR else None)
class AlignCutTests(SimpleTestCase):
    def test_truncates_to_shortest(self):
        aligned = align_cut([grammar(10, 'a'), grammar(12, 'b'), grammar(15, 'c')])
        self.assertEqual(aligned.length, 10)
        self.assertEqual([g.source_trial for g in aligned.grammars], ['a', 'b', 'c'])
        self.assertEqual(aligned.truncated, (0, 2, 5))
        self.assertIs(aligned.method, AlignMethod.CUT)
    def test_equal_lengths_unchanged(self):
        grammars = [grammar(8, 'a'), grammar(8, 'b', symbol=3)]
        aligned = align_cut(grammars)
        self.assertEqual([g.symbols for g in aligned.grammars], [g.symbols for g in grammars])
        self.assertEqual(align_cut(aligned.grammars).truncated, (0, 0))
    def test_drop_count_is_logged(self):
        with self.assertLogs('grammar.grammar_scripts.alignment', level='WARNING') as captured:
            aligned = align_cut([grammar(1, 'a'), grammar(100, 'b')])
        self.assertEqual(aligned.length, 1)
        self.assertEqual(sum(aligned.truncated), 99)
        self.assertIn('99', captured.output[0])
    def test_empty(self):
        with self.assertRaises(EmptyInput):
            align_cut([])
        with self.assertRaises(EmptyInput):
            align_cut([ActionGrammar((), base_p=1, source_trial='x'), grammar(3)])
    def test_mixed_bases(self):
        with self.assertRaises(InvalidSpec):
            align_cut([grammar(3, 'a', base_p=1), grammar(3, 'b', base_p=2)])
class ResampleTests(SimpleTestCase):
    def test_uniform_lines(self):
        lines = [straight_line(11, trial_id='a'), straight_line(11, trial_id='b')]
        self.assertAlmostEqual(resampling_unit(lines), 1.0)
        aligned = align_resample(lines, FrameMode.FF, 1)
        self.assertAlmostEqual(aligned.unit_length, 1.0)
        self.assertEqual(aligned.segment_counts, (10, 10))
        self.assertEqual([g.symbols for g in aligned.grammars], [(0,) * 9, (0,) * 9])
        self.assertIs(aligned.method, AlignMethod.RESAMPLE)
    def test_sampling_density_does_not_change_grammar(self):
        corners = [(0, 0, 0), (4, 0, 0), (4, 4, 0), (4, 4, 4)]
        sparse = polyline(corners, 16, trial_id='sparse')
        dense = polyline(corners, 66, trial_id='dense')
        for mode in (FrameMode.FF, FrameMode.AFF):
            aligned = align_resample([sparse, dense], mode, 2)
            self.assertEqual(aligned.grammars[0].symbols, aligned.grammars[1].symbols)
    def test_curved_input_at_two_densities(self):
        coarse = helix(50, 270.0 / 49, trial_id='coarse')
        fine = helix(200, 270.0 / 199, trial_id='fine')
        ff = align_resample([coarse, fine], FrameMode.FF, 2)
        self.assertEqual(ff.grammars[0].symbols, ff.grammars[1].symbols)
        self.assertEqual(set(ff.grammars[0].symbols), {0})
        # AFF sobre a poligonal grossa concentra a curvatura nos vértices:
        # os instantes de realinhamento derivam, a contagem não
        events = [len(compute_aff(resample_curve(traj, ff.unit_length), 2).realignment_events) for traj in (coarse, fine)]
        self.assertGreater(min(events), 0)
        self.assertLessEqual(abs(events[0] - events[1]), 2)
    def test_segment_counts_follow_arc_length(self):
        short = straight_line(11, trial_id='short')
        long = straight_line(11, step=2.0, trial_id='long')
        aligned = align_resample([short, long], FrameMode.FF, 1)
        self.assertAlmostEqual(aligned.unit_length, 1.5)
        self.assertEqual(aligned.segment_counts, (7, 13))
        self.assertEqual(aligned.length, 6)
    def test_reuses_given_unit(self):
        aligned = align_resample([straight_line(11)], FrameMode.FF, 1, unit_length=2.0)
        self.assertEqual(aligned.segment_counts, (5,))
    def test_partial_segment_rule(self):
        line = straight_line(2, step=10.0)
        self.assertEqual(len(resample_curve(line, 4.0)), 4)
        self.assertEqual(len(resample_curve(line, 3.0)), 4)
        self.assertEqual(len(resample_curve(line, 2.4)), 5)
    def test_null_chords_are_skipped(self):
        traj = from_positions([(0, 0, 0), (1, 0, 0), (1, 0, 0), (2, 0, 0)])
        resampled = resample_curve(traj, 0.5)
        np.testing.assert_allclose(resampled.positions[:, 0], [0.0, 0.5, 1.0, 1.5, 2.0])
    def test_zero_length_curve(self):
        with self.assertRaises(DegenerateInput):
            resampling_unit([from_positions([(1, 1, 1)] * 4)])
    def test_invalid_unit(self):
        with self.assertRaises(InvalidSpec):
            align_resample([straight_line(5)], FrameMode.FF, 1, unit_length=0.0)
    def test_empty(self):
        with self.assertRaises(EmptyInput):
            align_resample([], FrameMode.FF, 1)
