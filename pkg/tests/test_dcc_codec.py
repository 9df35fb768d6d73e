"""
Testes da codificação DCC
"""
import math
import numpy as np
from django.test import SimpleTestCase
from scipy.spatial.transform import Rotation
from core.exceptions import EmptyInput, InvalidBase, InvariantViolation, MissingBoundaries
from grammar.grammar_scripts import (
    ActionGrammar,
    BehaviorBoundary,
    Frame,
    FrameMode,
    FrameSequence,
    InitConvention,
    Scope,
    build_direction_set,
    compute_aff,
    encode_curve,
    encode_step,
    encode_trajectory,
    segment_and_encode,
)
from grammar.grammar_scripts.dcc_codec import alphabet_size
from tests.curves import four_behavior_trial, from_positions, helix, random_walk, staircase, straight_line
IDENTITY = Frame(0, np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]), np.array([0.0, 0.0, 1.0]))
class DirectionSetTests(SimpleTestCase):
    def test_alphabet_sizes(self):
        self.assertEqual([alphabet_size(p) for p in (1, 2, 3)], [7, 19, 91])
    def test_fourth_base_alphabet(self):
        # a regra de pares não paralelos com deduplicação produz 2850 direções na base 4
        self.assertEqual(alphabet_size(4), 2851)
    def test_null_symbol_is_last_id(self):
        for p in (1, 2, 3):
            dirset = build_direction_set(p)
            self.assertEqual(dirset.null_symbol, dirset.alphabet_size - 1)
    def test_vectors_unit_and_distinct(self):
        vectors = build_direction_set(3).vectors
        np.testing.assert_allclose(np.linalg.norm(vectors, axis=1), 1.0, atol=1e-9)
        distances = np.linalg.norm(vectors[:, None, :] - vectors[None, :, :], axis=2)
        np.fill_diagonal(distances, np.inf)
        self.assertGreater(distances.min(), 1e-9)
    def test_base_ordering(self):
        vectors = build_direction_set(2).vectors
        np.testing.assert_allclose(vectors[:6], build_direction_set(1).vectors)
        np.testing.assert_allclose(vectors[6], (1 / math.sqrt(2), 1 / math.sqrt(2), 0.0))
    def test_deterministic(self):
        build_direction_set.cache_clear()
        first = build_direction_set(3).vectors.copy()
        build_direction_set.cache_clear()
        np.testing.assert_array_equal(first, build_direction_set(3).vectors)
    def test_invalid_base(self):
        for p in (0, 5):
            with self.assertRaises(InvalidBase):
                build_direction_set(p)
class EncodeStepTests(SimpleTestCase):
    def test_forward(self):
        self.assertEqual(encode_step(IDENTITY.tangent, IDENTITY, build_direction_set(1)), 0)
    def test_negative_normal(self):
        self.assertEqual(encode_step(np.array([0.0, -1.0, 0.0]), IDENTITY, build_direction_set(1)), 3)
    def test_null_motion(self):
        dirset = build_direction_set(2)
        self.assertEqual(encode_step(IDENTITY.tangent, IDENTITY, dirset, null_motion=True), 18)
    def test_forty_degrees_picks_diagonal(self):
        angle = math.radians(40)
        tangent = np.array([math.cos(angle), math.sin(angle), 0.0])
        dirset = build_direction_set(2)
        symbol = encode_step(tangent, IDENTITY, dirset)
        np.testing.assert_allclose(dirset.vectors[symbol], (1 / math.sqrt(2), 1 / math.sqrt(2), 0.0))
    def test_argmax_is_maximal(self):
        dirset = build_direction_set(2)
        rng = np.random.default_rng(3)
        for _ in range(50):
            tangent = rng.normal(size=3)
            tangent /= np.linalg.norm(tangent)
            scores = dirset.vectors @ tangent
            self.assertEqual(scores[encode_step(tangent, IDENTITY, dirset)], scores.max())
    def test_tie_goes_to_lowest_id(self):
        tangent = np.array([1.0, 1.0, 0.0]) / math.sqrt(2)
        self.assertEqual(encode_step(tangent, IDENTITY, build_direction_set(1)), 0)
class EncodeTrajectoryTests(SimpleTestCase):
    def test_straight_line_is_all_forward(self):
        grammar = encode_curve(straight_line(10), FrameMode.FF, 2)
        self.assertEqual(grammar.symbols, (0,) * 8)
    def test_staircase_alternates(self):
        axis = InitConvention.LEAST_ALIGNED_AXIS
        grammar = encode_curve(staircase(6), FrameMode.FF, 1, convention=axis)
        self.assertEqual(grammar.symbols, (2, 4, 4, 4))
        right_angle = encode_curve(from_positions([(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 2, 0)]), FrameMode.FF, 1, convention=axis)
        self.assertEqual(right_angle.symbols, (2, 0))
    def test_null_motion_emits_null_symbol(self):
        grammar = encode_curve(from_positions([(0, 0, 0), (1, 0, 0), (1, 0, 0), (2, 0, 0)]), FrameMode.FF, 1)
        self.assertEqual(grammar.symbols, (6, 0))
    def test_rigid_motion_invariance(self):
        rng = np.random.default_rng(21)
        for index in range(100):
            traj = random_walk(50, seed=index)
            rotation = Rotation.random(random_state=index).as_matrix()
            moved = traj.transformed(rotation=rotation, translation=rng.normal(size=3) * 10, scale=float(rng.uniform(0.5, 4.0)))
            for mode in (FrameMode.FF, FrameMode.AFF):
                self.assertEqual(encode_curve(traj, mode, 2).symbols, encode_curve(moved, mode, 2).symbols)
    def test_world_axis_initial_frame_depends_on_orientation(self):
        traj = from_positions([(0, 0, 0), (1, 0, 0), (2, 0, 0), (2, 1, 0)])
        moved = traj.transformed(rotation=Rotation.from_euler('x', 90, degrees=True).as_matrix())
        axis = [encode_curve(t, FrameMode.FF, 1, convention=InitConvention.LEAST_ALIGNED_AXIS).symbols for t in (traj, moved)]
        self.assertEqual(axis, [(0, 2), (0, 4)])
        osculating = [encode_curve(t, FrameMode.FF, 1, convention=InitConvention.OSCULATING).symbols for t in (traj, moved)]
        self.assertEqual(osculating[0], osculating[1])
    def test_smooth_curve_is_constant_under_ff_but_not_aff(self):
        traj = helix(73)
        ff = encode_curve(traj, FrameMode.FF, 2)
        aff = encode_curve(traj, FrameMode.AFF, 2)
        self.assertEqual(set(ff.symbols), {0})
        self.assertTrue(any(symbol not in (0, 18) for symbol in aff.symbols))
    def test_empty_frames(self):
        with self.assertRaises(EmptyInput):
            encode_trajectory(FrameSequence((), FrameMode.FF, 1), build_direction_set(1))
    def test_aff_base_mismatch(self):
        frames = compute_aff(straight_line(5), base_p=2)
        with self.assertRaises(InvalidBase):
            encode_trajectory(frames, build_direction_set(1))
    def test_symbol_outside_alphabet(self):
        with self.assertRaises(InvariantViolation):
            ActionGrammar((0, 7), base_p=1)
        self.assertEqual(ActionGrammar((0, 18, 5), base_p=2).as_text(), '0,18,5')
class SegmentAndEncodeTests(SimpleTestCase):
    def test_one_grammar_per_behavior(self):
        traj = four_behavior_trial()
        grammars = segment_and_encode(traj, FrameMode.FF, 2, use_boundaries=True)
        task = segment_and_encode(traj, FrameMode.FF, 2, use_boundaries=False)
        self.assertEqual([g.behavior_label for g in grammars], ['approach', 'alignment', 'insertion', 'mating'])
        self.assertTrue(all(g.scope is Scope.BEHAVIOR for g in grammars))
        self.assertEqual(len(task), 1)
        self.assertGreaterEqual(sum(len(g) for g in grammars), len(task[0]) - 3)
    def test_missing_boundaries(self):
        with self.assertRaises(MissingBoundaries):
            segment_and_encode(straight_line(10), FrameMode.FF, 1, use_boundaries=True)
    def test_short_segment(self):
        traj = four_behavior_trial()
        tiny = traj.with_labels(behavior_boundaries=(BehaviorBoundary('approach', 0.0, float(traj.times[1])),))
        with self.assertRaises(MissingBoundaries):
            segment_and_encode(tiny, FrameMode.FF, 1, use_boundaries=True)
