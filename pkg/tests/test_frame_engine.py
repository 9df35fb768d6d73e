"""
Testes dos frames de Frenet discretos (FF) e acumulados (AFF)
"""
import math
import numpy as np
from django.test import SimpleTestCase
from scipy.spatial.transform import Rotation
from core.exceptions import DegenerateInput, InvalidBase
from grammar.grammar_scripts import FrameMode, InitConvention, compute_aff, compute_ff, compute_frames, initial_frame
from grammar.grammar_scripts.frame_engine import aff_threshold
from tests.curves import cube_walk, from_positions, helix, random_walk, straight_line
AXIS = InitConvention.LEAST_ALIGNED_AXIS
class InitialFrameTests(SimpleTestCase):
    def test_axis_aligned_chord(self):
        frame = initial_frame(from_positions([(0, 0, 0), (1, 0, 0)]), AXIS)
        np.testing.assert_allclose(frame.tangent, (1, 0, 0))
        np.testing.assert_allclose(frame.normal, (0, 1, 0))
        np.testing.assert_allclose(frame.binormal, (0, 0, 1))
    def test_tangent_is_normalized_chord(self):
        frame = initial_frame(from_positions([(0, 0, 0), (0, 2, 0)]), AXIS)
        np.testing.assert_allclose(frame.tangent, (0, 1, 0))
    def test_diagonal_chord_is_orthonormal(self):
        frame = initial_frame(from_positions([(0, 0, 0), (1, 1, 0)]), AXIS)
        np.testing.assert_allclose(frame.tangent, (1 / math.sqrt(2), 1 / math.sqrt(2), 0))
        frame.check()
    def test_osculating_uses_first_turn(self):
        frame = initial_frame(from_positions([(0, 0, 0), (1, 0, 0), (1, 1, 0)]), InitConvention.OSCULATING)
        np.testing.assert_allclose(frame.normal, (0, 0, 1))
        np.testing.assert_allclose(frame.binormal, (0, -1, 0))
    def test_osculating_falls_back_to_axis_on_straight_line(self):
        frame = initial_frame(straight_line(4), InitConvention.OSCULATING)
        np.testing.assert_allclose(frame.normal, (0, 1, 0))
    def test_repeated_start_uses_next_distinct_point(self):
        frame = initial_frame(from_positions([(0, 0, 0), (0, 0, 0), (0, 0, 3)]), AXIS)
        np.testing.assert_allclose(frame.tangent, (0, 0, 1))
    def test_no_distinct_point(self):
        with self.assertRaises(DegenerateInput):
            initial_frame(from_positions([(1, 1, 1)] * 3))
class FrenetFrameTests(SimpleTestCase):
    def test_collinear_points_carry_normal(self):
        frames = compute_ff(from_positions([(0, 0, 0), (1, 0, 0), (2, 0, 0)]), convention=AXIS)
        self.assertEqual(len(frames), 2)
        for frame in frames.frames:
            np.testing.assert_allclose(frame.tangent, (1, 0, 0))
            np.testing.assert_allclose(frame.normal, (0, 1, 0))
    def test_right_angle_corner(self):
        frames = compute_ff(from_positions([(0, 0, 0), (1, 0, 0), (1, 1, 0)]), convention=AXIS)
        corner = frames.frames[1]
        np.testing.assert_allclose(corner.tangent, (0, 1, 0))
        np.testing.assert_allclose(corner.normal, (0, 0, 1))
        np.testing.assert_allclose(corner.binormal, (1, 0, 0))
    def test_one_frame_per_chord(self):
        traj = random_walk(20)
        frames = compute_ff(traj)
        self.assertEqual(len(frames), len(traj) - 1)
        self.assertEqual([f.anchor_index for f in frames.frames], list(range(len(traj) - 1)))
    def test_random_trajectories_are_orthonormal(self):
        for seed in range(1000):
            traj = random_walk(50, seed=seed)
            compute_ff(traj).check(1e-9)
            compute_aff(traj, base_p=2).check(1e-9)
    def test_null_motion_reemits_held_frame(self):
        frames = compute_ff(from_positions([(0, 0, 0), (1, 0, 0), (1, 0, 0), (2, 0, 0)]))
        self.assertEqual([f.null_motion for f in frames.frames], [False, True, False])
        np.testing.assert_allclose(frames.frames[1].matrix, frames.frames[0].matrix)
    def test_fewer_than_three_points(self):
        with self.assertRaises(DegenerateInput):
            compute_ff(from_positions([(0, 0, 0), (1, 0, 0)]))
    def test_rotation_maps_frames(self):
        traj = random_walk(25, seed=4)
        rotation = Rotation.random(random_state=11).as_matrix()
        original = compute_ff(traj)
        moved = compute_ff(traj.transformed(rotation=rotation, translation=(3.0, -1.0, 7.5)))
        for a, b in zip(original.frames, moved.frames):
            np.testing.assert_allclose(rotation @ a.tangent, b.tangent, atol=1e-9)
            np.testing.assert_allclose(rotation @ a.normal, b.normal, atol=1e-9)
            np.testing.assert_allclose(rotation @ a.binormal, b.binormal, atol=1e-9)
    def test_uniform_scale_leaves_frames_unchanged(self):
        traj = random_walk(25, seed=5)
        original = compute_ff(traj)
        scaled = compute_ff(traj.transformed(scale=3.5))
        for a, b in zip(original.frames, scaled.frames):
            np.testing.assert_allclose(a.matrix, b.matrix, atol=1e-9)
class AccumulatedFrameTests(SimpleTestCase):
    def test_thresholds(self):
        self.assertAlmostEqual(aff_threshold(1), math.pi / 4)
        self.assertAlmostEqual(aff_threshold(2), math.pi / 8)
        with self.assertRaises(InvalidBase):
            aff_threshold(5)
    def test_invalid_base(self):
        with self.assertRaises(InvalidBase):
            compute_frames(straight_line(5), FrameMode.AFF, 0)
        with self.assertRaises(InvalidBase):
            compute_frames(straight_line(5), FrameMode.FF, 7)
    def test_straight_line_never_realigns(self):
        for base_p in (1, 2, 3, 4):
            self.assertEqual(compute_aff(straight_line(10), base_p).realignment_events, ())
    def test_sharp_corners_match_ff(self):
        traj = cube_walk(12)
        aff = compute_aff(traj, base_p=1)
        ff = compute_ff(traj)
        self.assertEqual(aff.realignment_events, tuple(range(1, len(traj) - 1)))
        for a, f in zip(aff.frames, ff.frames):
            np.testing.assert_allclose(a.tangent, f.tangent)
    def test_gentle_helix_realigns_every_fifth_step(self):
        # passo de 5 graus contra alpha = 22.5 graus: o ângulo direto passa do limiar no 5o passo
        aff = compute_aff(helix(73), base_p=2)
        self.assertAlmostEqual(len(aff.realignment_events), 72 // 5, delta=1)
        self.assertEqual(aff.realignment_events[:3], (5, 10, 15))
    def test_held_tangent_within_threshold_between_events(self):
        traj = helix(73)
        aff = compute_aff(traj, base_p=2)
        chords = np.diff(traj.positions, axis=0)
        chords /= np.linalg.norm(chords, axis=1)[:, None]
        alpha = aff_threshold(2)
        for frame in aff.frames[1:]:
            angle = math.acos(min(1.0, float(frame.tangent @ chords[frame.anchor_index])))
            self.assertLessEqual(angle, alpha + 1e-12)
