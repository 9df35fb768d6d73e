from .constants import AlignMethod, FrameMode, InitConvention, Scope
from .trajectory import BehaviorBoundary, Corpus, Point3, Trajectory
from .frame_engine import Frame, FrameSequence, compute_aff, compute_ff, compute_frames, initial_frame
from .dcc_codec import ActionGrammar, DirectionSet, build_direction_set, encode_curve, encode_step, encode_trajectory, segment_and_encode
from .alignment import AlignedSet, align_cut, align_resample, resample_curve
__all__ = [
    'AlignMethod', 'FrameMode', 'InitConvention', 'Scope',
    'BehaviorBoundary', 'Corpus', 'Point3', 'Trajectory',
    'Frame', 'FrameSequence', 'compute_aff', 'compute_ff', 'compute_frames', 'initial_frame',
    'ActionGrammar', 'DirectionSet', 'build_direction_set', 'encode_curve', 'encode_step', 'encode_trajectory', 'segment_and_encode',
    'AlignedSet', 'align_cut', 'align_resample', 'resample_curve',
]
from .samples import LabeledSample, build_samples
__all__ += ['LabeledSample', 'build_samples']
