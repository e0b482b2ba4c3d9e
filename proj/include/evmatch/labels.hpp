#pragma once

#include <vector>

#include "evmatch/types.hpp"

namespace evmatch::labels {

// Smoothed per-frame supervision target. Values are 1 inside the annotated
// span, decay geometrically (alpha^-d) within `halo` frames of it, and are 0
// beyond.
struct LabelVector {
  std::vector<double> values;
  double fps = 1.0;
  double alpha = 2.0;
};

inline constexpr int kDefaultHalo = 3;

// Half-open frame window convention used for segment outputs: frame f covers
// [f/fps, (f+1)/fps). start index = floor(start*fps), end index =
// ceil(end*fps)-1, both clamped to [0, num_frames-1]. A degenerate segment
// (start == end) maps to the single frame round(start*fps).
FrameSpan seconds_to_frames(const Segment& seg, double fps, long num_frames);

// Inverse of the half-open convention: (start_idx/fps, (end_idx+1)/fps).
Segment frames_to_seconds(long start_idx, long end_idx, double fps);

// Conversion used for supervision targets. The start bound is inclusive of
// the frame that ends at it (start index = ceil(start*fps)-1, floored at 0),
// so "5 to 10 seconds" at 1 fps covers frames 4..9. Throws ValidationError
// for segments entirely outside [0, num_frames-1].
FrameSpan label_frame_span(const Segment& seg, double fps, long num_frames);

// Frame-space core: 1 on each span, alpha^-d for frames within `halo` frames
// of a span, 0 elsewhere; spans combine by element-wise max. alpha == 1
// degenerates to a hard 0/1 halo.
std::vector<double> smoothed_labels(const std::vector<FrameSpan>& spans,
                                    long num_frames, double alpha,
                                    int halo = kDefaultHalo);

// Converts ground-truth segments (seconds) via label_frame_span, then builds
// the smoothed target. Rejects alpha < 1, empty span lists and segments
// entirely outside the video.
LabelVector build_labels(const SegmentSet& gt, long num_frames, double fps,
                         double alpha, int halo = kDefaultHalo);

}  // namespace evmatch::labels
