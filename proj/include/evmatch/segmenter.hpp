#pragma once

#include <string>
#include <vector>

#include "evmatch/types.hpp"

namespace evmatch::segmenter {

enum class Fallback { Peak, None };

const char* to_string(Fallback f);
Fallback fallback_from_string(const std::string& name);

struct ExtractionConfig {
  double sigma = 1e-5;        // scores strictly above this form segments
  double min_duration = 0.0;  // seconds; shorter segments are dropped
  Fallback fallback = Fallback::Peak;
  long merge_gap = 0;  // runs separated by <= this many frames are merged
};

// Maximal runs of frames with score > sigma, expressed as inclusive frame
// spans, after gap merging.
std::vector<FrameSpan> threshold_runs(const std::vector<double>& scores,
                                      double sigma, long merge_gap);

// Full extraction rule: threshold runs -> merge -> convert to seconds ->
// drop short segments -> peak fallback when configured and nothing remains.
SegmentSet extract(const ScoreTrack& track, const ExtractionConfig& cfg);

// Mean track score over the frames a segment covers.
double mean_score(const ScoreTrack& track, const Segment& seg);

// Segment with the greatest mean score; ties prefer the earlier start, then
// the longer duration. Throws ValidationError on an empty set.
Segment top_segment(const SegmentSet& set, const ScoreTrack& track);

struct Highlight {
  double timestamp = 0.0;  // seconds, frame centers: (frame + 0.5) / fps
  double score = 0.0;
};

// Local maxima sorted by score descending (ties: earlier timestamp),
// truncated to max_count.
std::vector<Highlight> highlight_peaks(const ScoreTrack& track,
                                       std::size_t max_count);

}  // namespace evmatch::segmenter
