#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "evmatch/matcher.hpp"
#include "evmatch/metrics.hpp"
#include "evmatch/sgfilter.hpp"
#include "evmatch/types.hpp"

namespace evmatch::analysis {

// Mutually exclusive, exhaustive classification of a (prediction, ground
// truth) pair. Containment is split by direction so both readings of the
// "completely contained" failure mode stay reportable.
enum class ErrorCategory {
  NoOverlap = 0,
  PredInsideGT = 1,
  GTInsidePred = 2,
  PartialOverlap = 3,
  Exact = 4,
};

inline constexpr std::size_t kNumErrorCategories = 5;

const char* to_string(ErrorCategory c);

// IoU == 0 -> NoOverlap; IoU within 1e-9 of 1 -> Exact; then containment by
// direction; anything else PartialOverlap. Requires non-degenerate segments.
ErrorCategory classify_error(const Segment& pred, const Segment& gt);

struct TaxonomyReport {
  std::array<std::size_t, kNumErrorCategories> counts{};
  // Mean IoU per category; NaN for empty categories. NoOverlap is exactly 0
  // whenever non-empty.
  std::array<double, kNumErrorCategories> miou{};
  std::size_t total = 0;
};

// Classifies each record's best prediction against its single ground truth.
// Every record must have at least one prediction and exactly one GT.
TaxonomyReport taxonomy_report(const std::vector<metrics::EvalRecord>& records);

std::string taxonomy_to_csv(const TaxonomyReport& report);

struct BucketRow {
  double low = 0.0;
  double high = 0.0;  // +inf for the last bucket
  std::size_t count = 0;
  double miou = 0.0;  // NaN when the bucket is empty
};

// Groups records by ground-truth event duration into half-open buckets
// [edges[i], edges[i+1]); the final bucket extends to +inf. Edges must be
// strictly increasing and cover every duration.
std::vector<BucketRow> length_bucketed_miou(
    const std::vector<metrics::EvalRecord>& records,
    const std::vector<double>& edges);

std::vector<double> default_bucket_edges();  // {0, 5, 10, 20, 40}

std::string buckets_to_csv(const std::vector<BucketRow>& rows);

struct SmoothingStrategy {
  enum class Kind { None, MovingAverage, Exponential, SavitzkyGolay };
  Kind kind = Kind::SavitzkyGolay;
  int window = 5;       // full width for MovingAverage / Exponential
  int half_window = 5;  // SavitzkyGolay
  int poly_order = 2;   // SavitzkyGolay

  std::string name() const;
  static SmoothingStrategy none();
  static SmoothingStrategy moving_average(int window);
  static SmoothingStrategy exponential(int window);
  static SmoothingStrategy savitzky_golay(int half_window, int poly_order);
  static SmoothingStrategy from_string(const std::string& name);
};

// Applies one smoothing strategy to a raw score vector. MovingAverage uses a
// centered uniform window (odd width); Exponential is the one-sided
// recursive average with factor 2/(window+1).
std::vector<double> apply_smoothing(const std::vector<double>& scores,
                                    const SmoothingStrategy& strategy,
                                    sgfilter::EdgeMode edge_mode);

ScoreTrack apply_smoothing(const ScoreTrack& track,
                           const SmoothingStrategy& strategy,
                           sgfilter::EdgeMode edge_mode);

// Runs smooth -> extract -> evaluate once per strategy over a shared set of
// tracks and ground truths. Results are keyed by strategy name.
std::vector<std::pair<std::string, metrics::EvalReport>> smoothing_ablation(
    const std::vector<ScoreTrack>& tracks, const std::vector<SegmentSet>& gts,
    const std::vector<SmoothingStrategy>& strategies,
    const segmenter::ExtractionConfig& extraction,
    sgfilter::EdgeMode edge_mode);

// Matching front end shared by the aggregation ablation: projectors, event
// embeddings (one entry means shared across videos) and the squash stage.
struct MatcherSetup {
  matcher::Projector proj_event;
  matcher::Projector proj_frames;
  std::vector<matcher::EventEmbedding> events;
  SquashMode squash = SquashMode::Shifted;
  double temperature = matcher::kDefaultTemperature;
};

// Full aggregate -> project -> cosine -> squash -> smooth -> extract ->
// evaluate sweep over layer-aggregation strategies.
std::vector<std::pair<std::string, metrics::EvalReport>> aggregation_ablation(
    const std::vector<matcher::FeatureStack>& stacks,
    const std::vector<SegmentSet>& gts, const MatcherSetup& setup,
    const std::vector<matcher::Aggregation>& strategies,
    const SmoothingStrategy& smoothing,
    const segmenter::ExtractionConfig& extraction,
    sgfilter::EdgeMode edge_mode);

}  // namespace evmatch::analysis
