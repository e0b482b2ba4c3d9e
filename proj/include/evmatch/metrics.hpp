#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evmatch/segmenter.hpp"
#include "evmatch/types.hpp"

namespace evmatch::metrics {

// One evaluated query: predictions (optionally with confidences, one per
// segment), ground truth, and the optional highlight-detection side channel.
struct EvalRecord {
  std::string query_id;
  SegmentSet predictions;
  std::vector<double> confidences;  // empty means all 1.0
  SegmentSet ground_truth;
  std::vector<segmenter::Highlight> highlights;  // optional
  std::vector<int> saliency;                     // optional, per frame/clip
  double fps = 1.0;

  void validate() const;
};

// |a n b| / |a u b| on the real line. Two identical points give 1; a point
// against anything else gives 0.
double temporal_iou(const Segment& a, const Segment& b);

// Index of the highest-confidence prediction (ties: earlier start, then
// longer duration); nullopt when the record has no predictions.
std::optional<std::size_t> best_prediction_index(const EvalRecord& rec);

// IoU of the best prediction against its best-overlapping ground truth;
// 0 when the record has no predictions.
double best_iou(const EvalRecord& rec);

// Fraction of records whose best prediction reaches the IoU threshold.
// Rejects records with more than one ground-truth segment.
double recall_at(const std::vector<EvalRecord>& records, double iou_threshold);

// Mean best-prediction IoU; empty predictions contribute 0.
double mean_iou(const std::vector<EvalRecord>& records);

// Mean over records of the per-record F1 under greedy one-to-one matching:
// candidate pairs sorted by IoU descending, a pair matches when IoU >=
// iou_threshold and neither side is taken.
double segment_f1(const std::vector<EvalRecord>& records,
                  double iou_threshold = 0.5);

std::vector<double> default_map_thresholds();  // 0.5, 0.55, ..., 0.95

// Detection AP at one IoU threshold: predictions pooled across records,
// ranked by confidence (ties: query id, then segment order), greedily
// matched within their record; area under the interpolated PR curve.
double average_precision(const std::vector<EvalRecord>& records,
                         double iou_threshold);

double map_over_thresholds(
    const std::vector<EvalRecord>& records,
    const std::vector<double>& thresholds = default_map_thresholds());

// Fraction of records whose top-scored highlight lands on a clip with
// ground-truth saliency >= saliency_threshold. Requires saliency labels.
double hit_at_1(const std::vector<EvalRecord>& records, int saliency_threshold);

struct EvalOptions {
  double f1_iou_threshold = 0.5;
  std::vector<double> map_thresholds = default_map_thresholds();
  int saliency_threshold = 1;
};

struct EvalReport {
  std::size_t records = 0;
  std::size_t predictions = 0;
  std::size_t ground_truths = 0;
  std::optional<double> r_at_03, r_at_05, r_at_07;  // single-GT datasets only
  double miou = 0.0;
  double f1 = 0.0;
  std::optional<double> map;       // needs confidences
  std::optional<double> hit_at_1;  // needs saliency labels on every record
  std::vector<double> per_record_iou;
};

EvalReport evaluate(const std::vector<EvalRecord>& records,
                    const EvalOptions& opts = {});

// Machine-readable key-value document; stable field order, 17 significant
// digits, byte-identical across runs for identical inputs.
std::string render_kv(const EvalReport& report);

// Human-readable aligned table.
std::string render_table(const EvalReport& report);

}  // namespace evmatch::metrics
