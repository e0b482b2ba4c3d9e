#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "evmatch/labels.hpp"
#include "evmatch/matcher.hpp"
#include "evmatch/types.hpp"

namespace evmatch::trainer {

// Desk-scale synthetic feature generator. Every video plants an event span
// whose frames follow an "inside" direction; frames outside follow a
// different direction. The exact boundary frames additionally carry start /
// end signature components, and outside frames may carry look-alike
// distractor signatures. All sampling is driven by a single seeded stream,
// so a scenario is fully determined by its seed.
struct SyntheticScenario {
  std::size_t num_videos = 8;
  long layers = 2;
  long dim = 16;
  double fps = 1.0;

  // Event durations in frames. Videos cycle through the buckets; each video
  // draws its duration uniformly from its bucket. A single bucket gives a
  // plain uniform range.
  std::vector<std::pair<long, long>> duration_buckets = {{4, 12}};

  // Video length = duration + pad_base + pad_per_duration * duration,
  // split randomly before/after the event.
  long pad_base = 10;
  double pad_per_duration = 0.5;

  double inside_mean = 1.0;   // magnitude of the inside direction
  double outside_mean = 1.0;  // magnitude of the outside direction

  // Per-dimension Gaussian feature noise, independent per layer.
  double noise_scale = 0.05;

  // Within-event direction jitter: cos(angle to the inside direction) is
  // 1 - |N(0, angle_noise)| per frame per layer.
  double angle_noise = 0.0;

  // Fraction of inside frames whose alignment drops into
  // [weak_cos_lo, weak_cos_hi] (per layer), producing similarity dips.
  double weak_prob = 0.0;
  double weak_cos_lo = 0.3;
  double weak_cos_hi = 0.45;

  // Signature component added on the first/last event frames.
  double edge_strength = 0.0;

  // Per outside frame probability of a boundary look-alike; such frames mix
  // distractor_inside_mix of the inside direction with a fake signature of
  // strength distractor_edge_strength.
  double distractor_rate = 0.0;
  double distractor_inside_mix = 0.5;
  double distractor_edge_strength = 0.9;

  // Signature strength assumed by the boundary-matching prototypes.
  double proto_edge_strength = 0.9;

  std::uint64_t seed = 1;

  void validate() const;
};

struct ScenarioData {
  std::vector<matcher::FeatureStack> stacks;
  std::vector<FrameSpan> event_spans;        // frame space
  std::vector<SegmentSet> ground_truth;      // seconds
  std::vector<std::string> video_ids;
  std::vector<std::string> query_ids;

  // Planted directions (oracle knowledge for analytic matching).
  std::vector<double> inside_direction;      // scaled by inside_mean
  std::vector<double> outside_direction;
  std::vector<double> start_prototype;       // boundary-matching embeddings
  std::vector<double> end_prototype;
};

ScenarioData generate_scenario(const SyntheticScenario& scenario);

// The fixed noisy suite used by the directional robustness checks: 200
// videos, event durations spanning five length buckets, weak-frame dips and
// boundary-distractor look-alikes.
SyntheticScenario benchmark_scenario(std::uint64_t seed = 7);

struct TrainConfig {
  double learning_rate = 0.05;
  std::size_t epochs = 100;
  SquashMode squash = SquashMode::Softmax;
  double temperature = matcher::kDefaultTemperature;
  double alpha = 2.0;
  int halo = labels::kDefaultHalo;
  matcher::Aggregation aggregation = matcher::Aggregation::Average;
  matcher::Activation activation = matcher::Activation::Tanh;
  std::uint64_t seed = 1;

  void validate() const;
};

// Trainable state: the two projectors plus one free event embedding per
// query.
struct ModelParams {
  matcher::Projector proj_event;
  matcher::Projector proj_frames;
  std::vector<std::vector<double>> event_embeddings;
};

struct ModelGrads {
  Matrix w1e, w2e, w1v, w2v;
  std::vector<double> b1e, b2e, b1v, b2v;
  std::vector<std::vector<double>> event_embeddings;

  static ModelGrads zeros_like(const ModelParams& params);
};

// One training example: pre-aggregated frame features, frame-space labels
// and the index of the event embedding it trains.
struct TrainExample {
  Matrix features;             // frames x dim
  std::vector<double> labels;  // length frames
  std::size_t embedding_index = 0;
};

// Mean-log matching loss over one squashed track:
// loss = -(1/T) * sum_t y[t] * log(s[t]). Scores must be positive.
double matching_loss(const ScoreTrack& squashed, const labels::LabelVector& y);
double matching_loss(const std::vector<double>& scores,
                     const std::vector<double>& y);

// Loss summed over the batch. When `grads` is non-null it receives the
// analytic gradient of that sum for every parameter block.
double loss_with_gradient(const ModelParams& params,
                          const std::vector<TrainExample>& batch,
                          SquashMode squash, double temperature,
                          ModelGrads* grads);

struct TrainResult {
  ModelParams params;
  // loss_curve[e] is the batch loss before the e-th update; the final entry
  // is the loss after the last update (length epochs + 1).
  std::vector<double> loss_curve;
  std::vector<std::string> query_ids;  // embedding order
};

// Full-batch gradient descent with a fixed learning rate; deterministic for
// a given seed. Aborts with NumericError if the loss turns non-finite.
TrainResult train(const ScenarioData& data, const TrainConfig& cfg);
TrainResult train(const SyntheticScenario& scenario, const TrainConfig& cfg);

// Builds the train examples (aggregated features + frame-space labels) a
// scenario induces.
std::vector<TrainExample> make_examples(const ScenarioData& data,
                                        const TrainConfig& cfg);

// Timestamp-matching baseline: start = argmax cosine with the start
// embedding, end = argmax with the end embedding, swapped if reversed, then
// converted to seconds.
Segment boundary_baseline(const std::vector<double>& start_emb,
                          const std::vector<double>& end_emb,
                          const Matrix& frames, double fps);

}  // namespace evmatch::trainer
