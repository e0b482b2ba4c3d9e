#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "evmatch/types.hpp"

namespace evmatch::matcher {

// Per-video feature tensor: `layers` feature maps of `frames` x `dim` each,
// stored layer-major, then frame, then dim. Payload stays float to match the
// on-disk format bit for bit; arithmetic downstream is double.
struct FeatureStack {
  std::vector<float> data;
  long layers = 0;
  long frames = 0;
  long dim = 0;
  double fps = 1.0;

  float at(long l, long t, long d) const {
    return data[static_cast<std::size_t>((l * frames + t) * dim + d)];
  }
  float& at(long l, long t, long d) {
    return data[static_cast<std::size_t>((l * frames + t) * dim + d)];
  }

  // Throws ValidationError unless layers/frames/dim >= 1, the payload size
  // matches and every entry is finite.
  void validate() const;
};

struct EventEmbedding {
  std::vector<double> v;
};

enum class Aggregation { Average, Max, Median };

const char* to_string(Aggregation strategy);
Aggregation aggregation_from_string(const std::string& name);

// Collapses the layer axis element-wise; returns a frames x dim matrix.
// Median of an even layer count is the mean of the two central values.
Matrix aggregate_layers(const FeatureStack& stack, Aggregation strategy);

enum class Activation { Identity, Tanh };

const char* to_string(Activation a);
Activation activation_from_string(const std::string& name);

// Two-layer map D -> D with an elementwise nonlinearity between layers:
// y = w2 * act(w1 * x + b1) + b2.
struct Projector {
  Matrix w1, w2;              // dim x dim
  std::vector<double> b1, b2;
  Activation activation = Activation::Tanh;

  std::size_t dim() const { return b1.size(); }

  static Projector identity(std::size_t dim,
                            Activation act = Activation::Identity);

  std::vector<double> apply(std::span<const double> x) const;

  // Throws ValidationError on shape mismatch or non-finite parameters.
  void validate() const;
};

// Row-wise application of the projector; output shape equals input shape.
Matrix project(const Matrix& features, const Projector& proj);

// score[t] = <event, frames[t]> / (||event|| * ||frames[t]||), clamped to
// [-1, 1]. Zero-norm frames score 0; a zero-norm event is rejected.
ScoreTrack cosine_track(const EventEmbedding& event, const Matrix& frames,
                        double fps);

inline constexpr double kDefaultTemperature = 0.1;

// None: identity. Softmax: exp(s/tau) normalized over the track. Shifted:
// (s+1)/2 with a machine-epsilon floor so downstream logs stay finite.
ScoreTrack squash_track(const ScoreTrack& track, SquashMode mode,
                        double temperature = kDefaultTemperature);

}  // namespace evmatch::matcher
