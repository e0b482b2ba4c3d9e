#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace evmatch {

// Bad or inconsistent input data / configuration. CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure (divergence, non-positive score under a log, ...).
// CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed time interval in seconds.
struct Segment {
  double start = 0.0;
  double end = 0.0;

  double duration() const { return end - start; }
  bool is_point() const { return start == end; }
};

Segment make_segment(double start, double end);

// Ordered, pairwise-disjoint list of segments.
struct SegmentSet {
  std::vector<Segment> segments;

  bool empty() const { return segments.empty(); }
  std::size_t size() const { return segments.size(); }

  // Throws ValidationError unless sorted by start and pairwise disjoint.
  void validate() const;
};

// Inclusive pair of 0-based frame indices.
struct FrameSpan {
  long start = 0;
  long end = 0;

  long frames() const { return end - start + 1; }
};

enum class SquashMode { None, Softmax, Shifted };

const char* to_string(SquashMode mode);
SquashMode squash_mode_from_string(const std::string& name);

// Per-frame score sequence for one query. `squash` records which squashing
// transform produced the scores (None means raw cosine values in [-1, 1]).
struct ScoreTrack {
  std::vector<double> scores;
  double fps = 1.0;
  SquashMode squash = SquashMode::None;

  std::size_t size() const { return scores.size(); }
};

// Dense row-major matrix of doubles. Small helper, not a linear algebra
// library; the numeric modules only need rows, dots and matvecs.
struct Matrix {
  std::vector<double> data;
  std::size_t rows = 0;
  std::size_t cols = 0;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : data(r * c, fill), rows(r), cols(c) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::span<double> row(std::size_t r) {
    return std::span<double>(data).subspan(r * cols, cols);
  }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data).subspan(r * cols, cols);
  }
};

}  // namespace evmatch
