#pragma once

#include <string>
#include <vector>

#include "evmatch/types.hpp"

namespace evmatch::sgfilter {

// Symmetric smoothing kernel obtained from a local least-squares polynomial
// fit. The window spans 2*half_window+1 samples; coefficients sum to 1 and
// satisfy c[-i] == c[i].
struct SGKernel {
  int half_window = 0;
  int poly_order = 0;
  std::vector<double> coefficients;  // size 2*half_window + 1

  double at_offset(int i) const { return coefficients[half_window + i]; }
};

// Orders above this make the normal equations ill-conditioned for the window
// sizes this library targets.
inline constexpr int kMaxPolyOrder = 6;

enum class EdgeMode { Mirror, Replicate, Shrink };

const char* to_string(EdgeMode mode);
EdgeMode edge_mode_from_string(const std::string& name);

// Least-squares fit of a degree-`poly_order` polynomial over the window
// i = -half_window..half_window; returns the smoothing weights evaluated at
// the window center. half_window == 0 with poly_order == 0 yields the
// identity kernel [1]. Requires poly_order <= 2*half_window and
// poly_order <= kMaxPolyOrder.
SGKernel derive_kernel(int half_window, int poly_order);

// Applies the kernel as a sliding dot product. Output length equals input
// length. Edge samples (within half_window of either end) are handled per
// `edge_mode`; inputs shorter than the window fall back to Shrink behavior
// regardless of the requested mode.
std::vector<double> smooth(const std::vector<double>& values,
                           const SGKernel& kernel, EdgeMode edge_mode);

// Same, preserving the track's fps and squash flag.
ScoreTrack smooth(const ScoreTrack& track, const SGKernel& kernel,
                  EdgeMode edge_mode);

}  // namespace evmatch::sgfilter
