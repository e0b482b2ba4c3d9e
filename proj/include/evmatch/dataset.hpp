#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evmatch/matcher.hpp"
#include "evmatch/types.hpp"

namespace evmatch::dataset {

// One JSONL record. Pipeline inputs carry exactly one of `scores` (inline
// per-frame similarities) or `features_ref` (path to an EMG-FEAT file,
// relative to the dataset file unless absolute).
struct DatasetRecord {
  std::string video_id;
  std::string query_id;
  double fps = 1.0;
  long num_frames = 0;
  std::vector<Segment> gt_segments;
  std::optional<std::vector<double>> scores;
  std::optional<std::string> features_ref;
  std::optional<std::vector<int>> saliency;

  void validate(std::size_t line_no = 0) const;
};

// Parses a JSON Lines dataset. Malformed lines and invariant violations are
// reported with their 1-based line number.
std::vector<DatasetRecord> ingest(const std::string& path);

// One JSON line, keys in stable (alphabetical) order, no trailing newline.
std::string serialize(const DatasetRecord& rec);

void write_dataset(const std::string& path,
                   const std::vector<DatasetRecord>& records);

// EMG-FEAT v1: ASCII header "EMG-FEAT v1 <L> <T> <D>\n" followed by exactly
// L*T*D little-endian IEEE-754 floats, layer-major, then frame, then dim.
matcher::FeatureStack read_features(const std::string& path);
void write_features(const std::string& path,
                    const matcher::FeatureStack& stack);

}  // namespace evmatch::dataset
