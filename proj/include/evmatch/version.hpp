#pragma once

namespace evmatch {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kFeatureFormat = "EMG-FEAT v1";
inline constexpr const char* kParamsFormat = "evmatch-params-v1";
inline constexpr const char* kReportFormat = "evmatch-report-v1";

}  // namespace evmatch
