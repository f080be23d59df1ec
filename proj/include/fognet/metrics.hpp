#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fognet {

// Average precision over descending unique score thresholds, ties entering
// together, no interpolation: AP = sum_n (R_n - R_{n-1}) * P_n.
// Returns nullopt when there are no positive labels (AP undefined).
// All metric arithmetic is double precision.
std::optional<double> average_precision(std::span<const double> scores,
                                        std::span<const uint8_t> labels);

enum class UndefinedPolicy {
  kCountAsZero,  // undefined class contributes 0 to the mean, flagged in the result
  kSkip,         // mean over defined classes only
};

struct MapResult {
  double value = 0.0;
  std::array<std::optional<double>, 3> per_class;
  bool any_undefined = false;
};

MapResult mean_average_precision(const std::array<std::optional<double>, 3>& per_class,
                                 UndefinedPolicy policy = UndefinedPolicy::kCountAsZero);

// (recall, precision) points, one per distinct threshold, prefixed with the
// conventional (0, 1) start; consistent with average_precision's grouping.
std::vector<std::pair<double, double>> pr_curve(std::span<const double> scores,
                                                std::span<const uint8_t> labels);

}  // namespace fognet
