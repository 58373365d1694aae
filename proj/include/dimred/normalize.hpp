#ifndef DIMRED_NORMALIZE_HPP
#define DIMRED_NORMALIZE_HPP

#include <vector>

#include "dimred/types.hpp"

namespace dimred {

/// Per-column [min, max] of the training matrix.
struct NormalizationParams {
  std::vector<double> col_min;
  std::vector<double> col_max;
};

NormalizationParams fit_normalization(const FeatureMatrix& train);

/// Maps each entry to (v - min) / (max - min), clipped to [0, 1]. Constant
/// columns (max == min) map to 0.
FeatureMatrix apply_normalization(const FeatureMatrix& x, const NormalizationParams& p);

}  // namespace dimred

#endif  // DIMRED_NORMALIZE_HPP
