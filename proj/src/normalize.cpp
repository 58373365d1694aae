#include "dimred/normalize.hpp"

#include <algorithm>

namespace dimred {

NormalizationParams fit_normalization(const FeatureMatrix& train) {
  if (train.empty()) fail(ErrorCode::invalid, "fit_normalization: empty matrix");
  train.require_finite("fit_normalization");
  NormalizationParams p;
  p.col_min.assign(train.n_features(), 0.0);
  p.col_max.assign(train.n_features(), 0.0);
  for (std::size_t j = 0; j < train.n_features(); ++j) {
    double lo = train.at(0, j), hi = train.at(0, j);
    for (std::size_t i = 1; i < train.n_samples(); ++i) {
      lo = std::min(lo, train.at(i, j));
      hi = std::max(hi, train.at(i, j));
    }
    p.col_min[j] = lo;
    p.col_max[j] = hi;
  }
  return p;
}

FeatureMatrix apply_normalization(const FeatureMatrix& x, const NormalizationParams& p) {
  if (x.n_features() != p.col_min.size())
    fail(ErrorCode::invalid, "apply_normalization: expected " +
                                 std::to_string(p.col_min.size()) + " columns, got " +
                                 std::to_string(x.n_features()));
  FeatureMatrix out(x.n_samples(), x.n_features());
  for (std::size_t j = 0; j < x.n_features(); ++j) {
    double lo = p.col_min[j];
    double range = p.col_max[j] - lo;
    for (std::size_t i = 0; i < x.n_samples(); ++i) {
      double v = range > 0.0 ? (x.at(i, j) - lo) / range : 0.0;
      out.at(i, j) = std::clamp(v, 0.0, 1.0);
    }
  }
  return out;
}

}  // namespace dimred
