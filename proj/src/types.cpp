#include "dimred/types.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dimred {

FeatureMatrix FeatureMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) fail(ErrorCode::invalid, "matrix needs at least one row");
  FeatureMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.n_features_)
      fail(ErrorCode::invalid, "ragged rows: row " + std::to_string(i) + " has " +
                                   std::to_string(rows[i].size()) + " values, expected " +
                                   std::to_string(m.n_features_));
    std::copy(rows[i].begin(), rows[i].end(), m.row(i));
  }
  return m;
}

void FeatureMatrix::require_finite(const std::string& context) const {
  for (std::size_t i = 0; i < n_samples_; ++i)
    for (std::size_t j = 0; j < n_features_; ++j)
      if (!std::isfinite(at(i, j)))
        fail(ErrorCode::numeric, context + ": non-finite value at row " + std::to_string(i) +
                                     ", column " + std::to_string(j));
}

FeatureMatrix FeatureMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  FeatureMatrix out(idx.size(), n_features_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= n_samples_) fail(ErrorCode::invalid, "row index out of range");
    std::copy(row(idx[i]), row(idx[i]) + n_features_, out.row(i));
  }
  return out;
}

FeatureMatrix FeatureMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  FeatureMatrix out(n_samples_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    if (idx[j] >= n_features_) fail(ErrorCode::invalid, "column index out of range");
  for (std::size_t i = 0; i < n_samples_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, j) = at(i, idx[j]);
  return out;
}

FeatureMatrix FeatureMatrix::single_row(std::size_t i) const {
  if (i >= n_samples_) fail(ErrorCode::invalid, "row index out of range");
  FeatureMatrix out(1, n_features_);
  std::copy(row(i), row(i) + n_features_, out.row(0));
  return out;
}

LabelVector LabelVector::from_labels(std::vector<int> v) {
  if (v.empty()) fail(ErrorCode::invalid, "label vector is empty");
  int max_label = -1;
  for (int y : v) {
    if (y < 0) fail(ErrorCode::invalid, "negative class label " + std::to_string(y));
    max_label = std::max(max_label, y);
  }
  LabelVector out;
  out.labels = std::move(v);
  out.n_classes = max_label + 1;
  std::vector<bool> seen(static_cast<std::size_t>(out.n_classes), false);
  for (int y : out.labels) seen[static_cast<std::size_t>(y)] = true;
  for (int c = 0; c < out.n_classes; ++c)
    if (!seen[static_cast<std::size_t>(c)])
      fail(ErrorCode::invalid, "class " + std::to_string(c) + " has no samples");
  return out;
}

LabelVector LabelVector::select(const std::vector<std::size_t>& idx) const {
  LabelVector out;
  out.n_classes = n_classes;
  out.labels.reserve(idx.size());
  for (std::size_t i : idx) {
    if (i >= labels.size()) fail(ErrorCode::invalid, "label index out of range");
    out.labels.push_back(labels[i]);
  }
  return out;
}

std::vector<std::size_t> LabelVector::class_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(n_classes), 0);
  for (int y : labels) counts[static_cast<std::size_t>(y)]++;
  return counts;
}

Dataset Dataset::create(FeatureMatrix features, LabelVector labels,
                        std::vector<std::string> feature_names) {
  if (features.n_samples() != labels.size())
    fail(ErrorCode::invalid, "feature rows (" + std::to_string(features.n_samples()) +
                                 ") do not match label count (" + std::to_string(labels.size()) +
                                 ")");
  if (features.n_samples() < 2) fail(ErrorCode::invalid, "dataset needs at least 2 samples");
  if (features.n_features() < 1) fail(ErrorCode::invalid, "dataset needs at least 1 feature");
  if (feature_names.size() != features.n_features())
    fail(ErrorCode::invalid, "feature name count does not match feature count");
  std::set<std::string> unique(feature_names.begin(), feature_names.end());
  if (unique.size() != feature_names.size())
    fail(ErrorCode::invalid, "duplicate feature names");
  features.require_finite("dataset");
  Dataset d;
  d.features = std::move(features);
  d.labels = std::move(labels);
  d.feature_names = std::move(feature_names);
  return d;
}

Dataset Dataset::select_rows(const std::vector<std::size_t>& idx) const {
  Dataset d;
  d.features = features.select_rows(idx);
  d.labels = labels.select(idx);
  d.feature_names = feature_names;
  return d;
}

Dataset Dataset::with_features(FeatureMatrix f, std::vector<std::string> names) const {
  if (f.n_samples() != labels.size())
    fail(ErrorCode::invalid, "replacement features must keep the sample count");
  Dataset d;
  d.features = std::move(f);
  d.labels = labels;
  d.feature_names = std::move(names);
  return d;
}

}  // namespace dimred
