#ifndef DIMRED_TYPES_HPP
#define DIMRED_TYPES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dimred {

enum class ErrorCode {
  io,
  parse,
  invalid,
  numeric,
  internal,
};

/// Library-wide exception. Carries a coarse code so the C boundary can map
/// failures to status values without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

/// Dense row-major N x d matrix of observations.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t n_samples, std::size_t n_features, double fill = 0.0)
      : values_(n_samples * n_features, fill),
        n_samples_(n_samples),
        n_features_(n_features) {}

  static FeatureMatrix from_rows(const std::vector<std::vector<double>>& rows);

  double& at(std::size_t i, std::size_t j) { return values_[i * n_features_ + j]; }
  double at(std::size_t i, std::size_t j) const { return values_[i * n_features_ + j]; }

  double* row(std::size_t i) { return values_.data() + i * n_features_; }
  const double* row(std::size_t i) const { return values_.data() + i * n_features_; }

  std::size_t n_samples() const { return n_samples_; }
  std::size_t n_features() const { return n_features_; }
  bool empty() const { return n_samples_ == 0 || n_features_ == 0; }

  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }

  /// Throws ErrorCode::numeric if any entry is NaN or infinite.
  void require_finite(const std::string& context) const;

  FeatureMatrix select_rows(const std::vector<std::size_t>& idx) const;
  FeatureMatrix select_columns(const std::vector<std::size_t>& idx) const;
  FeatureMatrix single_row(std::size_t i) const;

 private:
  std::vector<double> values_;
  std::size_t n_samples_ = 0;
  std::size_t n_features_ = 0;
};

/// Integer class labels in {0,...,C-1}; every class present at least once.
struct LabelVector {
  std::vector<int> labels;
  int n_classes = 0;

  /// Validates the {0,...,C-1} contract and derives C.
  static LabelVector from_labels(std::vector<int> v);

  std::size_t size() const { return labels.size(); }

  /// Row subset. Keeps the declared class count; a fold may lack a class.
  LabelVector select(const std::vector<std::size_t>& idx) const;

  std::vector<std::size_t> class_counts() const;
};

struct Dataset {
  FeatureMatrix features;
  LabelVector labels;
  std::vector<std::string> feature_names;

  static Dataset create(FeatureMatrix features, LabelVector labels,
                        std::vector<std::string> feature_names);

  std::size_t n_samples() const { return features.n_samples(); }
  std::size_t n_features() const { return features.n_features(); }

  Dataset select_rows(const std::vector<std::size_t>& idx) const;
  /// Same rows/labels, different feature block (e.g. after a projection).
  Dataset with_features(FeatureMatrix f, std::vector<std::string> names) const;
};

}  // namespace dimred

#endif  // DIMRED_TYPES_HPP
