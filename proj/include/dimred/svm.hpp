#ifndef DIMRED_SVM_HPP
#define DIMRED_SVM_HPP

#include <cstddef>
#include <vector>

#include "dimred/types.hpp"

namespace dimred {

/// Soft-margin RBF SVM trained by sequential minimal optimization.
/// Internal labels are +-1; the 0/1 mapping lives in the classifier layer.
struct SvmModel {
  FeatureMatrix support_vectors;
  std::vector<double> alphas;   // duals of the support vectors, in (0, C]
  std::vector<int> labels_pm;   // +-1 per support vector
  double bias = 0.0;
  double gamma = 1.0;
  double c = 1.0;

  double decision_value(const double* row) const;
  /// sign of the decision value; sign(0) -> +1.
  int predict_pm(const double* row) const;
};

double rbf_kernel(const double* a, const double* b, std::size_t d, double gamma);

/// Trains with SMO. `tol` is the KKT tolerance the returned model honors;
/// the solver iterates against tol/4 so the final bias recomputation (mean
/// over free support vectors) cannot push residuals past `tol`.
SvmModel svm_train(const FeatureMatrix& x, const std::vector<int>& y_pm, double c,
                   double gamma, double tol = 1e-3, int max_passes = 1000);

std::vector<int> svm_predict(const SvmModel& model, const FeatureMatrix& x);

/// Largest KKT violation of the model on its training set:
///   alpha=0  requires y f >= 1,  alpha=C requires y f <= 1,
///   0<alpha<C requires y f == 1.
double svm_kkt_residual(const SvmModel& model, const FeatureMatrix& x,
                        const std::vector<int>& y_pm);

/// Dual objective sum(alpha) - 1/2 sum alpha_i alpha_j y_i y_j K_ij of the
/// model's support set against the given training data.
double svm_dual_objective(const SvmModel& model);

/// k-nearest-neighbour vote with Euclidean distance. Vote ties go to the
/// label of the nearest neighbour among the tied classes; distance ties
/// prefer the smaller training index.
std::vector<int> knn_predict(const FeatureMatrix& train_x, const LabelVector& train_y,
                             const FeatureMatrix& test_x, std::size_t k);

}  // namespace dimred

#endif  // DIMRED_SVM_HPP
