#include "dimred/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dimred {

double rbf_kernel(const double* a, const double* b, std::size_t d, double gamma) {
  double sq = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    double diff = a[j] - b[j];
    sq += diff * diff;
  }
  return std::exp(-gamma * sq);
}

double SvmModel::decision_value(const double* row) const {
  double f = bias;
  const std::size_t d = support_vectors.n_features();
  for (std::size_t i = 0; i < alphas.size(); ++i)
    f += alphas[i] * labels_pm[i] * rbf_kernel(support_vectors.row(i), row, d, gamma);
  return f;
}

int SvmModel::predict_pm(const double* row) const {
  return decision_value(row) >= 0.0 ? 1 : -1;
}

namespace {

constexpr double kAlphaEps = 1e-12;

// Platt's SMO with deterministic working-set choices: the second-choice
// heuristic breaks |E1-E2| ties toward the smaller index, and the fallback
// scans start at (i2+1) mod n instead of a random position.
class SmoSolver {
 public:
  SmoSolver(const FeatureMatrix& x, const std::vector<int>& y, double c, double gamma,
            double tol, int max_passes)
      : x_(x), y_(y), c_(c), gamma_(gamma), tol_(tol), max_passes_(max_passes),
        n_(x.n_samples()) {
    kernel_.assign(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      kernel_[i * n_ + i] = 1.0;
      for (std::size_t j = i + 1; j < n_; ++j) {
        double k = rbf_kernel(x_.row(i), x_.row(j), x_.n_features(), gamma_);
        kernel_[i * n_ + j] = k;
        kernel_[j * n_ + i] = k;
      }
    }
    alpha_.assign(n_, 0.0);
    errors_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) errors_[i] = -y_[i];
  }

  void solve() {
    bool examine_all = true;
    int changed = 0;
    int passes = 0;
    while ((changed > 0 || examine_all) && passes < max_passes_) {
      changed = 0;
      for (std::size_t i = 0; i < n_; ++i)
        if (examine_all || non_bound(i)) changed += examine(i) ? 1 : 0;
      if (examine_all)
        examine_all = false;
      else if (changed == 0)
        examine_all = true;
      ++passes;
    }
    finalize_bias();
  }

  SvmModel build_model() const {
    SvmModel m;
    m.gamma = gamma_;
    m.c = c_;
    m.bias = b_;
    std::vector<std::size_t> sv;
    for (std::size_t i = 0; i < n_; ++i)
      if (alpha_[i] > kAlphaEps) sv.push_back(i);
    m.support_vectors = x_.select_rows(sv);
    m.alphas.reserve(sv.size());
    m.labels_pm.reserve(sv.size());
    for (std::size_t i : sv) {
      m.alphas.push_back(alpha_[i]);
      m.labels_pm.push_back(y_[i]);
    }
    return m;
  }

 private:
  double k(std::size_t i, std::size_t j) const { return kernel_[i * n_ + j]; }
  bool non_bound(std::size_t i) const {
    return alpha_[i] > kAlphaEps && alpha_[i] < c_ - kAlphaEps;
  }

  bool examine(std::size_t i2) {
    double r2 = errors_[i2] * y_[i2];
    bool violates = (r2 < -tol_ && alpha_[i2] < c_ - kAlphaEps) ||
                    (r2 > tol_ && alpha_[i2] > kAlphaEps);
    if (!violates) return false;

    std::size_t best = n_;
    double best_gap = -1.0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!non_bound(i)) continue;
      double gap = std::fabs(errors_[i] - errors_[i2]);
      if (gap > best_gap) {
        best_gap = gap;
        best = i;
      }
    }
    if (best < n_ && take_step(best, i2)) return true;

    for (std::size_t off = 1; off <= n_; ++off) {
      std::size_t i = (i2 + off) % n_;
      if (non_bound(i) && take_step(i, i2)) return true;
    }
    for (std::size_t off = 1; off <= n_; ++off) {
      std::size_t i = (i2 + off) % n_;
      if (take_step(i, i2)) return true;
    }
    return false;
  }

  bool take_step(std::size_t i1, std::size_t i2) {
    if (i1 == i2) return false;
    double a1 = alpha_[i1], a2 = alpha_[i2];
    int y1 = y_[i1], y2 = y_[i2];
    double e1 = errors_[i1], e2 = errors_[i2];
    double s = y1 * y2;

    double lo, hi;
    if (y1 != y2) {
      lo = std::max(0.0, a2 - a1);
      hi = std::min(c_, c_ + a2 - a1);
    } else {
      lo = std::max(0.0, a1 + a2 - c_);
      hi = std::min(c_, a1 + a2);
    }
    if (hi - lo < kAlphaEps) return false;

    double k11 = k(i1, i1), k12 = k(i1, i2), k22 = k(i2, i2);
    double eta = k11 + k22 - 2.0 * k12;
    double a2_new;
    if (eta > kAlphaEps) {
      a2_new = std::clamp(a2 + y2 * (e1 - e2) / eta, lo, hi);
    } else {
      // Flat direction: pick the better endpoint of the dual objective.
      double f1 = y1 * (e1 + b_) - a1 * k11 - s * a2 * k12;
      double f2 = y2 * (e2 + b_) - s * a1 * k12 - a2 * k22;
      double l1 = a1 + s * (a2 - lo);
      double h1 = a1 + s * (a2 - hi);
      double obj_lo = l1 * f1 + lo * f2 + 0.5 * l1 * l1 * k11 + 0.5 * lo * lo * k22 +
                      s * lo * l1 * k12;
      double obj_hi = h1 * f1 + hi * f2 + 0.5 * h1 * h1 * k11 + 0.5 * hi * hi * k22 +
                      s * hi * h1 * k12;
      if (obj_lo < obj_hi - kAlphaEps)
        a2_new = lo;
      else if (obj_lo > obj_hi + kAlphaEps)
        a2_new = hi;
      else
        return false;
    }
    if (std::fabs(a2_new - a2) < kAlphaEps * (a2_new + a2 + kAlphaEps)) return false;

    double a1_new = a1 + s * (a2 - a2_new);
    if (a1_new < 0.0) {
      a2_new += s * a1_new;
      a1_new = 0.0;
    } else if (a1_new > c_) {
      a2_new += s * (a1_new - c_);
      a1_new = c_;
    }

    double da1 = a1_new - a1, da2 = a2_new - a2;
    double b1 = b_ - e1 - y1 * da1 * k11 - y2 * da2 * k12;
    double b2 = b_ - e2 - y1 * da1 * k12 - y2 * da2 * k22;
    double b_new;
    if (a1_new > kAlphaEps && a1_new < c_ - kAlphaEps)
      b_new = b1;
    else if (a2_new > kAlphaEps && a2_new < c_ - kAlphaEps)
      b_new = b2;
    else
      b_new = 0.5 * (b1 + b2);

    alpha_[i1] = a1_new;
    alpha_[i2] = a2_new;
    double db = b_new - b_;
    for (std::size_t i = 0; i < n_; ++i)
      errors_[i] += y1 * da1 * k(i1, i) + y2 * da2 * k(i2, i) + db;
    b_ = b_new;
    return true;
  }

  // Bias from the mean over free support vectors; if every alpha sits on a
  // bound, take the midpoint of the feasible interval instead.
  void finalize_bias() {
    std::vector<double> raw(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      double f = 0.0;
      for (std::size_t j = 0; j < n_; ++j)
        if (alpha_[j] > kAlphaEps) f += alpha_[j] * y_[j] * k(j, i);
      raw[i] = f;
    }
    double sum = 0.0;
    std::size_t free_count = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!non_bound(i)) continue;
      sum += y_[i] - raw[i];
      ++free_count;
    }
    if (free_count > 0) {
      b_ = sum / static_cast<double>(free_count);
      return;
    }
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i) {
      double v = y_[i] - raw[i];
      bool at_zero = alpha_[i] <= kAlphaEps;
      if ((at_zero && y_[i] > 0) || (!at_zero && y_[i] < 0))
        lo = std::max(lo, v);
      else
        hi = std::min(hi, v);
    }
    if (std::isfinite(lo) && std::isfinite(hi))
      b_ = 0.5 * (lo + hi);
    else if (std::isfinite(lo))
      b_ = lo;
    else if (std::isfinite(hi))
      b_ = hi;
  }

  const FeatureMatrix& x_;
  const std::vector<int>& y_;
  double c_, gamma_, tol_;
  int max_passes_;
  std::size_t n_;
  std::vector<double> kernel_;
  std::vector<double> alpha_;
  std::vector<double> errors_;  // E_i = f(x_i) - y_i under the running bias
  double b_ = 0.0;
};

}  // namespace

SvmModel svm_train(const FeatureMatrix& x, const std::vector<int>& y_pm, double c,
                   double gamma, double tol, int max_passes) {
  if (x.n_samples() != y_pm.size())
    fail(ErrorCode::invalid, "svm_train: label count does not match row count");
  if (c <= 0.0 || gamma <= 0.0) fail(ErrorCode::invalid, "svm_train: c and gamma must be > 0");
  x.require_finite("svm_train");
  bool has_pos = false, has_neg = false;
  for (int y : y_pm) {
    if (y == 1) has_pos = true;
    else if (y == -1) has_neg = true;
    else fail(ErrorCode::invalid, "svm_train: labels must be +-1");
  }
  if (!has_pos || !has_neg) fail(ErrorCode::invalid, "svm_train: both classes required");

  SmoSolver solver(x, y_pm, c, gamma, tol / 4.0, max_passes);
  solver.solve();
  return solver.build_model();
}

std::vector<int> svm_predict(const SvmModel& model, const FeatureMatrix& x) {
  if (x.n_features() != model.support_vectors.n_features())
    fail(ErrorCode::invalid, "svm_predict: feature count mismatch");
  std::vector<int> out(x.n_samples());
  for (std::size_t i = 0; i < x.n_samples(); ++i) out[i] = model.predict_pm(x.row(i));
  return out;
}

double svm_kkt_residual(const SvmModel& model, const FeatureMatrix& x,
                        const std::vector<int>& y_pm) {
  // Reconstruct per-row alphas: rows equal to a stored support vector carry
  // its dual, everything else is 0. Support rows were copied verbatim from
  // the training matrix, so exact comparison is safe.
  const std::size_t d = x.n_features();
  double worst = 0.0;
  for (std::size_t i = 0; i < x.n_samples(); ++i) {
    double a = 0.0;
    for (std::size_t s = 0; s < model.alphas.size(); ++s) {
      if (model.labels_pm[s] != y_pm[i]) continue;
      if (std::equal(x.row(i), x.row(i) + d, model.support_vectors.row(s))) {
        a = model.alphas[s];
        break;
      }
    }
    double yf = y_pm[i] * model.decision_value(x.row(i));
    double r;
    if (a <= kAlphaEps)
      r = std::max(0.0, 1.0 - yf);
    else if (a >= model.c - kAlphaEps)
      r = std::max(0.0, yf - 1.0);
    else
      r = std::fabs(yf - 1.0);
    worst = std::max(worst, r);
  }
  return worst;
}

double svm_dual_objective(const SvmModel& model) {
  const std::size_t m = model.alphas.size();
  const std::size_t d = model.support_vectors.n_features();
  double obj = std::accumulate(model.alphas.begin(), model.alphas.end(), 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      obj -= 0.5 * model.alphas[i] * model.alphas[j] * model.labels_pm[i] * model.labels_pm[j] *
             rbf_kernel(model.support_vectors.row(i), model.support_vectors.row(j), d,
                        model.gamma);
  return obj;
}

std::vector<int> knn_predict(const FeatureMatrix& train_x, const LabelVector& train_y,
                             const FeatureMatrix& test_x, std::size_t k) {
  const std::size_t n = train_x.n_samples();
  if (k < 1 || k > n) fail(ErrorCode::invalid, "knn_predict: k must be in [1, n_train]");
  if (test_x.n_features() != train_x.n_features())
    fail(ErrorCode::invalid, "knn_predict: feature count mismatch");

  std::vector<int> out(test_x.n_samples());
  std::vector<std::pair<double, std::size_t>> dist(n);
  for (std::size_t t = 0; t < test_x.n_samples(); ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      double sq = 0.0;
      for (std::size_t j = 0; j < train_x.n_features(); ++j) {
        double diff = train_x.at(i, j) - test_x.at(t, j);
        sq += diff * diff;
      }
      dist[i] = {sq, i};
    }
    std::sort(dist.begin(), dist.end());

    std::vector<std::size_t> votes(static_cast<std::size_t>(train_y.n_classes), 0);
    for (std::size_t r = 0; r < k; ++r)
      votes[static_cast<std::size_t>(train_y.labels[dist[r].second])]++;
    std::size_t top = *std::max_element(votes.begin(), votes.end());
    int label = -1;
    for (std::size_t r = 0; r < k; ++r) {
      int cand = train_y.labels[dist[r].second];
      if (votes[static_cast<std::size_t>(cand)] == top) {
        label = cand;
        break;
      }
    }
    out[t] = label;
  }
  return out;
}

}  // namespace dimred
