#include "dimred/folds.hpp"

#include "dimred/rng.hpp"

namespace dimred {

std::vector<std::size_t> FoldPlan::train_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i)
    if (assignments[i] != fold) out.push_back(i);
  return out;
}

std::vector<std::size_t> FoldPlan::test_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < assignments.size(); ++i)
    if (assignments[i] == fold) out.push_back(i);
  return out;
}

FoldPlan make_stratified_folds(const LabelVector& labels, std::size_t n_folds,
                               std::uint64_t seed) {
  const std::size_t n = labels.size();
  if (n_folds < 2) fail(ErrorCode::invalid, "n_folds must be at least 2");
  if (n_folds > n)
    fail(ErrorCode::invalid, "n_folds (" + std::to_string(n_folds) + ") exceeds sample count (" +
                                 std::to_string(n) + ")");

  std::vector<std::vector<std::size_t>> by_class(
      static_cast<std::size_t>(labels.n_classes));
  for (std::size_t i = 0; i < n; ++i)
    by_class[static_cast<std::size_t>(labels.labels[i])].push_back(i);

  FoldPlan plan;
  plan.assignments.assign(n, 0);
  plan.n_folds = n_folds;
  plan.seed = seed;

  SplitMix64 rng(derive_seed(seed, "stratified-folds"));
  std::size_t counter = 0;
  for (auto& members : by_class) {
    rng.shuffle(members);
    for (std::size_t idx : members) plan.assignments[idx] = counter++ % n_folds;
  }
  return plan;
}

std::vector<LooSplit> loo_splits(std::size_t n) {
  if (n < 2) fail(ErrorCode::invalid, "loo_splits needs at least 2 samples");
  std::vector<LooSplit> splits(n);
  for (std::size_t i = 0; i < n; ++i) {
    splits[i].test = i;
    splits[i].train.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) splits[i].train.push_back(j);
  }
  return splits;
}

}  // namespace dimred
