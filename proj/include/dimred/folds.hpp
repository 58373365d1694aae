#ifndef DIMRED_FOLDS_HPP
#define DIMRED_FOLDS_HPP

#include <cstdint>
#include <vector>

#include "dimred/types.hpp"

namespace dimred {

/// Fold assignment per sample. Pure function of (labels, n_folds, seed).
struct FoldPlan {
  std::vector<std::size_t> assignments;
  std::size_t n_folds = 0;
  std::uint64_t seed = 0;

  std::vector<std::size_t> train_indices(std::size_t fold) const;
  std::vector<std::size_t> test_indices(std::size_t fold) const;
};

/// Stratified folds: per-class counts per fold stay within +-1 of an even
/// split. Classes are shuffled independently with the seeded generator, then
/// dealt round-robin with a running fold counter.
FoldPlan make_stratified_folds(const LabelVector& labels, std::size_t n_folds,
                               std::uint64_t seed);

struct LooSplit {
  std::vector<std::size_t> train;
  std::size_t test = 0;
};

/// n leave-one-out splits; split i holds out exactly sample i.
std::vector<LooSplit> loo_splits(std::size_t n);

}  // namespace dimred

#endif  // DIMRED_FOLDS_HPP
