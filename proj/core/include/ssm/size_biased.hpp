#ifndef SSM_SIZE_BIASED_HPP
#define SSM_SIZE_BIASED_HPP

#include <cstdint>
#include <vector>

#include "ssm/composition.hpp"
#include "ssm/rng.hpp"
#include "ssm/weight_model.hpp"

namespace ssm {

// The first k weights of a size-biased permutation of a draw: weight j is
// the mass of the j-th cluster to appear in a sequence sampled from that
// draw. Immutable; extending returns a new prefix.
struct SizeBiasedPrefix {
  std::vector<double> picked;
  std::vector<std::size_t> pick_indices;  // 0-based indices into the source draw
  double remaining_mass = 1.0;            // 1 - sum(picked); includes tail mass
};

// Sequentially picks k distinct atoms, each with probability proportional
// to its weight among the not-yet-picked ones. ExhaustedError when k
// exceeds the number of atoms in the draw.
SizeBiasedPrefix size_biased_permutation(const WeightDraw& draw, std::size_t k,
                                         RngStream& rng);
SizeBiasedPrefix size_biased_permutation(const WeightDraw& draw, std::size_t k,
                                         std::uint64_t seed);

// Lazily continues an existing prefix to `k` picks from the same draw.
SizeBiasedPrefix extend_prefix(const WeightDraw& draw, const SizeBiasedPrefix& prefix,
                               std::size_t k, RngStream& rng);

// log p(n | P~) = sum_j (n_j - 1) log P~_j + sum_{j<k} log(1 - cum_j):
// the probability of one appearance-ordered cluster sequence given the
// size-biased weights. InsufficientPrefixError when fewer picks than
// clusters.
double partial_log_probability(const Composition& n, const SizeBiasedPrefix& prefix);

// (P~_1, ..., P~_k, 1 - sum): the predictive cluster membership
// probabilities given the weights.
std::vector<double> predictive_given_weights(const Composition& n,
                                             const SizeBiasedPrefix& prefix);

struct MonteCarloMean {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t draws = 0;
};

// Prior mean number of distinct species in a sample of size n, averaged
// over L simulated sequences (fresh weight draw per sequence). Used to
// match a DP total mass to another model's clustering behavior.
MonteCarloMean prior_expected_clusters(const WeightModel& model, int n,
                                       std::uint64_t L, std::uint64_t seed,
                                       unsigned workers = 1);

}  // namespace ssm

#endif  // SSM_SIZE_BIASED_HPP
