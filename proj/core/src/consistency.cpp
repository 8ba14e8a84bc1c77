#include "ssm/consistency.hpp"

#include <algorithm>
#include <numeric>

#include "ssm/numerics.hpp"

namespace ssm {

BalanceReport check_balance(const PutativePpf& ppf, int bound) {
  BalanceReport report;
  report.bound = bound;
  for (const Composition& n : compositions_up_to(bound)) {
    const std::size_t k = n.cluster_count();
    const std::vector<double> base = ppf(n);
    // p(n^(i+)) vectors, shared across the j loop.
    std::vector<std::vector<double>> bumped(k + 1);
    for (std::size_t i = 1; i <= k + 1; ++i) bumped[i - 1] = ppf(n.increment(i));
    for (std::size_t i = 1; i <= k + 1; ++i) {
      for (std::size_t j = i + 1; j <= k + 1; ++j) {
        const double lhs = base[i - 1] * bumped[i - 1][j - 1];
        const double rhs = base[j - 1] * bumped[j - 1][i - 1];
        if (!nearly_equal(lhs, rhs))
          report.violations.push_back({n, i, j, lhs, rhs});
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

BalanceReport check_label_symmetry(const PutativePpf& ppf, int bound) {
  BalanceReport report;
  report.bound = bound;
  for (const Composition& n : compositions_up_to(bound)) {
    const std::size_t k = n.cluster_count();
    if (k < 2) continue;  // only the identity permutation exists
    const std::vector<double> base = ppf(n);
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    while (std::next_permutation(sigma.begin(), sigma.end())) {
      const std::vector<double> permuted = ppf(n.permuted(sigma));
      // sigma_inv[i] = position of i in sigma
      std::vector<std::size_t> sigma_inv(k);
      for (std::size_t pos = 0; pos < k; ++pos) sigma_inv[sigma[pos]] = pos;
      for (std::size_t i = 0; i < k; ++i) {
        const double lhs = base[i];
        const double rhs = permuted[sigma_inv[i]];
        if (!nearly_equal(lhs, rhs))
          report.violations.push_back({n, i + 1, sigma_inv[i] + 1, lhs, rhs});
      }
    }
  }
  report.holds = report.violations.empty();
  return report;
}

BalanceReport check_additivity(const EppfTable& eppf) {
  BalanceReport report;
  report.bound = eppf.bound();
  for (const Composition& n : compositions_up_to(std::max(1, eppf.bound() - 1))) {
    if (n.total() > eppf.bound() - 1) continue;
    const double value = eppf.value(n);
    double sum = 0.0;
    for (std::size_t j = 1; j <= n.cluster_count() + 1; ++j)
      sum += eppf.value(n.increment(j));
    if (!nearly_equal(value, sum)) report.violations.push_back({n, 0, 0, value, sum});
  }
  report.holds = report.violations.empty();
  return report;
}

}  // namespace ssm
