#ifndef SSM_CONSISTENCY_HPP
#define SSM_CONSISTENCY_HPP

#include <string>
#include <vector>

#include "ssm/composition.hpp"
#include "ssm/eppf.hpp"
#include "ssm/putative_ppf.hpp"

namespace ssm {

// One failed identity, with both sides of the equation as the witness.
struct BalanceViolation {
  Composition composition;
  std::size_t i = 0;
  std::size_t j = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct BalanceReport {
  bool holds = true;
  int bound = 0;
  std::vector<BalanceViolation> violations;

  // JSON document {holds, bound, violations:[{composition,i,j,lhs,rhs}]}.
  std::string to_json() const;
};

// Pairwise balance: p_i(n) p_j(n^(i+)) = p_j(n) p_i(n^(j+)) for every
// composition of total size <= bound and every 1 <= i < j <= k+1,
// relative tolerance 1e-9. Holding at every bound is exactly the condition
// for the predictive rule to define a unique partition probability.
BalanceReport check_balance(const PutativePpf& ppf, int bound);

// Label symmetry: p_i(n) = p_{sigma^-1(i)}(sigma(n)) for every composition
// of total size <= bound, every permutation sigma of the cluster labels and
// every i <= k. Together with a clean balance report this certifies that
// the rule generates an exchangeable partition probability up to size
// bound+1. Violations record j = sigma^-1(i).
BalanceReport check_label_symmetry(const PutativePpf& ppf, int bound);

// Additivity: p(n) = sum_j p(n^(j+)) for every composition of total size
// <= table bound - 1. Violations record the table value as lhs and the
// successor sum as rhs, with i = j = 0.
BalanceReport check_additivity(const EppfTable& eppf);

}  // namespace ssm

#endif  // SSM_CONSISTENCY_HPP
