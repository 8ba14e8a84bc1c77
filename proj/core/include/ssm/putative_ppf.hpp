#ifndef SSM_PUTATIVE_PPF_HPP
#define SSM_PUTATIVE_PPF_HPP

#include <functional>
#include <string>
#include <vector>

#include "ssm/composition.hpp"

namespace ssm {

// A putative predictive rule: given cluster sizes n it returns the k+1
// probabilities of joining each existing cluster or opening a new one.
// Nothing beyond nonnegativity and normalization is promised; whether the
// rule is consistent with an exchangeable sequence is a separate question
// answered by the checks in consistency.hpp.
class PutativePpf {
 public:
  using Rule = std::function<std::vector<double>(const Composition&)>;

  PutativePpf() = default;
  PutativePpf(Rule rule, std::string name)
      : rule_(std::move(rule)), name_(std::move(name)) {}

  // Evaluates the rule and enforces the contract: length k+1, entries >= 0,
  // sum within 1e-12 of one. Violations throw std::domain_error.
  std::vector<double> operator()(const Composition& n) const;

  const std::string& name() const { return name_; }
  bool valid() const { return static_cast<bool>(rule_); }

 private:
  Rule rule_;
  std::string name_;
};

// The linear rule p_j = n_j/(n+theta), p_{k+1} = theta/(n+theta).
PutativePpf dp_ppf(double theta);

// p_j proportional to f(n_j) for existing clusters and to theta for a new
// one. f must be positive on the positive integers; evaluations where it is
// not throw std::domain_error. Balance holds at every bound exactly when
// f(m) = a*m.
PutativePpf linear_f_ppf(std::function<double(int)> f, double theta,
                         std::string name = "f-weighted");

// Convenience wrapper: f(m) = sum_i coeffs[i] * m^i.
PutativePpf polynomial_f_ppf(const std::vector<double>& coeffs, double theta);

}  // namespace ssm

#endif  // SSM_PUTATIVE_PPF_HPP
