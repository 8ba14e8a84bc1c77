#include "ssm/putative_ppf.hpp"

#include <cmath>
#include <stdexcept>

namespace ssm {

std::vector<double> PutativePpf::operator()(const Composition& n) const {
  if (!rule_) throw std::logic_error("putative PPF has no rule");
  std::vector<double> p = rule_(n);
  if (p.size() != n.cluster_count() + 1)
    throw std::domain_error("PPF output length must be k+1 (rule: " + name_ + ")");
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0))
      throw std::domain_error("PPF output has a negative entry (rule: " + name_ + ")");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::domain_error("PPF output does not sum to one (rule: " + name_ + ")");
  return p;
}

PutativePpf dp_ppf(double theta) {
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
  auto rule = [theta](const Composition& n) {
    const std::size_t k = n.cluster_count();
    std::vector<double> p(k + 1);
    const double denom = static_cast<double>(n.total()) + theta;
    for (std::size_t j = 0; j < k; ++j) p[j] = n.sizes()[j] / denom;
    p[k] = theta / denom;
    return p;
  };
  return PutativePpf(std::move(rule), "dp(theta=" + std::to_string(theta) + ")");
}

PutativePpf linear_f_ppf(std::function<double(int)> f, double theta,
                         std::string name) {
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
  auto rule = [f = std::move(f), theta, name](const Composition& n) {
    const std::size_t k = n.cluster_count();
    std::vector<double> w(k + 1);
    double total = theta;
    for (std::size_t j = 0; j < k; ++j) {
      const double fj = f(n.sizes()[j]);
      if (!(fj > 0.0))
        throw std::domain_error("cluster weight function must be positive (rule: " +
                                name + ")");
      w[j] = fj;
      total += fj;
    }
    w[k] = theta;
    for (double& v : w) v /= total;
    return w;
  };
  return PutativePpf(std::move(rule), std::move(name));
}

PutativePpf polynomial_f_ppf(const std::vector<double>& coeffs, double theta) {
  auto f = [coeffs](int m) {
    double v = 0.0;
    double pw = 1.0;
    for (double c : coeffs) {
      v += c * pw;
      pw *= m;
    }
    return v;
  };
  std::string name = "polynomial-f(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) name.push_back(',');
    name += std::to_string(coeffs[i]);
  }
  name += ")";
  return linear_f_ppf(std::move(f), theta, std::move(name));
}

}  // namespace ssm
