#include "ssm/eppf.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "ssm/errors.hpp"
#include "ssm/numerics.hpp"

namespace ssm {

EppfTable::EppfTable(int bound, EppfOrigin origin)
    : bound_(bound), origin_(origin) {
  if (bound < 1) throw std::invalid_argument("table bound must be >= 1");
}

bool EppfTable::contains(const Composition& n) const {
  return log_values_.count(n.key()) > 0;
}

double EppfTable::log_value(const Composition& n) const {
  auto it = log_values_.find(n.key());
  if (it == log_values_.end()) throw MissingEntryError(n.key());
  return it->second;
}

double EppfTable::value(const Composition& n) const {
  return std::exp(log_value(n));
}

void EppfTable::set_log_value(const Composition& n, double log_p) {
  if (std::isnan(log_p) || log_p > 1e-9)
    throw std::invalid_argument("partition probability outside [0,1] at " + n.key());
  if (n.cluster_count() == 1 && n.total() == 1 && std::fabs(log_p) > 1e-12)
    throw std::invalid_argument("p(1) must equal 1");
  log_values_[n.key()] = std::min(log_p, 0.0);
}

void EppfTable::set_value(const Composition& n, double p) {
  if (!(p >= 0.0)) throw std::invalid_argument("partition probability must be >= 0");
  set_log_value(n, std::log(p));
}

std::vector<Composition> EppfTable::entries() const {
  std::vector<Composition> out;
  out.reserve(log_values_.size());
  for (const auto& [key, lp] : log_values_) {
    (void)lp;
    out.push_back(Composition::from_key(key));
  }
  std::sort(out.begin(), out.end(), composition_order);
  return out;
}

void EppfTable::write_csv(std::ostream& os) const {
  os << "composition,log_probability\n";
  char buf[64];
  for (const Composition& n : entries()) {
    std::snprintf(buf, sizeof(buf), "%.17g", log_value(n));
    os << n.key() << ',' << buf << '\n';
  }
}

EppfTable EppfTable::read_csv(std::istream& is, EppfOrigin origin) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("composition,", 0) != 0)
    throw std::invalid_argument("missing EPPF CSV header");
  std::vector<std::pair<Composition, double>> rows;
  int bound = 1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("malformed EPPF CSV row: " + line);
    Composition n = Composition::from_key(line.substr(0, comma));
    bound = std::max(bound, n.total());
    rows.emplace_back(std::move(n), std::stod(line.substr(comma + 1)));
  }
  EppfTable table(bound, origin);
  for (const auto& [n, lp] : rows) table.set_log_value(n, lp);
  return table;
}

double dp_log_eppf(const Composition& n, double theta, double a) {
  if (!(theta > 0.0) || !(a > 0.0))
    throw std::invalid_argument("theta and a must be > 0");
  if (n.empty()) throw std::invalid_argument("composition must be nonempty");
  const int total = n.total();
  const int k = static_cast<int>(n.cluster_count());
  double lp = (k - 1) * std::log(theta) + (total - k) * std::log(a);
  for (int sz : n.sizes()) lp += std::lgamma(static_cast<double>(sz));
  for (int m = 0; m < total - 1; ++m) lp -= std::log(theta + 1.0 + m * a);
  return lp;
}

double dp_eppf(const Composition& n, double theta, double a) {
  return std::exp(dp_log_eppf(n, theta, a));
}

EppfTable dp_eppf_table(int bound, double theta, double a) {
  EppfTable table(bound, EppfOrigin::ClosedFormDp);
  for (const Composition& n : compositions_up_to(bound))
    table.set_log_value(n, dp_log_eppf(n, theta, a));
  return table;
}

namespace {

// Log values compared with the same tolerance regime as probabilities:
// relative 1e-9 with both sides under the 1e-300 floor counting as equal.
bool log_values_agree(double la, double lb) {
  constexpr double kLogFloor = -690.7755278982137;  // log(1e-300)
  if (la == lb) return true;
  if (la <= kLogFloor && lb <= kLogFloor) return true;
  if (la == kNegInf || lb == kNegInf) return false;
  return std::fabs(std::expm1(la - lb)) <= 1e-9;
}

}  // namespace

EppfTable eppf_from_ppf(const PutativePpf& ppf, int bound) {
  EppfTable table(bound, EppfOrigin::DerivedFromPpf);
  table.set_log_value(Composition{1}, 0.0);

  // Cache of the predictive vectors at every interior composition; each one
  // feeds both its canonical successor and the alternate-path checks.
  std::unordered_map<std::string, std::vector<double>> ppf_cache;
  auto ppf_at = [&](const Composition& n) -> const std::vector<double>& {
    auto it = ppf_cache.find(n.key());
    if (it == ppf_cache.end()) it = ppf_cache.emplace(n.key(), ppf(n)).first;
    return it->second;
  };

  for (int total = 2; total <= bound; ++total) {
    for (const Composition& n : compositions_of(total)) {
      const auto preds = n.predecessors();
      // Canonical path ends by inserting into the last cluster, so the
      // canonical predecessor is the one with the largest j.
      const auto& [canon_pred, canon_j] = preds.back();
      const double log_canon = table.log_value(canon_pred) +
                               std::log(ppf_at(canon_pred)[canon_j - 1]);
      for (std::size_t i = 0; i + 1 < preds.size(); ++i) {
        const auto& [alt_pred, alt_j] = preds[i];
        const double log_alt = table.log_value(alt_pred) +
                               std::log(ppf_at(alt_pred)[alt_j - 1]);
        if (!log_values_agree(log_canon, log_alt))
          throw PathDependentError(n.key(), std::exp(log_canon), std::exp(log_alt));
      }
      table.set_log_value(n, log_canon);
    }
  }
  return table;
}

std::vector<double> ppf_from_eppf(const EppfTable& eppf, const Composition& n) {
  const double log_pn = eppf.log_value(n);
  if (log_pn == kNegInf) throw DivisionByZeroError(n.key());
  const std::size_t k = n.cluster_count();
  std::vector<double> p(k + 1);
  for (std::size_t j = 1; j <= k + 1; ++j)
    p[j - 1] = std::exp(eppf.log_value(n.increment(j)) - log_pn);
  return p;
}

}  // namespace ssm
