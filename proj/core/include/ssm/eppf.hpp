#ifndef SSM_EPPF_HPP
#define SSM_EPPF_HPP

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssm/composition.hpp"
#include "ssm/putative_ppf.hpp"

namespace ssm {

enum class EppfOrigin { DerivedFromPpf, ClosedFormDp, External };

// Memoized values of a partition probability p(n) on all compositions with
// total size up to a bound. Values are held in log space; probabilities are
// exponentiated only at the accessors.
class EppfTable {
 public:
  EppfTable(int bound, EppfOrigin origin);

  int bound() const { return bound_; }
  EppfOrigin origin() const { return origin_; }

  bool contains(const Composition& n) const;
  // Throw MissingEntryError when absent.
  double log_value(const Composition& n) const;
  double value(const Composition& n) const;

  // Inserting a value outside [0,1] (beyond rounding slack) or rebinding the
  // base entry away from p(1) = 1 throws std::invalid_argument.
  void set_log_value(const Composition& n, double log_p);
  void set_value(const Composition& n, double p);

  std::size_t size() const { return log_values_.size(); }

  // Stored compositions in deterministic order (total, then shape).
  std::vector<Composition> entries() const;

  // CSV with header "composition,log_probability", rows in entries() order.
  void write_csv(std::ostream& os) const;
  static EppfTable read_csv(std::istream& is, EppfOrigin origin = EppfOrigin::External);

 private:
  int bound_;
  EppfOrigin origin_;
  std::unordered_map<std::string, double> log_values_;
};

// Closed-form partition probability of the linear predictive family:
//   p(n_1,...,n_k) = theta^(k-1) a^(n-k) prod_i (n_i - 1)! / [theta+1]_(n-1;a)
// with [x]_(m;a) = x (x+a) ... (x+(m-1)a). Evaluated in log space; exactly
// symmetric under permutation of the entries.
double dp_log_eppf(const Composition& n, double theta, double a = 1.0);
double dp_eppf(const Composition& n, double theta, double a = 1.0);

// Table of dp_eppf values up to the bound.
EppfTable dp_eppf_table(int bound, double theta, double a = 1.0);

// Fills every composition of total size <= bound by the recursion
// p(n^(j+)) = p_j(n) p(n) starting from p(1) = 1, evaluating along the
// canonical insertion order (clusters filled in order of appearance). Every
// alternative last-insertion predecessor is recomputed as well; a
// disagreement beyond 1e-9 relative means the recursion is path dependent
// and PathDependentError carries the first witness.
EppfTable eppf_from_ppf(const PutativePpf& ppf, int bound);

// The predictive rule of a stored table: p_j(n) = p(n^(j+)) / p(n).
// MissingEntryError when an entry is absent, DivisionByZeroError when
// p(n) = 0.
std::vector<double> ppf_from_eppf(const EppfTable& eppf, const Composition& n);

}  // namespace ssm

#endif  // SSM_EPPF_HPP
