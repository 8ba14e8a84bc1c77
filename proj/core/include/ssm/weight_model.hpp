#ifndef SSM_WEIGHT_MODEL_HPP
#define SSM_WEIGHT_MODEL_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ssm/rng.hpp"

namespace ssm {

enum class WeightModelKind { LogisticNormal, DpStickBreaking, Custom };

// P_h proportional to exp(X_h), X_h ~ N(log sigmoid(b - a h), sigma2).
// The mean weights form an S-shape: the first ~b/a are of comparable size,
// then they decay geometrically, which keeps the expected total finite.
struct LogisticNormalParams {
  double a = 1.0;
  double b = 5.0;
  double sigma2 = 1.0;
};

struct DpStickBreakingParams {
  double theta = 1.0;
};

// User-defined unnormalized weight sequence u_h = noise(mean_u(h)). The
// caller certifies summability of the mean sequence and supplies the
// analytic bound on the un-drawn expected tail mass used by truncation;
// the library only verifies positivity and finiteness of the partial sums
// up to the realized horizon.
struct CustomWeightSpec {
  std::string name = "custom";
  std::function<double(std::uint64_t h)> mean_u;                    // h >= 1
  std::function<double(double mean, RngStream&)> sample_u;          // > 0
  std::function<double(std::uint64_t drawn)> expected_tail_bound;   // sum_{h>drawn} E(u_h)
  bool summability_certified = false;
};

// A prior on the atom masses of a species sampling random measure, together
// with its truncation policy. Atom locations are never represented: the
// partition law depends on the weights alone.
class WeightModel {
 public:
  static WeightModel logistic_normal(double a, double b, double sigma2,
                                     double epsilon = 1e-10,
                                     std::uint64_t hard_cap = 1000000);
  static WeightModel dp_stick_breaking(double theta, double epsilon = 1e-10,
                                       std::uint64_t hard_cap = 1000000);
  static WeightModel custom(CustomWeightSpec spec, double epsilon = 1e-10,
                            std::uint64_t hard_cap = 1000000);

  WeightModelKind kind() const { return kind_; }
  const LogisticNormalParams& logistic_normal_params() const { return ln_; }
  const DpStickBreakingParams& dp_params() const { return dp_; }
  const CustomWeightSpec& custom_spec() const { return custom_; }
  double epsilon() const { return epsilon_; }
  std::uint64_t hard_cap() const { return hard_cap_; }
  const std::string& name() const { return name_; }

  // Expected unnormalized weight E(u_h); the analytic side of the
  // truncation bound.
  double mean_u(std::uint64_t h) const;

 private:
  WeightModel() = default;
  WeightModelKind kind_ = WeightModelKind::DpStickBreaking;
  LogisticNormalParams ln_;
  DpStickBreakingParams dp_;
  CustomWeightSpec custom_;
  double epsilon_ = 1e-10;
  std::uint64_t hard_cap_ = 1000000;
  std::string name_;
};

// A finite, normalized truncation of the infinite weight sequence. The
// weights sum to 1 - tail_mass and tail_mass never exceeds the model's
// epsilon.
struct WeightDraw {
  std::vector<double> weights;
  double tail_mass = 0.0;
  std::uint64_t seed = 0;

  double weight_sum() const;
};

// Draws atoms until the bounded expected tail mass of the un-drawn terms,
// relative to the drawn total, falls below epsilon (for stick breaking the
// remaining stick itself is the bound). TruncationOverflowError when the
// hard cap would be exceeded.
WeightDraw sample_weights(const WeightModel& model, std::uint64_t seed);
WeightDraw sample_weights(const WeightModel& model, RngStream& rng,
                          std::uint64_t seed_record = 0);

// CSV "h,weight"; sorted=true emits weights in decreasing order (the h
// column then indexes rank).
void write_weights_csv(const WeightDraw& draw, std::ostream& os, bool sorted);

// JSON config {kind, params:{...}, epsilon, hard_cap}; custom models are
// not serializable.
std::string weight_model_to_json(const WeightModel& model);
WeightModel weight_model_from_json(const std::string& text);

}  // namespace ssm

#endif  // SSM_WEIGHT_MODEL_HPP
