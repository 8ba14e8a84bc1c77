#include "ssm/weight_model.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ssm/errors.hpp"
#include "ssm/numerics.hpp"

namespace ssm {

namespace {

void validate_policy(double epsilon, std::uint64_t hard_cap) {
  if (!(epsilon > 0.0) || epsilon > 1e-6)
    throw std::invalid_argument("truncation epsilon must lie in (0, 1e-6]");
  if (hard_cap < 1) throw std::invalid_argument("hard cap must be >= 1");
}

}  // namespace

WeightModel WeightModel::logistic_normal(double a, double b, double sigma2,
                                         double epsilon, std::uint64_t hard_cap) {
  if (!(a > 0.0) || !(b > 0.0) || !(sigma2 > 0.0))
    throw std::invalid_argument("logistic-normal parameters must be > 0");
  validate_policy(epsilon, hard_cap);
  WeightModel m;
  m.kind_ = WeightModelKind::LogisticNormal;
  m.ln_ = {a, b, sigma2};
  m.epsilon_ = epsilon;
  m.hard_cap_ = hard_cap;
  m.name_ = "logistic-normal(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
            ",sigma2=" + std::to_string(sigma2) + ")";
  return m;
}

WeightModel WeightModel::dp_stick_breaking(double theta, double epsilon,
                                           std::uint64_t hard_cap) {
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be > 0");
  validate_policy(epsilon, hard_cap);
  WeightModel m;
  m.kind_ = WeightModelKind::DpStickBreaking;
  m.dp_ = {theta};
  m.epsilon_ = epsilon;
  m.hard_cap_ = hard_cap;
  m.name_ = "dp-stick-breaking(theta=" + std::to_string(theta) + ")";
  return m;
}

WeightModel WeightModel::custom(CustomWeightSpec spec, double epsilon,
                                std::uint64_t hard_cap) {
  if (!spec.mean_u || !spec.sample_u || !spec.expected_tail_bound)
    throw std::invalid_argument("custom weight spec is incomplete");
  if (!spec.summability_certified)
    throw std::invalid_argument(
        "custom weight models require a summability certificate for the mean sequence");
  validate_policy(epsilon, hard_cap);
  WeightModel m;
  m.kind_ = WeightModelKind::Custom;
  m.custom_ = std::move(spec);
  m.epsilon_ = epsilon;
  m.hard_cap_ = hard_cap;
  m.name_ = m.custom_.name;
  return m;
}

double WeightModel::mean_u(std::uint64_t h) const {
  switch (kind_) {
    case WeightModelKind::LogisticNormal: {
      const double x = ln_.b - ln_.a * static_cast<double>(h);
      return std::exp(log_sigmoid(x) + 0.5 * ln_.sigma2);
    }
    case WeightModelKind::DpStickBreaking: {
      // E(P_h) = theta^(h-1) / (1+theta)^h
      const double t = dp_.theta;
      return std::exp((h - 1) * std::log(t) - h * std::log1p(t));
    }
    case WeightModelKind::Custom:
      return custom_.mean_u(h);
  }
  return 0.0;
}

double WeightDraw::weight_sum() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

namespace {

// Bound on sum_{h>drawn} E(u_h) for the logistic-normal sequence, from
// sigmoid(x) <= e^x and the geometric series.
double logistic_normal_tail(const LogisticNormalParams& p, std::uint64_t drawn) {
  const double log_tail = 0.5 * p.sigma2 + p.b - p.a * static_cast<double>(drawn + 1) -
                          std::log1p(-std::exp(-p.a));
  return std::exp(log_tail);
}

WeightDraw sample_unnormalized(const WeightModel& model, RngStream& rng,
                               std::uint64_t seed_record) {
  std::vector<double> u;
  double total = 0.0;
  double checked_mean_sum = 0.0;
  std::uint64_t h = 0;
  double tail = std::numeric_limits<double>::infinity();
  while (true) {
    if (h >= model.hard_cap()) throw TruncationOverflowError(model.hard_cap());
    ++h;
    double draw;
    if (model.kind() == WeightModelKind::LogisticNormal) {
      const auto& p = model.logistic_normal_params();
      const double mu = log_sigmoid(p.b - p.a * static_cast<double>(h));
      draw = std::exp(rng.normal(mu, std::sqrt(p.sigma2)));
    } else {
      const auto& spec = model.custom_spec();
      const double mean = spec.mean_u(h);
      if (!(mean > 0.0) || !std::isfinite(mean))
        throw std::domain_error("custom mean sequence must be positive and finite");
      checked_mean_sum += mean;
      if (!std::isfinite(checked_mean_sum))
        throw std::domain_error("custom mean sequence partial sums overflow");
      draw = spec.sample_u(mean, rng);
      if (!(draw > 0.0))
        throw std::domain_error("custom weight sampler must return positive values");
    }
    total += draw;
    u.push_back(draw);
    tail = model.kind() == WeightModelKind::LogisticNormal
               ? logistic_normal_tail(model.logistic_normal_params(), h)
               : model.custom_spec().expected_tail_bound(h);
    if (tail <= model.epsilon() * total) break;
  }
  const double normalizer = total + tail;
  WeightDraw out;
  out.weights.reserve(u.size());
  for (double v : u) out.weights.push_back(v / normalizer);
  out.tail_mass = tail / normalizer;
  out.seed = seed_record;
  return out;
}

WeightDraw sample_stick_breaking(const WeightModel& model, RngStream& rng,
                                 std::uint64_t seed_record) {
  const double theta = model.dp_params().theta;
  WeightDraw out;
  out.seed = seed_record;
  double remaining = 1.0;
  std::uint64_t h = 0;
  while (remaining > model.epsilon()) {
    if (h >= model.hard_cap()) throw TruncationOverflowError(model.hard_cap());
    ++h;
    const double v = rng.beta_one(theta);
    const double w = v * remaining;
    if (w > 0.0) out.weights.push_back(w);
    remaining *= (1.0 - v);
  }
  out.tail_mass = remaining;
  return out;
}

}  // namespace

WeightDraw sample_weights(const WeightModel& model, RngStream& rng,
                          std::uint64_t seed_record) {
  if (model.kind() == WeightModelKind::DpStickBreaking)
    return sample_stick_breaking(model, rng, seed_record);
  return sample_unnormalized(model, rng, seed_record);
}

WeightDraw sample_weights(const WeightModel& model, std::uint64_t seed) {
  RngStream rng(seed);
  return sample_weights(model, rng, seed);
}

}  // namespace ssm
