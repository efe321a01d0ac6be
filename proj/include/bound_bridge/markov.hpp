#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <variant>

#include "bound_bridge/guarantee.hpp"

namespace bound_bridge {

// In-expectation -> high-probability direction. Plain Markov gives
// eps(delta, n) = gamma(n) / delta; the generalized form routes the tail
// through a monotone nonnegative transform phi:
//
//   P(X > eps) <= E[phi(X)] / phi(eps).

enum class PhiKind { identity, exponential, power, sqrt, log1p };

// Fixed zoo of monotone transforms R+ -> R+ with exact inverses.
struct PhiTransform {
  PhiKind kind = PhiKind::identity;
  double lambda = 1.0;  // exponential: phi(x) = e^(lambda x)
  double r = 1.0;       // power: phi(x) = x^r

  double operator()(double x) const {
    switch (kind) {
      case PhiKind::identity: return x;
      case PhiKind::exponential: return std::exp(lambda * x);
      case PhiKind::power: return std::pow(x, r);
      case PhiKind::sqrt: return std::sqrt(x);
      case PhiKind::log1p: return std::log1p(x);
    }
    throw std::logic_error("unreachable phi kind");
  }

  double inverse(double y) const {
    switch (kind) {
      case PhiKind::identity: return y;
      case PhiKind::exponential: return std::log(y) / lambda;
      case PhiKind::power: return std::pow(y, 1.0 / r);
      case PhiKind::sqrt: return y * y;
      case PhiKind::log1p: return std::expm1(y);
    }
    throw std::logic_error("unreachable phi kind");
  }

  bool concave() const {
    switch (kind) {
      case PhiKind::identity: return true;  // linear counts
      case PhiKind::exponential: return false;
      case PhiKind::power: return r <= 1.0;
      case PhiKind::sqrt: return true;
      case PhiKind::log1p: return true;
    }
    throw std::logic_error("unreachable phi kind");
  }

  double at_zero() const { return (*this)(0.0); }
};

inline void validate(const PhiTransform& phi) {
  if (phi.kind == PhiKind::exponential && !(phi.lambda > 0.0))
    throw std::invalid_argument("exponential phi: lambda must be positive");
  if (phi.kind == PhiKind::power && !(phi.r > 0.0))
    throw std::invalid_argument("power phi: r must be positive");
}

inline PhiTransform phi_identity() { return {PhiKind::identity, 1.0, 1.0}; }
inline PhiTransform phi_exponential(double lambda) {
  PhiTransform p{PhiKind::exponential, lambda, 1.0};
  validate(p);
  return p;
}
inline PhiTransform phi_power(double r) {
  PhiTransform p{PhiKind::power, 1.0, r};
  validate(p);
  return p;
}
inline PhiTransform phi_sqrt() { return {PhiKind::sqrt, 1.0, 1.0}; }
inline PhiTransform phi_log1p() { return {PhiKind::log1p, 1.0, 1.0}; }

// Markov: eps(delta, n) = gamma(n) / delta.
inline double exp_to_hp(const ExpGuarantee& g, double delta, std::int64_t n) {
  validate(g);
  detail::require_delta(delta);
  return eval_exp(g, n) / delta;
}

// The same statement as an HpGuarantee family: gamma(n)/delta raises each
// term's delta exponent from 0 to 1.
inline HpGuarantee as_hp_guarantee(const ExpGuarantee& g) {
  validate(g);
  HpGuarantee out;
  for (const auto& t : g.terms) {
    if (const auto* pl = std::get_if<PowerLaw>(&t)) {
      out.terms.push_back(PowerLaw{pl->a, 1.0, pl->q});
    } else {
      const double a = std::get<Constant>(t).a;
      if (a > 0.0) out.terms.push_back(PowerLaw{a, 1.0, 0.0});
    }
  }
  return out;
}

struct TailBound {
  double probability = 1.0;  // already clamped to [0, 1]
  bool vacuous = false;      // raw bound was >= 1
};

// P(X > eps) <= E[phi(X)] / phi(eps), clamped at 1.
inline TailBound generalized_markov_tail(const PhiTransform& phi, double phi_mean, double eps) {
  validate(phi);
  if (!(phi_mean >= 0.0)) throw std::domain_error("phi mean must be nonnegative");
  if (!(eps > 0.0)) throw std::domain_error("eps must be positive");
  const double denom = phi(eps);
  if (!(denom > 0.0)) throw std::domain_error("phi(eps) must be positive");
  const double raw = phi_mean / denom;
  return {std::min(1.0, raw), raw >= 1.0};
}

// A bound E[phi(X)] <= beta(n) paired with the transform it applies to.
struct PhiExpectationBound {
  ExpGuarantee beta;
  PhiTransform phi;
};

inline void validate(const PhiExpectationBound& b) {
  validate(b.beta);
  validate(b.phi);
}

struct HpFromPhi {
  double epsilon = 0.0;
  // beta(n)/delta fell below phi(0): the tail statement is satisfied by
  // eps = 0 and carries no information.
  bool vacuous = false;
};

// Solves E[phi(X)] <= beta(n), P(X > eps) <= delta for eps:
// eps = phi^{-1}(beta(n) / delta).
inline HpFromPhi invert_phi_bound(const PhiExpectationBound& b, double delta, std::int64_t n) {
  validate(b);
  detail::require_delta(delta);
  const double target = eval_exp(b.beta, n) / delta;
  if (target < b.phi.at_zero()) return {0.0, true};
  return {b.phi.inverse(target), false};
}

// Jensen: E[phi(X)] <= phi(E[X]) <= phi(gamma(n)) for concave phi.
inline double jensen_upper(const PhiTransform& phi, const ExpGuarantee& g, std::int64_t n) {
  validate(phi);
  if (!phi.concave()) throw std::domain_error("jensen_upper: phi must be concave");
  return phi(eval_exp(g, n));
}

}  // namespace bound_bridge
