#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

namespace bound_bridge {

// Closed parametric family for generalization guarantees. A high-probability
// guarantee eps(delta, n) is a sum of terms, each one of
//
//   PowerLaw:   a * delta^-p * n^-q
//   LogInverse: a * ln(1/delta) * n^-q
//   Constant:   a
//
// Every term is nonincreasing in delta on (0,1], so the sum is too, and the
// delta-derivative stays available in closed form for the optimizer.
struct PowerLaw {
  double a;  // > 0
  double p;  // >= 0
  double q;  // >= 0
};

struct LogInverse {
  double a;  // > 0
  double q;  // >= 0
};

struct Constant {
  double a;  // >= 0
};

using GuaranteeTerm = std::variant<PowerLaw, LogInverse, Constant>;

// "With probability at least 1-delta, excess risk <= eps(delta, n)."
struct HpGuarantee {
  std::vector<GuaranteeTerm> terms;
};

// "E[excess risk] < gamma(n)." Same term family restricted to delta-free
// terms: PowerLaw with p = 0, or Constant.
struct ExpGuarantee {
  std::vector<GuaranteeTerm> terms;
};

// Witness-condition parameters: loss-scale threshold u and witness fraction c.
struct WitnessParams {
  double u;  // > 0
  double c;  // in (0, 1]
};

inline void validate_term(const GuaranteeTerm& t) {
  if (const auto* pl = std::get_if<PowerLaw>(&t)) {
    if (!(pl->a > 0.0) || !std::isfinite(pl->a)) throw std::invalid_argument("power_law: a must be positive");
    if (!(pl->p >= 0.0) || !std::isfinite(pl->p)) throw std::invalid_argument("power_law: p must be >= 0");
    if (!(pl->q >= 0.0) || !std::isfinite(pl->q)) throw std::invalid_argument("power_law: q must be >= 0");
  } else if (const auto* li = std::get_if<LogInverse>(&t)) {
    if (!(li->a > 0.0) || !std::isfinite(li->a)) throw std::invalid_argument("log_inverse: a must be positive");
    if (!(li->q >= 0.0) || !std::isfinite(li->q)) throw std::invalid_argument("log_inverse: q must be >= 0");
  } else {
    const auto& c = std::get<Constant>(t);
    if (!(c.a >= 0.0) || !std::isfinite(c.a)) throw std::invalid_argument("constant: a must be >= 0");
  }
}

inline void validate(const HpGuarantee& g) {
  for (const auto& t : g.terms) validate_term(t);
}

inline void validate(const ExpGuarantee& g) {
  for (const auto& t : g.terms) {
    validate_term(t);
    if (std::holds_alternative<LogInverse>(t))
      throw std::invalid_argument("expectation guarantee: log_inverse term depends on delta");
    if (const auto* pl = std::get_if<PowerLaw>(&t); pl != nullptr && pl->p != 0.0)
      throw std::invalid_argument("expectation guarantee: power_law term must have p = 0");
  }
}

inline void validate(const WitnessParams& w) {
  if (!(w.u > 0.0) || !std::isfinite(w.u)) throw std::domain_error("witness: u must be positive");
  if (!(w.c > 0.0) || !(w.c <= 1.0)) throw std::domain_error("witness: c must be in (0,1]");
}

namespace detail {

inline void require_delta(double delta) {
  if (!(delta > 0.0) || !(delta <= 1.0)) throw std::domain_error("delta must be in (0,1]");
}

inline void require_n(std::int64_t n) {
  if (n < 1) throw std::domain_error("n must be >= 1");
}

inline double term_value(const GuaranteeTerm& t, double delta, double n) {
  if (const auto* pl = std::get_if<PowerLaw>(&t))
    return pl->a * std::pow(delta, -pl->p) * std::pow(n, -pl->q);
  if (const auto* li = std::get_if<LogInverse>(&t))
    return li->a * std::log(1.0 / delta) * std::pow(n, -li->q);
  return std::get<Constant>(t).a;
}

inline double term_ddelta(const GuaranteeTerm& t, double delta, double n) {
  if (const auto* pl = std::get_if<PowerLaw>(&t))
    return -pl->p * pl->a * std::pow(delta, -pl->p - 1.0) * std::pow(n, -pl->q);
  if (const auto* li = std::get_if<LogInverse>(&t))
    return -li->a / (delta * std::pow(n, li->q));
  return 0.0;
}

inline double term_d2delta(const GuaranteeTerm& t, double delta, double n) {
  if (const auto* pl = std::get_if<PowerLaw>(&t))
    return pl->p * (pl->p + 1.0) * pl->a * std::pow(delta, -pl->p - 2.0) * std::pow(n, -pl->q);
  if (const auto* li = std::get_if<LogInverse>(&t))
    return li->a / (delta * delta * std::pow(n, li->q));
  return 0.0;
}

}  // namespace detail

// eps(delta, n)
inline double eval_hp(const HpGuarantee& g, double delta, std::int64_t n) {
  detail::require_delta(delta);
  detail::require_n(n);
  const double nd = static_cast<double>(n);
  double sum = 0.0;
  for (const auto& t : g.terms) sum += detail::term_value(t, delta, nd);
  return sum;
}

// d eps / d delta, exact on the term family.
inline double eval_hp_ddelta(const HpGuarantee& g, double delta, std::int64_t n) {
  detail::require_delta(delta);
  detail::require_n(n);
  const double nd = static_cast<double>(n);
  double sum = 0.0;
  for (const auto& t : g.terms) sum += detail::term_ddelta(t, delta, nd);
  return sum;
}

// d^2 eps / d delta^2 (used to polish stationary points).
inline double eval_hp_d2delta(const HpGuarantee& g, double delta, std::int64_t n) {
  detail::require_delta(delta);
  detail::require_n(n);
  const double nd = static_cast<double>(n);
  double sum = 0.0;
  for (const auto& t : g.terms) sum += detail::term_d2delta(t, delta, nd);
  return sum;
}

// gamma(n)
inline double eval_exp(const ExpGuarantee& g, std::int64_t n) {
  detail::require_n(n);
  const double nd = static_cast<double>(n);
  double sum = 0.0;
  for (const auto& t : g.terms) sum += detail::term_value(t, 1.0, nd);
  return sum;
}

// True when eps(delta, n) -> +inf as delta -> 0, i.e. the family has any term
// that actually depends on delta.
inline bool blows_up_near_zero(const HpGuarantee& g) {
  for (const auto& t : g.terms) {
    if (const auto* pl = std::get_if<PowerLaw>(&t); pl != nullptr && pl->p > 0.0) return true;
    if (std::holds_alternative<LogInverse>(t)) return true;
  }
  return false;
}

}  // namespace bound_bridge
