#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bound_bridge/guarantee.hpp"
#include "bound_bridge/minimize.hpp"

namespace bound_bridge {

// High-probability -> in-expectation direction under the (u,c)-witness
// condition:
//
//   E[X] <= (1/c) * [ eps(delta,n) + (u' - eps(delta,n)) * delta ],
//   u' := max{u, eps(delta,n)},
//
// valid for every delta in (0,1], so the free delta is minimized over.

enum class OptMethod { closed_form, numeric };

struct TransformResult {
  // Empty optional means the infimum is only approached as delta -> 0
  // (reported, never silently returned as the search floor).
  std::optional<double> delta_star;
  double bound = 0.0;
  bool attained = false;
  OptMethod method = OptMethod::numeric;
  // Derivative of the bound at delta_star; ~0 for interior optima.
  double stationarity = 0.0;
};

inline constexpr double kDeltaFloor = 1e-12;
inline constexpr double kObjectiveTol = 1e-10;
inline constexpr int kMaxIterPerPiece = 200;

inline WitnessParams bounded_loss_witness(double B) {
  if (!(B > 0.0) || !std::isfinite(B)) throw std::domain_error("bounded loss scale B must be positive");
  return WitnessParams{B, 1.0};
}

inline double effective_u(const WitnessParams& w, const HpGuarantee& g, double delta, std::int64_t n) {
  validate(w);
  return std::max(w.u, eval_hp(g, delta, n));
}

// The transformed bound for a known scalar eps value.
inline double expectation_bound_at(double eps, const WitnessParams& w, double delta) {
  const double u = std::max(w.u, eps);
  return (eps + (u - eps) * delta) / w.c;
}

inline double hp_to_exp_at(const HpGuarantee& g, const WitnessParams& w, double delta, std::int64_t n) {
  validate(w);
  return expectation_bound_at(eval_hp(g, delta, n), w, delta);
}

namespace detail {

// Slope of the bound on the smooth piece where eps(delta) <= u:
//   d/ddelta (1/c)[eps(1-delta) + u*delta] = [eps'(1-delta) - eps + u] / c.
inline double below_kink_slope(const HpGuarantee& g, const WitnessParams& w, double delta, std::int64_t n) {
  return (eval_hp_ddelta(g, delta, n) * (1.0 - delta) - eval_hp(g, delta, n) + w.u) / w.c;
}

inline TransformResult optimize_delta_numeric(const HpGuarantee& g, const WitnessParams& w, std::int64_t n) {
  const auto bound_at = [&](double d) { return hp_to_exp_at(g, w, d, n); };

  if (!blows_up_near_zero(g)) {
    // eps is delta-free; the bound is linear in delta.
    const double eps0 = eval_hp(g, 1.0, n);
    if (eps0 >= w.u) {
      // u' = eps0 everywhere: bound is constant eps0/c.
      return {1.0, eps0 / w.c, true, OptMethod::closed_form, 0.0};
    }
    // Slope (u - eps0)/c > 0: infimum eps0/c as delta -> 0, never attained.
    return {std::nullopt, eps0 / w.c, false, OptMethod::closed_form, (w.u - eps0) / w.c};
  }

  const double eps_at_one = eval_hp(g, 1.0, n);
  if (eps_at_one >= w.u) {
    // eps >= u on all of (0,1]: bound = eps/c, nonincreasing in delta.
    return {1.0, eps_at_one / w.c, true, OptMethod::numeric, eval_hp_ddelta(g, 1.0, n) / w.c};
  }

  // eps(1,n) < u and eps blows up near 0, so the kink eps(delta0) = u exists
  // whenever eps(floor) > u; the bound is eps/c left of it.
  double lo = kDeltaFloor;
  ScanMinimum best{1.0, bound_at(1.0), false};
  if (eval_hp(g, kDeltaFloor, n) > w.u) {
    const double kink = bisect_root_geometric(
        [&](double d) { return eval_hp(g, d, n) - w.u; }, kDeltaFloor, 1.0, kMaxIterPerPiece);
    // eps/c is nonincreasing on [floor, kink]; its minimum is the kink itself.
    const double at_kink = bound_at(kink);
    if (at_kink < best.value) best = {kink, at_kink, false};
    lo = kink;
  }

  if (lo < 1.0) {
    const ScanMinimum piece = scan_minimize_geometric(
        bound_at, [&](double d) { return below_kink_slope(g, w, d, n); }, lo, 1.0, 257, kMaxIterPerPiece);
    if (piece.value < best.value) best = piece;
  }

  return {best.x, best.value, true, OptMethod::numeric,
          best.interior ? below_kink_slope(g, w, best.x, n) : 0.0};
}

}  // namespace detail

// Minimizes the transformed bound over delta in (0,1]. Single-PowerLaw
// families with p = 1 (the a / (delta * n^q) shape) take the closed form
// delta* = sqrt(a / (u n^q)); everything else is solved numerically on
// [kDeltaFloor, 1] with the kink at eps(delta) = u handled separately.
inline TransformResult optimize_delta(const HpGuarantee& g, const WitnessParams& w, std::int64_t n,
                                      std::optional<OptMethod> force = std::nullopt) {
  validate(g);
  validate(w);
  detail::require_n(n);

  const PowerLaw* pl = g.terms.size() == 1 ? std::get_if<PowerLaw>(&g.terms.front()) : nullptr;
  const bool closed_form_shape = pl != nullptr && pl->p == 1.0;
  const bool use_closed = force.has_value() ? *force == OptMethod::closed_form : closed_form_shape;
  if (use_closed && !closed_form_shape)
    throw std::invalid_argument("closed form requires a single power_law term with p = 1");

  if (!use_closed) return detail::optimize_delta_numeric(g, w, n);

  const double nq = std::pow(static_cast<double>(n), pl->q);
  const double raw = std::sqrt(pl->a / (w.u * nq));
  if (raw <= 1.0) {
    const double bound = (2.0 * std::sqrt(pl->a * w.u / nq) - pl->a / nq) / w.c;
    return {raw, bound, true, OptMethod::closed_form, 0.0};
  }
  // Stationary point clamps to delta = 1, where eps(1,n) = a/n^q > u.
  return {1.0, (pl->a / nq) / w.c, true, OptMethod::closed_form, 0.0};
}

struct RatePoint {
  std::int64_t n;
  TransformResult result;
};

// Optimized bound per sample size; exhibits how the n-rate changes under the
// transformation.
inline std::vector<RatePoint> rate_table(const HpGuarantee& g, const WitnessParams& w,
                                         const std::vector<std::int64_t>& n_list) {
  if (n_list.empty()) throw std::invalid_argument("rate_table: empty n list");
  std::vector<RatePoint> rows;
  rows.reserve(n_list.size());
  for (std::int64_t n : n_list) rows.push_back({n, optimize_delta(g, w, n)});
  return rows;
}

}  // namespace bound_bridge
