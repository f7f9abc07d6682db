#include "su2opt/optimality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace su2opt {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kWindowTol = 1e-9;
}  // namespace

double lambda_ratio(const ControlFrame& frame) { return frame.lambda(); }

double four_word_residual(double t2, double t3, const ControlFrame& frame) {
  if (!(t2 > 0.0 && t2 < kPi) || !(t3 > 0.0 && t3 < kPi))
    throw std::domain_error("four_word_residual requires middle times in (0, pi)");
  const double k = frame.kappa();
  const double ca = frame.cos_alpha();
  return (1.0 - k * ca) * std::sin(t2) * std::cos(t3) - (k - ca) * std::cos(t2) * std::sin(t3);
}

namespace detail {

double middle_time_partner_extended(double t_x, const ControlFrame& frame) {
  // Solution curve of tan t_y = lambda tan t_x through (pi/2, pi/2), written
  // with cot to stay smooth across t_x = pi/2.
  const double lambda = frame.lambda();
  if (frame.regime() == Regime::KappaEq || lambda == 0.0) return kHalfPi;
  const double cot = std::cos(t_x) / std::sin(t_x);
  return kHalfPi - std::atan(cot / lambda);
}

}  // namespace detail

double middle_time_partner(double t_x, const ControlFrame& frame) {
  switch (frame.regime()) {
    case Regime::KappaGt:
      if (t_x < kHalfPi - kWindowTol || t_x >= kPi - kWindowTol)
        throw std::domain_error("t_x must lie in [pi/2, pi) when kappa > cos(alpha)");
      break;
    case Regime::KappaLt:
      if (t_x <= kWindowTol || t_x > kHalfPi + kWindowTol)
        throw std::domain_error("t_x must lie in (0, pi/2] when kappa < cos(alpha)");
      break;
    case Regime::KappaEq:
      if (std::abs(t_x - kHalfPi) > kWindowTol)
        throw std::domain_error("t_x is pinned to pi/2 when kappa = cos(alpha)");
      return kHalfPi;  // t_y is a free parameter; pi/2 by the continuity convention
    case Regime::FreeY:
      throw std::domain_error("no middle-time coupling in the free-Y regime");
  }
  return detail::middle_time_partner_extended(t_x, frame);
}

RebalanceResult rebalance_xyx(double eps, double t, const ControlFrame& frame, RebalanceVariant) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
  const double ct = std::cos(t);
  if (!(ct > 0.0)) throw std::domain_error("rebalance requires cos(t) > 0 (negative mu otherwise)");
  const double ca = frame.cos_alpha();
  const double st = std::sin(t);
  const double se = std::sin(eps);

  // Both sides in the basis {1, X, Y, Z}; the Z components vanish identically.
  const double a = std::cos(2.0 * eps) * ct - ca * std::sin(2.0 * eps) * st;
  const double b = std::sin(2.0 * eps) * ct - 2.0 * ca * se * se * st;
  const double c = st;

  if (b < 0.0) throw std::domain_error("rebalance produced a negative mu (eps too large)");
  if (b > 1.0) throw std::domain_error("rebalance left the solvable range (eps too large)");
  const double mu = std::asin(b);

  // Linear system in (sin 2tau, cos 2tau); determinant 1 - sin^2(a) sin^2(mu) > 0.
  const double cm = std::cos(mu);
  const double sm = b;
  const double det = cm * cm + ca * ca * sm * sm;
  const double sin2tau = ((c + ca * sm) * cm - a * ca * sm) / det;
  const double cos2tau = (a * cm + ca * sm * (c + ca * sm)) / det;
  const double tau = 0.5 * std::atan2(sin2tau, cos2tau);

  if (std::abs(tau - t / 2.0) >= kPi / 4.0)
    throw std::domain_error("rebalance branch left the |tau - t/2| < pi/4 band (eps too large)");
  return {tau, mu};
}

double rebalance_tau_asymptotic(double eps, double t, const ControlFrame& frame) {
  return t / 2.0 + eps * frame.cos_alpha() * (1.0 - std::cos(t));
}

double rebalance_mu_asymptotic(double eps, double t) { return 2.0 * eps * std::cos(t); }

double cost_improvement(double eps, double t, const ControlFrame& frame, RebalanceVariant variant) {
  const RebalanceResult r = rebalance_xyx(eps, t, frame, variant);
  const double k = frame.kappa();
  if (variant == RebalanceVariant::XyxToYxy) return 2.0 * eps + k * t - 2.0 * k * r.tau - r.mu;
  return t + 2.0 * k * eps - 2.0 * r.tau - k * r.mu;
}

}  // namespace su2opt
