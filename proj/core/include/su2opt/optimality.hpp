#ifndef SU2OPT_OPTIMALITY_HPP
#define SU2OPT_OPTIMALITY_HPP

#include "su2opt/control_frame.hpp"

namespace su2opt {

/// lambda = (kappa - cos a) / (1 - kappa cos a); the denominator is positive
/// for every admissible frame.
double lambda_ratio(const ControlFrame& frame);

/// Product-form first-order condition for the middle times of a four-letter
/// word, t2 the Y time and t3 the X time:
///   (1 - k cos a) sin t2 cos t3 - (k - cos a) cos t2 sin t3.
/// Zero exactly on the critical set; the product form has no pole at
/// t = pi/2 and covers kappa = cos(alpha). Throws std::domain_error unless
/// both arguments lie in (0, pi).
double four_word_residual(double t2, double t3, const ControlFrame& frame);

/// The middle Y time coupled to a middle X time: the solution of
/// tan t_y = lambda tan t_x in [pi/2, pi). The admissible t_x window depends
/// on the regime (KappaGt: [pi/2, pi); KappaLt: (0, pi/2]; KappaEq: t_x is
/// pinned to pi/2 and t_y is free, so pi/2 is returned by convention).
/// Throws std::domain_error outside the window or in the FreeY regime.
double middle_time_partner(double t_x, const ControlFrame& frame);

namespace detail {
/// Smooth continuation of the coupled middle time across t_x = pi/2,
/// defined on all of (0, pi): t_y = pi/2 - atan(cot(t_x) / lambda).
/// Used by solvers for finite-difference probes; the public
/// middle_time_partner enforces the regime windows.
double middle_time_partner_extended(double t_x, const ControlFrame& frame);
}  // namespace detail

enum class RebalanceVariant {
  XyxToYxy,  // exp(eps X) exp(t Y) exp(eps X) -> exp(tau Y) exp(mu X) exp(tau Y)
  YxyToXyx,  // exp(eps Y) exp(t X) exp(eps Y) -> exp(tau X) exp(mu Y) exp(tau X)
};

struct RebalanceResult {
  double tau = 0.0;
  double mu = 0.0;
};

/// Exact three-letter rewrite. Writing both sides in the basis {1, X, Y, Z}
/// gives the scalar system
///   sin(mu)  = sin(2 eps) cos(t) - 2 cos(a) sin^2(eps) sin(t)
///   (c + b cos a) cos(mu) - a cos(a) sin(mu) = sin(2 tau)(1 - sin^2(a) sin^2(mu))
/// which determines (tau, mu) with tau -> t/2, mu -> 0 as eps -> 0. The same
/// scalars serve both variants. Throws std::domain_error when cos(t) <= 0 or
/// when the computed mu would be negative (eps too large).
RebalanceResult rebalance_xyx(double eps, double t, const ControlFrame& frame, RebalanceVariant variant);

/// First-order expansions tau = t/2 + eps cos(a)(1 - cos t) and
/// mu = 2 eps cos(t); used to check the o(eps) consistency of the exact solve.
double rebalance_tau_asymptotic(double eps, double t, const ControlFrame& frame);
double rebalance_mu_asymptotic(double eps, double t);

/// Exact cost drop of the rewrite (old minus new):
///   XyxToYxy: 2 eps + k t - 2 k tau - mu   (positive for 0 < t < pi/2)
///   YxyToXyx: t + 2 k eps - 2 tau - k mu   (positive when kappa > cos alpha)
double cost_improvement(double eps, double t, const ControlFrame& frame, RebalanceVariant variant);

}  // namespace su2opt

#endif
