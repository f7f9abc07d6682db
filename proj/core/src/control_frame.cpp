#include "su2opt/control_frame.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace su2opt {

const char* to_string(Generator g) {
  switch (g) {
    case Generator::X: return "X";
    case Generator::Y: return "Y";
    case Generator::W: return "W";
  }
  return "?";
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::KappaGt: return "KAPPA_GT";
    case Regime::KappaLt: return "KAPPA_LT";
    case Regime::KappaEq: return "KAPPA_EQ";
    case Regime::FreeY: return "FREE_Y";
  }
  return "?";
}

Generator parse_generator(const std::string& s) {
  if (s == "X" || s == "x") return Generator::X;
  if (s == "Y" || s == "y") return Generator::Y;
  if (s == "W" || s == "w") return Generator::W;
  throw std::invalid_argument("unknown generator '" + s + "'");
}

ControlFrame::ControlFrame(double alpha, double kappa) : alpha_(alpha), kappa_(kappa) {
  if (!(alpha > 0.0 && alpha < std::numbers::pi))
    throw std::invalid_argument("alpha must lie strictly inside (0, pi)");
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw std::invalid_argument("kappa must lie in [0, 1]");

  cos_alpha_ = std::cos(alpha);
  const double sin_alpha = std::sin(alpha);

  x_ = {1.0, 0.0, 0.0};
  y_ = {cos_alpha_, sin_alpha, 0.0};
  z_ = {0.0, 0.0, sin_alpha};
  w_ = x_ * (1.0 - kappa * cos_alpha_) + y_ * (kappa - cos_alpha_);
  lambda_ = (kappa - cos_alpha_) / (1.0 - kappa * cos_alpha_);

  if (kappa <= kRegimeTol && std::abs(cos_alpha_) <= kRegimeTol) {
    regime_ = Regime::FreeY;
  } else if (std::abs(kappa - cos_alpha_) <= kRegimeTol && kappa > kRegimeTol) {
    regime_ = Regime::KappaEq;
  } else if (kappa > cos_alpha_) {
    regime_ = Regime::KappaGt;
  } else if (kappa > kRegimeTol) {
    regime_ = Regime::KappaLt;
  } else {
    throw std::invalid_argument(
        "kappa = 0 with cos(alpha) > 0 is not supported; replace alpha by pi - alpha "
        "(equivalent problem, Y costs nothing)");
  }
}

const Su2Vector& ControlFrame::control_vector(Generator g) const {
  switch (g) {
    case Generator::X: return x_;
    case Generator::Y: return y_;
    case Generator::W: return w_;
  }
  return x_;
}

double ControlFrame::cost_rate(Generator g) const {
  switch (g) {
    case Generator::X: return 1.0;
    case Generator::Y: return kappa_;
    case Generator::W: return kappa_ * kappa_ - 2.0 * kappa_ * cos_alpha_ + 1.0;
  }
  return 0.0;
}

}  // namespace su2opt
