#ifndef SU2OPT_CONTROL_FRAME_HPP
#define SU2OPT_CONTROL_FRAME_HPP

#include <string>

#include "su2opt/su2.hpp"

namespace su2opt {

/// Control letters. W is the singular direction (1 - k cos a) X + (k - cos a) Y,
/// only admissible when kappa > cos(alpha).
enum class Generator { X, Y, W };

/// Classification of the frame by the sign of kappa - cos(alpha), plus the
/// free-Y corner kappa = 0, cos(alpha) = 0. Selects which candidate families
/// the structured solver enumerates.
enum class Regime { KappaGt, KappaLt, KappaEq, FreeY };

const char* to_string(Generator g);
const char* to_string(Regime r);
Generator parse_generator(const std::string& s);

/// Control geometry: the angle alpha between the unit controls X and Y, the
/// cost factor kappa of Y per unit time (X is normalized to rate 1), and the
/// derived vectors
///   X = i,  Y = i cos a + j sin a,  Z = (1/2)[X, Y] = sin(a) k,
///   W = (1 - k cos a) X + (k - cos a) Y,  lambda = (k - cos a)/(1 - k cos a).
///
/// Regime classification uses a 1e-10 band on kappa - cos(alpha); the exact
/// equality regime is entered only inside that band. The corner kappa = 0 with
/// cos(alpha) > 0 is rejected: replacing alpha by pi - alpha gives an
/// equivalent problem (Y costs nothing, so its sign is free) that the
/// supported regimes cover.
class ControlFrame {
 public:
  static constexpr double kRegimeTol = 1e-10;

  ControlFrame(double alpha, double kappa);

  double alpha() const { return alpha_; }
  double kappa() const { return kappa_; }
  double cos_alpha() const { return cos_alpha_; }
  double lambda() const { return lambda_; }
  Regime regime() const { return regime_; }

  const Su2Vector& x() const { return x_; }
  const Su2Vector& y() const { return y_; }
  const Su2Vector& z() const { return z_; }
  const Su2Vector& w() const { return w_; }

  /// The su(2) direction of a letter; X and Y are unit, W is not.
  const Su2Vector& control_vector(Generator g) const;

  /// Cost per unit time: rate(X) = 1, rate(Y) = kappa,
  /// rate(W) = kappa^2 - 2 kappa cos(alpha) + 1.
  double cost_rate(Generator g) const;

 private:
  double alpha_, kappa_, cos_alpha_, lambda_;
  Su2Vector x_, y_, z_, w_;
  Regime regime_;
};

}  // namespace su2opt

#endif
