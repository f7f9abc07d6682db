#include "su2opt/su2.hpp"

#include <algorithm>
#include <stdexcept>

namespace su2opt {

namespace {
constexpr double kRenormTrigger = 1e-9;
constexpr double kDriftLimit = 1e-6;
constexpr double kAntipodeTol = 1e-12;
}  // namespace

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

UnitQuaternion::UnitQuaternion(double a, double b, double c, double d) {
  const double n = std::sqrt(a * a + b * b + c * c + d * d);
  if (n < 1e-12) throw std::invalid_argument("cannot normalize a near-zero quaternion");
  a_ = a / n;
  b_ = b / n;
  c_ = c / n;
  d_ = d / n;
}

UnitQuaternion UnitQuaternion::inverse() const { return unchecked(a_, -b_, -c_, -d_); }

UnitQuaternion UnitQuaternion::normalized() const {
  const double n = std::sqrt(a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_);
  return unchecked(a_ / n, b_ / n, c_ / n, d_ / n);
}

UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q) {
  const Quaternion r = quat_mul(p.as_quaternion(), q.as_quaternion());
  const double n = r.norm();
  const double dev = std::abs(n - 1.0);
  if (dev > kDriftLimit) throw std::runtime_error("unit quaternion norm drifted beyond 1e-6");
  if (dev > kRenormTrigger) return UnitQuaternion::unchecked(r.a / n, r.b / n, r.c / n, r.d / n);
  return UnitQuaternion::unchecked(r.a, r.b, r.c, r.d);
}

UnitQuaternion exp_su2(const Su2Vector& v) {
  const double n = norm(v);
  if (n == 0.0) return UnitQuaternion::identity();
  const double s = std::sin(n) / n;
  return UnitQuaternion::unchecked(std::cos(n), s * v.x, s * v.y, s * v.z);
}

std::optional<Su2Vector> log_su2(const UnitQuaternion& q) {
  if (std::abs(q.a() + 1.0) < kAntipodeTol) return std::nullopt;
  const double s = std::sqrt(q.b() * q.b() + q.c() * q.c() + q.d() * q.d());
  if (s < 1e-12) return Su2Vector{q.b(), q.c(), q.d()};  // theta/s -> 1 near the identity
  // principal angle acos(a) computed as atan2(sin, cos): well-conditioned at
  // both ends and insensitive to sub-tolerance norm drift
  const double theta = std::atan2(s, q.a());
  const double f = theta / s;
  return Su2Vector{f * q.b(), f * q.c(), f * q.d()};
}

Su2Vector conj_action(const UnitQuaternion& g, const Su2Vector& v) {
  const Quaternion r = quat_mul(quat_mul(g.as_quaternion(), pure(v)), g.inverse().as_quaternion());
  return vector_part(r);
}

double distance(const UnitQuaternion& p, const UnitQuaternion& q) {
  if (p.a() == q.a() && p.b() == q.b() && p.c() == q.c() && p.d() == q.d()) return 0.0;
  const Quaternion m = quat_mul(p.inverse().as_quaternion(), q.as_quaternion());
  const double s = std::sqrt(m.b * m.b + m.c * m.c + m.d * m.d);
  return std::atan2(s, m.a);  // |log(p^-1 q)|, pi at the antipode
}

UnitQuaternion pow_unit(UnitQuaternion base, int n) {
  if (n < 0) throw std::invalid_argument("pow_unit requires n >= 0");
  UnitQuaternion acc = UnitQuaternion::identity();
  int mults = 0;
  while (n > 0) {
    if (n & 1) {
      acc = acc * base;
      ++mults;
    }
    n >>= 1;
    if (n) {
      base = base * base;
      ++mults;
    }
    if (mults >= 16) {
      acc = acc.normalized();
      base = base.normalized();
      mults = 0;
    }
  }
  return acc;
}

}  // namespace su2opt
