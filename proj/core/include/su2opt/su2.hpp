#ifndef SU2OPT_SU2_HPP
#define SU2OPT_SU2_HPP

#include <cmath>
#include <optional>

namespace su2opt {

/// Element of the quaternion algebra H = span{1, i, j, k}.
struct Quaternion {
  double a = 1.0;  // scalar part
  double b = 0.0;  // coefficient of i
  double c = 0.0;  // coefficient of j
  double d = 0.0;  // coefficient of k

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  double norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }
  Quaternion conjugate() const { return {a, -b, -c, -d}; }
};

/// Hamilton product; i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
Quaternion quat_mul(const Quaternion& p, const Quaternion& q);

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) { return quat_mul(p, q); }
inline Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}
inline Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
}
inline Quaternion operator*(double s, const Quaternion& q) { return {s * q.a, s * q.b, s * q.c, s * q.d}; }

/// Element of su(2) in the orthonormal basis {i, j, k}.
struct Su2Vector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Su2Vector operator+(const Su2Vector& u, const Su2Vector& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
inline Su2Vector operator-(const Su2Vector& u, const Su2Vector& v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
inline Su2Vector operator-(const Su2Vector& v) { return {-v.x, -v.y, -v.z}; }
inline Su2Vector operator*(const Su2Vector& v, double s) { return {v.x * s, v.y * s, v.z * s}; }
inline Su2Vector operator*(double s, const Su2Vector& v) { return v * s; }

inline double dot(const Su2Vector& u, const Su2Vector& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }
inline double norm(const Su2Vector& v) { return std::sqrt(dot(v, v)); }

/// v viewed as a pure quaternion x i + y j + z k.
inline Quaternion pure(const Su2Vector& v) { return {0.0, v.x, v.y, v.z}; }
inline Su2Vector vector_part(const Quaternion& q) { return {q.b, q.c, q.d}; }

/// Point of SU(2) realized as a unit quaternion. Constructors renormalize;
/// the stored norm stays within 1e-9 of 1 (a product whose raw norm drifts
/// past 1e-6 throws, past 1e-9 renormalizes).
class UnitQuaternion {
 public:
  UnitQuaternion() = default;  // identity

  /// Renormalizing constructor. Throws std::invalid_argument on a near-zero norm.
  UnitQuaternion(double a, double b, double c, double d);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  static UnitQuaternion identity() { return {}; }

  Quaternion as_quaternion() const { return {a_, b_, c_, d_}; }
  UnitQuaternion inverse() const;
  UnitQuaternion normalized() const;

  friend UnitQuaternion operator*(const UnitQuaternion& p, const UnitQuaternion& q);

 private:
  struct Unchecked {};
  UnitQuaternion(Unchecked, double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}
  static UnitQuaternion unchecked(double a, double b, double c, double d) {
    return UnitQuaternion(Unchecked{}, a, b, c, d);
  }

  double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 0.0;

  friend UnitQuaternion exp_su2(const Su2Vector& v);
};

/// exp(v) = cos|v| + (v/|v|) sin|v|; exp(0) = 1.
UnitQuaternion exp_su2(const Su2Vector& v);

/// Principal logarithm, |result| in [0, pi). Empty at the antipode -1
/// (|a + 1| < 1e-12), where no principal axis exists; callers treat that
/// point as residual pi.
std::optional<Su2Vector> log_su2(const UnitQuaternion& q);

/// Conjugation action g v g^-1 of SU(2) on its Lie algebra; norm preserving.
Su2Vector conj_action(const UnitQuaternion& g, const Su2Vector& v);

/// Bi-invariant distance |log(p^-1 q)|, with the convention pi at the antipode.
double distance(const UnitQuaternion& p, const UnitQuaternion& q);

/// base^n by binary exponentiation, renormalizing every 16 multiplications.
UnitQuaternion pow_unit(UnitQuaternion base, int n);

}  // namespace su2opt

#endif
