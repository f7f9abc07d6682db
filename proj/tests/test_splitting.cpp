#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <sstream>

#include "su2opt/splitting.hpp"
#include "test_helpers.hpp"

using namespace su2opt;
using namespace su2opt::testing;

namespace {
constexpr double kPi = std::numbers::pi;
const Su2Vector kA{kPi / 4, 0, 0};
const Su2Vector kB{0, kPi / 4, 0};
}  // namespace

TEST_SUITE("splitting") {
  TEST_CASE("single steps") {
    CHECK(near(lie_trotter(kA, kB, 1), exp_su2(kA) * exp_su2(kB), 1e-15));
    CHECK(near(strang(kA, kB, 1), exp_su2(kA * 0.5) * exp_su2(kB) * exp_su2(kA * 0.5), 1e-15));
  }

  TEST_CASE("commuting inputs are exact at any N") {
    const Su2Vector a{0.7, 0, 0}, b{0.4, 0, 0};
    const UnitQuaternion ref = exp_su2(a + b);
    for (int n : {1, 2, 16, 128, 1024}) {
      CHECK(distance(lie_trotter(a, b, n), ref) < 1e-14);
      CHECK(distance(strang(a, b, n), ref) < 1e-14);
    }
  }

  TEST_CASE("error halves / quarters when N doubles") {
    const UnitQuaternion ref = exp_su2(kA + kB);
    const double t16 = distance(lie_trotter(kA, kB, 16), ref);
    const double t32 = distance(lie_trotter(kA, kB, 32), ref);
    CHECK(t16 / t32 == doctest::Approx(2.0).epsilon(0.15));
    const double s16 = distance(strang(kA, kB, 16), ref);
    const double s32 = distance(strang(kA, kB, 32), ref);
    CHECK(s16 / s32 == doctest::Approx(4.0).epsilon(0.2));
  }

  TEST_CASE("convergence table fits the known orders") {
    const auto table = convergence_table(kA, kB, {16, 32, 64, 128, 256});
    REQUIRE(table.rows.size() == 5);
    CHECK_FALSE(table.trotter_exact);
    CHECK_FALSE(table.strang_exact);
    CHECK(std::abs(table.trotter_order - 1.0) < 0.15);
    CHECK(std::abs(table.strang_order - 2.0) < 0.15);
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
      CHECK(table.rows[i + 1].trotter_err <= table.rows[i].trotter_err);
      CHECK(table.rows[i + 1].strang_err <= table.rows[i].strang_err);
    }
  }

  TEST_CASE("convergence table flags commuting inputs as exact") {
    const auto table = convergence_table({0.5, 0, 0}, {0.25, 0, 0}, {16, 32, 64});
    CHECK(table.trotter_exact);
    CHECK(table.strang_exact);
    for (const auto& row : table.rows) {
      CHECK(row.trotter_err < 1e-14);
      CHECK(row.strang_err < 1e-14);
    }
  }

  TEST_CASE("symmetric splitting beats the plain product") {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> scale(0.3, 1.2);
    for (int it = 0; it < 20; ++it) {
      const Su2Vector a = random_direction(rng) * scale(rng);
      const Su2Vector b = random_direction(rng) * scale(rng);
      if (norm(a + b) < 0.1) continue;
      const UnitQuaternion ref = exp_su2(a + b);
      for (int n : {16, 64}) CHECK(distance(strang(a, b, n), ref) <= distance(lie_trotter(a, b, n), ref) + 1e-15);
    }
  }

  TEST_CASE("products stay unit at large N") {
    const UnitQuaternion q = lie_trotter(kA, kB, 1024);
    CHECK(std::abs(q.as_quaternion().norm() - 1.0) < 1e-9);
    CHECK_THROWS_AS(lie_trotter(kA, kB, 0), std::invalid_argument);
    CHECK_THROWS_AS(lie_trotter(kA, kB, 5000), std::invalid_argument);
  }

  TEST_CASE("the discretized singular control") {
    const ControlFrame frame(kPi / 2, 1.0);
    const auto zero = w_limit_witness(0.0, frame, 8);
    CHECK(near(zero.value, UnitQuaternion::identity(), 1e-15));
    CHECK(zero.cost == 0.0);

    const double t = 1.0;
    const UnitQuaternion ref = exp_su2(frame.w() * t);
    const auto w64 = w_limit_witness(t, frame, 64);
    const auto w128 = w_limit_witness(t, frame, 128);

    // cost is N-independent (bitwise for power-of-two N) and equals rate * t
    CHECK(w64.cost == w128.cost);
    CHECK(near(w64.cost, frame.cost_rate(Generator::W) * t, 1e-13));

    const double e64 = distance(w64.value, ref);
    const double e128 = distance(w128.value, ref);
    CHECK(e64 / e128 > 1.5);
    CHECK(e64 / e128 < 2.5);

    CHECK_THROWS_AS(w_limit_witness(1.0, ControlFrame(1.0, 0.3), 16), std::domain_error);
  }

  TEST_CASE("csv export format") {
    const auto table = convergence_table(kA, kB, {16, 32});
    std::ostringstream os;
    write_csv(table, os);
    const std::string s = os.str();
    CHECK(s.rfind("N,trotter_err,strang_err\n", 0) == 0);
    CHECK(s.find("16,") != std::string::npos);
    CHECK(s.find("32,") != std::string::npos);
  }
}
