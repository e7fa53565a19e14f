#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "duffing/approx.hpp"
#include "duffing/integrators.hpp"

using namespace duffing;

TEST_CASE("analytical undamped solution") {
  CHECK(analytical_undamped(1, 0, 1, 0) == 1.0);
  CHECK(analytical_undamped(0, 1, 2, std::numbers::pi / 4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(analytical_undamped(0.05, 0, 0.2, 5) == doctest::Approx(0.02701511529340698737).epsilon(1e-14));
}

TEST_CASE("homotopy series") {
  const HomotopyApprox series{0.05, 0.2, 0.05, 0.00015625};
  CHECK(homotopy_approx(series, 0.0) == doctest::Approx(0.050000390625).epsilon(1e-15));
  CHECK(homotopy_primary(series, 0.0) + homotopy_correction(series, 0.0) ==
        doctest::Approx(homotopy_approx(series, 0.0)).epsilon(1e-15));

  HomotopyApprox zero = series;
  zero.lambda_h = 0.0;
  for (double t : {0.0, 1.0, 7.5, 31.0}) CHECK(homotopy_approx(zero, t) == analytical_undamped(0.05, 0, 0.2, t));

  CHECK(std::abs(homotopy_approx(series, std::numbers::pi / (2 * 0.2))) <= 1e-17);

  HomotopyApprox bad = series;
  bad.lambda_h = -0.1;
  CHECK_THROWS_AS(homotopy_approx(bad, 0.0), UsageError);
}

TEST_CASE("homotopy series is monotone in lambda^2 where cos > 0") {
  HomotopyApprox cfg{0.05, 0.2, 0.0, 0.00015625};
  const double t = 2.0;  // cos(0.4) > 0
  double prev = homotopy_approx(cfg, t);
  for (int i = 1; i <= 20; ++i) {
    cfg.lambda_h = i / 20.0;
    const double cur = homotopy_approx(cfg, t);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("bessel j0 against high-precision values") {
  CHECK(bessel_j0(0.0) == 1.0);
  // Reference values from a 40-digit evaluation.
  CHECK(std::abs(bessel_j0(1.0) - 0.7651976865579666) <= 1e-12);
  CHECK(std::abs(bessel_j0(0.5) - 0.93846980724081290423) <= 1e-14);
  CHECK(std::abs(bessel_j0(5.0) - (-0.17759677131433830435)) <= 1e-13);
  CHECK(std::abs(bessel_j0(-7.5) - 0.26633965788037839687) <= 1e-13);
  CHECK(std::abs(bessel_j0(10.0) - (-0.2459357644513483352)) <= 1e-12);
  CHECK(std::abs(bessel_j0(2.404825557695773)) <= 1e-10);
}

TEST_CASE("bessel j0 agrees with the standard library and is even") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    const double j = bessel_j0(x);
    CHECK(std::abs(j) <= 1.0);
    CHECK(std::abs(j - bessel_j0(-x)) <= 1e-15);
    CHECK(std::abs(j - std::cyl_bessel_j(0.0, std::abs(x))) <= 1e-12);
  }
}

TEST_CASE("bessel j0 domain") {
  CHECK_NOTHROW(bessel_j0(50.0));
  CHECK_THROWS_AS(bessel_j0(50.5), UsageError);
  CHECK_THROWS_AS(bessel_j0(std::nan("")), UsageError);
}

TEST_CASE("error model and bound") {
  CHECK(error_model(0.37, 0.0) == 0.37);
  CHECK(std::abs(error_model(0.05, 1.0) - 0.038259884327898329696) <= 1e-9);
  CHECK(error_bound(0.0) == 0.0);
  CHECK(error_bound(-0.05) == 0.05);
  CHECK(error_bound(0.048) == 0.048);
  CHECK_THROWS_AS(error_model(1.0, 1.5), UsageError);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> a(-2.0, 2.0), lam(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double coef = a(rng);
    const double ratio = error_model(coef, lam(rng)) / error_bound(coef);
    CHECK(ratio >= -1.0);
    CHECK(ratio <= 1.0);
  }
}

namespace {

// q' = p, p' = q with q(0) = p(0) = 1 keeps q = p, i.e. scalar growth q' = q.
const ModelSpec kGrowth{.kind = ModelKind::LinearTest, .delta = 0.0, .alpha = -1.0};

}  // namespace

TEST_CASE("picard zeroth iterate is the initial state") {
  const auto grid = uniform_grid(0.0, 1.0, 0.1);
  const PicardResult r = picard_solve(kGrowth, {1, 1, 0}, grid, 0);
  REQUIRE(r.trajectory.samples.size() == grid.size());
  for (const State& s : r.trajectory.samples) {
    CHECK(s.q == 1.0);
    CHECK(s.p == 1.0);
  }
  CHECK(r.increments.empty());
}

TEST_CASE("picard reproduces the truncated Taylor series") {
  const auto grid = uniform_grid(0.0, 0.5, 1e-3);
  const PicardResult r = picard_solve(kGrowth, {1, 1, 0}, grid, 3);
  const double taylor = 1.0 + 0.5 + 0.125 + 0.125 / 6.0;
  CHECK(std::abs(r.trajectory.samples.back().q - taylor) <= 5e-4);
  CHECK(std::abs(r.trajectory.samples.back().q - 1.6458333) <= 5e-4);
}

TEST_CASE("picard increments shrink on a contractive horizon") {
  const auto grid = uniform_grid(0.0, 0.5, 1e-3);
  const PicardResult r = picard_solve(kGrowth, {1, 1, 0}, grid, 7);
  REQUIRE(r.increments.size() == 7);
  for (std::size_t k = 1; k < r.increments.size(); ++k) CHECK(r.increments[k] < r.increments[k - 1]);
}

TEST_CASE("picard agrees with rk4 on a short classic Duffing horizon") {
  const ModelSpec duffing{.kind = ModelKind::DuffingClassic, .delta = 0.3, .alpha = -1, .beta = 1, .gamma = 0.5, .omega = 1.2};
  const State s0{0.5, 0.0, 0.0};
  const auto grid = uniform_grid(0.0, 1.0, 1e-3);
  const PicardResult pic = picard_solve(duffing, s0, grid, 12);
  const auto rk = integrate(duffing, s0, {1e-3, 0.0, 1.0, Method::RK4, 1});
  REQUIRE(rk.trajectory.samples.size() == pic.trajectory.samples.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    worst = std::max(worst, std::abs(rk.trajectory.samples[i].q - pic.trajectory.samples[i].q));
  CHECK(worst <= 1e-3);
}

TEST_CASE("picard grid validation") {
  const std::vector<double> bad{0.0, 0.2, 0.1};
  CHECK_THROWS_AS(picard_solve(kGrowth, {1, 1, 0}, bad, 2), UsageError);
  const std::vector<double> shifted{0.1, 0.2};
  CHECK_THROWS_AS(picard_solve(kGrowth, {1, 1, 0}, shifted, 2), UsageError);
  CHECK_THROWS_AS(picard_solve(kGrowth, {1, 1, 0}, std::vector<double>{}, 2), UsageError);
}
