#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "pseudospec/errors.hpp"
#include "pseudospec/filter.hpp"
#include "pseudospec/grid.hpp"
#include "pseudospec/solver_config.hpp"
#include "pseudospec/spectral_ops.hpp"
#include "pseudospec/transform.hpp"

using namespace pseudospec;
constexpr double pi = std::numbers::pi;

TEST_CASE("grid coordinates, wavenumbers and shapes") {
  const SpectralGrid g = SpectralGrid::line(16);
  CHECK(g.rank() == 1);
  CHECK(g.modes(0) == 8);
  CHECK(g.coordinate(0, 0) == doctest::Approx(-pi));
  CHECK(g.coordinate(0, 8) == doctest::Approx(0.0));
  CHECK(g.spacing(0) == doctest::Approx(2 * pi / 16));
  CHECK(g.wavenumber_index(0, 8) == 8);
  CHECK(g.wavenumber_index(0, 9) == -7);
  CHECK(g.spectral_extent(0) == 9);

  const SpectralGrid box = SpectralGrid::box({8, 10, 12});
  CHECK(box.point_count() == 960);
  CHECK(box.spectral_count() == 8 * 10 * 7);
  CHECK(box.wavenumber(2, 1) == doctest::Approx(0.5));  // period 4 pi
  CHECK(box.min_spacing() == doctest::Approx(4 * pi / 12));
}

TEST_CASE("grid rejects odd or tiny sample counts") {
  CHECK_THROWS_AS(SpectralGrid::line(15), ConfigError);
  CHECK_THROWS_AS(SpectralGrid::line(6), ConfigError);
  CHECK_THROWS_AS(SpectralGrid::box({64, 63, 128}), ConfigError);
}

TEST_CASE("filter profile values") {
  const auto sharp = FourierFilter::sharp_two_thirds();
  const auto smooth = FourierFilter::exponential();
  CHECK(sharp.value(0.0) == 1.0);
  CHECK(smooth.value(0.0) == 1.0);
  CHECK(sharp.value(2.0 / 3.0) == 1.0);
  CHECK(sharp.value(0.67) == 0.0);
  // exp(-36 x^36) evaluated directly
  CHECK(smooth.value(2.0 / 3.0) == doctest::Approx(std::exp(-36.0 * std::pow(2.0 / 3.0, 36))).epsilon(1e-15));
  CHECK(smooth.value(2.0 / 3.0) == doctest::Approx(0.9999836).epsilon(1e-6));
  CHECK(smooth.value(0.8) == doctest::Approx(0.98838).epsilon(1e-4));
  CHECK(smooth.value(1.0) <= 1e-15);
  CHECK_THROWS_AS(smooth.value(1.5), DomainError);
  CHECK_THROWS_AS(FourierFilter::exponential(-1.0, 36), ConfigError);
  CHECK_THROWS_AS(FourierFilter::exponential(36.0, 35), ConfigError);
  CHECK_THROWS_AS(FourierFilter::parse("box"), ConfigError);
}

TEST_CASE("sharp filter keeps modes exactly on the cut-off") {
  const auto sharp = FourierFilter::sharp_two_thirds();
  CHECK(sharp.mode_factor(2, 3) == 1.0);
  CHECK(sharp.mode_factor(-2, 3) == 1.0);
  CHECK(sharp.mode_factor(3, 4) == 0.0);
  CHECK(sharp.mode_factor(682, 1024) == 1.0);
  CHECK(sharp.mode_factor(683, 1024) == 0.0);
}

TEST_CASE("solver config validation") {
  SolverConfig c;
  CHECK(c.cfl == doctest::Approx(pi / 4));
  CHECK_NOTHROW(c.validate());
  c.cfl = 0.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.cfl = 0.8;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SolverConfig{};
  c.dt_ceiling = 1e-9;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("field shape checks") {
  const SpectralGrid g = SpectralGrid::line(16);
  CHECK_THROWS_AS(PhysicalField(g, 2), StructuralError);
  CHECK_THROWS_AS(PhysicalField(g, 1, AlignedVector<double>(15)), StructuralError);
  const SpectralField s(g, 1);
  CHECK_THROWS_AS(s.storage_index(0, -3), StructuralError);  // negative k is not stored on the last axis
  CHECK(s.storage_index(0, 8) == 8);
}

TEST_CASE("forward transform matches a direct DFT") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const std::size_t s1[] = {12};
  const double p1[] = {2 * pi};
  const std::size_t s2[] = {8, 10};
  const double p2[] = {2 * pi, 3.0};
  const std::size_t s3[] = {8, 8, 10};
  const double p3[] = {4 * pi, 4 * pi, 4 * pi};
  for (const SpectralGrid& g : {SpectralGrid(s1, p1), SpectralGrid(s2, p2), SpectralGrid(s3, p3)}) {
    PhysicalField u(g, 1);
    for (double& v : u.values()) v = uni(rng);
    const SpectralField fast = forward_transform(u);
    const auto slow = oracle::naive_forward(g, u.values());
    REQUIRE(slow.size() == fast.values().size());
    double err = 0.0;
    for (std::size_t i = 0; i < slow.size(); ++i) err = std::max(err, std::abs(slow[i] - fast.values()[i]));
    CHECK(err < 1e-14);
    // round trip
    const PhysicalField back = inverse_transform(fast);
    CHECK(oracle::max_abs_diff(back.values(), u.values()) < 1e-14);
  }
}

TEST_CASE("single mode coefficients") {
  // u = cos(3x) on [-pi, pi): u_hat_3 = 1/2
  const SpectralGrid g = SpectralGrid::line(32);
  const auto u = PhysicalField::sample(g, [](std::span<const double> x) { return std::cos(3 * x[0]); });
  const SpectralField s = forward_transform(u);
  CHECK(std::abs(s.values()[3] - Complex(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(s.values()[2]) < 1e-15);
}

TEST_CASE("inverse transform rejects a non-Hermitian spectrum") {
  const SpectralGrid g = SpectralGrid::line(16);
  SpectralField s(g, 1);
  s.values()[0] = Complex(1.0, 0.5);  // the mean of a real field must be real
  CHECK_THROWS_AS(inverse_transform(s), DataIntegrityError);
}

TEST_CASE("spectral derivative against finite differences and closed forms") {
  const SpectralGrid g = SpectralGrid::line(64);
  const auto u = PhysicalField::sample(g, [](std::span<const double> x) { return std::exp(std::sin(x[0])); });
  const PhysicalField du = spectral_derivative(u, FourierFilter::identity(), 0);
  const auto exact = PhysicalField::sample(
      g, [](std::span<const double> x) { return std::cos(x[0]) * std::exp(std::sin(x[0])); });
  CHECK(oracle::max_abs_diff(du.values(), exact.values()) < 1e-12);
  const auto fd = oracle::fd_derivative(g, u.values(), 0);
  CHECK(oracle::max_abs_diff(du.values(), fd) < 1e-6);

  // Filtered derivative: i k rho(k/N). For sin(3x) with N = 32 the factor is 1 for both filters.
  const auto v = PhysicalField::sample(g, [](std::span<const double> x) { return std::sin(3 * x[0]); });
  for (const auto& f : {FourierFilter::sharp_two_thirds(), FourierFilter::exponential()}) {
    const PhysicalField dv = spectral_derivative(v, f, 0);
    const auto expect =
        PhysicalField::sample(g, [](std::span<const double> x) { return 3 * std::cos(3 * x[0]); });
    CHECK(oracle::max_abs_diff(dv.values(), expect.values()) < 1e-13);
  }
  // A mode above the 2/3 cut-off disappears under the sharp filter.
  const auto w = PhysicalField::sample(g, [](std::span<const double> x) { return std::sin(25 * x[0]); });
  const PhysicalField dw = spectral_derivative(w, FourierFilter::sharp_two_thirds(), 0);
  CHECK(oracle::max_abs(dw.values()) < 1e-13);
  CHECK_THROWS_AS(spectral_derivative(w, FourierFilter::identity(), 1), StructuralError);
}

TEST_CASE("derivative along each axis of a 3D box") {
  const SpectralGrid g = SpectralGrid::box({32, 24, 40});
  const auto u = PhysicalField::sample(g, [](std::span<const double> x) {
    return std::sin(0.5 * x[0]) * std::cos(x[1]) * std::sin(1.5 * x[2]);
  });
  for (std::size_t axis = 0; axis < 3; ++axis) {
    const PhysicalField du = spectral_derivative(u, FourierFilter::identity(), axis);
    const auto fd = oracle::fd_derivative(g, u.values(), axis);
    CHECK(oracle::max_abs_diff(du.values(), fd) < 1e-4);
  }
}

TEST_CASE("filter application is a tensor product") {
  const SpectralGrid g = SpectralGrid::box({12, 12, 12});
  SpectralField s(g, 1);
  for (Complex& c : s.values()) c = 1.0;
  const auto f = FourierFilter::exponential();
  const SpectralField out = apply_filter(s, f);
  const std::size_t idx[] = {5, 3, 6};
  const double expect = f.value(5.0 / 6.0) * f.value(3.0 / 6.0) * f.value(1.0);
  CHECK(out.values()[s.index(idx)].real() == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("spectral energy equals the mean square") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  const SpectralGrid g = SpectralGrid::box({8, 10, 12});
  PhysicalField u(g, 1);
  for (double& v : u.values()) v = normal(rng);
  double mean_sq = 0.0;
  for (double v : u.values()) mean_sq += v * v;
  mean_sq /= static_cast<double>(g.point_count());
  const SpectralField s = forward_transform(u);
  CHECK(spectral_energy(g, s.values()) == doctest::Approx(mean_sq).epsilon(1e-13));
}
