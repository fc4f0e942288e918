// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pseudospec/burgers.hpp"
#include "pseudospec/diagnostics.hpp"
#include "pseudospec/euler.hpp"
#include "pseudospec/transform.hpp"

using namespace pseudospec;
namespace bg = pseudospec::burgers;
namespace dg = pseudospec::diagnostics;
constexpr double pi = std::numbers::pi;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Runs are shared between criteria.
std::map<std::string, std::vector<bg::Snapshot>> cache;

const std::vector<bg::Snapshot>& burgers_run(const bg::InitialCondition& ic, std::size_t n, const FourierFilter& f,
                                             const std::vector<double>& times) {
  std::string key = ic.name() + "/" + f.name() + "/" + std::to_string(n);
  for (double t : times) key += "/" + dg::time_tag(t);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, bg::run_burgers(ic, SpectralGrid::line(2 * n), f, times)).first;
  return it->second;
}

const auto sharp = FourierFilter::sharp_two_thirds();
const auto smooth = FourierFilter::exponential();

double region_max(const bg::Snapshot& s, double half_width) {
  const auto& g = s.state.u.grid();
  double m = 0.0;
  for (std::size_t j = 0; j < g.samples(0); ++j)
    if (std::abs(g.coordinate(0, j)) <= half_width) m = std::max(m, s.error.pointwise[j]);
  return m;
}

Outcome oracle_fidelity() {
  const auto ic = bg::InitialCondition::sine();
  const PhysicalField u = bg::exact_solution(ic, 0.985, SpectralGrid::line(4096));
  const double worst = oracle::max_abs(bg::oracle_residuals(ic, 0.985, u));
  return {worst <= 1e-13, fmt("max residual %.3e", worst)};
}

Outcome filter_profile() {
  const double a = smooth.value(2.0 / 3.0), b = smooth.value(0.8), c = smooth.value(1.0);
  const bool ok = std::abs(a - 0.9999836) <= 1e-6 && std::abs(b - 0.98838) <= 1e-4 && c <= 1e-15;
  return {ok, fmt("rho(2/3)=%.9f rho(0.8)=%.6f rho(1)=%.3e", a, b, c)};
}

Outcome spectral_convergence() {
  // cfl 0.01 keeps the third-order time error below the spatial error.
  const auto ic = bg::InitialCondition::sine();
  const double t[] = {0.5};
  bool ok = true;
  std::string detail;
  for (const auto& f : {sharp, smooth}) {
    std::vector<double> err;
    for (std::size_t n : {128u, 256u, 512u})
      err.push_back(bg::run_burgers(ic, SpectralGrid::line(2 * n), f, t, 0.01).front().error.l_inf);
    for (std::size_t i = 1; i < err.size(); ++i) ok = ok && err[i] <= std::max(err[i - 1] / 1e3, 1e-12);
    detail += fmt("%s: %.2e %.2e %.2e; ", f.name().c_str(), err[0], err[1], err[2]);
  }
  return {ok, detail};
}

bool ordering_holds(const bg::InitialCondition& ic, const std::vector<double>& times, std::string& detail) {
  bool ok = true;
  const std::size_t ns[] = {1024, 2048};
  for (std::size_t k = 0; k < times.size(); ++k) {
    double prev_sharp_inf = INFINITY, prev_sharp_1 = INFINITY, prev_smooth_inf = INFINITY, prev_smooth_1 = INFINITY;
    for (std::size_t n : ns) {
      const auto& a = burgers_run(ic, n, sharp, times)[k].error;
      const auto& b = burgers_run(ic, n, smooth, times)[k].error;
      ok = ok && b.l_inf < a.l_inf && b.l_1 < a.l_1;
      ok = ok && a.l_inf < prev_sharp_inf && a.l_1 < prev_sharp_1 && b.l_inf < prev_smooth_inf && b.l_1 < prev_smooth_1;
      prev_sharp_inf = a.l_inf;
      prev_sharp_1 = a.l_1;
      prev_smooth_inf = b.l_inf;
      prev_smooth_1 = b.l_1;
      detail += fmt("t=%s N=%zu inf %.2e/%.2e L1 %.2e/%.2e; ", dg::time_tag(times[k]).c_str(), n, a.l_inf, b.l_inf,
                    a.l_1, b.l_1);
    }
  }
  return ok;
}

Outcome filter_comparison() {
  std::string detail = "sharp/smooth ";
  const bool ok = ordering_holds(bg::InitialCondition::sine(), {0.975, 0.985}, detail);
  return {ok, detail};
}

Outcome error_localization() {
  const std::vector<double> times{0.975, 0.985};
  const auto ic = bg::InitialCondition::sine();
  const auto& s = burgers_run(ic, 2048, smooth, times)[1];
  const auto& h = burgers_run(ic, 2048, sharp, times)[1];
  const double inner_smooth = region_max(s, pi / 2), inner_sharp = region_max(h, pi / 2);
  const bool ok = inner_smooth <= 1e-3 * s.error.l_inf && inner_sharp >= 1e2 * inner_smooth;
  return {ok, fmt("smooth inner %.2e global %.2e; sharp inner %.2e", inner_smooth, s.error.l_inf, inner_sharp)};
}

Outcome effective_modes() {
  const std::size_t n = 4096;
  const std::vector<double> times{0.985};
  const auto ic = bg::InitialCondition::sine();
  const auto& s = burgers_run(ic, n, smooth, times).front();
  const auto& h = burgers_run(ic, n, sharp, times).front();
  const long band_smooth = bg::accurate_band(s.spectrum);
  const long band_sharp = bg::accurate_band(h.spectrum);
  double scale = 0.0, above = 0.0;
  for (const auto& r : h.spectrum) {
    scale = std::max(scale, r.modulus);
    if (3 * r.k > 2 * static_cast<long>(n)) above = std::max(above, r.modulus);
  }
  const double nn = static_cast<double>(n);
  // "Identically zero" is checked at roundoff level relative to the largest mode.
  const bool ok = band_smooth >= static_cast<long>(0.75 * nn) && above <= 1e-14 * scale &&
                  static_cast<double>(band_smooth - band_sharp) >= 0.08 * nn;
  return {ok, fmt("band smooth %ld sharp %ld (extra %.1f%% of N); sharp above cut %.2e", band_smooth, band_sharp,
                  100.0 * static_cast<double>(band_smooth - band_sharp) / nn, above / scale)};
}

Outcome second_initial_condition() {
  const auto ic = bg::InitialCondition::inverse_sqrt_sin_sq(0.1);
  const double shock = bg::shock_time(ic);
  const std::vector<double> times{0.975 * shock, 0.985 * shock};
  std::string detail = "sharp/smooth ";
  bool ok = ordering_holds(ic, times, detail);
  double odd = 0.0;
  for (std::size_t n : {1024u, 2048u})
    for (const auto& f : {sharp, smooth})
      for (const auto& snap : burgers_run(ic, n, f, times))
        for (const auto& r : snap.spectrum)
          if (r.k % 2 == 1) odd = std::max(odd, r.modulus);
  ok = ok && odd <= 1e-13;
  detail += fmt("max odd mode %.2e", odd);
  return {ok, detail};
}

Outcome euler_invariants() {
  struct Watch : euler::RunObserver {
    double div_u = 0.0, div_w = 0.0, sym = 0.0, drift = 0.0, e0 = -1.0;
    std::size_t outputs = 0;
    void on_output(const euler::VorticityState& s, double dt) override {
      const SpectralField w_hat = forward_transform(s.omega);
      div_u = std::max(div_u, euler::divergence_residual(euler::vorticity_to_velocity(w_hat, s.config.filter)));
      div_w = std::max(div_w, euler::divergence_residual(w_hat));
      sym = std::max(sym, euler::symmetry_residuals(s.omega).max());
      const double e = dg::compute_record(s, dt).energy;
      if (e0 < 0.0) e0 = e;
      drift = std::max(drift, std::abs(e - e0) / e0);
      ++outputs;
    }
  };
  const SpectralGrid g = SpectralGrid::box({64, 64, 128});
  bool ok = true;
  std::string detail;
  for (const auto& f : {sharp, smooth}) {
    SolverConfig c;
    c.filter = f;
    Watch w;
    euler::run_euler(euler::make_tube_initial_data(euler::TubeParams{}, g, c), 2.0, &w);
    ok = ok && w.outputs == 5 && w.div_u <= 1e-13 && w.div_w <= 1e-11 && w.sym <= 1e-9 && w.drift <= 1e-3;
    detail += fmt("%s: div u %.1e, div w %.1e, sym %.1e, drift %.1e; ", f.name().c_str(), w.div_u, w.div_w, w.sym,
                  w.drift);
  }
  return {ok, detail};
}

Outcome curl_consistency() {
  const SpectralGrid g = SpectralGrid::box({16, 16, 16});
  double worst = 0.0;
  for (unsigned seed = 0; seed < 100; ++seed) {
    const PhysicalField w = oracle::random_solenoidal(g, 3, 1000 + seed);
    const PhysicalField u = euler::vorticity_to_velocity(w, smooth);
    worst = std::max(worst, oracle::max_abs_diff(euler::curl(u).values(), w.values()) / w.max_norm());
  }
  return {worst <= 1e-11, fmt("worst relative error %.2e over 100 fields", worst)};
}

Outcome stretching_identity() {
  // d|w|/dt = stretching for w = exp(exp t); derivative by central differences.
  const double h = 1e-5;
  std::vector<dg::GrowthSample> series;
  for (int i = 0; i <= 200; ++i) {
    const double t = 0.01 * i;
    const double w = std::exp(std::exp(t));
    const double dw = (std::exp(std::exp(t + h)) - std::exp(std::exp(t - h))) / (2 * h);
    series.push_back({t, w, dw});
  }
  const dg::GrowthTable table = dg::growth_comparison(series);
  double worst = 0.0;
  for (const auto& r : table.rows) worst = std::max(worst, std::abs(r.stretching - r.log_model) / r.log_model);
  return {worst <= 0.05, fmt("c1 %.6f, worst relative gap %.2e", table.c1, worst)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"oracle-fidelity", oracle_fidelity},
      {"filter-profile", filter_profile},
      {"spectral-convergence", spectral_convergence},
      {"filter-comparison", filter_comparison},
      {"error-localization", error_localization},
      {"effective-modes", effective_modes},
      {"second-initial-condition", second_initial_condition},
      {"euler-invariants", euler_invariants},
      {"curl-consistency", curl_consistency},
      {"stretching-identity", stretching_identity},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
