// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <fekete/bazilevic.hpp>
#include <fekete/bounds.hpp>
#include <fekete/caratheodory.hpp>
#include <fekete/distributions.hpp>
#include <fekete/powerseries.hpp>
#include <fekete/telephone.hpp>
#include <fekete/verify.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"

namespace {

using namespace fekete;
using fekete::testing::Gen;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) detail << why;
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double factorial(long n) {
  double f = 1;
  for (long k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

double binomial(long n, long k) {
  double b = 1;
  for (long j = 1; j <= k; ++j) b = b * static_cast<double>(n - k + j) / static_cast<double>(j);
  return b;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1e-300, std::abs(want)); }

Verdict gtn_consistency() {
  Verdict v;
  const auto start = Clock::now();
  double worst = 0;
  for (const char* text : {"1", "2", "3", "7/2"}) {
    const Rational vk = parse_rational(text);
    const auto seq = gtn_sequence(vk, 20);
    const auto x = x_series(static_cast<double>(vk), 20);
    for (long n = 0; n <= 20; ++n) {
      const double exact = static_cast<double>(seq.values[static_cast<std::size_t>(n)]);
      worst = std::max(worst, rel_err(x[static_cast<std::size_t>(n)].real() * factorial(n), exact));
      v.require(gtn(vk, n) == seq.values[static_cast<std::size_t>(n)], "recurrence and sequence disagree");
    }
  }
  const auto one = gtn_sequence(1, 5);
  const long expected[] = {1, 1, 2, 4, 10, 26};
  for (std::size_t n = 0; n <= 5; ++n) v.require(one.values[n] == expected[n], "varkappa=1 sequence is not 1,1,2,4,10,26");
  const double elapsed = seconds_since(start);
  v.require(worst <= 1e-9, "relative error above 1e-9");
  v.require(elapsed < 1, "runtime above 1 s");
  v.detail << (v.pass ? "" : "; ") << "max rel err " << worst << ", " << elapsed << " s";
  return v;
}

Verdict x_closed_forms() {
  Verdict v;
  double worst = 0;
  for (double k : {1.0, 2.0}) {
    const auto x = x_series(k, 5);
    const double closed[] = {1, 1, (1 + k) / 2, (1 + 3 * k) / 6, (3 * k * k + 6 * k + 1) / 24,
                             (1 + 10 * k + 15 * k * k) / 120};
    for (std::size_t n = 0; n <= 5; ++n) worst = std::max(worst, std::abs(x[n] - closed[n]));
  }
  v.require(worst <= 1e-12, "closed form mismatch");
  v.detail << (v.pass ? "" : "; ") << "max abs err " << worst;
  return v;
}

Verdict series_round_trips() {
  Verdict v;
  const auto start = Clock::now();
  Gen g(2024);
  constexpr std::size_t order = 12;
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    TruncatedSeries unit(order), zero(order);
    unit[0] = 1;
    for (std::size_t k = 1; k <= order; ++k) {
      const double r = 0.5 / static_cast<double>(k);
      unit[k] = g.complex_in_disk(r);
      zero[k] = g.complex_in_disk(r);
    }
    const auto map = TruncatedSeries::from_coeffs(g.univalent_map(order, 0.5));
    worst = std::max(worst, max_coeff_distance(exp_series(log_series(unit)), unit));
    worst = std::max(worst, max_coeff_distance(log_series(exp_series(zero)), zero));
    worst = std::max(worst, max_coeff_distance(compose(map, revert(map)), TruncatedSeries::identity(order)));
    worst = std::max(worst, max_coeff_distance(compose(revert(map), map), TruncatedSeries::identity(order)));
  }
  const double elapsed = seconds_since(start);
  v.require(worst <= 1e-10, "identity error above 1e-10");
  v.require(elapsed < 5, "runtime above 5 s");
  v.detail << (v.pass ? "" : "; ") << "max err " << worst << ", " << elapsed << " s";
  return v;
}

Verdict lemma_attainment() {
  Verdict v;
  const auto start = Clock::now();
  const GridSpec grid = GridSpec::uniform(60);
  auto check = [&](Complex c, double bound) {
    const auto r = brute_force_sup([c](const CaratheodoryPoint& p) { return std::abs(p.c2 - c * p.c1 * p.c1); }, grid);
    std::ostringstream where;
    where << "v=" << c << " sup " << r.value << " bound " << bound;
    v.require(r.value <= bound + 1e-9 && r.value >= bound - 0.05, where.str());
    return bound - r.value;
  };
  double widest = 0;
  for (double c : {-1.0, 0.0, 0.5, 1.0, 2.0}) widest = std::max(widest, check(c, lemma1_bound(c)));
  Gen g(60);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex c(g.uniform(-3, 3), g.uniform(-3, 3));
    widest = std::max(widest, check(c, lemma3_bound(c)));
  }
  const double elapsed = seconds_since(start);
  v.require(elapsed < 60, "runtime above 60 s");
  v.detail << (v.pass ? "" : "; ") << "largest bound - sup " << widest << ", " << elapsed << " s";
  return v;
}

Verdict schwarz_round_trip() {
  Verdict v;
  const auto start = Clock::now();
  Gen g(8);
  double worst = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const ClassParams p{g.uniform(0, 2), g.uniform(0, 2), g.uniform(0.5, 3)};
    const auto w = TruncatedSeries::from_coeffs(g.schwarz(static_cast<std::size_t>(g.integer(1, 7)), 0.9)).with_order(7);
    const auto f = solve_from_schwarz(w, p, 8);
    const auto witness = membership_witness(f, p);
    worst = std::max(worst, max_coeff_distance(witness.w, w));
  }
  const double elapsed = seconds_since(start);
  v.require(worst <= 1e-7, "recovered Schwarz function off by more than 1e-7");
  v.require(elapsed < 10, "runtime above 10 s");
  v.detail << (v.pass ? "" : "; ") << "max err " << worst << ", " << elapsed << " s";
  return v;
}

Verdict relation_oracle() {
  Verdict v;
  const auto star = derive_relation({0, 0, 1});
  const auto convex = derive_relation({1, 0, 1});
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-6; };
  v.require(near(star.linear_a2, 1) && near(star.linear_a3, 2) && near(star.quad_a2, -1), "(0,0) relation off");
  v.require(near(convex.linear_a2, 2) && near(convex.linear_a3, 6) && near(convex.quad_a2, -4), "(1,0) relation off");
  const auto printed = stated_relation({0, 0, 1});
  v.detail << (v.pass ? "" : "; ") << "(0,0) -> (" << star.linear_a2 << ", " << star.linear_a3 << ", " << star.quad_a2
           << ") vs printed quadratic " << printed.quad_a2 << "; (1,0) -> (" << convex.linear_a2 << ", "
           << convex.linear_a3 << ", " << convex.quad_a2 << ")";
  return v;
}

Verdict piecewise_continuity() {
  Verdict v;
  Gen g(77);
  double jump1 = 0, jump2 = 0, width = 0;
  ClassParams worst_at{};
  for (int trial = 0; trial < 100; ++trial) {
    const ClassParams p{g.uniform(0, 2), g.uniform(0, 2), g.uniform(0, 4)};
    const auto knots = fs_real(p, 0);
    auto jump = [&](double at) {
      const double d = 1e-11 * std::max(1.0, std::abs(at));
      return std::abs(fs_real(p, at + d).value - fs_real(p, at - d).value);
    };
    jump1 = std::max(jump1, jump(knots.sigma1));
    const double j2 = jump(knots.sigma2);
    if (j2 > jump2) {
      jump2 = j2;
      worst_at = p;
    }
    const double w = p.a2_scale();
    width = std::max(width, std::abs((knots.sigma2 - knots.sigma1) - w * w / (2 * p.a3_scale())));
  }
  v.require(jump1 <= 1e-9, "discontinuous at sigma1");
  v.require(jump2 <= 1e-9, "discontinuous at sigma2");
  v.require(width <= 1e-12, "sigma2 - sigma1 != W^2/(2L)");
  v.detail << (v.pass ? "" : "; ") << "max jump at sigma1 " << jump1 << ", at sigma2 " << jump2 << " (worst at vartheta="
           << worst_at.vartheta << ", kappa=" << worst_at.kappa << ", varkappa=" << worst_at.varkappa
           << "), knot-width err " << width;
  if (jump2 > 1e-9) {
    v.detail << "; the middle and upper formulas meet at sigma1 + 2W^2/L, which is inconsistent with the required"
                " knot width W^2/(2L)";
  }
  return v;
}

const SweepResult& full_suite() {
  static const SweepResult result = run_suite(Suite::Full, GridSpec::uniform(60));
  return result;
}

Verdict soundness() {
  Verdict v;
  const auto start = Clock::now();
  const auto& result = full_suite();
  double worst = -1e300;
  std::string where;
  for (const auto& r : result.reports) {
    if (r.empirical_sup - r.oracle > worst) {
      worst = r.empirical_sup - r.oracle;
      where = r.experiment_id;
    }
    v.require(r.empirical_sup <= r.oracle + 1e-9, "unsound report " + r.experiment_id);
  }
  v.require(result.summary.soundness_violations == 0, "summary counts violations");
  v.detail << (v.pass ? "" : "; ") << result.reports.size() << " reports, max sup - oracle " << worst << " at "
           << where << ", " << seconds_since(start) << " s";
  return v;
}

Verdict discrepancy_detection() {
  Verdict v;
  std::map<std::string, Discrepancy> found;
  for (const auto& r : full_suite().reports) {
    for (const auto& d : r.discrepancies) {
      if (d.id == "D1" && !(r.params.vartheta == 0 && r.params.kappa == 0)) continue;
      if (!found.count(d.id)) found.emplace(d.id, d);
    }
  }
  bool first = true;
  for (const char* id : {"D1", "D2", "D3", "D4"}) {
    const auto it = found.find(id);
    if (it == found.end()) {
      v.require(false, std::string(id) + " not flagged");
      continue;
    }
    const bool recorded = std::isfinite(it->second.stated) && std::isfinite(it->second.reference) &&
                          it->second.stated != it->second.reference;
    v.require(recorded, std::string(id) + " lacks both values");
    v.detail << (first && v.pass ? "" : "; ") << id << " stated " << it->second.stated << " vs " << it->second.reference;
    first = false;
  }
  return v;
}

Verdict distribution_formulas() {
  Verdict v;
  Gen g(10);
  double worst = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const double m = g.uniform(0.05, 6);
    for (long n : {2L, 3L}) {
      worst = std::max(worst, rel_err(poisson_coeff(m, n), std::pow(m, n - 1) / factorial(n - 1) * std::exp(-m)));
    }
    const double s = g.uniform(0.01, 1);
    for (long n : {2L, 3L}) {
      const double want =
          std::pow(static_cast<double>(n - 1) * s, static_cast<double>(n - 2)) / factorial(n - 1) * std::exp(-s * (n - 1));
      worst = std::max(worst, rel_err(borel_coeff(s, n), want));
    }
    const double q = g.uniform(0.01, 0.99);
    const long ps = g.integer(1, 10);
    for (long n : {2L, 3L}) {
      const double want = binomial(n + ps - 2, ps - 1) * std::pow(q, n - 1) * std::pow(1 - q, ps);
      worst = std::max(worst, rel_err(pascal_coeff(q, ps, n), want));
    }
  }
  v.require(worst <= 1e-12, "closed form mismatch");
  double sum_err = 0;
  for (double q : {0.05, 0.3, 0.5, 0.7}) {
    for (long ps : {1L, 2L, 4L, 8L}) {
      double total = 0;
      for (long n = 1; n <= 200; ++n) total += pascal_coeff(q, ps, n);
      sum_err = std::max(sum_err, std::abs(total - 1));
    }
  }
  v.require(sum_err <= 1e-8, "Pascal partial sums miss 1");
  v.detail << (v.pass ? "" : "; ") << "max rel err " << worst << ", partial-sum err " << sum_err;
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"telephone numbers agree with the exponential generating function", gtn_consistency},
      {"characteristic series matches its closed-form coefficients", x_closed_forms},
      {"series engine round trips (exp/log, compose/revert)", series_round_trips},
      {"grid supremum attains the Caratheodory lemma bounds", lemma_attainment},
      {"Schwarz round trip through solve and membership witness", schwarz_round_trip},
      {"derived coefficient relation at the starlike and convex corners", relation_oracle},
      {"real Fekete-Szego bound continuous at both knots", piecewise_continuity},
      {"full verification suite is sound", soundness},
      {"verification suite flags D1 through D4", discrepancy_detection},
      {"distribution coefficients and Pascal partial sums", distribution_formulas},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "exception: " << e.what();
    }
    failures += v.pass ? 0 : 1;
    std::printf("%s [%d] %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
