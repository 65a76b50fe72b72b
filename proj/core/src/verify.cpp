#include "fekete/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <tuple>

#include "fekete/distributions.hpp"
#include "fekete/errors.hpp"

namespace fekete {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kReportDigits = 12;

// a2 = a2_c1 c1,  a3 = a3_c2 c2 + a3_c1sq c1^2, folded once per experiment.
struct LinearMap {
  Complex a2_c1;
  Complex a3_c2;
  Complex a3_c1sq;

  explicit LinearMap(const CoefficientMap& map) {
    const auto& rel = map.relation();
    const auto& sub = map.subordination();
    a2_c1 = sub.b1_per_c1 / rel.linear_a2;
    a3_c2 = sub.b2_per_c2 / rel.linear_a3;
    a3_c1sq = (sub.b2_per_c1sq - rel.quad_a2 * a2_c1 * a2_c1) / rel.linear_a3;
  }
  Complex a2(const CaratheodoryPoint& p) const { return a2_c1 * p.c1; }
  Complex a3(const CaratheodoryPoint& p) const { return a3_c2 * p.c2 + a3_c1sq * p.c1 * p.c1; }
};

bool is_real(Complex z) { return z.imag() == 0.0; }

std::string complex_text(Complex z) {
  std::string out = format_number(z.real(), kReportDigits);
  if (z.imag() != 0.0) {
    const double im = round_significant(z.imag(), kReportDigits);
    out += (im < 0 ? "-" : "+") + format_number(std::abs(im), kReportDigits) + "i";
  }
  return out;
}

Json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return round_significant(value, kReportDigits);
}

Json complex_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

double fs_oracle(const CoefficientMap& map, Complex mu) {
  const auto form = map.fekete_szego_form(mu);
  return std::abs(form.scale) * lemma3_bound(form.v);
}

double a2_oracle(const CoefficientMap& map) {
  return 2.0 * std::abs(map.subordination().b1_per_c1) / std::abs(map.relation().linear_a2);
}

bool unit_weights(const ConvolutionWeights& w) { return w.wp2 == 1.0 && w.wp3 == 1.0; }

struct Recorder {
  BoundReport& report;
  double tol;

  void add_if_differs(std::string id, double stated, double reference, std::string note) {
    if (std::abs(stated - reference) > tol) report.discrepancies.push_back({std::move(id), stated, reference, std::move(note)});
  }
  void add(std::string id, double stated, double reference, std::string note) {
    report.discrepancies.push_back({std::move(id), stated, reference, std::move(note)});
  }
};

void attach_piecewise_notes(Recorder& rec, const PiecewiseVerdict& v, double mu, double middle_value) {
  if (mu >= v.sigma2 && mu < v.continuous_sigma2) {
    rec.add("D5", v.value, middle_value,
            "mu lies between the printed upper knot " + format_number(v.sigma2, kReportDigits) +
                " and the knot " + format_number(v.continuous_sigma2, kReportDigits) +
                " where the middle and upper branches meet");
  }
  if (v.non_positive) {
    rec.add("D8", v.value, rec.report.oracle, "three-branch formula gives a non-positive bound on a modulus");
  }
}

template <class F>
SupResult maximize(F&& f, const GridSpec& grid, const SupOptions& options) {
  return brute_force_sup(std::forward<F>(f), grid, options);
}

}  // namespace

std::string_view to_string(FunctionalKind kind) {
  switch (kind) {
    case FunctionalKind::A2:
      return "a2";
    case FunctionalKind::A3:
      return "a3";
    case FunctionalKind::FeketeSzego:
      return "fs";
    case FunctionalKind::InverseD2:
      return "inverse-d2";
    case FunctionalKind::InverseFs:
      return "inverse-fs";
    case FunctionalKind::LogGamma1:
      return "log-gamma1";
    case FunctionalKind::LogGamma2:
      return "log-gamma2";
    case FunctionalKind::ConvFs:
      return "conv-fs";
    case FunctionalKind::Lemma1:
      return "lemma1";
    case FunctionalKind::Lemma3:
      return "lemma3";
    case FunctionalKind::Lemma4:
      return "lemma4";
  }
  return "unknown";
}

void FunctionalDescriptor::validate() const {
  if (!std::isfinite(arg.real()) || !std::isfinite(arg.imag())) {
    throw Error(ErrorCode::BadParameter, "functional argument must be finite");
  }
  if (kind == FunctionalKind::Lemma1 && !is_real(arg)) {
    throw Error(ErrorCode::BadParameter, "lemma1 takes a real v");
  }
  if (kind == FunctionalKind::ConvFs) weights.validate();
}

std::string FunctionalDescriptor::label() const {
  std::string out(to_string(kind));
  switch (kind) {
    case FunctionalKind::FeketeSzego:
      return out + "(mu=" + complex_text(arg) + ")";
    case FunctionalKind::InverseFs:
    case FunctionalKind::Lemma4:
      return out + "(hbar=" + complex_text(arg) + ")";
    case FunctionalKind::Lemma1:
    case FunctionalKind::Lemma3:
      return out + "(v=" + complex_text(arg) + ")";
    case FunctionalKind::ConvFs:
      return out + "(mu=" + complex_text(arg) + "," + weights_label + ")";
    default:
      return out;
  }
}

bool BoundReport::has(std::string_view id) const {
  return std::any_of(discrepancies.begin(), discrepancies.end(), [&](const Discrepancy& d) { return d.id == id; });
}

std::optional<ClassPreset> match_preset(const ClassParams& params) {
  for (const auto& info : class_presets()) {
    if (info.vartheta == params.vartheta && info.kappa == params.kappa) return info.preset;
  }
  return std::nullopt;
}

BoundReport run_experiment(const FunctionalDescriptor& functional, const ClassParams& params, const GridSpec& grid,
                           const ExperimentOptions& options) {
  params.validate();
  functional.validate();
  grid.validate();

  BoundReport report;
  report.params = params;
  report.functional = functional;
  report.experiment_id = functional.label() + "@vartheta=" + format_number(params.vartheta, kReportDigits) +
                         ",kappa=" + format_number(params.kappa, kReportDigits) +
                         ",varkappa=" + format_number(params.varkappa, kReportDigits);

  const CoefficientMap map(params);
  const LinearMap lin(map);
  const Complex arg = functional.arg;
  const SupOptions& so = options.sup;
  Recorder rec{report, options.discrepancy_tol};

  SupResult sup;
  switch (functional.kind) {
    case FunctionalKind::A2:
    case FunctionalKind::InverseD2: {
      // d2 = -a2, so both share one maximization.
      sup = maximize([&](const CaratheodoryPoint& p) { return std::abs(lin.a2(p)); }, grid, so);
      report.oracle = a2_oracle(map);
      if (functional.kind == FunctionalKind::A2) {
        report.as_stated = a2_bound(params);
      } else {
        const auto d2 = inverse_d2_bound(params);
        report.as_stated = d2.as_stated;
        rec.add_if_differs("D2", d2.as_stated, d2.oracle, "|d2| bound 1/(2W) against d2 = -a2, |a2| <= 1/W");
      }
      break;
    }
    case FunctionalKind::A3: {
      sup = maximize([&](const CaratheodoryPoint& p) { return std::abs(lin.a3(p)); }, grid, so);
      report.oracle = fs_oracle(map, 0.0);
      report.as_stated = a3_bound(params);
      if (const auto preset = match_preset(params)) {
        const RemarkA3 remark = remark_a3(*preset, params.varkappa);
        rec.add_if_differs("D1", remark.closed_form, remark.theorem,
                           std::string("remark a3 bound for preset ") + std::string(preset_info(*preset).id) +
                               " (max form " + format_number(remark.max_form, kReportDigits) +
                               ") against the theorem's a3 bound");
      }
      const CoefficientRelation stated = stated_relation_theorem(params);
      const CoefficientRelation& derived = map.relation();
      const std::string note = "b2 = linear_a3 a3 + quad_a2 a2^2; bound formulas use (" +
                               format_number(stated.linear_a3, kReportDigits) + ", " +
                               format_number(stated.quad_a2, kReportDigits) + "), series gives (" +
                               format_number(derived.linear_a3, kReportDigits) + ", " +
                               format_number(derived.quad_a2, kReportDigits) + ")";
      if (std::abs(stated.quad_a2 - derived.quad_a2) > 1e-6) {
        rec.add("D10", stated.quad_a2, derived.quad_a2, note);
      } else if (std::abs(stated.linear_a3 - derived.linear_a3) > 1e-6) {
        rec.add("D10", stated.linear_a3, derived.linear_a3, note);
      }
      break;
    }
    case FunctionalKind::FeketeSzego: {
      sup = maximize(
          [&](const CaratheodoryPoint& p) {
            const Complex a2 = lin.a2(p);
            return std::abs(lin.a3(p) - arg * a2 * a2);
          },
          grid, so);
      report.oracle = fs_oracle(map, arg);
      report.as_stated = fs_complex(params, arg);
      rec.add_if_differs("D9", fs_complex_alt_prefactor(params, arg), report.as_stated,
                         "prefactor 1/((vartheta+2)(1+2kappa)) against 1/L in the same theorem");
      if (is_real(arg)) {
        report.piecewise = fs_real(params, arg.real());
        attach_piecewise_notes(rec, *report.piecewise, arg.real(), 1.0 / params.a3_scale());
      }
      break;
    }
    case FunctionalKind::InverseFs: {
      // d2 = -a2, d3 = 2 a2^2 - a3.
      sup = maximize(
          [&](const CaratheodoryPoint& p) {
            const Complex a2 = lin.a2(p);
            return std::abs(2.0 * a2 * a2 - lin.a3(p) - arg * a2 * a2);
          },
          grid, so);
      report.oracle = fs_oracle(map, 2.0 - arg);
      report.as_stated = inverse_fs(params, arg);
      if (arg == Complex(0.0, 0.0)) {
        rec.add_if_differs("D11", inverse_second_bound(params), fs_complex(params, 2.0),
                           "second inequality printed as a |d2| bound controls |d3| = |a3 - 2 a2^2|");
      }
      break;
    }
    case FunctionalKind::LogGamma1: {
      sup = maximize([&](const CaratheodoryPoint& p) { return 0.5 * std::abs(lin.a2(p)); }, grid, so);
      report.oracle = 0.5 * a2_oracle(map);
      report.as_stated = log_coeff_bounds(params).g1;
      break;
    }
    case FunctionalKind::LogGamma2: {
      sup = maximize(
          [&](const CaratheodoryPoint& p) {
            const Complex a2 = lin.a2(p);
            return 0.5 * std::abs(lin.a3(p) - 0.5 * a2 * a2);
          },
          grid, so);
      report.oracle = 0.5 * fs_oracle(map, 0.5);
      const LogCoeffBounds lb = log_coeff_bounds(params);
      report.as_stated = lb.g2;
      rec.add_if_differs("D3", lb.g2, lb.g2_reference, "gamma2 bound against half the fs bound at mu = 1/2");
      break;
    }
    case FunctionalKind::ConvFs: {
      const ConvolutionWeights& w = functional.weights;
      const double inv2 = 1.0 / (w.wp2 * w.wp2);
      const double inv3 = 1.0 / w.wp3;
      // The convolution F = f * weights is in the class; f has a_n = A_n / w_n.
      sup = maximize(
          [&](const CaratheodoryPoint& p) {
            const Complex a2 = lin.a2(p);
            return std::abs(lin.a3(p) * inv3 - arg * a2 * a2 * inv2);
          },
          grid, so);
      report.oracle = fs_oracle(map, arg * w.wp3 * inv2) * inv3;
      report.as_stated = conv_fs_complex(params, arg, w);
      if (unit_weights(w)) {
        rec.add_if_differs("D4", report.as_stated, fs_complex(params, arg),
                           "convolution bound with unit weights against the plain fs bound");
      }
      if (is_real(arg)) {
        report.piecewise = conv_fs_real(params, arg.real(), w);
        attach_piecewise_notes(rec, *report.piecewise, arg.real(), inv3 / params.a3_scale());
      }
      break;
    }
    case FunctionalKind::Lemma1:
    case FunctionalKind::Lemma3: {
      sup = maximize([&](const CaratheodoryPoint& p) { return std::abs(p.c2 - arg * p.c1 * p.c1); }, grid, so);
      report.oracle = lemma3_bound(arg);
      report.as_stated = functional.kind == FunctionalKind::Lemma1 ? lemma1_bound(arg.real()) : report.oracle;
      break;
    }
    case FunctionalKind::Lemma4: {
      sup = maximize([&](const CaratheodoryPoint& p) { return std::abs(p.c2 - 0.5 * arg * p.c1 * p.c1); }, grid,
                     so);
      report.oracle = lemma3_bound(0.5 * arg);
      report.as_stated = lemma4_bound(arg);
      break;
    }
  }

  report.empirical_sup = sup.value;
  report.witness = sup.witness;
  report.witness_at = sup.at;

  rec.add_if_differs("D6", report.as_stated, report.oracle, "formula as printed against the series oracle");
  if (report.empirical_sup > report.as_stated + options.discrepancy_tol) {
    rec.add("D7", report.as_stated, report.empirical_sup, "sampled supremum exceeds the printed bound");
  }
  std::stable_sort(report.discrepancies.begin(), report.discrepancies.end(),
                   [](const Discrepancy& a, const Discrepancy& b) {
                     return std::atoi(a.id.c_str() + 1) < std::atoi(b.id.c_str() + 1);
                   });
  return report;
}

SweepSummary summarize(const std::vector<BoundReport>& reports) {
  SweepSummary s;
  s.reports = reports.size();
  for (const auto& r : reports) {
    if (!r.sound()) ++s.soundness_violations;
    for (const auto& d : r.discrepancies) ++s.discrepancy_counts[d.id];
  }
  return s;
}

namespace {

auto param_key(const ClassParams& p) { return std::make_tuple(p.vartheta, p.kappa, p.varkappa); }

void order_by_params(std::vector<BoundReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const BoundReport& a, const BoundReport& b) {
    return param_key(a.params) < param_key(b.params);
  });
}

}  // namespace

SweepResult sweep(const std::vector<ClassParams>& params, const std::vector<FunctionalDescriptor>& functionals,
                  const GridSpec& grid, const ExperimentOptions& options) {
  if (params.empty() || functionals.empty()) {
    throw Error(ErrorCode::EmptySweep, "sweep needs at least one parameter point and one functional");
  }
  std::vector<ClassParams> ordered = params;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ClassParams& a, const ClassParams& b) { return param_key(a) < param_key(b); });

  SweepResult result;
  result.reports.reserve(ordered.size() * functionals.size());
  for (const auto& p : ordered) {
    for (const auto& f : functionals) result.reports.push_back(run_experiment(f, p, grid, options));
  }
  result.summary = summarize(result.reports);
  return result;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::Remarks:
      return "remarks";
    case Suite::Lemmas:
      return "lemmas";
    case Suite::Full:
      return "full";
  }
  return "unknown";
}

Suite parse_suite(std::string_view text) {
  for (auto s : {Suite::Remarks, Suite::Lemmas, Suite::Full}) {
    if (text == to_string(s)) return s;
  }
  throw Error(ErrorCode::BadParameter, "unknown suite '" + std::string(text) + "'");
}

SweepResult run_suite(Suite suite, const GridSpec& grid, double varkappa, const ExperimentOptions& options) {
  std::vector<ClassParams> presets;
  for (const auto& info : class_presets()) presets.push_back(preset_params(info.preset, varkappa));

  std::vector<FunctionalDescriptor> remark_set = {FunctionalDescriptor::a2(), FunctionalDescriptor::a3()};
  for (double mu : {-2.0, 0.0, 0.5, 1.0, 2.0}) remark_set.push_back(FunctionalDescriptor::fekete_szego(mu));

  std::vector<FunctionalDescriptor> lemma_set;
  for (double v : {-1.0, 0.0, 0.5, 1.0, 2.0}) lemma_set.push_back(FunctionalDescriptor::lemma1(v));
  for (Complex v : {Complex(0.5, 0.5), Complex(-0.5, 1.0), Complex(1.5, -0.5), Complex(0.0, 1.0)}) {
    lemma_set.push_back(FunctionalDescriptor::lemma3(v));
  }
  for (Complex h : {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(3.0, 0.0), Complex(1.0, 1.0)}) {
    lemma_set.push_back(FunctionalDescriptor::lemma4(h));
  }
  const std::vector<ClassParams> lemma_params = {ClassParams{0.0, 0.0, varkappa}};

  std::vector<BoundReport> reports;
  auto append = [&](SweepResult&& part) {
    reports.insert(reports.end(), std::make_move_iterator(part.reports.begin()),
                   std::make_move_iterator(part.reports.end()));
  };

  switch (suite) {
    case Suite::Remarks:
      append(sweep(presets, remark_set, grid, options));
      break;
    case Suite::Lemmas:
      append(sweep(lemma_params, lemma_set, grid, options));
      break;
    case Suite::Full: {
      auto full_set = remark_set;
      full_set.push_back(FunctionalDescriptor::inverse_d2());
      full_set.push_back(FunctionalDescriptor::inverse_fs(0.0));
      full_set.push_back(FunctionalDescriptor::inverse_fs(2.0));
      full_set.push_back(FunctionalDescriptor::log_gamma1());
      full_set.push_back(FunctionalDescriptor::log_gamma2());
      full_set.push_back(FunctionalDescriptor::conv_fs(0.0, ConvolutionWeights{1.0, 1.0}, "unit"));
      full_set.push_back(FunctionalDescriptor::conv_fs(
          0.5, ConvolutionWeights{poisson_coeff(1.0, 2), poisson_coeff(1.0, 3)}, "poisson(m=1)"));
      append(sweep(presets, full_set, grid, options));
      append(sweep(lemma_params, lemma_set, grid, options));
      break;
    }
  }
  order_by_params(reports);
  SweepResult result{std::move(reports), {}};
  result.summary = summarize(result.reports);
  return result;
}

double round_significant(double value, int significant) {
  if (!std::isfinite(value)) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, value);
  const double rounded = std::strtod(buf, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

std::string format_number(double value, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, round_significant(value, significant));
  return buf;
}

std::string to_json_line(const BoundReport& r) {
  Json functional = {{"kind", to_string(r.functional.kind)}, {"label", r.functional.label()}};
  switch (r.functional.kind) {
    case FunctionalKind::FeketeSzego:
      functional["mu"] = complex_json(r.functional.arg);
      break;
    case FunctionalKind::ConvFs:
      functional["mu"] = complex_json(r.functional.arg);
      functional["weights"] = {{"label", r.functional.weights_label},
                               {"wp2", number(r.functional.weights.wp2)},
                               {"wp3", number(r.functional.weights.wp3)}};
      break;
    case FunctionalKind::InverseFs:
    case FunctionalKind::Lemma4:
      functional["hbar"] = complex_json(r.functional.arg);
      break;
    case FunctionalKind::Lemma1:
    case FunctionalKind::Lemma3:
      functional["v"] = complex_json(r.functional.arg);
      break;
    default:
      break;
  }

  Json ids = Json::array();
  Json details = Json::array();
  for (const auto& d : r.discrepancies) {
    ids.push_back(d.id);
    details.push_back({{"id", d.id}, {"stated", number(d.stated)}, {"reference", number(d.reference)}, {"note", d.note}});
  }

  Json j = {
      {"experimentId", r.experiment_id},
      {"params",
       {{"vartheta", number(r.params.vartheta)}, {"kappa", number(r.params.kappa)}, {"varkappa", number(r.params.varkappa)}}},
      {"functional", functional},
      {"asStated", number(r.as_stated)},
      {"oracle", number(r.oracle)},
      {"empiricalSup", number(r.empirical_sup)},
      {"gap", number(r.gap())},
      {"sound", r.sound()},
      {"witness",
       {{"c1", complex_json(r.witness.c1)},
        {"c2", complex_json(r.witness.c2)},
        {"rho", number(r.witness_at.rho)},
        {"alpha", number(r.witness_at.alpha)},
        {"tau", number(r.witness_at.tau)},
        {"beta", number(r.witness_at.beta)}}},
      {"discrepancyIds", ids},
      {"discrepancies", details},
  };
  if (r.piecewise) {
    const auto& v = *r.piecewise;
    j["piecewise"] = {{"value", number(v.value)},
                      {"branch", to_string(v.branch)},
                      {"sigma1", number(v.sigma1)},
                      {"sigma2", number(v.sigma2)},
                      {"continuousSigma2", number(v.continuous_sigma2)},
                      {"aleph", number(v.aleph)},
                      {"nonPositive", v.non_positive}};
  }
  return j.dump();
}

std::string summary_json_line(const SweepSummary& s) {
  Json counts = Json::object();
  std::vector<std::pair<std::string, std::size_t>> sorted(s.discrepancy_counts.begin(), s.discrepancy_counts.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::atoi(a.first.c_str() + 1) < std::atoi(b.first.c_str() + 1);
  });
  for (const auto& [id, n] : sorted) counts[id] = n;
  Json j = {{"summary",
             {{"reports", s.reports}, {"soundnessViolations", s.soundness_violations}, {"discrepancies", counts}}}};
  return j.dump();
}

}  // namespace fekete
