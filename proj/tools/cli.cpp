#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fekete/bazilevic.hpp>
#include <fekete/bounds.hpp>
#include <fekete/distributions.hpp>
#include <fekete/errors.hpp>
#include <fekete/telephone.hpp>
#include <fekete/verify.hpp>

#include "output.hpp"

namespace fekete::cli {

namespace {

struct Common {
  double vartheta = 0.0;
  double kappa = 0.0;
  std::string varkappa = "1";
  std::string format = "table";
  int grid = 60;
  double tolerance = 1e-9;
  unsigned threads = 0;

  ClassParams params() const {
    ClassParams p{vartheta, kappa, varkappa_value()};
    p.validate();
    return p;
  }
  double varkappa_value() const { return parse_rational(varkappa).convert_to<double>(); }
  Format fmt() const { return parse_format(format); }
};

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\r')) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::BadParameter, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

// "RE" or "RE,IM".
Complex parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_double(text), 0.0};
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

TruncatedSeries read_coefficients(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::BadParameter, "cannot open '" + path + "'");
  std::vector<Complex> coeffs;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    coeffs.push_back(parse_complex(line));
  }
  if (coeffs.empty()) throw Error(ErrorCode::BadParameter, "'" + path + "' holds no coefficients");
  return TruncatedSeries::from_coeffs(std::move(coeffs));
}

Record class_fields(const ClassParams& p) {
  return {{"vartheta", p.vartheta}, {"kappa", p.kappa}, {"varkappa", p.varkappa}};
}

void append(Record& to, Record from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

void append_verdict(Record& r, const PiecewiseVerdict& v) {
  append(r, {{"branch", std::string(to_string(v.branch))},
             {"value", v.value},
             {"sigma1", v.sigma1},
             {"sigma2", v.sigma2},
             {"continuous_sigma2", v.continuous_sigma2},
             {"aleph", v.aleph},
             {"non_positive", v.non_positive}});
}

std::filesystem::path fresh_path(const std::filesystem::path& requested) {
  if (!std::filesystem::exists(requested)) return requested;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &tm);
  const auto stem = requested.stem().string();
  const auto ext = requested.extension().string();
  auto candidate = requested.parent_path() / (stem + "-" + stamp + ext);
  for (int k = 1; std::filesystem::exists(candidate); ++k) {
    candidate = requested.parent_path() / (stem + "-" + stamp + "-" + std::to_string(k) + ext);
  }
  return candidate;
}

DistributionCoeffs make_distribution(const std::string& kind, double param, long s, std::size_t max_n,
                                     double wp2, double wp3) {
  switch (parse_distribution_kind(kind)) {
    case DistributionKind::Poisson:
      return poisson_coeffs(param, max_n);
    case DistributionKind::Borel:
      return borel_coeffs(param, max_n);
    case DistributionKind::Pascal:
      return pascal_coeffs(param, s, max_n);
    case DistributionKind::Custom:
      return custom_coeffs({wp2, wp3});
  }
  throw Error(ErrorCode::BadParameter, "unknown distribution");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficient-bound verification toolkit for Bazilevic-type classes subordinate to e^(z + varkappa z^2/2)",
               "fekete"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with defaults for the common options");

  Common common;
  app.add_option("--vartheta", common.vartheta, "Class parameter vartheta >= 0")->capture_default_str();
  app.add_option("--kappa", common.kappa, "Class parameter kappa >= 0")->capture_default_str();
  app.add_option("--varkappa", common.varkappa, "Parameter varkappa >= 0 (rationals like 7/2 accepted)")
      ->capture_default_str();
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--grid", common.grid, "Steps per sampler parameter")->check(CLI::Range(2, 100000))->capture_default_str();
  app.add_option("--tolerance", common.tolerance, "Soundness and discrepancy tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", common.threads, "Worker threads for grid searches (0 = all cores)")->capture_default_str();

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  long max_n = 10;
  auto* gtn_cmd = sub("gtn", "Generalized telephone numbers T(0..max-n)");
  gtn_cmd->add_option("--max-n", max_n, "Largest index")->check(CLI::NonNegativeNumber)->capture_default_str();

  std::size_t order = 5;
  auto* xseries_cmd = sub("xseries", "Taylor coefficients of e^(z + varkappa z^2/2)");
  xseries_cmd->add_option("--order", order, "Truncation order")->capture_default_str();

  std::string which_bound;
  auto* bound_cmd = sub("bound", "Coefficient bound for a2 or a3");
  bound_cmd->add_option("which", which_bound, "a2 or a3")->required()->check(CLI::IsMember({"a2", "a3"}));

  std::string mu_text = "0";
  auto* fs_cmd = sub("fs", "Fekete-Szego bound |a3 - mu a2^2|");
  fs_cmd->add_option("--mu", mu_text, "mu as RE or RE,IM")->capture_default_str();

  std::string hbar_text = "0";
  auto* inverse_cmd = sub("inverse-fs", "Bound on |d3 - hbar d2^2| for the inverse function");
  inverse_cmd->add_option("--hbar", hbar_text, "hbar as RE or RE,IM")->capture_default_str();

  auto* log_cmd = sub("log-coeff", "Bounds on the logarithmic coefficients gamma1, gamma2");

  std::string dist_kind;
  double dist_param = 1.0;
  long dist_s = 1;
  double wp2 = 1.0;
  double wp3 = 1.0;
  auto* conv_cmd = sub("conv-fs", "Fekete-Szego bound under convolution with a distribution series");
  conv_cmd->add_option("--mu", mu_text, "mu as RE or RE,IM")->capture_default_str();
  conv_cmd->add_option("--dist", dist_kind, "poisson, borel, pascal or custom")
      ->required()
      ->check(CLI::IsMember({"poisson", "borel", "pascal", "custom"}));
  conv_cmd->add_option("--dist-param", dist_param, "m, sigma or q")->capture_default_str();
  conv_cmd->add_option("--s", dist_s, "Pascal s")->capture_default_str();
  conv_cmd->add_option("--wp2", wp2, "Custom coefficient of z^2")->capture_default_str();
  conv_cmd->add_option("--wp3", wp3, "Custom coefficient of z^3")->capture_default_str();

  std::string kind_text;
  double param = 1.0;
  auto* dist_cmd = sub("dist", "Distribution series coefficients");
  dist_cmd->add_option("--kind", kind_text, "poisson, borel or pascal")
      ->required()
      ->check(CLI::IsMember({"poisson", "borel", "pascal"}));
  dist_cmd->add_option("--param", param, "m, sigma or q")->capture_default_str();
  dist_cmd->add_option("--s", dist_s, "Pascal s")->capture_default_str();
  dist_cmd->add_option("--max-n", max_n, "Largest index")->check(CLI::Range(2L, 100000L))->capture_default_str();

  std::string coeff_file;
  auto* member_cmd = sub("member", "Membership witness for f given by its coefficients");
  member_cmd->add_option("--f-coeffs", coeff_file, "File with one RE[,IM] per line, starting at z^0")
      ->required()
      ->check(CLI::ExistingFile);

  int which_lemma = 3;
  std::string v_text = "0";
  auto* lemma_cmd = sub("lemma", "Sampled supremum against a Caratheodory lemma bound");
  lemma_cmd->add_option("--which", which_lemma, "1, 3 or 4")->check(CLI::IsMember({1, 3, 4}))->capture_default_str();
  lemma_cmd->add_option("--v", v_text, "v (or hbar for lemma 4) as RE or RE,IM")->capture_default_str();

  std::string suite_text = "remarks";
  std::string out_path;
  auto* verify_cmd = sub("verify", "Run a verification suite and write the JSON-lines report");
  verify_cmd->add_option("--suite", suite_text, "remarks, lemmas or full")
      ->check(CLI::IsMember({"remarks", "lemmas", "full"}))
      ->capture_default_str();
  verify_cmd->add_option("--out", out_path, "Report file; an existing file is never overwritten");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Format format = common.fmt();

    if (gtn_cmd->parsed()) {
      const Rational vk = parse_rational(common.varkappa);
      if (vk < 1) err << "warning: varkappa < 1; the telephone-number reading assumes varkappa >= 1\n";
      const GtnSequence seq = gtn_sequence(vk, static_cast<std::size_t>(max_n));
      if (format == Format::Table) {
        for (std::size_t n = 0; n < seq.values.size(); ++n) out << (n ? ", " : "") << to_string(seq.values[n]);
        out << '\n';
      } else {
        std::vector<std::vector<Cell>> rows;
        for (std::size_t n = 0; n < seq.values.size(); ++n) {
          rows.push_back({static_cast<long long>(n), to_string(seq.values[n])});
        }
        emit_rows(out, format, {{"varkappa", to_string(vk)}}, "values", {"n", "value"}, rows);
      }
      return 0;
    }

    if (xseries_cmd->parsed()) {
      const double vk = common.varkappa_value();
      if (vk < 0) throw Error(ErrorCode::ParameterOutOfRange, "varkappa must be non-negative");
      const TruncatedSeries x = x_series(vk, order);
      std::vector<std::vector<Cell>> rows;
      for (std::size_t n = 0; n <= order; ++n) rows.push_back({static_cast<long long>(n), x[n].real()});
      emit_rows(out, format, {{"varkappa", vk}, {"order", static_cast<long long>(order)}}, "coefficients",
                {"n", "coefficient"}, rows);
      return 0;
    }

    if (bound_cmd->parsed()) {
      const ClassParams p = common.params();
      Record r{{"bound", which_bound}};
      append(r, class_fields(p));
      if (which_bound == "a2") {
        r.push_back({"value", a2_bound(p)});
      } else {
        r.push_back({"value", a3_bound(p)});
        if (const auto preset = match_preset(p)) {
          const RemarkA3 remark = remark_a3(*preset, p.varkappa);
          append(r, {{"preset", std::string(preset_info(*preset).id)},
                     {"remark_closed_form", remark.closed_form},
                     {"remark_max_form", remark.max_form}});
        }
      }
      emit_record(out, format, r);
      return 0;
    }

    if (fs_cmd->parsed()) {
      const ClassParams p = common.params();
      const Complex mu = parse_complex(mu_text);
      Record r = class_fields(p);
      r.push_back({"mu", mu});
      if (mu.imag() == 0.0) {
        append_verdict(r, fs_real(p, mu.real()));
      } else {
        r.push_back({"value", fs_complex(p, mu)});
      }
      append(r, {{"complex_form", fs_complex(p, mu)}, {"alt_prefactor_form", fs_complex_alt_prefactor(p, mu)}});
      emit_record(out, format, r);
      return 0;
    }

    if (inverse_cmd->parsed()) {
      const ClassParams p = common.params();
      const Complex hbar = parse_complex(hbar_text);
      const StatedVsOracle d2 = inverse_d2_bound(p);
      Record r = class_fields(p);
      append(r, {{"hbar", hbar},
                 {"value", inverse_fs(p, hbar)},
                 {"d2_as_stated", d2.as_stated},
                 {"d2_oracle", d2.oracle},
                 {"second_inequality", inverse_second_bound(p)}});
      emit_record(out, format, r);
      return 0;
    }

    if (log_cmd->parsed()) {
      const ClassParams p = common.params();
      const LogCoeffBounds b = log_coeff_bounds(p);
      Record r = class_fields(p);
      append(r, {{"g1", b.g1}, {"g2", b.g2}, {"g2_reference", b.g2_reference}});
      emit_record(out, format, r);
      return 0;
    }

    if (conv_cmd->parsed()) {
      const ClassParams p = common.params();
      const Complex mu = parse_complex(mu_text);
      const DistributionCoeffs d = make_distribution(dist_kind, dist_param, dist_s, 3, wp2, wp3);
      const ConvolutionWeights w{d[2], d[3]};
      Record r = class_fields(p);
      r.push_back({"dist", dist_kind});
      if (d.kind != DistributionKind::Custom) r.push_back({"dist_param", dist_param});
      if (d.kind == DistributionKind::Pascal) r.push_back({"s", static_cast<long long>(dist_s)});
      append(r, {{"wp2", w.wp2}, {"wp3", w.wp3}, {"mu", mu}});
      if (mu.imag() == 0.0) {
        append_verdict(r, conv_fs_real(p, mu.real(), w));
        r.push_back({"complex_form", conv_fs_complex(p, mu, w)});
      } else {
        r.push_back({"value", conv_fs_complex(p, mu, w)});
      }
      emit_record(out, format, r);
      return 0;
    }

    if (dist_cmd->parsed()) {
      const DistributionCoeffs d = make_distribution(kind_text, param, dist_s, static_cast<std::size_t>(max_n), 1, 1);
      std::vector<std::vector<Cell>> rows;
      for (std::size_t n = 2; n <= d.max_n(); ++n) rows.push_back({static_cast<long long>(n), d[n]});
      Record meta{{"kind", kind_text}, {"param", param}};
      if (d.kind == DistributionKind::Pascal) meta.push_back({"s", static_cast<long long>(dist_s)});
      emit_rows(out, format, meta, "coefficients", {"n", "coefficient"}, rows);
      return 0;
    }

    if (member_cmd->parsed()) {
      const ClassParams p = common.params();
      const TruncatedSeries f = read_coefficients(coeff_file);
      const MembershipWitness m = membership_witness(f, p);
      Record r = class_fields(p);
      append(r, {{"order", static_cast<long long>(f.order())},
                 {"sup_norm", m.sup_norm},
                 {"threshold", kMembershipThreshold},
                 {"member", m.member()},
                 {"verdict", std::string(m.member() ? "member" : "not-member")}});
      emit_record(out, format, r);
      return 0;
    }

    if (lemma_cmd->parsed()) {
      const Complex v = parse_complex(v_text);
      FunctionalDescriptor fd = which_lemma == 1   ? FunctionalDescriptor::lemma1(v.real())
                                : which_lemma == 3 ? FunctionalDescriptor::lemma3(v)
                                                   : FunctionalDescriptor::lemma4(v);
      if (which_lemma == 1 && v.imag() != 0.0) throw Error(ErrorCode::BadParameter, "lemma 1 takes a real v");
      ExperimentOptions options;
      options.sup.threads = common.threads;
      options.discrepancy_tol = common.tolerance;
      const BoundReport rep = run_experiment(fd, ClassParams{0.0, 0.0, 1.0}, GridSpec::uniform(common.grid), options);
      emit_record(out, format,
                  {{"which", static_cast<long long>(which_lemma)},
                   {"v", v},
                   {"grid", static_cast<long long>(common.grid)},
                   {"bound", rep.as_stated},
                   {"empirical_sup", rep.empirical_sup},
                   {"gap", rep.as_stated - rep.empirical_sup},
                   {"witness_c1", rep.witness.c1},
                   {"witness_c2", rep.witness.c2}});
      return 0;
    }

    if (verify_cmd->parsed()) {
      ExperimentOptions options;
      options.sup.threads = common.threads;
      options.discrepancy_tol = common.tolerance;
      const SweepResult result =
          run_suite(parse_suite(suite_text), GridSpec::uniform(common.grid), common.varkappa_value(), options);

      std::size_t violations = 0;
      for (const auto& r : result.reports) violations += r.sound(common.tolerance) ? 0 : 1;
      SweepSummary summary = result.summary;
      summary.soundness_violations = violations;

      std::ofstream file;
      std::ostream* sink = &out;
      if (!out_path.empty()) {
        const auto path = fresh_path(out_path);
        file.open(path);
        if (!file) throw Error(ErrorCode::BadParameter, "cannot write '" + path.string() + "'");
        sink = &file;
        err << "report: " << path.string() << '\n';
      }
      for (const auto& r : result.reports) *sink << to_json_line(r) << '\n';
      *sink << summary_json_line(summary) << '\n';
      if (!out_path.empty()) {
        if (format == Format::Table) {
          Record r{{"suite", suite_text}, {"reports", static_cast<long long>(summary.reports)},
                   {"soundness_violations", static_cast<long long>(violations)}};
          for (const auto& [id, n] : summary.discrepancy_counts) r.push_back({id, static_cast<long long>(n)});
          emit_record(out, format, r);
        } else {
          out << summary_json_line(summary) << '\n';
        }
      }
      if (violations > 0) {
        err << "soundness violated in " << violations << " report(s)\n";
        return 2;
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace fekete::cli
