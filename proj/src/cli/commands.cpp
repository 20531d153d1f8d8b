#include "sinc/cli/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sinc/certify/certificate_json.hpp"
#include "sinc/certify/f_a.hpp"
#include "sinc/envelope/builders.hpp"
#include "sinc/envelope/envelope_json.hpp"
#include "sinc/errors.hpp"

namespace sinc::cli {

using certify::Status;
using exactnum::Enclosure;
using nlohmann::json;

const std::vector<PrintedEntry>& table1_printed() {
  static const std::vector<PrintedEntry> rows{
      {"1.501", "0.282", "0.140", false, false}, {"1.502", "0.398", "0.198", false, false},
      {"1.503", "0.487", "0.243", false, false}, {"1.504", "0.561", "0.280", false, false},
      {"1.505", "0.626", "0.314", false, false}, {"1.506", "0.685", "0.344", false, false},
      {"1.507", "0.738", "0.371", false, false}, {"1.508", "0.788", "0.397", false, false},
      {"1.509", "0.834", "0.421", false, false}, {"1.510", "0.878", "0.444", false, false},
      {"1.52", "1.220", "0.628", false, false},  {"1.53", "1.468", "0.769", false, false},
      {"1.54", "1.666", "0.888", false, false},  {"1.55", "1.831", "0.993", false, false},
      {"1.56", "1.973", "1.088", false, false},  {"1.57", "2.096", "1.175", false, false},
      {"1.58", "2.205", "1.256", false, false},  {"1.59", "2.302", "1.256", true, true},
      {"1.60", "2.302", "1.256", true, true},    {"1.65", "2.302", "1.256", true, true},
      {"1.70", "2.911", "1.986", false, false},  {"1.75", "3.034", "2.221", false, false},
      {"1.80", "3.103", "2.433", false, false},  {"1.85", "3.133", "2.628", false, false},
      {"1.90", "3.141", "2.809", false, false},  {"1.92", "3.141", "2.879", false, false},
      {"1.94", "3.141", "2.947", false, false},  {"1.96", "3.141", "3.013", false, false},
      {"1.98", "3.141", "3.087", false, true},   {"1.9999", "3.141", "3.141", false, false},
  };
  return rows;
}

bool differs_from_printed(const Enclosure& value, const std::string& printed) {
  const Rational mid = exactnum::to_rational(value.midpoint());
  return (mid - Rational::parse(printed)).abs() > Rational(1, 1000);
}

std::string truncate3(const Enclosure& value) {
  const Rational mid = exactnum::to_rational(value.midpoint());
  mpz_class scaled = (mid * Rational(1000)).numerator() / (mid * Rational(1000)).denominator();
  std::string digits = scaled.get_str();
  while (digits.size() < 4) digits.insert(0, "0");
  return digits.substr(0, digits.size() - 3) + "." + digits.substr(digits.size() - 3);
}

std::vector<Table1Row> compute_table1(const RunConfig& config) {
  std::vector<Table1Row> out;
  for (const auto& e : table1_printed()) {
    Table1Row row;
    row.printed = e;
    row.a = Rational::parse(e.a);
    try {
      row.m_a = certify::m_a(row.a, config.precision_bits);
      row.m_a_mismatch = differs_from_printed(*row.m_a, e.m_a);
      certify::XaOptions o;
      o.precision = config.precision_bits;
      row.x_a = certify::find_x_a(row.a, config.tolerance, o);
      row.x_a_mismatch = differs_from_printed(exactnum::hull(row.x_a->lo, row.x_a->hi), e.x_a);
    } catch (const std::exception& ex) {
      row.error = ex.what();
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

std::string flag(bool mismatch, bool suspect) {
  if (mismatch) return suspect ? "MISMATCH (suspected erratum)" : "MISMATCH";
  return suspect ? "ok (listed as suspect)" : "ok";
}

json enclosure_json(const Enclosure& e) {
  return {{"lo", e.lo().to_hex()}, {"hi", e.hi().to_hex()}, {"decimal", e.to_string(20)}};
}

void emit(const json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

Enclosure parse_c(const std::string& text, Precision p) {
  const Rational c = Rational::parse(text);
  if (c.sign() <= 0) throw DomainError("c must be positive");
  const Enclosure ce = Enclosure::from_rational(c, p);
  if (!certainly_less(ce, exactnum::pi_enclosure(p))) throw DomainError("c must lie below pi, got " + text);
  return ce;
}

void print_report(const certify::TheoremReport& r, std::ostream& out) {
  out << "theorem " << r.theorem << ": " << to_string(r.status) << "\n";
  for (const auto& c : r.checks) out << "  [" << to_string(c.status) << "] " << c.name << " (" << c.detail << ")\n";
  for (const auto& c : r.certificates) {
    out << "  [" << to_string(c.status) << "] " << c.target << " " << to_string(c.claimed) << " on ("
        << c.lo.to_string(6) << ", " << c.hi.to_string(6) << "), " << c.leaves.size() << " leaves at "
        << c.precision_bits << " bits";
    if (!c.note.empty()) out << "; " << c.note;
    out << "\n";
  }
}

}  // namespace

int cmd_table1(const RunConfig& config, std::ostream& out) {
  config.validate();
  const auto rows = compute_table1(config);
  bool failed = false;
  if (config.output_format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json j{{"a", r.printed.a}, {"printed_x_a", r.printed.x_a}, {"printed_m_a", r.printed.m_a}};
      if (r.x_a) {
        j["x_a"] = certify::to_json(*r.x_a, r.printed.a, config.tolerance);
        j["x_a_truncated"] = truncate3(hull(r.x_a->lo, r.x_a->hi));
        j["x_a_flag"] = flag(r.x_a_mismatch, r.printed.x_a_suspect);
      }
      if (r.m_a) {
        j["m_a"] = enclosure_json(*r.m_a);
        j["m_a_truncated"] = truncate3(*r.m_a);
        j["m_a_flag"] = flag(r.m_a_mismatch, r.printed.m_a_suspect);
      }
      if (!r.error.empty()) {
        j["error"] = r.error;
        failed = true;
      }
      arr.push_back(std::move(j));
    }
    emit({{"table", arr}}, out);
    return failed ? 2 : 0;
  }
  out << std::left << std::setw(8) << "a" << std::setw(8) << "x_a" << std::setw(9) << "printed" << std::setw(30)
      << "flag" << std::setw(8) << "m_a" << std::setw(9) << "printed"
      << "flag\n";
  for (const auto& r : rows) {
    out << std::setw(8) << r.printed.a;
    if (!r.error.empty()) {
      out << "error: " << r.error << "\n";
      failed = true;
      continue;
    }
    const Enclosure xa = hull(r.x_a->lo, r.x_a->hi);
    out << std::setw(8) << truncate3(xa) << std::setw(9) << r.printed.x_a << std::setw(30)
        << flag(r.x_a_mismatch, r.printed.x_a_suspect) << std::setw(8) << truncate3(*r.m_a) << std::setw(9)
        << r.printed.m_a << flag(r.m_a_mismatch, r.printed.m_a_suspect) << "\n";
  }
  return failed ? 2 : 0;
}

int cmd_prove(int theorem, const std::optional<std::string>& a, int samples, const RunConfig& config,
              std::ostream& out) {
  config.validate();
  std::vector<certify::TheoremReport> reports;
  switch (theorem) {
    case 4:
      reports.push_back(certify::prove_theorem4(samples > 0 ? samples : 50, config.precision_bits));
      break;
    case 5:
      reports.push_back(certify::prove_theorem5(samples > 0 ? samples : 50, config.sign_options()));
      break;
    case 7: {
      certify::Theorem7Options o;
      o.sign = config.sign_options();
      reports.push_back(certify::prove_theorem7(o));
      break;
    }
    case 8: {
      std::vector<std::string> as = a ? std::vector<std::string>{*a} : std::vector<std::string>{"1.51", "1.6", "1.7", "1.9"};
      for (const auto& s : as)
        reports.push_back(certify::prove_theorem8(Rational::parse(s), samples > 0 ? samples : 25, config.precision_bits));
      break;
    }
    default:
      throw DomainError("unknown theorem " + std::to_string(theorem) + " (expected 4, 5, 7 or 8)");
  }
  Status overall = Status::Proven;
  for (const auto& r : reports) overall = certify::combine(overall, r.status);
  if (config.output_format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(certify::to_json(r, config.certificate_dump));
    emit({{"status", to_string(overall)}, {"reports", arr}}, out);
  } else {
    for (const auto& r : reports) print_report(r, out);
  }
  return certify::exit_code(overall);
}

int cmd_xa(const std::string& a, const RunConfig& config, std::ostream& out) {
  config.validate();
  const Rational av = Rational::parse(a);
  certify::XaOptions o;
  o.precision = config.precision_bits;
  const auto root = certify::find_x_a(av, config.tolerance, o);
  if (config.output_format == OutputFormat::Json) {
    emit(certify::to_json(root, av.to_string(), config.tolerance), out);
  } else {
    out << "x_a for a = " << av.to_string() << "\n"
        << "  lo    " << root.lo.lo().to_decimal(25) << "\n"
        << "  hi    " << root.hi.hi().to_decimal(25) << "\n"
        << "  width " << root.width().to_decimal(6) << "\n"
        << "  evals " << root.evals << "\n";
  }
  return 0;
}

int cmd_ma(const std::string& a, const RunConfig& config, std::ostream& out) {
  config.validate();
  const Rational av = Rational::parse(a);
  const Enclosure m = certify::m_a(av, config.precision_bits);
  if (config.output_format == OutputFormat::Json) {
    json j = enclosure_json(m);
    j["a"] = av.to_string();
    j["precision_bits"] = m.precision();
    emit(j, out);
  } else {
    out << "m_a for a = " << av.to_string() << ": " << m.to_string(25) << "\n";
  }
  return 0;
}

int cmd_envelope(const std::string& target, int m, int n, const std::string& c, const std::string& a,
                 const RunConfig& config, std::ostream& out) {
  config.validate();
  const Precision p = config.precision_bits;
  json doc;
  if (target == "lnsinc" || target == "lncoshalf") {
    const auto spec = target == "lnsinc" ? series::SeriesSpec::ln_sinc() : series::SeriesSpec::ln_cos_half();
    const auto pair = envelope::wd_envelopes(spec, parse_c(c.empty() ? "1" : c, p), n < 0 ? 2 : n, m < 0 ? 2 : m, p);
    doc = {{"lower", envelope::to_json(pair.lower)}, {"upper", envelope::to_json(pair.upper)}};
  } else if (target == "fa") {
    if (a.empty()) throw DomainError("envelope fa needs --a");
    const auto pair = envelope::natural_extension_bounds(Rational::parse(a), n < 0 ? 4 : n, parse_c(c.empty() ? "3" : c, p), p);
    doc = {{"lower", envelope::to_json(pair.lower)}, {"upper", envelope::to_json(pair.upper)}};
  } else if (target == "h1") {
    doc = envelope::to_json(envelope::build_H1(m < 0 ? 25 : m, n < 0 ? 10 : n, parse_c(c.empty() ? "3.1" : c, p), p));
  } else if (target == "h2") {
    doc = envelope::to_json(envelope::build_H2(m < 0 ? 13 : m, n < 0 ? 27 : n, parse_c(c.empty() ? "3.1" : c, p), p));
  } else {
    throw DomainError("unknown envelope target '" + target + "' (expected lnsinc, lncoshalf, fa, h1 or h2)");
  }
  emit(doc, out);
  return 0;
}

int cmd_check_sign(const std::string& poly_file, const std::string& lo, const std::string& hi,
                   const std::string& sign, const std::string& side, const RunConfig& config, std::ostream& out) {
  config.validate();
  std::ifstream in(poly_file);
  if (!in) throw DomainError("cannot read polynomial file '" + poly_file + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw DomainError(std::string("polynomial file is not JSON: ") + e.what());
  }
  if (doc.contains("lower") || doc.contains("upper")) {
    if (side.empty()) throw DomainError("polynomial file holds a pair; choose one with --side lower|upper");
    doc = doc.at(envelope::to_string(envelope::parse_side(side)) == "LOWER" ? "lower" : "upper");
  }
  const auto poly = envelope::envelope_from_json(doc);
  const Precision p = config.precision_bits;
  const auto cert = certify::certify_sign(poly, Enclosure::from_rational(Rational::parse(lo), p),
                                          Enclosure::from_rational(Rational::parse(hi), p),
                                          certify::parse_sign(sign), config.sign_options());
  if (config.output_format == OutputFormat::Json) {
    emit(certify::to_json(cert, config.certificate_dump), out);
  } else {
    out << cert.target << " " << to_string(cert.claimed) << " on (" << lo << ", " << hi << "): "
        << to_string(cert.status) << ", " << cert.leaves.size() << " leaves at " << cert.precision_bits << " bits\n";
    if (!cert.note.empty()) out << "  " << cert.note << "\n";
    if (cert.witness) out << "  witness x = " << cert.witness->to_decimal(25) << "\n";
  }
  return certify::exit_code(cert.status);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified envelopes and sign proofs for powers of sin(x)/x against cos^2(x/2)", "sinc-certify"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  long precision = 0;
  std::string tol = "1e-6";
  bool as_json = false;
  std::string out_path;
  app.add_option("--precision", precision, "working precision in bits (default 256 or $SINC_CERTIFY_PRECISION)");
  app.add_option("--tol", tol, "root bracket tolerance, parsed exactly");
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--max-depth", config.max_depth, "bisection depth limit");
  app.add_flag("--dump-leaves", config.certificate_dump, "include every certificate leaf in JSON output");
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* table = app.add_subcommand("table1", "recompute x_a and m_a for the published grid");

  auto* prove = app.add_subcommand("prove", "machine proof of theorem 4, 5, 7 or 8");
  int theorem = 0;
  std::optional<std::string> prove_a;
  int samples = 0;
  prove->add_option("theorem", theorem, "4, 5, 7 or 8")->required();
  prove->add_option("--a", prove_a, "parameter for theorem 8 (default: 1.51, 1.6, 1.7, 1.9)");
  prove->add_option("--samples", samples, "sample count for pointwise checks");

  auto* xa = app.add_subcommand("xa", "bracket the zero x_a of f_a");
  std::string xa_a;
  xa->add_option("a", xa_a, "parameter in (3/2, 2), decimal or p/q")->required();

  auto* ma = app.add_subcommand("ma", "enclose m_a = pi sqrt(2 (a - 3/2))");
  std::string ma_a;
  ma->add_option("a", ma_a, "parameter in (3/2, 2)")->required();

  auto* env = app.add_subcommand("envelope", "emit certified envelope polynomials as JSON");
  std::string env_target, env_c, env_a;
  int env_m = -1, env_n = -1;
  env->add_option("target", env_target, "lnsinc, lncoshalf, fa, h1 or h2")->required();
  env->add_option("--m", env_m, "remainder order");
  env->add_option("--n", env_n, "truncation order");
  env->add_option("--c", env_c, "validity endpoint c in (0, pi)");
  env->add_option("--a", env_a, "parameter for fa");

  auto* check = app.add_subcommand("check-sign", "certify the sign of a JSON envelope polynomial");
  std::string poly_file, lo, hi, sign, side;
  check->add_option("poly-file", poly_file)->required();
  check->add_option("lo", lo)->required();
  check->add_option("hi", hi)->required();
  check->add_option("sign", sign, "NEGATIVE or POSITIVE")->required();
  check->add_option("--side", side, "lower or upper, for files holding a pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  std::ostringstream buffer;
  int code = 3;
  try {
    config.precision_bits = precision != 0 ? precision : RunConfig::default_precision();
    config.tolerance = Rational::parse(tol);
    config.output_format = as_json ? OutputFormat::Json : OutputFormat::Text;
    config.validate();
    if (*table) code = cmd_table1(config, buffer);
    else if (*prove) code = cmd_prove(theorem, prove_a, samples, config, buffer);
    else if (*xa) code = cmd_xa(xa_a, config, buffer);
    else if (*ma) code = cmd_ma(ma_a, config, buffer);
    else if (*env) code = cmd_envelope(env_target, env_m, env_n, env_c, env_a, config, buffer);
    else if (*check) code = cmd_check_sign(poly_file, lo, hi, sign, side, config, buffer);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const CertificationError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 2;
  }
  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return 3;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace sinc::cli
