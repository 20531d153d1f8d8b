// One PASS/FAIL line per acceptance criterion. Criteria are checked as
// worded; where a worded criterion cannot hold, the line says so and shows
// what does hold instead.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "oracle.hpp"
#include "sinc/certify/f_a.hpp"
#include "sinc/certify/roots.hpp"
#include "sinc/certify/sign_certificate.hpp"
#include "sinc/certify/theorems.hpp"
#include "sinc/cli/commands.hpp"
#include "sinc/envelope/builders.hpp"
#include "sinc/exactnum/elementary.hpp"
#include "sinc/series/coefficients.hpp"

using namespace sinc;
using certify::Sign;
using certify::Status;
using exactnum::Enclosure;
using exactnum::Rational;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

// every PROVEN certificate produced below, for the replay criterion
std::vector<std::pair<certify::SignCertificate, envelope::EnvelopePolynomial>> g_proven;

void keep(const certify::SignCertificate& c, const envelope::EnvelopePolynomial& p) {
  if (c.status == Status::Proven) g_proven.emplace_back(c, p);
}

Enclosure rat(const Rational& q, exactnum::Precision p = 256) { return Enclosure::from_rational(q, p); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Printed Table 1, 3-decimal prefixes.
struct Printed {
  const char* a;
  double x_a;
  double m_a;
};
const std::vector<Printed> kTable{
    {"1.501", 0.282, 0.140}, {"1.502", 0.398, 0.198}, {"1.503", 0.487, 0.243}, {"1.504", 0.561, 0.280},
    {"1.505", 0.626, 0.314}, {"1.506", 0.685, 0.344}, {"1.507", 0.738, 0.371}, {"1.508", 0.788, 0.397},
    {"1.509", 0.834, 0.421}, {"1.510", 0.878, 0.444}, {"1.52", 1.220, 0.628},  {"1.53", 1.468, 0.769},
    {"1.54", 1.666, 0.888},  {"1.55", 1.831, 0.993},  {"1.56", 1.973, 1.088},  {"1.57", 2.096, 1.175},
    {"1.58", 2.205, 1.256},  {"1.59", 2.302, 1.256},  {"1.60", 2.302, 1.256},  {"1.65", 2.302, 1.256},
    {"1.70", 2.911, 1.986},  {"1.75", 3.034, 2.221},  {"1.80", 3.103, 2.433},  {"1.85", 3.133, 2.628},
    {"1.90", 3.141, 2.809},  {"1.92", 3.141, 2.879},  {"1.94", 3.141, 2.947},  {"1.96", 3.141, 3.013},
    {"1.98", 3.141, 3.087},  {"1.9999", 3.141, 3.141},
};
const std::vector<std::string> kSuspectX{"1.59", "1.60", "1.65"};
const std::vector<std::string> kSuspectM{"1.59", "1.60", "1.65", "1.98"};

bool listed(const std::vector<std::string>& v, const std::string& a) {
  return std::find(v.begin(), v.end(), a) != v.end();
}

Outcome table_x_a() {
  const auto t0 = std::chrono::steady_clock::now();
  cli::RunConfig config;
  const auto rows = cli::compute_table1(config);
  int matched = 0, plain = 0, flagged = 0, suspects = 0;
  std::ostringstream bad;
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    const auto& row = rows.at(i);
    const std::string a = kTable[i].a;
    if (!row.x_a) {
      bad << " " << a << ":error";
      continue;
    }
    const double mid = exactnum::hull(row.x_a->lo, row.x_a->hi).mid_double();
    const bool width_ok = row.x_a->width().to_double() <= 1e-6;
    if (!listed(kSuspectX, a)) {
      ++plain;
      if (std::abs(mid - kTable[i].x_a) <= 1e-3 && width_ok && !row.x_a_mismatch) ++matched;
      else bad << " " << a;
    } else {
      ++suspects;
      // replacement must agree with plain bisection and the row must carry the suspect mark
      const double ref = oracle::x_a(Rational::parse(a).get());
      if (row.printed.x_a_suspect && std::abs(mid - ref) <= 2e-6) ++flagged;
      else bad << " " << a << "(suspect)";
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << matched << "/" << plain << " printed values within 0.001, " << flagged << "/" << suspects
    << " suspect entries replaced by values agreeing with bisection, " << secs << " s";
  if (!bad.str().empty()) d << "; off:" << bad.str();
  return {matched == plain && plain == 27 && flagged == suspects && secs < 60, d.str()};
}

Outcome table_m_a() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::map<std::string, double> replacement{{"1.59", 1.333}, {"1.60", 1.405}, {"1.65", 1.721}, {"1.98", 3.078}};
  int ok = 0, total = 0;
  std::ostringstream bad;
  for (const auto& e : kTable) {
    const Rational a = Rational::parse(e.a);
    const Enclosure m = certify::m_a(a);
    // pi sqrt(2 (a - 3/2)) at oracle precision
    oracle::Real v(mpq_class(2) * (a.get() - mpq_class(3, 2)));
    mpfr_sqrt(v.get(), v.get(), MPFR_RNDN);
    mpfr_mul(v.get(), v.get(), oracle::pi().get(), MPFR_RNDN);
    const double ref = mpfr_get_d(v.get(), MPFR_RNDN);
    const bool encl = mpfr_lessequal_p(m.lo().get(), v.get()) && mpfr_greaterequal_p(m.hi().get(), v.get());
    const bool near_printed = std::abs(ref - e.m_a) <= 1e-3;
    ++total;
    bool good;
    if (listed(kSuspectM, e.a)) {
      good = encl && !near_printed && std::abs(ref - replacement.at(e.a)) < 1e-3;
    } else {
      good = encl && near_printed;
    }
    if (good) ++ok;
    else bad << " " << e.a;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/" << total << " entries (4 flagged with replacements 1.333, 1.405, 1.721, 3.078), " << secs << " s";
  if (!bad.str().empty()) d << "; off:" << bad.str();
  return {ok == total && secs < 1, d.str()};
}

Outcome theorem7() {
  const auto t0 = std::chrono::steady_clock::now();
  const char* argv[] = {"sinc-certify", "prove", "7"};
  std::ostringstream out, err;
  const int code = cli::run(3, argv, out, err);
  const auto report = certify::prove_theorem7();
  bool ok = code == 0 && report.status == Status::Proven && report.certificates.size() == 2;
  std::ostringstream d;
  for (std::size_t i = 0; i < report.certificates.size(); ++i) {
    const auto& c = report.certificates[i];
    ok = ok && c.status == Status::Proven && c.precision_bits <= 1024 && c.max_depth <= 48;
    d << c.target << " " << certify::to_string(c.status) << " (" << c.leaves.size() << " leaves, " << c.precision_bits
      << " bits), ";
    keep(c, report.polynomials[i]);
  }
  const double secs = seconds_since(t0);
  d << "cli exit " << code << ", " << secs << " s";
  return {ok && secs < 300, d.str()};
}

mpq_class oracle_E(const mpq_class& a, unsigned k, const std::vector<mpq_class>& s, const std::vector<mpq_class>& c) {
  return a * s[k] - 2 * c[k];
}

Outcome sign_pattern() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = oracle::ln_sinc_coeffs(80);
  const auto c = oracle::ln_cos_coeffs(80, mpq_class(1, 2));
  auto& g = oracle::rng();
  int ok = 0, zeros = 0;
  for (int i = 0; i < 200; ++i) {
    const mpq_class aq = oracle::uniform(g, mpq_class(3, 2), mpq_class(2), 1000003);
    const Rational a(aq);
    const int m = series::frak_m(a);
    bool good = m >= 0 && m + 11 <= 80;
    for (int k = 1; good && k <= m + 10; ++k) {
      const Rational e = series::E_coeff(a, k);
      good = e.get() == oracle_E(aq, k, s, c);
      if (k <= m) {
        good = good && e.sign() <= 0;
        if (e.is_zero()) good = good && a == series::alpha(k);
      } else {
        good = good && e.sign() > 0;
      }
    }
    if (good) ++ok;
  }
  // the boundaries themselves: E_k(alpha_k) = 0 exactly
  for (int k = 2; k <= 10; ++k)
    if (series::E_coeff(series::alpha(k), k).is_zero() && oracle_E(series::alpha(k).get(), k, s, c) == 0) ++zeros;
  bool three_halves = series::E_coeff(Rational(3, 2), 1).is_zero();
  for (int k = 2; k <= 50; ++k) three_halves = three_halves && series::E_coeff(Rational(3, 2), k).sign() > 0;
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/200 random a, " << zeros << "/9 boundary zeros, E(3/2) pattern " << (three_halves ? "ok" : "broken")
    << ", " << secs << " s";
  return {ok == 200 && zeros == 9 && three_halves && secs < 10, d.str()};
}

// lo(lower) > v.hi or hi(upper) < v.lo is a certain violation; the oracle is cross-checked too
int sandwich(const envelope::EnvelopePair& pair, const Rational& c, const std::function<Enclosure(const Enclosure&)>& f,
             const std::function<oracle::Real(const mpq_class&)>& ref, int count) {
  auto& g = oracle::rng();
  int bad = 0;
  for (int i = 0; i < count; ++i) {
    const mpq_class x = oracle::uniform(g, mpq_class(0), c.get());
    const Enclosure xe = rat(Rational(x));
    const Enclosure v = f(xe);
    const oracle::Real r = ref(x);
    const Enclosure lo = pair.lower.evaluate(xe), hi = pair.upper.evaluate(xe);
    if (mpfr_greater_p(lo.lo().get(), v.hi().get()) || mpfr_less_p(hi.hi().get(), v.lo().get())) ++bad;
    if (mpfr_greater_p(lo.lo().get(), r.get()) || mpfr_less_p(hi.hi().get(), r.get())) ++bad;
    if (!(mpfr_lessequal_p(v.lo().get(), r.get()) && mpfr_greaterequal_p(v.hi().get(), r.get()))) ++bad;
  }
  return bad;
}

Outcome envelopes() {
  int bad = 0;
  const Rational c(3);
  bad += sandwich(envelope::wd_envelopes(series::SeriesSpec::ln_sinc(), rat(c), 8, 6), c,
                  [](const Enclosure& x) { return exactnum::ln_sinc_value(x); }, oracle::ln_sinc, 100);
  bad += sandwich(envelope::wd_envelopes(series::SeriesSpec::ln_cos_half(), rat(c), 8, 6), c,
                  [](const Enclosure& x) { return exactnum::ln_cos_half_value(x); }, oracle::ln_cos_half, 100);
  for (const char* s : {"1.55", "1.7", "1.9"}) {
    const Rational a = Rational::parse(s);
    bad += sandwich(
        envelope::natural_extension_bounds(a, series::frak_m(a) + 3, rat(c)), c,
        [&](const Enclosure& x) { return certify::eval_f_a(a, x); },
        [&](const mpq_class& x) { return oracle::f_a(a.get(), x); }, 100);
  }
  return {bad == 0, "500 points over ln sinc, ln cos(x/2), f_a(1.55/1.7/1.9): " + std::to_string(bad) + " violations"};
}

Outcome remark2() {
  auto& g = oracle::rng();
  int literal = 0, reversed = 0, near_zero = 0;
  const Rational tol(1, 1000000);
  for (int i = 0; i < 20; ++i) {
    const Rational a(oracle::uniform(g, mpq_class(155, 100), mpq_class(195, 100), 10007));
    const auto x = certify::find_x_a(a, tol);
    // c strictly between the bracket's right end and pi
    const Rational xr = exactnum::to_rational(x.hi.hi());
    const Rational c = (xr + exactnum::to_rational(exactnum::pi_enclosure(256).lo())) / Rational(2);
    const int n = series::frak_m(a) + 2 + static_cast<int>(g() % 4);
    const auto env = envelope::natural_extension_bounds(a, n, rat(c));
    const auto rl = certify::smallest_positive_root(env.lower, rat(c), tol);
    const auto rr = certify::smallest_positive_root(env.upper, rat(c), tol);
    // both negative just right of zero
    for (const auto* p : {&env.lower, &env.upper}) {
      const auto cert = certify::certify_sign(*p, rat(Rational(0)), rat(Rational(1, 100)), Sign::Negative);
      keep(cert, *p);
      if (cert.status == Status::Proven) ++near_zero;
    }
    // P_L with no root up to c has its root beyond c > x_a
    const auto left_of = [&](const std::optional<certify::RootEnclosure>& r, const certify::RootEnclosure& y) {
      return r && mpfr_lessequal_p(r->hi.hi().get(), y.lo.lo().get());
    };
    const auto right_of = [&](const std::optional<certify::RootEnclosure>& r, const certify::RootEnclosure& y) {
      return !r || mpfr_greaterequal_p(r->lo.lo().get(), y.hi.hi().get());
    };
    if (left_of(rl, x) && right_of(rr, x)) ++literal;
    if (left_of(rr, x) && right_of(rl, x)) ++reversed;
  }
  std::ostringstream d;
  d << "root(P_L) <= x_a <= root(P_R) in " << literal << "/20; the order that follows from P_L < f_a < P_R, "
    << "root(P_R) <= x_a <= root(P_L), holds in " << reversed << "/20; negativity near 0 certified " << near_zero
    << "/40";
  return {literal == 20 && near_zero == 40, d.str()};
}

Outcome theorem8() {
  int chains = 0, points = 0, literal = 0, reversed = 0;
  for (const char* s : {"1.51", "1.6", "1.7", "1.9"}) {
    const Rational a = Rational::parse(s);
    const auto r = certify::prove_theorem8(a, 25);
    if (r.status == Status::Proven) ++chains;
    // rational test points on both sides of m_a; the decisions below use the oracle's pi
    oracle::Real pi2 = oracle::pi();
    mpfr_sqr(pi2.get(), pi2.get(), MPFR_RNDN);
    for (int j = 1; j <= 40; ++j) {
      const mpq_class x(j, 10);
      if (x >= mpq_class(31, 10)) break;
      // x < m_a  <=>  x^2 < 2 pi^2 (a - 3/2)
      oracle::Real lhs(x * x), rhs(mpq_class(2) * (a.get() - mpq_class(3, 2)));
      mpfr_mul(rhs.get(), rhs.get(), pi2.get(), MPFR_RNDN);
      const bool below_m = mpfr_less_p(lhs.get(), rhs.get());
      // p1(x) = 3/2 + x^2 / (2 pi^2)
      oracle::Real p1(x * x);
      mpfr_div(p1.get(), p1.get(), pi2.get(), MPFR_RNDN);
      mpfr_div_2ui(p1.get(), p1.get(), 1, MPFR_RNDN);
      oracle::Real half(mpq_class(3, 2)), av(a.get());
      mpfr_add(p1.get(), p1.get(), half.get(), MPFR_RNDN);
      const auto [lib_below, lib_p1_less] = certify::theorem8_structural(a, Rational(x));
      if (!lib_below || !lib_p1_less || *lib_below != below_m) continue;
      ++points;
      if (below_m == mpfr_greater_p(p1.get(), av.get())) ++literal;
      if (below_m == mpfr_less_p(p1.get(), av.get()) && *lib_p1_less == below_m) ++reversed;
    }
  }
  std::ostringstream d;
  d << "chain certified for " << chains << "/4 parameters x 25 points; x < m_a <=> p1(x) > a in " << literal << "/"
    << points << " rational points, x < m_a <=> p1(x) < a in " << reversed << "/" << points;
  return {chains == 4 && points > 0 && literal == points, d.str()};
}

Outcome replay_all() {
  // theorem 5 and its polynomial certificate join the pool
  const auto t5 = certify::prove_theorem5(10);
  for (std::size_t i = 0; i < t5.certificates.size(); ++i) keep(t5.certificates[i], t5.polynomials[i]);
  int ok = 0, flipped = 0;
  for (const auto& [cert, poly] : g_proven) {
    const Status s = certify::replay(cert, poly, 2 * cert.precision_bits);
    if (s == Status::Proven) ++ok;
    if (s == Status::Refuted) ++flipped;
  }
  const int total = static_cast<int>(g_proven.size());
  std::ostringstream d;
  d << ok << "/" << total << " certificates re-verified at doubled precision, " << flipped << " refuted";
  return {ok == total && flipped == 0 && total > 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Table 1 x_a reproduction", table_x_a},
      {"Table 1 m_a reproduction", table_m_a},
      {"Theorem 7 machine proof", theorem7},
      {"Sign-pattern property suite", sign_pattern},
      {"Envelope sandwich suite", envelopes},
      {"Remark 2 localization", remark2},
      {"Theorem 8 chain", theorem8},
      {"Soundness regression", replay_all},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
