#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <future>
#include <thread>

#include "oracle.hpp"
#include "sinc/certify/certificate_json.hpp"
#include "sinc/certify/f_a.hpp"
#include "sinc/certify/jet.hpp"
#include "sinc/certify/roots.hpp"
#include "sinc/certify/sign_certificate.hpp"
#include "sinc/certify/theorems.hpp"
#include "sinc/certify/unique_zero.hpp"
#include "sinc/envelope/builders.hpp"
#include "sinc/errors.hpp"
#include "sinc/series/coefficients.hpp"

using namespace sinc::certify;
using sinc::envelope::build_H1;
using sinc::envelope::build_H2;
using sinc::envelope::natural_extension_bounds;
using sinc::envelope::Side;
using sinc::envelope::Term;

namespace {

Enclosure rat(const Rational& q, Precision p = 256) { return Enclosure::from_rational(q, p); }
const Enclosure kZero = rat(Rational(0));

bool encloses(const Enclosure& e, const oracle::Real& v) {
  return mpfr_lessequal_p(e.lo().get(), v.get()) && mpfr_greaterequal_p(e.hi().get(), v.get());
}

EnvelopePolynomial poly(const std::vector<std::pair<int, Rational>>& terms, const Rational& c = Rational(10)) {
  std::vector<Term> t;
  for (const auto& [k, v] : terms) t.push_back({k, rat(v)});
  return EnvelopePolynomial("test", Side::Lower, rat(c), std::move(t));
}

}  // namespace

TEST_CASE("H1 < 0 and H2 > 0 on (0, 3.1)") {
  const Enclosure c = rat(Rational(31, 10));
  const auto h1 = build_H1(25, 10, c);
  const auto h2 = build_H2(13, 27, c);
  const auto s1 = certify_sign(h1, kZero, c, Sign::Negative);
  const auto s2 = certify_sign(h2, kZero, c, Sign::Positive);
  CHECK(s1.status == Status::Proven);
  CHECK(s2.status == Status::Proven);
  CHECK(s1.leaves.front().kind == LeafKind::Dominance);
  CHECK(s1.precision_bits <= 1024);
  CHECK(replay(s1, h1, 2 * s1.precision_bits) == Status::Proven);
  CHECK(replay(s2, h2, 2 * s2.precision_bits) == Status::Proven);
}

TEST_CASE("swapped H1/H2 parameters are refuted with a witness") {
  const Enclosure c = rat(Rational(31, 10));
  const auto h1 = build_H1(10, 25, c);
  const auto cert = certify_sign(h1, kZero, c, Sign::Negative);
  CHECK(cert.status == Status::Refuted);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness_value->is_positive());
  CHECK(mpfr_cmp_d(cert.witness->get(), 0) > 0);
  CHECK(mpfr_cmp_d(cert.witness->get(), 3.1) < 0);
}

TEST_CASE("sign certificates on small polynomials") {
  // 1 + x^2 > 0 on (0, 1)
  CHECK(certify_sign(poly({{0, 1}, {2, 1}}), kZero, rat(Rational(1)), Sign::Positive).status == Status::Proven);
  CHECK(certify_sign(poly({{0, -1}, {2, 1}}), kZero, rat(Rational(9, 10)), Sign::Negative).status == Status::Proven);
  // touches zero at the right end: no leaf next to 1 can close
  CHECK(certify_sign(poly({{0, -1}, {2, 1}}), kZero, rat(Rational(1)), Sign::Negative).status == Status::Inconclusive);
  CHECK(certify_sign(poly({{0, -1}, {2, 1}}), kZero, rat(Rational(2)), Sign::Negative).status == Status::Refuted);
  // identically zero: no sign on any leaf
  CHECK(certify_sign(poly({{2, 0}}), kZero, rat(Rational(1)), Sign::Positive).status == Status::Inconclusive);
  // -x^4 + x^6 on (0, 1/2): decided by dominance near 0
  const auto p = poly({{4, -1}, {6, 1}});
  const auto cert = certify_sign(p, kZero, rat(Rational(1, 2)), Sign::Negative);
  CHECK(cert.status == Status::Proven);
  std::size_t lead = 99;
  REQUIRE(dominance_radius(p, rat(Rational(1, 2)).hi(), 256, &lead).has_value());
  CHECK(lead == 0);
  // straddling lowest coefficient: no dominance
  const auto fuzzy = EnvelopePolynomial("fz", Side::Lower, rat(Rational(1)),
                                        {{2, Enclosure::spanning(rat(Rational(-1)).lo(), rat(Rational(1)).hi())}});
  CHECK_FALSE(dominance_radius(fuzzy, rat(Rational(1)).hi(), 256).has_value());
}

TEST_CASE("sign certificate argument checks") {
  const auto p = poly({{0, 1}}, Rational(1));
  CHECK_THROWS_AS(certify_sign(p, kZero, rat(Rational(2)), Sign::Positive), sinc::DomainError);
  CHECK_THROWS_AS(certify_sign(p, rat(Rational(1, 2)), rat(Rational(1, 4)), Sign::Positive), sinc::DomainError);
  CHECK_THROWS_AS(certify_sign(p, rat(Rational(-1)), rat(Rational(1, 2)), Sign::Positive), sinc::DomainError);
  CHECK_THROWS_AS(parse_sign("zero"), sinc::DomainError);
  CHECK(parse_sign("+") == Sign::Positive);
  CHECK(exit_code(Status::Refuted) == 1);
  CHECK(combine(Status::Proven, Status::Inconclusive) == Status::Inconclusive);
  CHECK(combine(Status::Refuted, Status::Inconclusive) == Status::Refuted);
}

TEST_CASE("replay rejects a tampered certificate") {
  // (x^2 - 1/2)^2 + 1/100
  const auto p = poly({{0, Rational(26, 100)}, {2, -1}, {4, 1}});
  auto cert = certify_sign(p, rat(Rational(1, 4)), rat(Rational(1)), Sign::Positive);
  REQUIRE(cert.status == Status::Proven);
  CHECK(replay(cert, p, 512) == Status::Proven);
  auto gap = cert;
  REQUIRE(gap.leaves.size() > 1);
  gap.leaves.erase(gap.leaves.begin() + 1);
  CHECK(replay(gap, p, 512) != Status::Proven);
  auto wrong = cert;
  wrong.claimed = Sign::Negative;
  CHECK(replay(wrong, p, 512) != Status::Proven);
}

TEST_CASE("f_a point values against an independent evaluation") {
  auto& g = oracle::rng();
  for (int i = 0; i < 60; ++i) {
    const mpq_class a = oracle::uniform(g, mpq_class(151, 100), mpq_class(199, 100));
    const mpq_class x = oracle::uniform(g, mpq_class(1, 1000), mpq_class(314, 100));
    CHECK(encloses(eval_f_a(Rational(a), rat(Rational(x))), oracle::f_a(a, x)));
  }
  const Enclosure small = eval_f_a(Rational(8, 5), rat(Rational(1, 1000)));
  CHECK(small.is_negative());
  CHECK(eval_f_a(Rational(3, 2), rat(Rational(1))).is_positive());
  CHECK_THROWS_AS(eval_f_a(Rational(8, 5), rat(Rational(4))), sinc::DomainError);
  CHECK_THROWS_AS(eval_f_a(Rational(1), rat(Rational(1))), sinc::DomainError);
}

TEST_CASE("f_a next to pi agrees with the direct route and stays positive") {
  const Rational a(19, 10);
  const Rational d(1, 10);
  const Enclosure direct = eval_f_a(a, rat(Rational(0)) + sinc::exactnum::pi_enclosure(256) - rat(d));
  const Enclosure near = eval_f_a_near_pi(a, rat(d));
  CHECK(sinc::exactnum::intersect(direct, near).width().to_double() < 1e-60);
  // a = 1.9999: (a - 2) ln delta must beat a ln pi - 2 ln 2 ~ 0.903, so delta < e^-9030
  for (long k : {10L, 100L, 1000L, 12000L}) {
    const Enclosure v = eval_f_a_near_pi(Rational(19999, 10000), rat(sinc::exactnum::power_of_two(-k)));
    CHECK(v.strict_sign() == std::optional<int>(k > 13000 ? 1 : -1));
  }
  CHECK(eval_f_a_near_pi(Rational(19999, 10000), rat(sinc::exactnum::power_of_two(-14000))).is_positive());
  CHECK_THROWS_AS(eval_f_a_near_pi(a, rat(Rational(2))), sinc::DomainError);
}

TEST_CASE("m_a closed form") {
  CHECK(m_a(Rational(8, 5)).contains(m_a(Rational(8, 5), 512)));
  oracle::Real v(mpq_class(1, 5));
  mpfr_sqrt(v.get(), v.get(), MPFR_RNDN);
  mpfr_mul(v.get(), v.get(), oracle::pi().get(), MPFR_RNDN);
  CHECK(encloses(m_a(Rational(8, 5)), v));
  CHECK_THROWS_AS(m_a(Rational(3, 2)), sinc::DomainError);
  CHECK_THROWS_AS(m_a(Rational(2)), sinc::DomainError);
}

TEST_CASE("x_a brackets the independent root") {
  for (const char* s : {"1.501", "1.52", "1.6", "1.75", "1.9"}) {
    const Rational a = Rational::parse(s);
    const auto r = find_x_a(a, Rational(1, 1000000));
    CHECK(r.sign_left == -1);
    CHECK(r.sign_right == 1);
    CHECK(r.width().to_double() <= 1e-6);
    const double x = oracle::x_a(a.get());
    CHECK(r.lo.lo_double() <= x + 1e-9);
    CHECK(r.hi.hi_double() >= x - 1e-9);
  }
  CHECK_THROWS_AS(find_x_a(Rational(8, 5), sinc::exactnum::power_of_two(-200)), sinc::DomainError);
  CHECK_THROWS_AS(find_x_a(Rational(3, 2), Rational(1, 1000)), sinc::DomainError);
  CHECK_THROWS_AS(find_x_a(Rational(8, 5), Rational(0)), sinc::DomainError);
}

TEST_CASE("x_a increases with a") {
  std::vector<double> mids;
  for (int i = 1; i < 50; ++i) {
    const auto r = find_x_a(Rational(3, 2) + Rational(i, 100), Rational(1, 100000));
    mids.push_back(r.lo.lo_double());
    if (mids.size() > 1) CHECK(mids.back() >= mids[mids.size() - 2] - 1e-5);
  }
}

TEST_CASE("x_a is reproducible across threads") {
  auto run = [] {
    const auto r = find_x_a(Rational(17, 10), Rational(1, 1000000));
    return r.lo.lo().to_hex() + r.hi.hi().to_hex();
  };
  const std::string ref = run();
  std::vector<std::future<std::string>> jobs;
  for (int i = 0; i < 4; ++i) jobs.push_back(std::async(std::launch::async, run));
  for (auto& j : jobs) CHECK(j.get() == ref);
}

TEST_CASE("envelope roots bracket x_a from both sides") {
  for (const char* s : {"1.55", "1.6", "1.7", "1.8"}) {
    const Rational a = Rational::parse(s);
    const int n = sinc::series::frak_m(a) + 3;
    const auto x = find_x_a(a, Rational(1, 100000));
    const Rational c(314, 100);
    REQUIRE(certainly_greater(rat(c), sinc::exactnum::to_rational(x.hi.hi())));
    const auto env = natural_extension_bounds(a, n, rat(c));
    const auto ru = smallest_positive_root(env.upper, rat(c), Rational(1, 100000));
    REQUIRE(ru.has_value());
    CHECK(ru->lo.lo_double() <= x.hi.hi_double());
    // no root of the lower envelope up to c means it lies beyond c > x_a
    if (const auto rl = smallest_positive_root(env.lower, rat(c), Rational(1, 100000))) {
      CHECK(x.lo.lo_double() <= rl->hi.hi_double());
    }
    XaOptions seeded;
    seeded.seed = std::make_pair(n, c);
    const auto xs = find_x_a(a, Rational(1, 100000), seeded);
    CHECK(xs.brackets(Rational(mpq_class(oracle::x_a(a.get(), 1e-12)))));
  }
}

TEST_CASE("smallest positive root of x^2 - 1") {
  const auto r = smallest_positive_root(poly({{0, -1}, {2, 1}}), rat(Rational(2)), Rational(1, 1000000));
  REQUIRE(r.has_value());
  CHECK(r->brackets(Rational(1)));
  CHECK(r->width().to_double() <= 1e-6);
  CHECK_FALSE(smallest_positive_root(poly({{0, -1}, {2, 1}}), rat(Rational(1, 2)), Rational(1, 1000)).has_value());
  CHECK_THROWS_AS(smallest_positive_root(poly({{0, 1}, {2, -1}}), rat(Rational(2)), Rational(1, 1000)),
                  sinc::DomainError);
}

TEST_CASE("Jet arithmetic reproduces known derivatives") {
  const Rational x0(1, 3);
  const Enclosure s0 = sinc::exactnum::sin_value(rat(x0)), c0 = sinc::exactnum::cos_value(rat(x0));
  const Jet s = Jet::sin_shifted(s0, c0, Rational(1), 6);
  const Jet c = Jet::cos_shifted(s0, c0, Rational(1), 6);
  // sin^2 + cos^2 = 1: all derivatives of order >= 1 vanish
  const Jet one = s * s + c * c;
  CHECK(one.derivative(0).contains(Rational(1)));
  for (int j = 1; j <= 6; ++j) CHECK(one.derivative(j).contains(Rational(0)));
  // d^4/dx^4 sin = sin; tan' = 1 + tan^2
  CHECK(s.derivative(4).contains(s0));
  const Jet t = s / c;
  const Enclosure tan0 = s0 / c0;
  CHECK((t.derivative(1) - (rat(Rational(1)) + tan0 * tan0)).contains(Rational(0)));
  const Jet inv = Jet::constant(rat(Rational(1)), 3) / Jet::variable(rat(x0), 3);
  CHECK(inv.derivative(2).contains(Rational(2) / x0.pow(3)));
  CHECK_THROWS_AS(Jet::constant(rat(Rational(1)), 2) / Jet::variable(kZero, 2), sinc::DomainError);
}

TEST_CASE("unique-zero certificates") {
  const auto c8 = unique_zero_certificate(Rational(8, 5));
  CHECK(c8.m == 1);
  CHECK(c8.status == Status::Proven);
  CHECK(c8.near_zero_signs.size() == 3);
  CHECK(c8.endpoint_signs.size() == 3);
  for (const auto& d : c8.near_zero_signs) CHECK(d.sign == Sign::Negative);
  for (const auto& d : c8.endpoint_signs) CHECK(d.sign == Sign::Positive);

  const auto c19 = unique_zero_certificate(Rational(19, 10));
  CHECK(c19.status == Status::Proven);
  CHECK(c19.near_zero_signs.size() == static_cast<std::size_t>(2 * c19.m + 1));

  const auto c15 = unique_zero_certificate(Rational(3, 2));
  CHECK(c15.m == 0);
  CHECK(c15.status == Status::Proven);
  CHECK(c15.near_zero_signs.empty());

  // delta beyond x_a cannot keep f negative
  const auto bad = unique_zero_certificate(Rational(8, 5), Rational(5, 2), Rational(1, 100));
  CHECK(bad.status == Status::Inconclusive);
  REQUIRE(bad.failing_order.has_value());
  CHECK(bad.failing_side == "near_zero");
  CHECK_THROWS_AS(unique_zero_certificate(Rational(2)), sinc::DomainError);

  const auto doc = to_json(c8);
  CHECK(doc.at("status") == "PROVEN");
  CHECK(doc.at("near_zero_signs").size() == 3);
}

TEST_CASE("theorem 4 and theorem 5") {
  const auto t4 = prove_theorem4(10);
  CHECK(t4.status == Status::Proven);
  const auto t5 = prove_theorem5(10);
  CHECK(t5.status == Status::Proven);
  REQUIRE_FALSE(t5.certificates.empty());
  CHECK(replay(t5.certificates[0], t5.polynomials[0], 512) == Status::Proven);
}

TEST_CASE("theorem 7 with default parameters") {
  const auto r = prove_theorem7();
  CHECK(r.status == Status::Proven);
  CHECK(r.certificates.size() == 2);
  const auto doc = to_json(r);
  CHECK(doc.at("theorem") == 7);
  CHECK(doc.at("status") == "PROVEN");
}

TEST_CASE("theorem 8 chain and structural equivalence") {
  for (const char* s : {"1.51", "1.6", "1.9"}) {
    const Rational a = Rational::parse(s);
    CHECK(prove_theorem8(a, 5).status == Status::Proven);
    const Enclosure ma = m_a(a);
    const Rational inside = sinc::exactnum::to_rational(ma.lo()) * Rational(9, 10);
    CHECK(theorem8_chain_at(a, inside) == Status::Proven);
    const auto [lt, p1lt] = theorem8_structural(a, inside);
    CHECK(lt == std::optional<bool>(true));
    CHECK(p1lt == std::optional<bool>(true));
    const Rational outside = sinc::exactnum::to_rational(ma.hi()) * Rational(11, 10);
    if (outside < Rational(3)) {
      const auto [lt2, p1lt2] = theorem8_structural(a, outside);
      CHECK(lt2 == std::optional<bool>(false));
      CHECK(p1lt2 == std::optional<bool>(false));
      CHECK_THROWS_AS(theorem8_chain_at(a, outside), sinc::DomainError);
    }
  }
  CHECK_THROWS_AS(theorem8_chain_at(Rational(8, 5), Rational(0)), sinc::DomainError);
}

TEST_CASE("certificate JSON carries the interval and leaves on request") {
  const auto p = poly({{0, 1}, {2, -1}});
  const auto cert = certify_sign(p, kZero, rat(Rational(1, 2)), Sign::Positive);
  const auto brief = to_json(cert);
  const auto full = to_json(cert, true);
  CHECK(brief.at("status") == "PROVEN");
  CHECK_FALSE(brief.contains("leaves"));
  CHECK(full.at("leaves").size() == cert.leaves.size());
  const auto r = find_x_a(Rational(7, 4), Rational(1, 1000));
  const auto rj = to_json(r, "7/4", Rational(1, 1000));
  CHECK(rj.at("a") == "7/4");
  CHECK(rj.contains("lo"));
}
