#include "sinc/envelope/envelope_json.hpp"

#include "sinc/errors.hpp"

namespace sinc::envelope {

using nlohmann::json;

nlohmann::json to_json(const EnvelopePolynomial& poly) {
  json terms = json::array();
  for (const auto& t : poly.terms()) terms.push_back({t.power, t.value.lo().to_hex(), t.value.hi().to_hex()});
  return json{{"target", poly.target()},
              {"side", to_string(poly.side())},
              {"validity_c", {poly.validity_c().lo().to_hex(), poly.validity_c().hi().to_hex()}},
              {"precision_bits", poly.precision()},
              {"terms", terms}};
}

EnvelopePolynomial envelope_from_json(const nlohmann::json& doc) {
  try {
    const auto prec = doc.at("precision_bits").get<Precision>();
    if (prec < MPFR_PREC_MIN || prec > 1 << 20) throw DomainError("precision_bits out of range");
    auto encl = [prec](const json& lo, const json& hi) {
      return Enclosure(BigFloat::from_hex(lo.get<std::string>(), prec, MPFR_RNDD),
                       BigFloat::from_hex(hi.get<std::string>(), prec, MPFR_RNDU));
    };
    const auto& c = doc.at("validity_c");
    if (!c.is_array() || c.size() != 2) throw DomainError("validity_c must be a [lo, hi] pair");
    std::vector<Term> terms;
    for (const auto& t : doc.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw DomainError("each term must be [power, lo, hi]");
      terms.push_back({t[0].get<int>(), encl(t[1], t[2])});
    }
    return EnvelopePolynomial(doc.at("target").get<std::string>(), parse_side(doc.at("side").get<std::string>()),
                              encl(c[0], c[1]), std::move(terms));
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed envelope document: ") + e.what());
  }
}

}  // namespace sinc::envelope
