#include "sinc/certify/certificate_json.hpp"

namespace sinc::certify {

using nlohmann::json;

namespace {

json pair_hex(const Enclosure& e) { return json::array({e.lo().to_hex(), e.hi().to_hex()}); }

std::string kind_name(LeafKind k) { return k == LeafKind::Dominance ? "dominance" : "evaluated"; }

}  // namespace

nlohmann::json to_json(const SignCertificate& cert, bool dump_leaves) {
  json j{{"target", cert.target},
         {"interval", json::array({pair_hex(cert.lo), pair_hex(cert.hi)})},
         {"claimed_sign", to_string(cert.claimed)},
         {"status", to_string(cert.status)},
         {"precision_bits", cert.precision_bits},
         {"max_depth", cert.max_depth},
         {"leaf_count", cert.leaves.size()}};
  if (!cert.note.empty()) j["note"] = cert.note;
  if (dump_leaves) {
    json leaves = json::array();
    for (const auto& l : cert.leaves)
      leaves.push_back({{"lo", l.lo.to_hex()}, {"hi", l.hi.to_hex()}, {"value", pair_hex(l.value)}, {"kind", kind_name(l.kind)}});
    j["leaves"] = std::move(leaves);
  }
  if (cert.witness) {
    j["witness"] = {{"x", cert.witness->to_hex()}, {"value", pair_hex(*cert.witness_value)}};
  }
  return j;
}

nlohmann::json to_json(const RootEnclosure& root, const std::string& a, const Rational& tol) {
  json j{{"lo", pair_hex(root.lo)},
         {"hi", pair_hex(root.hi)},
         {"sign_left", root.sign_left},
         {"sign_right", root.sign_right},
         {"width", root.width().to_hex()},
         {"tol", tol.to_string()},
         {"evals", root.evals}};
  if (!a.empty()) j["a"] = a;
  return j;
}

nlohmann::json to_json(const UniqueZeroCertificate& cert) {
  auto signs = [](const std::vector<DerivativeSign>& v) {
    json out = json::array();
    for (const auto& d : v) out.push_back({{"order", d.order}, {"sign", to_string(d.sign)}, {"value", pair_hex(d.value)}});
    return out;
  };
  json j{{"a", cert.a.to_string()},
         {"m", cert.m},
         {"delta", cert.delta.to_string()},
         {"eta", cert.eta.to_string()},
         {"near_zero_signs", signs(cert.near_zero_signs)},
         {"endpoint_signs", signs(cert.endpoint_signs)},
         {"higher_derivative_basis", cert.higher_derivative_basis},
         {"status", to_string(cert.status)}};
  if (cert.failing_order) j["failing"] = {{"order", *cert.failing_order}, {"side", cert.failing_side}};
  return j;
}

nlohmann::json to_json(const TheoremReport& report, bool dump_leaves) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  json certs = json::array();
  for (const auto& c : report.certificates) certs.push_back(to_json(c, dump_leaves));
  return {{"theorem", report.theorem}, {"status", to_string(report.status)}, {"checks", checks}, {"certificates", certs}};
}

}  // namespace sinc::certify
