#pragma once

#include <json.hpp>

#include "sinc/certify/roots.hpp"
#include "sinc/certify/theorems.hpp"
#include "sinc/certify/unique_zero.hpp"

namespace sinc::certify {

/// {target, interval, claimed_sign, status, precision_bits, leaf_count, leaves?, witness?}
nlohmann::json to_json(const SignCertificate& cert, bool dump_leaves = false);

/// {a, lo, hi, tol, evals}; a may be empty for polynomial roots.
nlohmann::json to_json(const RootEnclosure& root, const std::string& a, const Rational& tol);

nlohmann::json to_json(const UniqueZeroCertificate& cert);

nlohmann::json to_json(const TheoremReport& report, bool dump_leaves = false);

}  // namespace sinc::certify
