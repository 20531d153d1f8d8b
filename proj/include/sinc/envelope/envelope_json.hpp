#pragma once

#include <json.hpp>

#include "sinc/envelope/envelope_polynomial.hpp"

namespace sinc::envelope {

/// {target, side, validity_c: [lo, hi], precision_bits, terms: [[power, lo, hi], ...]}
/// with every float as an exact hex string.
nlohmann::json to_json(const EnvelopePolynomial& poly);

/// Inverse of to_json; DomainError on malformed documents.
EnvelopePolynomial envelope_from_json(const nlohmann::json& doc);

}  // namespace sinc::envelope
