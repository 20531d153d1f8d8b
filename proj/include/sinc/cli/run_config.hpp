#pragma once

#include <optional>
#include <string>

#include "sinc/certify/sign_certificate.hpp"

namespace sinc::cli {

using exactnum::Precision;
using exactnum::Rational;

enum class OutputFormat { Text, Json };

struct RunConfig {
  Precision precision_bits = exactnum::kDefaultPrecision;
  Rational tolerance{1, 1000000};
  OutputFormat output_format = OutputFormat::Text;
  int max_depth = 48;
  bool certificate_dump = false;

  /// precision_bits >= 64, tolerance > 0, max_depth >= 1; DomainError otherwise.
  void validate() const;

  certify::SignOptions sign_options() const;

  /// Default precision, honouring SINC_CERTIFY_PRECISION when set.
  static Precision default_precision();
};

}  // namespace sinc::cli
