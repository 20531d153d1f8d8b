#include "sinc/cli/run_config.hpp"

#include <cstdlib>

#include "sinc/errors.hpp"

namespace sinc::cli {

void RunConfig::validate() const {
  if (precision_bits < 64) throw DomainError("precision must be at least 64 bits");
  if (precision_bits > (1 << 16)) throw DomainError("precision above 65536 bits is not supported");
  if (tolerance.sign() <= 0) throw DomainError("tolerance must be positive");
  if (max_depth < 1) throw DomainError("max depth must be at least 1");
}

certify::SignOptions RunConfig::sign_options() const {
  certify::SignOptions o;
  o.precision = precision_bits;
  o.max_depth = max_depth;
  o.max_precision = std::max<Precision>(1024, precision_bits);
  return o;
}

Precision RunConfig::default_precision() {
  const char* env = std::getenv("SINC_CERTIFY_PRECISION");
  if (env == nullptr || *env == '\0') return exactnum::kDefaultPrecision;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0') throw DomainError(std::string("SINC_CERTIFY_PRECISION is not an integer: ") + env);
  return static_cast<Precision>(v);
}

}  // namespace sinc::cli
