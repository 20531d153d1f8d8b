#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sinc/certify/roots.hpp"
#include "sinc/cli/run_config.hpp"

namespace sinc::cli {

/// One column of the published table; values are the printed 3-decimal prefixes.
struct PrintedEntry {
  std::string a;
  std::string x_a;
  std::string m_a;
  bool x_a_suspect;
  bool m_a_suspect;
};

const std::vector<PrintedEntry>& table1_printed();

struct Table1Row {
  PrintedEntry printed;
  Rational a;
  std::optional<certify::RootEnclosure> x_a;
  std::optional<exactnum::Enclosure> m_a;
  bool x_a_mismatch = false;
  bool m_a_mismatch = false;
  std::string error;
};

/// |value - printed| > 1/1000 for the enclosure midpoint.
bool differs_from_printed(const exactnum::Enclosure& value, const std::string& printed);

/// First three decimals, truncated, of a positive enclosure's midpoint.
std::string truncate3(const exactnum::Enclosure& value);

std::vector<Table1Row> compute_table1(const RunConfig& config);

int cmd_table1(const RunConfig& config, std::ostream& out);
int cmd_prove(int theorem, const std::optional<std::string>& a, int samples, const RunConfig& config,
              std::ostream& out);
int cmd_xa(const std::string& a, const RunConfig& config, std::ostream& out);
int cmd_ma(const std::string& a, const RunConfig& config, std::ostream& out);
int cmd_envelope(const std::string& target, int m, int n, const std::string& c, const std::string& a,
                 const RunConfig& config, std::ostream& out);
int cmd_check_sign(const std::string& poly_file, const std::string& lo, const std::string& hi,
                   const std::string& sign, const std::string& side, const RunConfig& config, std::ostream& out);

/// Full command line; returns the process exit code (0/1/2/3).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sinc::cli
