#pragma once

// Effective settings of one li_lab run, printed with every result.

#include <cstdint>
#include <string>

namespace lilab {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string command;     // "zeros validate", "z eval", "lambda", ...
  long bits = 128;         // requested
  long effective_bits = 0; // after per-command raises
  std::string zeros_path;
  std::string tail_T;      // empty: midway between the last two ordinates
  int tail_K = 8;
  double window_lo = 0.6;
  double window_hi = 1.0;
  int window_cutoffs = 32;
  OutputFormat format = OutputFormat::csv;
  bool plot = false;
  std::string plot_prefix;
  bool serial = false;

  long from = 1;
  long to = 0;
  long step = 1;
  std::string method;      // lambda, compare
  bool delta = false;      // compare
  std::string sigma;       // z eval, "a", "a+bi"
  std::string tau_star;    // sandbox
  std::string base;        // sandbox: zeros path or "none"
  std::uint64_t prime_sum = 0;  // cumulants, 0 = off
  std::string stieltjes_path;   // cumulants / sn: ingest instead of computing

  // Significant digits printed: max(20, ceil(0.3 bits)).
  int output_digits() const;
  std::string to_json() const;
  static RunConfig from_json(const std::string& text);
  bool operator==(const RunConfig&) const = default;
};

const char* to_string(OutputFormat f);

}  // namespace lilab
