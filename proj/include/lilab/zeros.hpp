#pragma once

// Tables of zero ordinates tau_k, rho = 1/2 +- i tau_k, and the smooth
// Riemann-von Mangoldt counting function.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lilab/bigfloat.hpp"

namespace lilab {

// x = 1/4 + tau^2 = rho (1 - rho).
BigComplex x_of(const BigComplex& tau);

// One pair {rho, 1 - rho}. Off-axis synthetic entries with Re tau > 0 stand
// for the quadruple {tau, conj(tau)}: sums over the table add the conjugate
// pair's contribution as well.
struct ZeroPair {
  BigComplex tau;
  bool with_conjugate = false;
  int fraction_digits = 0;  // digits after the decimal point in the source text

  bool on_axis() const { return tau.im.is_zero(); }
  BigComplex x(mpfr_prec_t prec) const { return x_of(BigComplex(tau, prec)); }
};

enum class TableKind { tabulated, synthetic };

struct ZeroSource {
  std::string origin;
  int digits = 0;
  std::string checksum_sha256;
};

class ZeroTable {
 public:
  ZeroTable() = default;
  ZeroTable(std::vector<ZeroPair> pairs, ZeroSource source, TableKind kind);

  const std::vector<ZeroPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const ZeroPair& operator[](std::size_t k) const { return pairs_[k]; }
  TableKind kind() const { return kind_; }
  const ZeroSource& source() const { return source_; }
  // Largest validated ordinate (real part of the last entry).
  BigFloat height() const;
  // Absolute uncertainty of each ordinate, 10^-digits (0 for synthetic tables).
  BigFloat ordinate_error(mpfr_prec_t prec) const;
  // 10^-d for each entry's own fractional digit count d (never larger than
  // ordinate_error), indexed like pairs().
  std::vector<BigFloat> ordinate_errors(mpfr_prec_t prec) const;
  // Real ordinates as doubles (tabulated tables).
  std::vector<double> ordinates() const;
  // JSON document {source, digits, count, T, checksum_sha256}.
  std::string metadata_json() const;

  // First `count` entries, same kind and source digits.
  ZeroTable truncated(std::size_t count) const;

 private:
  std::vector<ZeroPair> pairs_;
  ZeroSource source_;
  TableKind kind_ = TableKind::tabulated;
};

// Reads one decimal ordinate per line ('#' comments and blank lines skipped)
// and validates it. expected_digits > 0 requires at least that many
// fractional digits per line; 0 takes the smallest count found.
ZeroTable load_zeros(const std::filesystem::path& path, int expected_digits = 0);
ZeroTable parse_zeros(std::istream& in, const std::string& origin, int expected_digits = 0);

// Writes the ordinates at their source digit counts; reloading reproduces
// the stored values bit for bit.
void write_zeros(const ZeroTable& table, std::ostream& out);

// Base pairs plus the pair for tau_star (normalised to Re >= 0, Im > 0).
// Error(precondition) for real tau_star.
ZeroTable inject_off_axis(const ZeroTable& base, const BigComplex& tau_star);
// Synthetic table from explicit ordinates (used for sandboxes and tests).
ZeroTable synthetic_table(const std::vector<BigComplex>& taus);

// N(t) ~ (t/2pi) log(t/2pi) - t/2pi + 7/8 and its derivative (1/2pi) log(t/2pi).
BigFloat smooth_count(const BigFloat& t);
BigFloat smooth_density(const BigFloat& t);
double smooth_count(double t);

// Allowed |N(t) - smooth_count(t)| for the density sanity check.
double density_band(double t);

std::string sha256_hex(const std::string& bytes);

}  // namespace lilab
