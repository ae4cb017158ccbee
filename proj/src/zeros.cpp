#include "lilab/zeros.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "lilab/errors.hpp"

namespace lilab {

BigComplex x_of(const BigComplex& tau) {
  BigComplex x = sqr(tau);
  x.re += BigFloat(0.25, tau.precision());
  return x;
}

ZeroTable::ZeroTable(std::vector<ZeroPair> pairs, ZeroSource source, TableKind kind)
    : pairs_(std::move(pairs)), source_(std::move(source)), kind_(kind) {}

BigFloat ZeroTable::height() const {
  if (pairs_.empty()) return BigFloat(0, 64);
  return pairs_.back().tau.re;
}

BigFloat ZeroTable::ordinate_error(mpfr_prec_t prec) const {
  if (kind_ == TableKind::synthetic || source_.digits <= 0) return BigFloat(prec);
  BigFloat e(10, prec);
  return pow(e, -static_cast<long>(source_.digits));
}

std::vector<BigFloat> ZeroTable::ordinate_errors(mpfr_prec_t prec) const {
  std::vector<BigFloat> out;
  out.reserve(pairs_.size());
  if (kind_ == TableKind::synthetic) {
    out.assign(pairs_.size(), BigFloat(prec));
    return out;
  }
  std::vector<BigFloat> by_digits;
  const BigFloat table_error = ordinate_error(prec);
  for (const auto& p : pairs_) {
    const auto d = static_cast<std::size_t>(std::max(p.fraction_digits, 0));
    while (by_digits.size() <= d) by_digits.push_back(pow(BigFloat(10, prec), -static_cast<long>(by_digits.size())));
    out.push_back(p.fraction_digits > 0 ? min(by_digits[d], table_error) : table_error);
  }
  return out;
}

std::vector<double> ZeroTable::ordinates() const {
  std::vector<double> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.tau.re.to_double());
  return out;
}

std::string ZeroTable::metadata_json() const {
  nlohmann::ordered_json j;
  j["source"] = source_.origin;
  j["digits"] = source_.digits;
  j["count"] = pairs_.size();
  j["T"] = pairs_.empty() ? std::string("0") : height().to_string(20);
  j["checksum_sha256"] = source_.checksum_sha256;
  return j.dump(2);
}

ZeroTable ZeroTable::truncated(std::size_t count) const {
  std::vector<ZeroPair> head(pairs_.begin(), pairs_.begin() + static_cast<long>(std::min(count, pairs_.size())));
  ZeroSource src = source_;
  src.origin += " (first " + std::to_string(head.size()) + ")";
  return ZeroTable(std::move(head), std::move(src), kind_);
}

double smooth_count(double t) {
  const double u = t / (2.0 * M_PI);
  return u * std::log(u) - u + 0.875;
}

BigFloat smooth_count(const BigFloat& t) {
  BigFloat u = t / (BigFloat::pi(t.precision()) * 2);
  return u * log(u) - u + BigFloat(0.875, t.precision());
}

BigFloat smooth_density(const BigFloat& t) {
  BigFloat twopi = BigFloat::pi(t.precision()) * 2;
  return log(t / twopi) / twopi;
}

double density_band(double t) { return 3.0 + 0.5 * std::log(t); }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string where(const std::string& origin, std::size_t line) {
  return origin + ":" + std::to_string(line);
}

}  // namespace

ZeroTable parse_zeros(std::istream& in, const std::string& origin, int expected_digits) {
  std::ostringstream raw;
  raw << in.rdbuf();
  const std::string bytes = raw.str();

  std::vector<ZeroPair> pairs;
  std::istringstream lines(bytes);
  std::string line;
  std::size_t line_no = 0;
  int min_digits = -1;
  BigFloat prev_exact(64);
  for (; std::getline(lines, line);) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;

    const auto dot = text.find('.');
    const int frac = dot == std::string::npos ? 0 : static_cast<int>(text.size() - dot - 1);
    const std::size_t digit_count = text.size();
    for (char c : text)
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.'))
        throw Error(ErrorCode::parse, where(origin, line_no) + ": malformed ordinate '" + text + "'");
    if (expected_digits > 0 && frac < expected_digits)
      throw Error(ErrorCode::parse, where(origin, line_no) + ": " + std::to_string(frac) +
                                        " fractional digits, expected " + std::to_string(expected_digits));
    const auto bits = static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digit_count) * 3.3219281)) + 16;
    BigFloat tau;
    try {
      tau = BigFloat::parse(text, bits);
    } catch (const Error&) {
      throw Error(ErrorCode::parse, where(origin, line_no) + ": malformed ordinate '" + text + "'");
    }
    if (!pairs.empty() && !(prev_exact < tau))
      throw Error(ErrorCode::monotonicity, where(origin, line_no) + ": ordinate " + text +
                                               " does not exceed the previous one");
    prev_exact = tau;
    min_digits = min_digits < 0 ? frac : std::min(min_digits, frac);
    ZeroPair pair{BigComplex(tau), false, frac};
    pairs.push_back(std::move(pair));
  }
  if (pairs.empty()) throw Error(ErrorCode::parse, origin + ": no ordinates");

  const double first = pairs.front().tau.re.to_double();
  if (std::fabs(first - 14.134725) > 0.01)
    throw Error(ErrorCode::first_zero, origin + ": first ordinate " + pairs.front().tau.re.to_string(12) +
                                           " is not the first zeta zero (14.1347...)");

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double t = pairs[k].tau.re.to_double();
    const double deviation = static_cast<double>(k + 1) - smooth_count(t);
    if (std::fabs(deviation) >= density_band(t))
      throw Error(ErrorCode::density, origin + ": zero #" + std::to_string(k + 1) + " at t = " +
                                          pairs[k].tau.re.to_string(15) + " deviates from the smooth count by " +
                                          std::to_string(deviation));
  }

  ZeroSource src{origin, expected_digits > 0 ? expected_digits : min_digits, sha256_hex(bytes)};
  return ZeroTable(std::move(pairs), std::move(src), TableKind::tabulated);
}

ZeroTable load_zeros(const std::filesystem::path& path, int expected_digits) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::not_found, path.string() + " not found");
  return parse_zeros(in, path.string(), expected_digits);
}

void write_zeros(const ZeroTable& table, std::ostream& out) {
  out << "# " << table.source().origin << "\n";
  for (const auto& p : table.pairs()) {
    const int digits = std::max(p.fraction_digits, 0);
    const int n = mpfr_snprintf(nullptr, 0, "%.*Rf", digits, p.tau.re.get());
    std::string buf(static_cast<std::size_t>(n) + 1, '\0');
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, p.tau.re.get());
    buf.resize(static_cast<std::size_t>(n));
    out << buf << "\n";
  }
}

namespace {

ZeroTable add_pair(const ZeroTable& base, const BigComplex& tau_star) {
  // Representative with Re >= 0, Im >= 0 (the same zero set).
  BigComplex tau = tau_star;
  if (tau.re.sign() < 0) tau = -tau;
  if (tau.im.sign() < 0) tau = conj(tau);
  BigComplex x = x_of(tau);
  if (x.re.is_zero() && x.im.is_zero())
    throw Error(ErrorCode::degenerate_zero, "tau = i/2 gives x = 0 (rho in {0, 1})");

  std::vector<ZeroPair> pairs = base.pairs();
  ZeroPair p{tau, !tau.im.is_zero() && tau.re.sign() > 0, 0};
  pairs.push_back(std::move(p));
  ZeroSource src = base.source();
  src.origin = (base.empty() ? std::string("synthetic") : base.source().origin) + " + tau*=" +
               tau.re.to_string(10) + (tau.im.sign() >= 0 ? "+" : "") + tau.im.to_string(10) + "i";
  return ZeroTable(std::move(pairs), std::move(src), TableKind::synthetic);
}

}  // namespace

ZeroTable synthetic_table(const std::vector<BigComplex>& taus) {
  ZeroTable t({}, ZeroSource{"synthetic", 0, ""}, TableKind::synthetic);
  for (const auto& tau : taus) t = add_pair(t, tau);
  return t;
}

ZeroTable inject_off_axis(const ZeroTable& base, const BigComplex& tau_star) {
  if (tau_star.im.is_zero())
    throw Error(ErrorCode::precondition, "tau* = " + tau_star.re.to_string(10) + " is real: an on-axis zero, not an injection");
  return add_pair(base, tau_star);
}

}  // namespace lilab
