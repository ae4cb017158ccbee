#include "lilab/bigfloat.hpp"

#include <cmath>
#include <vector>

#include "lilab/errors.hpp"

namespace lilab {

namespace {
thread_local mpfr_prec_t g_default_prec = 128;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::pole: return "pole";
    case ErrorCode::precision_infeasible: return "precision infeasible";
    case ErrorCode::near_zero: return "near zero of zeta";
    case ErrorCode::insufficient_precision: return "insufficient precision";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::monotonicity: return "monotonicity violation";
    case ErrorCode::density: return "density violation";
    case ErrorCode::first_zero: return "first-zero mismatch";
    case ErrorCode::not_found: return "not found";
    case ErrorCode::precondition: return "precondition violated";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::degenerate_zero: return "degenerate zero";
    case ErrorCode::non_convergence: return "non-convergence";
    case ErrorCode::out_of_strip: return "outside continuation strip";
    case ErrorCode::table_too_short: return "table too short";
    case ErrorCode::sieve_capacity: return "sieve capacity exceeded";
    case ErrorCode::no_interior_minimum: return "no interior minimum";
  }
  return "error";
}

const char* to_string(ErrorKind kind) { return kind == ErrorKind::rigorous ? "rigorous" : "heuristic"; }

void PrecisionContext::validate() const {
  if (bits < 64) throw Error(ErrorCode::precondition, "precision must be at least 64 bits");
  if (guard_bits < 0) throw Error(ErrorCode::precondition, "guard bits must be non-negative");
}

mpfr_prec_t BigFloat::default_precision() { return g_default_prec; }
void BigFloat::set_default_precision(mpfr_prec_t prec) { g_default_prec = prec; }

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t prec) {
  std::string s(text);
  BigFloat r(prec);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.get(), s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == s.c_str() || *end != '\0')
    throw Error(ErrorCode::parse, "not a decimal number: '" + s + "'");
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::euler_gamma(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log2(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::two_pow(long e, mpfr_prec_t prec) {
  BigFloat r(1, prec);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (digits < 1) digits = 1;
  int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

std::string BigFloat::to_string() const {
  return to_string(static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 2);
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat d = norm(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigFloat abs(const BigComplex& z) {
  BigFloat r(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

BigFloat norm(const BigComplex& z) { return sqr(z.re) + sqr(z.im); }

BigFloat arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex expi(const BigFloat& theta) {
  BigFloat s(theta.precision()), c(theta.precision());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {std::move(c), std::move(s)};
}

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re);
  BigComplex e = expi(z.im);
  return {e.re * m, e.im * m};
}

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex inverse(const BigComplex& z) {
  BigFloat d = norm(z);
  return {z.re / d, -z.im / d};
}

BigComplex sqr(const BigComplex& z) { return {sqr(z.re) - sqr(z.im), 2 * (z.re * z.im)}; }

BigComplex pow(const BigComplex& z, long k) {
  if (k < 0) return pow(inverse(z), -k);
  BigComplex result(1.0, 0.0, z.precision());
  BigComplex base = z;
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base = sqr(base);
  }
  return result;
}

BigComplex pow(const BigComplex& z, const BigComplex& w) { return exp(w * log(z)); }

namespace {
ErrorKind kind_of(const ValueWithError& a, const ValueWithError& b) { return combine(a.kind, b.kind); }
}  // namespace

ValueWithError operator+(const ValueWithError& a, const ValueWithError& b) {
  BigFloat v = a.value + b.value;
  BigFloat e = a.abs_error + b.abs_error + rounding_bound(v, v.precision());
  return {std::move(v), std::move(e), kind_of(a, b)};
}

ValueWithError operator-(const ValueWithError& a, const ValueWithError& b) {
  BigFloat v = a.value - b.value;
  BigFloat e = a.abs_error + b.abs_error + rounding_bound(v, v.precision());
  return {std::move(v), std::move(e), kind_of(a, b)};
}

ValueWithError operator*(const ValueWithError& a, const ValueWithError& b) {
  BigFloat v = a.value * b.value;
  BigFloat e = abs(a.value) * b.abs_error + abs(b.value) * a.abs_error + a.abs_error * b.abs_error +
               rounding_bound(v, v.precision());
  return {std::move(v), std::move(e), kind_of(a, b)};
}

ComplexValueWithError operator+(const ComplexValueWithError& a, const ComplexValueWithError& b) {
  BigComplex v = a.value + b.value;
  BigFloat e = a.abs_error + b.abs_error + rounding_bound(abs(v), v.precision());
  return {std::move(v), std::move(e), combine(a.kind, b.kind)};
}

ComplexValueWithError operator-(const ComplexValueWithError& a, const ComplexValueWithError& b) {
  BigComplex v = a.value - b.value;
  BigFloat e = a.abs_error + b.abs_error + rounding_bound(abs(v), v.precision());
  return {std::move(v), std::move(e), combine(a.kind, b.kind)};
}

ComplexValueWithError operator*(const ComplexValueWithError& a, const ComplexValueWithError& b) {
  BigComplex v = a.value * b.value;
  BigFloat e = abs(a.value) * b.abs_error + abs(b.value) * a.abs_error + a.abs_error * b.abs_error +
               rounding_bound(abs(v), v.precision(), 4);
  return {std::move(v), std::move(e), combine(a.kind, b.kind)};
}

ComplexValueWithError operator/(const ComplexValueWithError& a, const ComplexValueWithError& b) {
  BigComplex v = a.value / b.value;
  BigFloat mb = abs(b.value);
  // First-order bound: |a/b| (ea/|a| + eb/|b|), written to stay finite for a = 0.
  BigFloat e = (a.abs_error + abs(v) * b.abs_error) / (mb - b.abs_error) + rounding_bound(abs(v), v.precision(), 8);
  return {std::move(v), std::move(e), combine(a.kind, b.kind)};
}

BigFloat rounding_bound(const BigFloat& magnitude, long bits, long operations) {
  BigFloat r = abs(magnitude) * operations;
  mpfr_mul_2si(r.get(), r.get(), -(bits - 1), MPFR_RNDU);
  return r;
}

bool within(const BigFloat& a, const BigFloat& b, const BigFloat& tol) { return abs(a - b) <= tol; }

}  // namespace lilab
