#pragma once

// Value-semantic wrappers over MPFR: a real BigFloat, a BigComplex built from
// two of them, and the precision / error-bound types shared by every module.

#include <mpfr.h>

#include <climits>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>

namespace lilab {

enum class ReductionOrder { sequential, fixed_tree };

struct PrecisionContext {
  long bits = 128;
  long guard_bits = 32;
  ReductionOrder reduction_order = ReductionOrder::fixed_tree;

  long working_bits() const { return bits + guard_bits; }
  PrecisionContext with_bits(long b) const {
    PrecisionContext c = *this;
    c.bits = b;
    return c;
  }
  PrecisionContext doubled() const { return with_bits(2 * bits); }
  // Throws Error(precondition) unless bits >= 64 and guard_bits >= 0.
  void validate() const;
};

class BigFloat {
 public:
  BigFloat() : BigFloat(default_precision()) {}
  explicit BigFloat(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(double d, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, d, MPFR_RNDN);
  }
  template <std::integral I>
  BigFloat(I i, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if constexpr (std::is_signed_v<I>)
      mpfr_set_si(v_, static_cast<long>(i), MPFR_RNDN);
    else
      mpfr_set_ui(v_, static_cast<unsigned long>(i), MPFR_RNDN);
  }
  // Copy of `other` rounded (or zero-padded) to `prec`.
  BigFloat(const BigFloat& other, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  // Parses a decimal string; throws Error(parse) on malformed input.
  static BigFloat parse(std::string_view text, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec);
  static BigFloat euler_gamma(mpfr_prec_t prec);
  static BigFloat log2(mpfr_prec_t prec);
  static BigFloat two_pow(long e, mpfr_prec_t prec);

  static mpfr_prec_t default_precision();
  static void set_default_precision(mpfr_prec_t prec);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;
  // Enough digits to round-trip this value exactly.
  std::string to_string() const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent2() const { return is_zero() ? LONG_MIN / 2 : mpfr_get_exp(v_); }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
  BigFloat& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }

 private:
  mpfr_t v_;
};

namespace detail {
inline mpfr_prec_t pmax(const BigFloat& a, const BigFloat& b) {
  return a.precision() > b.precision() ? a.precision() : b.precision();
}
}  // namespace detail

inline BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(detail::pmax(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(detail::pmax(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(detail::pmax(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(detail::pmax(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
template <std::integral I>
inline BigFloat operator+(const BigFloat& a, I k) {
  BigFloat r(a.precision());
  mpfr_add_si(r.get(), a.get(), static_cast<long>(k), MPFR_RNDN);
  return r;
}
template <std::integral I>
inline BigFloat operator+(I k, const BigFloat& a) { return a + k; }
template <std::integral I>
inline BigFloat operator-(const BigFloat& a, I k) {
  BigFloat r(a.precision());
  mpfr_sub_si(r.get(), a.get(), static_cast<long>(k), MPFR_RNDN);
  return r;
}
template <std::integral I>
inline BigFloat operator-(I k, const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_si_sub(r.get(), static_cast<long>(k), a.get(), MPFR_RNDN);
  return r;
}
template <std::integral I>
inline BigFloat operator*(const BigFloat& a, I k) {
  BigFloat r(a.precision());
  mpfr_mul_si(r.get(), a.get(), static_cast<long>(k), MPFR_RNDN);
  return r;
}
template <std::integral I>
inline BigFloat operator*(I k, const BigFloat& a) { return a * k; }
template <std::integral I>
inline BigFloat operator/(const BigFloat& a, I k) {
  BigFloat r(a.precision());
  mpfr_div_si(r.get(), a.get(), static_cast<long>(k), MPFR_RNDN);
  return r;
}
template <std::integral I>
inline BigFloat operator/(I k, const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_si_div(r.get(), static_cast<long>(k), a.get(), MPFR_RNDN);
  return r;
}
template <std::floating_point F>
inline BigFloat operator*(const BigFloat& a, F d) {
  BigFloat r(a.precision());
  mpfr_mul_d(r.get(), a.get(), static_cast<double>(d), MPFR_RNDN);
  return r;
}
template <std::floating_point F>
inline BigFloat operator*(F d, const BigFloat& a) { return a * d; }
template <std::floating_point F>
inline BigFloat operator+(const BigFloat& a, F d) {
  BigFloat r(a.precision());
  mpfr_add_d(r.get(), a.get(), static_cast<double>(d), MPFR_RNDN);
  return r;
}
template <std::floating_point F>
inline BigFloat operator-(const BigFloat& a, F d) {
  BigFloat r(a.precision());
  mpfr_sub_d(r.get(), a.get(), static_cast<double>(d), MPFR_RNDN);
  return r;
}

inline bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.get(), b.get()); }
inline bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.get(), b.get()); }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.get(), b.get()); }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.get(), b.get()); }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.get(), b.get()); }
inline bool operator<(const BigFloat& a, double d) { return mpfr_cmp_d(a.get(), d) < 0; }
inline bool operator>(const BigFloat& a, double d) { return mpfr_cmp_d(a.get(), d) > 0; }
inline bool operator<=(const BigFloat& a, double d) { return mpfr_cmp_d(a.get(), d) <= 0; }
inline bool operator>=(const BigFloat& a, double d) { return mpfr_cmp_d(a.get(), d) >= 0; }

#define LILAB_UNARY(name, fn)                          \
  inline BigFloat name(const BigFloat& a) {            \
    BigFloat r(a.precision());                         \
    fn(r.get(), a.get(), MPFR_RNDN);                   \
    return r;                                          \
  }
LILAB_UNARY(abs, mpfr_abs)
LILAB_UNARY(sqrt, mpfr_sqrt)
LILAB_UNARY(log, mpfr_log)
LILAB_UNARY(log1p, mpfr_log1p)
LILAB_UNARY(exp, mpfr_exp)
LILAB_UNARY(expm1, mpfr_expm1)
LILAB_UNARY(sin, mpfr_sin)
LILAB_UNARY(cos, mpfr_cos)
LILAB_UNARY(atan, mpfr_atan)
LILAB_UNARY(cosh, mpfr_cosh)
LILAB_UNARY(sinh, mpfr_sinh)
LILAB_UNARY(sqr, mpfr_sqr)
#undef LILAB_UNARY

inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(detail::pmax(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
inline BigFloat pow(const BigFloat& a, const BigFloat& b) {
  BigFloat r(detail::pmax(a, b));
  mpfr_pow(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline BigFloat pow(const BigFloat& a, long k) {
  BigFloat r(a.precision());
  mpfr_pow_si(r.get(), a.get(), k, MPFR_RNDN);
  return r;
}
inline BigFloat floor(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_floor(r.get(), a.get());
  return r;
}
inline BigFloat ldexp(const BigFloat& a, long e) {
  BigFloat r(a.precision());
  mpfr_mul_2si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}
inline const BigFloat& max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
inline const BigFloat& min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

// Complex number over BigFloat components. Only the operations the library
// needs are provided.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(const BigFloat& r) : re(r), im(r.precision()) {}
  BigComplex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}
  BigComplex(const BigComplex& other, mpfr_prec_t prec) : re(other.re, prec), im(other.im, prec) {}

  mpfr_prec_t precision() const { return detail::pmax(re, im); }
  bool is_real() const { return im.is_zero(); }

  BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
  BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& k) { re *= k; im *= k; return *this; }
  BigComplex& operator/=(const BigFloat& k) { re /= k; im /= k; return *this; }
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
inline BigComplex operator*(const BigComplex& a, const BigFloat& k) { return {a.re * k, a.im * k}; }
inline BigComplex operator*(const BigFloat& k, const BigComplex& a) { return a * k; }
inline BigComplex operator/(const BigComplex& a, const BigFloat& k) { return {a.re / k, a.im / k}; }
inline BigComplex operator+(const BigComplex& a, const BigFloat& k) { return {a.re + k, a.im}; }
inline BigComplex operator-(const BigComplex& a, const BigFloat& k) { return {a.re - k, a.im}; }
template <std::integral I>
inline BigComplex operator+(const BigComplex& a, I k) { return {a.re + k, a.im}; }
template <std::integral I>
inline BigComplex operator-(const BigComplex& a, I k) { return {a.re - k, a.im}; }
template <std::integral I>
inline BigComplex operator*(const BigComplex& a, I k) { return {a.re * k, a.im * k}; }
template <std::integral I>
inline BigComplex operator/(const BigComplex& a, I k) { return {a.re / k, a.im / k}; }
inline bool operator==(const BigComplex& a, const BigComplex& b) { return a.re == b.re && a.im == b.im; }

inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
BigFloat abs(const BigComplex& z);
BigFloat norm(const BigComplex& z);  // |z|^2
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
BigComplex inverse(const BigComplex& z);
BigComplex sqr(const BigComplex& z);
BigComplex pow(const BigComplex& z, long k);
BigComplex pow(const BigComplex& z, const BigComplex& w);  // exp(w log z)
// exp(i*theta)
BigComplex expi(const BigFloat& theta);

// A value together with an absolute error bound. `kind` records whether the
// bound is rigorous or an estimate.
enum class ErrorKind { rigorous, heuristic };

inline ErrorKind combine(ErrorKind a, ErrorKind b) {
  return (a == ErrorKind::heuristic || b == ErrorKind::heuristic) ? ErrorKind::heuristic : ErrorKind::rigorous;
}
const char* to_string(ErrorKind kind);

struct ValueWithError {
  BigFloat value;
  BigFloat abs_error;
  ErrorKind kind = ErrorKind::rigorous;
};

struct ComplexValueWithError {
  BigComplex value;
  BigFloat abs_error;
  ErrorKind kind = ErrorKind::rigorous;

  ValueWithError real() const { return {value.re, abs_error, kind}; }
};

ValueWithError operator+(const ValueWithError& a, const ValueWithError& b);
ValueWithError operator-(const ValueWithError& a, const ValueWithError& b);
ValueWithError operator*(const ValueWithError& a, const ValueWithError& b);
ComplexValueWithError operator+(const ComplexValueWithError& a, const ComplexValueWithError& b);
ComplexValueWithError operator-(const ComplexValueWithError& a, const ComplexValueWithError& b);
ComplexValueWithError operator*(const ComplexValueWithError& a, const ComplexValueWithError& b);
ComplexValueWithError operator/(const ComplexValueWithError& a, const ComplexValueWithError& b);

// 2^-bits relative rounding allowance for a quantity of magnitude |v|.
BigFloat rounding_bound(const BigFloat& magnitude, long bits, long operations = 1);

// True when |a - b| <= tol (all BigFloat).
bool within(const BigFloat& a, const BigFloat& b, const BigFloat& tol);

}  // namespace lilab
