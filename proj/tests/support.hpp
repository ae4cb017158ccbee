#pragma once

#include <string>

#include "doctest.h"
#include "lilab/bigfloat.hpp"

namespace lilab_test {

inline lilab::BigFloat num(const std::string& s, mpfr_prec_t prec = 256) { return lilab::BigFloat::parse(s, prec); }

inline double dbl(const lilab::BigFloat& v) { return v.to_double(); }

// |a - b| <= tol
inline bool close(const lilab::BigFloat& a, const lilab::BigFloat& b, const lilab::BigFloat& tol) {
  return lilab::abs(a - b) <= tol;
}
inline bool close(const lilab::BigFloat& a, const std::string& b, double tol) {
  return lilab::abs(a - num(b, a.precision())) <= tol;
}
inline bool close(const lilab::BigComplex& a, const std::string& re, const std::string& im, double tol) {
  return close(a.re, re, tol) && close(a.im, im, tol);
}

inline std::string data_file(const std::string& name) { return std::string(LILAB_DATA_DIR) + "/" + name; }

}  // namespace lilab_test
