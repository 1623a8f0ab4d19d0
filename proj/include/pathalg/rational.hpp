// Exact rational scalar type and the dense Eigen types built on it.
//
// All arithmetic in this library is exact: the scalar is an arbitrary
// precision rational kept in lowest terms with positive denominator
// (GMP's canonical mpq form). No floating point is used anywhere.

#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace pathalg {

using Rat = mpq_class;

using Index = Eigen::Index;
using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Rat, 1, Eigen::Dynamic>;

/// Canonicalized rational from an integer pair. Throws on zero denominator.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" (ASCII, optional leading '-'). Throws on malformed input.
inline Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("malformed rational: empty string");
  std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw std::invalid_argument("malformed rational: \"" + text + "\"");
    std::size_t k = (s[0] == '-') ? 1 : 0;
    if (k == s.size()) throw std::invalid_argument("malformed rational: \"" + text + "\"");
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9')
        throw std::invalid_argument("malformed rational: \"" + text + "\"");
  };
  if (slash == std::string::npos) {
    check_int(text);
    Rat r(text);
    r.canonicalize();
    return r;
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  if (den[0] == '-' || mpz_class(den) == 0)
    throw std::invalid_argument("malformed rational: \"" + text + "\"");
  Rat r(text);
  r.canonicalize();
  return r;
}

/// Canonical string form: "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

}  // namespace pathalg
