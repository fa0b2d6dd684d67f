#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncp {

using Rational = mpq_class;

std::string rational_to_string(const Rational& q);

// Interned parameter names. Ids are process-global. Internal ordering is by
// id; rendering re-sorts by name so text does not depend on interning order.
class ParamTable {
 public:
  static std::uint32_t intern(std::string_view name);
  static const std::string& name(std::uint32_t id);
};

// Product of parameters, factors sorted by id, exponents > 0.
struct ParamMonomial {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;

  bool empty() const { return factors.empty(); }
  unsigned degree() const;
  ParamMonomial operator*(const ParamMonomial& o) const;
  std::string to_string() const;
};

bool operator==(const ParamMonomial& a, const ParamMonomial& b);
std::strong_ordering operator<=>(const ParamMonomial& a, const ParamMonomial& b);

// Polynomial in formal parameters with rational coefficients.
class Scalar {
 public:
  using Term = std::pair<ParamMonomial, Rational>;

  Scalar() = default;
  Scalar(int v) : Scalar(Rational(v)) {}
  Scalar(long v) : Scalar(Rational(v)) {}
  Scalar(const Rational& q);
  Scalar(long num, long den);
  static Scalar parameter(std::string_view name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Throws if parameters remain.
  Rational constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<std::string> parameter_names() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar operator-() const;
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Replace named parameters by values; unnamed ones stay formal.
  Scalar substitute(const std::map<std::string, Scalar>& values) const;

  std::string to_string() const;
  // True when the rendering is a single signed monomial term (no parens needed).
  bool is_monomial() const { return terms_.size() == 1; }

 private:
  static Scalar from_terms(std::vector<Term> t);
  std::vector<Term> terms_;  // sorted by monomial, no zeros
};

}  // namespace ncp
