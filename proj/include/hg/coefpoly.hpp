#ifndef HG_COEFPOLY_HPP
#define HG_COEFPOLY_HPP

#include <array>
#include <map>
#include <string>

#include "hg/rational.hpp"

namespace hg {

/// A polynomial in the quartic coefficients b1..b4 over the rationals,
/// stored sparsely; zero coefficients are never kept. This is the base
/// ring k of the generic quartic.
class CoefPoly {
 public:
  using Expts = std::array<int, 4>;

  CoefPoly() = default;

  static CoefPoly from_rational(const Rational& q);
  static CoefPoly from_int(long long v) { return from_rational(Rational(v)); }
  static CoefPoly b(int i);  // 1 <= i <= 4
  static CoefPoly monomial(const Expts& e, const Rational& coef);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant term (the full value when is_constant()).
  Rational constant_value() const;

  CoefPoly operator+(const CoefPoly& rhs) const;
  CoefPoly operator-(const CoefPoly& rhs) const;
  CoefPoly operator-() const;
  CoefPoly operator*(const CoefPoly& rhs) const;
  CoefPoly& operator+=(const CoefPoly& rhs);

  bool operator==(const CoefPoly& rhs) const { return terms_ == rhs.terms_; }

  /// Substitutes values for b1..b4.
  Rational evaluate(const std::array<Rational, 4>& b_values) const;

  /// Canonical text: terms in descending lexicographic exponent order,
  /// e.g. "b1^2*b3 - 2*b2 + 1/2".
  std::string to_string() const;

  const std::map<Expts, Rational>& terms() const { return terms_; }

 private:
  void prune();
  std::map<Expts, Rational> terms_;
};

}  // namespace hg

#endif
