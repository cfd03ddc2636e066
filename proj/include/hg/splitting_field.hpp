#ifndef HG_SPLITTING_FIELD_HPP
#define HG_SPLITTING_FIELD_HPP

#include <array>
#include <map>
#include <string>

#include "hg/coefpoly.hpp"
#include "hg/perm.hpp"

namespace hg {

/// An element of the splitting field K~ = k(a1,a2,a3,a4) of the generic
/// quartic X^4 - b1 X^3 + b2 X^2 - b3 X + b4, held in normal form on the
/// 24-element k-basis a4^{i4} a3^{i3} a2^{i2}, i4 <= 3, i3 <= 2, i2 <= 1.
///
/// a1 is eliminated linearly (a1 = b1 - a2 - a3 - a4); the powers a4^4,
/// a3^3, a2^2 reduce along the cofactor tower obtained by successively
/// dividing the quartic by (X - a4) and (X - a3). The rewriting relations
/// are derived once by symbolic division at startup, never transcribed,
/// and the startup self-check verifies that the quartic vanishes on every
/// root. All arithmetic keeps elements in normal form.
class FieldElt {
 public:
  /// exponents (i2, i3, i4)
  using Mono = std::array<int, 3>;

  FieldElt() = default;

  static FieldElt zero() { return FieldElt(); }
  static FieldElt one() { return from_int(1); }
  static FieldElt from_int(long long v);
  static FieldElt from_rational(const Rational& q);
  static FieldElt from_coef(const CoefPoly& c);
  static FieldElt b(int i);      // 1 <= i <= 4
  static FieldElt alpha(int i);  // root a_i, 1 <= i <= 4

  /// a1^{e1} a2^{e2} a3^{e3} a4^{e4}, reduced.
  static FieldElt alpha_monomial(int e1, int e2, int e3, int e4);

  bool is_zero() const { return terms_.empty(); }
  /// True when the element lies in k (no alpha monomials).
  bool in_base_field() const;

  FieldElt operator+(const FieldElt& rhs) const;
  FieldElt operator-(const FieldElt& rhs) const;
  FieldElt operator-() const;
  FieldElt operator*(const FieldElt& rhs) const;
  FieldElt& operator+=(const FieldElt& rhs);
  FieldElt pow(int e) const;

  bool operator==(const FieldElt& rhs) const { return terms_ == rhs.terms_; }

  /// Coefficient of the basis monomial (i2, i3, i4).
  const CoefPoly coefficient(const Mono& m) const;

  /// Substitutes rational values for b1..b4 (a polynomial-identity
  /// specialization; the alpha basis is kept formal).
  FieldElt evaluate_b(const std::array<Rational, 4>& b_values) const;

  /// Canonical text: basis monomials in descending (i4, i3, i2) order,
  /// each as e.g. "(b1 - 2)*a4^3*a2"; golden tests compare byte-exactly.
  std::string to_string() const;

  const std::map<Mono, CoefPoly>& terms() const { return terms_; }

 private:
  void reduce();
  std::map<Mono, CoefPoly> terms_;
};

/// The field automorphism induced by the root permutation g in S_4:
/// substitutes a_i -> a_{g(i)} and renormalizes.
FieldElt galois_act(const Perm& g, const FieldElt& x);

/// The Vandermonde square root of the discriminant,
/// prod_{i<j} (a_i - a_j), in normal form.
const FieldElt& sqrt_disc();

}  // namespace hg

#endif
