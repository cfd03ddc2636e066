#include "hg/coefpoly.hpp"

#include "hg/errors.hpp"

namespace hg {

CoefPoly CoefPoly::from_rational(const Rational& q) {
  CoefPoly p;
  if (q != 0) p.terms_[{0, 0, 0, 0}] = q;
  return p;
}

CoefPoly CoefPoly::b(int i) {
  if (i < 1 || i > 4) throw PreconditionError("CoefPoly::b: index out of range");
  Expts e{0, 0, 0, 0};
  e[static_cast<std::size_t>(i - 1)] = 1;
  return monomial(e, 1);
}

CoefPoly CoefPoly::monomial(const Expts& e, const Rational& coef) {
  for (int v : e)
    if (v < 0) throw PreconditionError("CoefPoly: negative exponent");
  CoefPoly p;
  if (coef != 0) p.terms_[e] = coef;
  return p;
}

bool CoefPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Expts{0, 0, 0, 0};
}

Rational CoefPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw PreconditionError("CoefPoly: not a constant");
  return terms_.begin()->second;
}

void CoefPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) terms_[e] += c;
  prune();
  return *this;
}

CoefPoly CoefPoly::operator+(const CoefPoly& rhs) const {
  CoefPoly out = *this;
  out += rhs;
  return out;
}

CoefPoly CoefPoly::operator-() const {
  CoefPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

CoefPoly CoefPoly::operator-(const CoefPoly& rhs) const { return *this + (-rhs); }

CoefPoly CoefPoly::operator*(const CoefPoly& rhs) const {
  CoefPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) {
      Expts e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
      out.terms_[e] += c1 * c2;
    }
  out.prune();
  return out;
}

Rational CoefPoly::evaluate(const std::array<Rational, 4>& b_values) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < 4; ++i)
      for (int k = 0; k < e[i]; ++k) term *= b_values[i];
    total += term;
  }
  return total;
}

std::string CoefPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // descending lexicographic exponent order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'b' + std::to_string(i + 1);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty())
      term = mag.str();
    else if (mag == 1)
      term = mono;
    else
      term = mag.str() + "*" + mono;
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace hg
