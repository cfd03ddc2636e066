#include "hg/splitting_field.hpp"

#include <algorithm>

#include "hg/errors.hpp"

namespace hg {

namespace {

using Mono = FieldElt::Mono;
using TermMap = std::map<Mono, CoefPoly>;

void add_term(TermMap& m, const Mono& mono, const CoefPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = m.emplace(mono, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

TermMap raw_mul(const TermMap& a, const TermMap& b) {
  TermMap out;
  for (const auto& [m1, c1] : a)
    for (const auto& [m2, c2] : b)
      add_term(out, {m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
  return out;
}

TermMap raw_scale(const TermMap& a, const CoefPoly& c) {
  TermMap out;
  for (const auto& [m, c0] : a) add_term(out, m, c0 * c);
  return out;
}

// Rewriting rules for a2^2, a3^3 and a4^4, derived from the quartic by
// successive synthetic division; together with the linear elimination of
// a1 they form a triangular set, so the normal form is unique.
struct Relations {
  TermMap a2_sq;   // value of a2^2
  TermMap a3_cube; // value of a3^3
  TermMap a4_qu;   // value of a4^4
};

// Rewrites until every monomial satisfies the exponent bounds. Each step
// strictly lowers (deg a2, deg a3, deg a4) in lexicographic order, so the
// loop terminates; the triangular structure makes the result unique.
void reduce_with(TermMap& terms, const Relations& rel) {
  for (;;) {
    auto it = std::find_if(terms.begin(), terms.end(), [](const auto& t) {
      return t.first[0] >= 2 || t.first[1] >= 3 || t.first[2] >= 4;
    });
    if (it == terms.end()) return;
    const Mono m = it->first;
    const CoefPoly c = it->second;
    terms.erase(it);
    TermMap substituted;
    if (m[0] >= 2)
      substituted = raw_mul(TermMap{{{m[0] - 2, m[1], m[2]}, c}}, rel.a2_sq);
    else if (m[1] >= 3)
      substituted = raw_mul(TermMap{{{m[0], m[1] - 3, m[2]}, c}}, rel.a3_cube);
    else
      substituted = raw_mul(TermMap{{{m[0], m[1], m[2] - 4}, c}}, rel.a4_qu);
    for (const auto& [mm, cc] : substituted) add_term(terms, mm, cc);
  }
}

// P(x) for x given as a reduced term map, using the quartic coefficients.
TermMap eval_quartic(const TermMap& x, const Relations& rel) {
  const TermMap one{{{0, 0, 0}, CoefPoly::from_int(1)}};
  TermMap acc = one;  // will become x^4 by repeated multiplication
  TermMap result;
  const CoefPoly signs[5] = {CoefPoly::b(4), -CoefPoly::b(3), CoefPoly::b(2), -CoefPoly::b(1),
                             CoefPoly::from_int(1)};
  for (int power = 0; power <= 4; ++power) {
    if (power > 0) {
      acc = raw_mul(acc, x);
      reduce_with(acc, rel);
    }
    for (const auto& [m, c] : raw_scale(acc, signs[power])) add_term(result, m, c);
  }
  return result;
}

const Relations& relations() {
  static const Relations rel = [] {
    Relations r;
    const CoefPoly one = CoefPoly::from_int(1);
    const CoefPoly b1 = CoefPoly::b(1), b2 = CoefPoly::b(2), b3 = CoefPoly::b(3), b4 = CoefPoly::b(4);

    const Mono a3{0, 1, 0};
    const Mono a4{0, 0, 1};

    // a4^4 = b1 a4^3 - b2 a4^2 + b3 a4 - b4, straight from the quartic
    r.a4_qu = TermMap{{{0, 0, 3}, b1}, {{0, 0, 2}, -b2}, {{0, 0, 1}, b3}, {{0, 0, 0}, -b4}};

    // divide the quartic by (X - a4): cubic cofactor X^3 + c2 X^2 + c1 X + c0
    TermMap c2{{a4, one}, {{0, 0, 0}, -b1}};
    TermMap c1 = raw_mul(TermMap{{a4, one}}, c2);
    add_term(c1, {0, 0, 0}, b2);
    TermMap c0 = raw_mul(TermMap{{a4, one}}, c1);
    add_term(c0, {0, 0, 0}, -b3);
    TermMap rem4 = raw_mul(TermMap{{a4, one}}, c0);
    add_term(rem4, {0, 0, 0}, b4);
    reduce_with(rem4, r);  // needs only the a4 rule
    if (!rem4.empty()) throw Error("splitting field: quartic does not vanish at a4");

    // a3^3 = -(c2 a3^2 + c1 a3 + c0)
    r.a3_cube.clear();
    for (const auto& [m, c] : raw_mul(TermMap{{{0, 2, 0}, one}}, c2)) add_term(r.a3_cube, m, -c);
    for (const auto& [m, c] : raw_mul(TermMap{{{0, 1, 0}, one}}, c1)) add_term(r.a3_cube, m, -c);
    for (const auto& [m, c] : c0) add_term(r.a3_cube, m, -c);

    // divide the cubic by (X - a3): quadratic cofactor X^2 + d1 X + d0
    TermMap d1 = c2;
    add_term(d1, a3, one);
    TermMap d0 = raw_mul(TermMap{{a3, one}}, d1);
    for (const auto& [m, c] : c1) add_term(d0, m, c);
    TermMap rem3 = raw_mul(TermMap{{a3, one}}, d0);
    for (const auto& [m, c] : c0) add_term(rem3, m, c);
    reduce_with(rem3, r);  // needs the a3 and a4 rules
    if (!rem3.empty()) throw Error("splitting field: cubic cofactor does not vanish at a3");

    // a2^2 = -(d1 a2 + d0)
    r.a2_sq.clear();
    for (const auto& [m, c] : raw_mul(TermMap{{{1, 0, 0}, one}}, d1)) add_term(r.a2_sq, m, -c);
    for (const auto& [m, c] : d0) add_term(r.a2_sq, m, -c);

    // startup self-check: the quartic vanishes on all four roots
    const TermMap root2{{{1, 0, 0}, one}};
    const TermMap root3{{a3, one}};
    const TermMap root4{{a4, one}};
    TermMap root1{{{0, 0, 0}, b1}};
    add_term(root1, {1, 0, 0}, -one);
    add_term(root1, a3, -one);
    add_term(root1, a4, -one);
    const std::array<const TermMap*, 4> roots{&root1, &root2, &root3, &root4};
    for (const TermMap* root : roots)
      if (!eval_quartic(*root, r).empty())
        throw Error("splitting field: self-check failed, P(alpha_j) != 0");
    return r;
  }();
  return rel;
}

}  // namespace

void FieldElt::reduce() { reduce_with(terms_, relations()); }

FieldElt FieldElt::from_int(long long v) { return from_coef(CoefPoly::from_int(v)); }

FieldElt FieldElt::from_rational(const Rational& q) { return from_coef(CoefPoly::from_rational(q)); }

FieldElt FieldElt::from_coef(const CoefPoly& c) {
  FieldElt x;
  if (!c.is_zero()) x.terms_[{0, 0, 0}] = c;
  return x;
}

FieldElt FieldElt::b(int i) { return from_coef(CoefPoly::b(i)); }

FieldElt FieldElt::alpha(int i) {
  FieldElt x;
  switch (i) {
    case 1:
      // a1 = b1 - a2 - a3 - a4
      x.terms_[{0, 0, 0}] = CoefPoly::b(1);
      x.terms_[{1, 0, 0}] = CoefPoly::from_int(-1);
      x.terms_[{0, 1, 0}] = CoefPoly::from_int(-1);
      x.terms_[{0, 0, 1}] = CoefPoly::from_int(-1);
      return x;
    case 2: x.terms_[{1, 0, 0}] = CoefPoly::from_int(1); return x;
    case 3: x.terms_[{0, 1, 0}] = CoefPoly::from_int(1); return x;
    case 4: x.terms_[{0, 0, 1}] = CoefPoly::from_int(1); return x;
    default: throw PreconditionError("FieldElt::alpha: index out of range");
  }
}

FieldElt FieldElt::alpha_monomial(int e1, int e2, int e3, int e4) {
  if (e1 < 0 || e2 < 0 || e3 < 0 || e4 < 0) throw PreconditionError("alpha_monomial: negative exponent");
  FieldElt x;
  x.terms_[{e2, e3, e4}] = CoefPoly::from_int(1);
  x.reduce();
  return x * alpha(1).pow(e1);
}

bool FieldElt::in_base_field() const {
  for (const auto& [m, c] : terms_)
    if (m != Mono{0, 0, 0}) return false;
  return true;
}

FieldElt& FieldElt::operator+=(const FieldElt& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(terms_, m, c);
  return *this;  // sums of normal forms stay in normal form
}

FieldElt FieldElt::operator+(const FieldElt& rhs) const {
  FieldElt out = *this;
  out += rhs;
  return out;
}

FieldElt FieldElt::operator-() const {
  FieldElt out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

FieldElt FieldElt::operator-(const FieldElt& rhs) const { return *this + (-rhs); }

FieldElt FieldElt::operator*(const FieldElt& rhs) const {
  FieldElt out;
  out.terms_ = raw_mul(terms_, rhs.terms_);
  out.reduce();
  return out;
}

FieldElt FieldElt::pow(int e) const {
  if (e < 0) throw PreconditionError("FieldElt::pow: negative exponent");
  FieldElt acc = one();
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

const CoefPoly FieldElt::coefficient(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CoefPoly() : it->second;
}

FieldElt FieldElt::evaluate_b(const std::array<Rational, 4>& b_values) const {
  FieldElt out;
  for (const auto& [m, c] : terms_)
    add_term(out.terms_, m, CoefPoly::from_rational(c.evaluate(b_values)));
  return out;
}

std::string FieldElt::to_string() const {
  if (terms_.empty()) return "0";
  // descending (i4, i3, i2)
  std::vector<std::pair<Mono, const CoefPoly*>> order;
  order.reserve(terms_.size());
  for (const auto& [m, c] : terms_) order.emplace_back(m, &c);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const Mono &x = a.first, &y = b.first;
    if (x[2] != y[2]) return x[2] > y[2];
    if (x[1] != y[1]) return x[1] > y[1];
    return x[0] > y[0];
  });
  std::string out;
  for (const auto& [m, cp] : order) {
    std::string mono;
    const int expts[3] = {m[2], m[1], m[0]};  // print a4, a3, a2
    const char* names[3] = {"a4", "a3", "a2"};
    for (int i = 0; i < 3; ++i) {
      if (expts[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (expts[i] > 1) mono += '^' + std::to_string(expts[i]);
    }
    const CoefPoly& c = *cp;
    const bool multi = c.terms().size() > 1;
    std::string cstr = c.to_string();
    std::string term;
    bool negative = false;
    if (mono.empty()) {
      term = cstr;
      negative = !multi && !cstr.empty() && cstr[0] == '-';
      if (negative) term = cstr.substr(1);
    } else if (multi) {
      term = "(" + cstr + ")*" + mono;
    } else {
      negative = !cstr.empty() && cstr[0] == '-';
      if (negative) cstr = cstr.substr(1);
      term = (cstr == "1") ? mono : cstr + "*" + mono;
    }
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out;
}

FieldElt galois_act(const Perm& g, const FieldElt& x) {
  if (g.degree() != 4) throw PreconditionError("galois_act: root permutation must have degree 4");
  FieldElt out;
  for (const auto& [m, c] : x.terms()) {
    FieldElt term = FieldElt::from_coef(c);
    if (m[0] > 0) term = term * FieldElt::alpha(g.apply1(2)).pow(m[0]);
    if (m[1] > 0) term = term * FieldElt::alpha(g.apply1(3)).pow(m[1]);
    if (m[2] > 0) term = term * FieldElt::alpha(g.apply1(4)).pow(m[2]);
    out += term;
  }
  return out;
}

const FieldElt& sqrt_disc() {
  static const FieldElt delta = [] {
    FieldElt d = FieldElt::one();
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) d = d * (FieldElt::alpha(i) - FieldElt::alpha(j));
    return d;
  }();
  return delta;
}

}  // namespace hg
