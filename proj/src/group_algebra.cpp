#include "hg/group_algebra.hpp"

#include "hg/errors.hpp"

namespace hg {

AlgElt& AlgElt::add(const Perm& n, const FieldElt& coef) {
  auto it = terms_.find(n);
  if (it == terms_.end()) {
    if (!coef.is_zero()) terms_.emplace(n, coef);
  } else {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

const FieldElt AlgElt::coefficient(const Perm& n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? FieldElt() : it->second;
}

AlgElt AlgElt::operator+(const AlgElt& rhs) const {
  AlgElt out = *this;
  for (const auto& [n, c] : rhs.terms_) out.add(n, c);
  return out;
}

AlgElt AlgElt::scaled(const FieldElt& c) const {
  AlgElt out;
  for (const auto& [n, coef] : terms_) out.add(n, coef * c);
  return out;
}

AlgElt AlgElt::mapped(const GroupMap& phi) const {
  AlgElt out;
  for (const auto& [n, coef] : terms_) {
    auto it = phi.find(n);
    if (it == phi.end()) throw PreconditionError("AlgElt::mapped: support element outside the map");
    out.add(it->second, coef);
  }
  return out;
}

FieldElt AlgElt::counit() const {
  FieldElt total;
  for (const auto& [n, coef] : terms_) total += coef;
  return total;
}

GaloisEmbedding::GaloisEmbedding(const GPContext& ctx) : point_reps(ctx.point_reps), Gp(ctx.Gp) {
  if (ctx.G.degree() != 4)
    throw PreconditionError("GaloisEmbedding: the acting group must permute the four roots");
}

FieldElt hopf_action(const GaloisEmbedding& emb, const HGStructure& H, const AlgElt& h,
                     const FieldElt& x) {
  for (const Perm& g : emb.Gp.generators())
    if (!(galois_act(g, x) == x))
      throw PreconditionError("hopf_action: x is not fixed by G', the action would depend on coset representatives");
  FieldElt total;
  for (const auto& [n, coef] : h.terms()) {
    if (!H.N.contains(n)) throw PreconditionError("hopf_action: support element outside N");
    const int point = n.inverse().apply0(0);
    total += coef * galois_act(emb.point_reps[static_cast<std::size_t>(point)], x);
  }
  return total;
}

bool is_in_H(const GPContext& ctx, const HGStructure& H, const AlgElt& h) {
  for (const auto& [n, coef] : h.terms())
    if (!H.N.contains(n)) throw PreconditionError("is_in_H: support outside N");
  for (const Perm& g : ctx.G.generators()) {
    const Perm& lg = ctx.lambda_of(g);
    for (const Perm& n : H.N.elements())
      if (!(h.coefficient(conjugate(lg, n)) == galois_act(g, h.coefficient(n)))) return false;
  }
  return true;
}

FieldElt reference_first_expansion() {
  // a4^3 + (a2 - b1) a4^2 + (-a2 a3 + b2 + a3^2) a4 + (-a3^2 + b1 a3) a2 - b3
  const FieldElt a2 = FieldElt::alpha(2), a3 = FieldElt::alpha(3), a4 = FieldElt::alpha(4);
  const FieldElt b1 = FieldElt::b(1), b2 = FieldElt::b(2), b3 = FieldElt::b(3);
  return a4.pow(3) + (a2 - b1) * a4.pow(2) + (-(a2 * a3) + b2 + a3.pow(2)) * a4 +
         (-a3.pow(2) + b1 * a3) * a2 - b3;
}

FieldElt reference_second_expansion() {
  // -a4^3 + (-a2 + b1) a4^2 + ((b1 - a3) a2 - b2 + b1 a3 - a3^2) a4 + a2 a3^2
  const FieldElt a2 = FieldElt::alpha(2), a3 = FieldElt::alpha(3), a4 = FieldElt::alpha(4);
  const FieldElt b1 = FieldElt::b(1), b2 = FieldElt::b(2);
  return -a4.pow(3) + (-a2 + b1) * a4.pow(2) +
         ((b1 - a3) * a2 - b2 + b1 * a3 - a3.pow(2)) * a4 + a2 * a3.pow(2);
}

namespace {

const Perm& basis_element(const HGStructure& H, char name) {
  for (const auto& [gname, perm] : H.basis)
    if (!gname.empty() && gname[0] == name) return perm;
  throw PreconditionError(std::string("structure has no basis generator named ") + name);
}

}  // namespace

InequalityReport inequality_check(const GPContext& ctx, const HGStructure& source,
                                  const HGStructure& target, const GroupMap& phi) {
  InequalityReport report;
  const GaloisEmbedding emb(ctx);

  const Perm& r = basis_element(source, 'r');
  const Perm& s = basis_element(source, 's');
  const Perm& t = basis_element(source, 't');

  report.h.add(s, FieldElt::alpha(1).pow(2));
  report.h.add(compose(r, s), FieldElt::alpha(2).pow(2));
  report.h.add(compose(s, t), FieldElt::alpha(3).pow(2));
  report.h.add(compose(compose(r, s), t), FieldElt::alpha(4).pow(2));

  report.h_in_source = is_in_H(ctx, source, report.h);
  const AlgElt phi_h = report.h.mapped(phi);
  report.phi_h_in_target = is_in_H(ctx, target, phi_h);

  const FieldElt alpha1 = FieldElt::alpha(1);
  report.mu_source = hopf_action(emb, source, report.h, alpha1);
  report.mu_target = hopf_action(emb, target, phi_h, alpha1);
  report.mu_values_differ = !(report.mu_source == report.mu_target);

  const FieldElt a2 = FieldElt::alpha(2), a3 = FieldElt::alpha(3), a4 = FieldElt::alpha(4);
  report.first_expansion = a2.pow(2) * a3 + a3.pow(2) * a4 + a4.pow(2) * a2;
  report.second_expansion = a2.pow(2) * a4 + a3.pow(2) * a2 + a4.pow(2) * a3;
  report.expansions_match_reference = report.first_expansion == reference_first_expansion() &&
                                      report.second_expansion == reference_second_expansion();

  const FieldElt difference = report.first_expansion - report.second_expansion;
  report.difference_nonzero = !difference.is_zero();
  const std::array<Rational, 4> sample{Rational(0), Rational(0), Rational(0), Rational(-1)};
  report.specialized_difference_nonzero = !difference.evaluate_b(sample).is_zero();

  // the mu values must decompose as alpha_1^3 plus the expansions
  const FieldElt cube = alpha1.pow(3);
  if (!(report.mu_source == cube + report.first_expansion) ||
      !(report.mu_target == cube + report.second_expansion))
    throw Error("inequality_check: Hopf action values do not match their expansions");
  return report;
}

}  // namespace hg
