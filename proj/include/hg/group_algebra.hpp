#ifndef HG_GROUP_ALGEBRA_HPP
#define HG_GROUP_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "hg/gp.hpp"
#include "hg/splitting_field.hpp"

namespace hg {

/// A formal element of K~[N]: a finitely supported map from group elements
/// to field elements. Coefficients live in all of K~; membership in the
/// fixed-point Hopf algebra H = K~[N]^G is the checked predicate is_in_H.
class AlgElt {
 public:
  AlgElt() = default;

  AlgElt& add(const Perm& n, const FieldElt& coef);
  const FieldElt coefficient(const Perm& n) const;
  const std::map<Perm, FieldElt>& terms() const { return terms_; }

  AlgElt operator+(const AlgElt& rhs) const;
  AlgElt scaled(const FieldElt& c) const;

  /// Pushforward along a bijection of the support (e.g. a G-isomorphism).
  AlgElt mapped(const GroupMap& phi) const;

  /// Sum of all coefficients; the group-algebra counit sends every group
  /// element to 1.
  FieldElt counit() const;

 private:
  std::map<Perm, FieldElt> terms_;
};

/// The coset representatives of a GP context read as root permutations:
/// the Hopf action evaluates coefficients against galois_act through them.
/// Requires the acting group to be a degree-4 root group.
struct GaloisEmbedding {
  std::vector<Perm> point_reps;
  PermGroup Gp;
  explicit GaloisEmbedding(const GPContext& ctx);
};

/// (sum a_n n) . x = sum a_n (n^{-1})(1_G)(x): the coefficient of n acts
/// on x through the representative of the coset at the point n^{-1}(1).
/// x must be fixed by G' (i.e. lie in K), otherwise the value would depend
/// on the representatives; violations throw PreconditionError.
FieldElt hopf_action(const GaloisEmbedding& emb, const HGStructure& H, const AlgElt& h,
                     const FieldElt& x);

/// True iff h is fixed by the twisted G-action on K~[N]: for every
/// generator g of G, the coefficient at lambda(g) n lambda(g)^{-1} equals
/// galois_act(g, a_n) for all n in N.
bool is_in_H(const GPContext& ctx, const HGStructure& H, const AlgElt& h);

/// The end-to-end symbolic comparison of two structures related by a
/// G-isomorphism phi: evaluates both Hopf actions on alpha_1 at the
/// element h = a1^2 s + a2^2 rs + a3^2 st + a4^2 rst of the source algebra
/// and certifies that the actions differ while phi(h) still lies in the
/// target algebra.
struct InequalityReport {
  AlgElt h;
  bool h_in_source = false;
  bool phi_h_in_target = false;
  FieldElt mu_source;           // mu_3(h)(alpha_1)
  FieldElt mu_target;           // mu_4(phi(h))(alpha_1)
  FieldElt first_expansion;     // NF(a2^2 a3 + a3^2 a4 + a4^2 a2)
  FieldElt second_expansion;    // NF(a2^2 a4 + a3^2 a2 + a4^2 a3)
  bool expansions_match_reference = false;
  bool difference_nonzero = false;
  bool mu_values_differ = false;
  bool specialized_difference_nonzero = false;  // at b = (0,0,0,-1)
};

InequalityReport inequality_check(const GPContext& ctx, const HGStructure& source,
                                  const HGStructure& target, const GroupMap& phi);

/// The two displayed normal forms the comparison is checked against,
/// entered on the 24-element basis.
FieldElt reference_first_expansion();
FieldElt reference_second_expansion();

}  // namespace hg

#endif
