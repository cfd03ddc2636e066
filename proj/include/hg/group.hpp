#ifndef HG_GROUP_HPP
#define HG_GROUP_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hg/perm.hpp"

namespace hg {

/// Isomorphism type of a group of order 8, determined by the element-order
/// multiset: C8 has an element of order 8; C2xC2xC2 has only involutions;
/// Q8 has exactly one involution; D8 has five; C2xC4 has three involutions
/// and four elements of order 4.
enum class IsoType8 { C8, C2xC4, C2xC2xC2, D8, Q8 };

const char* to_string(IsoType8 t);
extern const IsoType8 all_iso_types8[5];

/// A finite permutation group of fixed degree: a generator list plus the
/// fully materialized element set (sorted, deduplicated). Immutable after
/// construction; all operations on it are pure.
class PermGroup {
 public:
  static constexpr std::size_t default_cap = 1u << 20;

  PermGroup() = default;

  static PermGroup trivial(int degree);
  static PermGroup symmetric(int degree);  // degree <= 8
  static PermGroup from_generators(int degree, std::vector<Perm> gens,
                                   std::size_t cap = default_cap);
  /// Wraps an element list believed to be a group. The identity must be
  /// present; full closure is the caller's responsibility (validated by
  /// validate_closure() in tests).
  static PermGroup from_elements(std::vector<Perm> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }

  bool contains(const Perm& p) const;
  bool contains_all(const PermGroup& sub) const;
  bool same_elements(const PermGroup& other) const;

  bool is_transitive() const;
  bool is_abelian() const;
  bool validate_closure() const;  // closed under products and inverses

  PermGroup conjugated(const Perm& g) const;  // g H g^{-1}
  std::vector<int> orbit_of(int point0) const;
  PermGroup stabilizer_of(int point0) const;
  PermGroup intersection(const PermGroup& other) const;

 private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
};

/// Closure of gens under composition (hence inversion, the group being
/// finite), BFS order, returned sorted lexicographically. The identity is
/// always included. Throws SizeLimitError when the closure exceeds cap.
std::vector<Perm> generate_closure(int degree, const std::vector<Perm>& gens,
                                   std::size_t cap = PermGroup::default_cap);

/// Greedy minimal generating sequence: scans elements in lexicographic
/// order, keeping those that enlarge the generated subgroup.
std::vector<Perm> generating_sequence(const PermGroup& H);

/// Generating set of smallest cardinality for small groups (single
/// elements, then pairs, then the greedy sequence; |H| <= 64 for the pair
/// pass). Display helper.
std::vector<Perm> minimal_generators(const PermGroup& H);

/// True iff H is transitive on {1..n} and |H| = n.
bool is_regular(const PermGroup& H, int degree);

/// {g in S_n : g N g^{-1} = N}, by full scan of S_n (degree <= 8).
PermGroup normalizer_in_sym(const PermGroup& N);

/// {g in S_n : g x = x g for all x in N}, by full scan of S_n (degree <= 8).
PermGroup centralizer_in_sym(const PermGroup& N);

PermGroup center(const PermGroup& H);

/// All subgroups of H (|H| <= 64), trivial and full included, found by
/// closing the set of cyclic subgroups under single-element extensions.
/// Sorted by (order, element list).
std::vector<PermGroup> subgroups(const PermGroup& H);

using GroupMap = std::map<Perm, Perm>;

/// All group isomorphisms A -> B, by brute force over generator images,
/// each candidate validated on the full multiplication table.
/// |A|, |B| <= 64. Empty iff the groups are not isomorphic.
std::vector<GroupMap> isomorphisms(const PermGroup& A, const PermGroup& B);

inline std::vector<GroupMap> automorphisms(const PermGroup& A) { return isomorphisms(A, A); }

/// Classifies a group of order 8 by its element-order multiset.
IsoType8 order8_type(const PermGroup& H);

}  // namespace hg

#endif
