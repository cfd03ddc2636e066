#ifndef HG_REGULAR_HPP
#define HG_REGULAR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "hg/group.hpp"
#include "hg/tables.hpp"

namespace hg {

/// The full conjugation class of regular subgroups of S_n of one
/// isomorphism type, sorted by element list.
struct RegularClass {
  std::string type_name;
  int degree = 0;
  std::vector<PermGroup> members;
};

/// Hol(T) = rho(T) . Aut(T) inside Sym(T), realized on the element indices.
/// For degree <= 8 the result is checked against the normalizer of rho(T)
/// computed by full scan. |T| <= 16.
PermGroup holomorph(const CayleyTable& T);

/// The conjugacy class of rho(T) under S_n, deduplicated by element set.
/// Checks the orbit-stabilizer identity |class| * |Hol(T)| = n!.
RegularClass enumerate_regular(int degree, const CayleyTable& T, const std::string& type_name);

RegularClass enumerate_regular8(IsoType8 t);

/// True iff every generator of L conjugates the regular subgroup N onto
/// itself. Throws PreconditionError when N is not regular.
bool normalized_by(const PermGroup& N, const PermGroup& L);

/// True iff required_divisor divides |Hol(T)|. A pre-filter only:
/// discovery output must not depend on it.
bool holomorph_feasibility(const CayleyTable& T, std::size_t required_divisor);
bool holomorph_feasibility(IsoType8 t, std::size_t required_divisor);

/// True iff H (|H| <= 1500) contains a transitive subgroup of the given
/// order isomorphic to probe. Subgroups are probed through generator pairs,
/// and through triples when the probe itself needs three generators;
/// closures are capped at the target order and memoized.
bool has_transitive_iso_subgroup(const PermGroup& H, std::size_t order, const PermGroup& probe);

/// All distinct transitive subgroups of H of the given order that are
/// generated by at most max_gens elements.
std::vector<PermGroup> transitive_subgroups_of_order(const PermGroup& H, std::size_t order,
                                                     int max_gens = 3);

}  // namespace hg

#endif
