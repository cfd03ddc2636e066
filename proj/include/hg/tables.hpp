#ifndef HG_TABLES_HPP
#define HG_TABLES_HPP

#include <string>
#include <utility>
#include <vector>

#include "hg/group.hpp"
#include "hg/perm.hpp"

namespace hg {

/// An abstract finite group given by its full multiplication table.
/// Elements are indexed 0..n-1 internally, element 0 is the identity.
///
/// Fixture format (plain text): line k holds row k of the table as
/// space-separated 1-based indices, so entry (k, j) is the product of
/// element k with element j.
class CayleyTable {
 public:
  static CayleyTable cyclic(int n);
  static CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);
  static CayleyTable dihedral(int n);  // order 2n, n >= 1
  static CayleyTable quaternion();     // order 8

  static CayleyTable order8(IsoType8 t);
  /// All isomorphism types of the given order, n <= 8, with their names.
  static std::vector<std::pair<std::string, CayleyTable>> of_order(int n);

  static CayleyTable parse(const std::string& text);
  std::string serialize() const;

  int size() const { return static_cast<int>(mul_.size()); }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse_of(int a) const;
  int order_of(int a) const;

  /// Checks identity position, Latin-square property and associativity.
  void validate() const;

  Perm right_translation(int a) const;  // x -> x * a
  Perm left_translation(int a) const;   // x -> a * x

  PermGroup right_regular() const;  // rho(T) inside Sym(n)
  PermGroup left_regular() const;   // lambda(T) inside Sym(n)

  /// Automorphisms as permutations of the element indices, brute-forced
  /// over generator images and validated on the whole table.
  std::vector<Perm> automorphisms() const;

  std::vector<int> generating_sequence() const;

 private:
  explicit CayleyTable(std::vector<std::vector<int>> mul) : mul_(std::move(mul)) {}
  friend std::pair<CayleyTable, Perm> abstract_table(const PermGroup& N);
  std::vector<std::vector<int>> mul_;
};

/// Abstract table of a regular permutation group, together with the point
/// relabeling m identifying the permutation domain with the element indices:
/// m maps point x to the index of the unique n in N with n(base) = x, so
/// m N m^{-1} is the left-regular representation of the returned table.
std::pair<CayleyTable, Perm> abstract_table(const PermGroup& N);

}  // namespace hg

#endif
