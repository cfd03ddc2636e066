#ifndef HG_PERM_HPP
#define HG_PERM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hg {

/// A permutation of {1..n} for n <= 16, stored as a 0-based image array.
/// Values are immutable after construction and ordered lexicographically on
/// the image array, which matches lexicographic order on the 1-based images.
///
/// Composition is right-to-left: (p * q)(x) = p(q(x)), i.e. q acts first.
class Perm {
 public:
  static constexpr int max_degree = 16;

  Perm() = default;                 // degree-0 placeholder
  explicit Perm(int degree);        // identity of the given degree
  explicit Perm(std::vector<std::uint8_t> images);  // checks bijectivity

  static Perm identity(int degree) { return Perm(degree); }

  /// Parses cycle notation such as "(1,2,3,4)(5,6,7,8)". Whitespace is
  /// ignored, fixed points are omitted, "()" denotes the identity.
  /// Non-disjoint cycles are composed right-to-left.
  static Perm parse(std::string_view text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  bool valid() const { return !images_.empty(); }

  int apply0(int p) const { return images_[static_cast<std::size_t>(p)]; }
  int apply1(int p) const { return images_[static_cast<std::size_t>(p - 1)] + 1; }

  Perm operator*(const Perm& rhs) const;  // apply rhs first, then *this
  Perm inverse() const;

  int order() const;
  bool is_identity() const;
  bool is_even() const;

  /// Packs the image array into 4-bit fields; unique within a fixed degree.
  std::uint64_t key() const;

  std::string cycle_string() const;

  const std::vector<std::uint8_t>& images() const { return images_; }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<std::uint8_t> images_;
};

/// p composed with q, q applied first. Throws PreconditionError on degree
/// mismatch.
Perm compose(const Perm& p, const Perm& q);

/// g x g^{-1}.
Perm conjugate(const Perm& g, const Perm& x);

/// Invokes fn with every element of S_n in lexicographic order. fn may
/// return false to stop early. n <= 8 (full-symmetric scans are the
/// documented desk-scale path).
void for_each_perm(int degree, const std::function<bool(const Perm&)>& fn);

}  // namespace hg

#endif
