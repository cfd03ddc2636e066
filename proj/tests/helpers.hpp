#ifndef HG_TEST_HELPERS_HPP
#define HG_TEST_HELPERS_HPP

#include <random>
#include <string>

#include "hg/group.hpp"
#include "hg/perm.hpp"

namespace hgtest {

inline hg::Perm P(const std::string& cycles, int degree) { return hg::Perm::parse(cycles, degree); }

inline hg::Perm random_perm(std::mt19937& rng, int degree) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return hg::Perm(std::move(img));
}

// brute-force subgroup count by closure test over all subsets containing
// the identity; independent of the production enumeration (|H| <= 16)
inline std::size_t brute_force_subgroup_count(const hg::PermGroup& H) {
  const auto& e = H.elements();
  const std::size_t n = e.size();
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<hg::Perm> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(e[i]);
    if (subset.empty()) continue;
    bool has_id = false, closed = true;
    for (const hg::Perm& p : subset)
      if (p.is_identity()) has_id = true;
    if (!has_id) continue;
    for (const hg::Perm& a : subset) {
      for (const hg::Perm& b : subset) {
        const hg::Perm ab = compose(a, b);
        if (std::find(subset.begin(), subset.end(), ab) == subset.end()) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace hgtest

#endif
